"""
Checking the stated results
===========================

Every tabulated claim is recomputed from scratch and compared with its
expected value.  The same run is available as ``dpcolor verify-paper``.
"""
from dpcolor import verify

reports = verify.run_claims(only=["q3", "v8", "gadget"])
print(verify.render_table(reports, timing=False))
print("exit code:", verify.exit_code(reports))
