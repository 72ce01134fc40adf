"""
A vector that is not modular on Gamma0(4)
=========================================

The pair (q^(1/15) x1, q^(4/15) x2) transforms nicely under
tau -> tau/(8tau+1), and under tau -> tau/(4tau+1) only after the right
side is replaced by a different vector.  Applying the same matrix to the
vector itself fails by a residual of order one, which the verifier must
detect.
"""

from __future__ import annotations

from nahmvec import verify_transform
from nahmvec.identities import check_identity

for name in ("x1-48", "x2-48"):
    print(name, check_identity(name).verdict)

report = verify_transform("x48", taus=["i", "1/5+1/2*i", "-1/3+2/3*i"], prec=192)
for rule in report.rules:
    points = ", ".join(f"{p['residual']:.1e}" for p in rule.residuals)
    print(f"{rule.name:<22} N={rule.N}  expect {rule.expect:<5} -> {rule.verdict:<14} [{points}]")
print("all expectations met:", report.ok)
