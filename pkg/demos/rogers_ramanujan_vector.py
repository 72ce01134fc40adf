"""
The Rogers-Ramanujan vector
===========================

Expand the two Rogers-Ramanujan sums exactly, compare them with their
product sides, then check numerically that the vector
(q^(-1/60) G, q^(11/60) H) transforms under tau -> -1/tau by a fixed
2x2 matrix.
"""

from __future__ import annotations

from nahmvec import NahmQuadruple, check_identity, nahm_sum, verify_transform
from nahmvec.transforms import get_transform_case

# G(q) is the rank-one Nahm sum with A = 2, B = 0; H(q) has B = 1.
G = nahm_sum(NahmQuadruple([[2]], [0]), 20)
H = nahm_sum(NahmQuadruple([[2]], [1]), 20)
print("G:", [G.coeff(n) for n in range(20)])
print("H:", [H.coeff(n) for n in range(20)])

# Exact sum = product comparisons, coefficient by coefficient.
for name in ("RR1", "RR2"):
    r = check_identity(name, 200)
    print(f"{name}: {r.verdict} to order {r.order}")

# The S-matrix is stored exactly in a cyclotomic field.
case = get_transform_case("RR")
print("S-matrix:")
for row in case.rule("S").matrix.to_strings(12):
    print("   ", row)

# Residuals of the T-, S- and composed rules at three sample points.
report = verify_transform(case, prec=192)
for rule in report.rules:
    print(f"{rule.name:<18} {rule.verdict:<6} max residual {rule.worst:.1e}")
