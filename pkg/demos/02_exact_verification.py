"""Machine verification of the solvability identities.

Every identity is a rational-function identity, so checking it exactly at
a handful of random rational points with large numerators is decisive.
Each verifier sweeps all boundary labelings of two small wiring diagrams
and compares the sides by exact equality; a failure would come back with
the offending boundary and both values.
"""

from fractions import Fraction as F

from symplectic_ice import (Family, sample_point, verify_caduceus, verify_fish,
                            verify_reflection, verify_ybe_colored,
                            verify_ybe_lemma, verify_ybe_uncolored, zprime)
from symplectic_ice.diagram import caduceus_scalar

G, D = Family.GAMMA, Family.DELTA

# ------------------------------------------------------------------
# the four uncolored crossing identities, 64 boundary combos each
# ------------------------------------------------------------------
for k in range(3):
    pt = sample_point(2, seed=100 + k)
    for X, Y in [(G, G), (G, D), (D, G), (D, D)]:
        rep = verify_ybe_uncolored(X, Y, pt)
        assert rep.passed
    print(f"point {k}: all four uncolored crossing identities hold "
          f"(64 boundaries each)")
print()

# ------------------------------------------------------------------
# the free-parameter family, and the specialization used by the
# cap-collapse argument: t1 = 1/(q z), t2 = z'/q
# ------------------------------------------------------------------
rep = verify_ybe_lemma(F(3, 7), F(5, 11), F(2))
print("free parameters (t1, t2, q) = (3/7, 5/11, 2):", "pass" if rep.passed else "FAIL")
pt = sample_point(1, 7)
zn, q = pt.z[0], pt.q
rep = verify_ybe_lemma(1 / (q * zn), zprime(zn, q) / q, q)
print("fish specialization:", "pass" if rep.passed else "FAIL")
print()

# ------------------------------------------------------------------
# the braid of four crossings collapses onto two bare caps up to an
# explicit scalar; at (q, z_i, z_j) = (2, 1/2, 1/3) the scalar is 1
# ------------------------------------------------------------------
pt = sample_point(2, 11)
for cap in ("reflecting", "absorbing"):
    rep = verify_caduceus(pt, cap)
    print(f"caduceus, {cap} caps: {'pass' if rep.passed else 'FAIL'} "
          f"({rep.combos_tested} boundaries)")
print("scalar at (2, 1/2, 1/3):", caduceus_scalar(F(1, 2), F(1, 3), F(2)))
print()

# ------------------------------------------------------------------
# one crossing against a cap collapses to the bare cap (fish relation)
# ------------------------------------------------------------------
pt1 = sample_point(1, 13)
for cap in ("reflecting", "absorbing"):
    rep = verify_fish(pt1, cap)
    print(f"fish, {cap}: {'pass' if rep.passed else 'FAIL'}")
print()

# ------------------------------------------------------------------
# colored families: three crossing kinds, checked over four colors
# (relative order is all that matters), then the reflection equation
# over five (signed) / three (positive) colors
# ------------------------------------------------------------------
pt = sample_point(2, 17)
for model in ("signed", "positive"):
    for X, Y in [(D, G), (G, G), (D, D)]:
        rep = verify_ybe_colored(model, X, Y, pt)
        assert rep.passed
    print(f"colored crossings, {model}: pass (3 kinds x 4^6 boundaries)")
for model in ("signed", "positive"):
    rep = verify_reflection(model, pt)
    print(f"reflection equation, {model}: {'pass' if rep.passed else 'FAIL'} "
          f"({rep.combos_tested} boundary words)")
