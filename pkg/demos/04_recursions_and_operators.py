"""Recursions in the color word, and their operator form.

Changing the entering color word sigma by one generator relates three
partition functions with explicit rational coefficients.  Under the
change of variables u_i = (1 - q z_i)/(1 - z_i) the recursions become the
action of type-C divided-difference operators with parameter q on the
normalized partition function.
"""

from fractions import Fraction as F

from symplectic_ice import (LatticeSpec, Model, Partition, SignedPermutation,
                            UPoint, all_signed_permutations, check_dl_recursion,
                            check_recursion_si, check_recursion_sn, dl_apply,
                            sample_point, u_from_z)
from symplectic_ice.functional import u_coefficient_identities

pt = sample_point(2, 29)
lam = Partition((2, 1))
tau = SignedPermutation((1, 2))

# ------------------------------------------------------------------
# s_i recursion (signed family): for sigma(i+1) > sigma(i),
#   q^([sigma(i+1)>0]-[sigma(i)>0]) Z(sigma s_i) = -A Z(sigma) + B Z(sigma; s_i z)
# ------------------------------------------------------------------
for sigma in all_signed_permutations(2):
    spec = LatticeSpec(Model.COLORED_SIGNED, 2, 4, lam, pt, sigma, tau)
    if sigma(2) > sigma(1):
        assert check_recursion_si(spec, 1)
        print(f"s_1 recursion holds for sigma = {sigma.images}")
    if sigma(2) > 0:
        assert check_recursion_sn(spec)
        print(f"s_n recursion holds for sigma = {sigma.images}")
print()

# positive family: same s_i recursion with unit prefactor
spec = LatticeSpec(Model.COLORED_POSITIVE, 2, 4, lam, pt,
                   SignedPermutation((1, 2)), SignedPermutation((2, 1)))
assert check_recursion_si(spec, 1)
print("positive-family s_1 recursion holds (no q-power prefactor)")
print()

# ------------------------------------------------------------------
# the divided-difference operators with parameter v:
#   L_i(f)  = (1-v)/(u^a - 1) f + (v u^a - 1)/(u^a - 1) f(s_i u)
#   Lhat_i  = L_i - v + 1,   and   Lhat_i L_i = v  (quadratic relation)
# ------------------------------------------------------------------
up = UPoint((F(3, 5), F(7, 11)), F(2))
one = lambda u: F(1)
print("L(1)    =", dl_apply("L", 1, up, one), " (= v)")
print("Lhat(1) =", dl_apply("Lhat", 1, up, one))
print("L_1(u1) =", dl_apply("L", 1, up, lambda u: u[0]), " (= u2 =", up.u[1], ")")
f = lambda u: u[0] ** 2 * u[1]
Lf = lambda u: dl_apply("L", 2, UPoint(u, up.v), f)
print("Lhat_2(L_2(u1^2 u2)) =", dl_apply("Lhat", 2, up, Lf),
      " (= v u1^2 u2 =", up.v * f(up.u), ")")
print()

# ------------------------------------------------------------------
# the recursion coefficients transform to pure u expressions, and the
# normalized partition function satisfies the operator recursion
# ------------------------------------------------------------------
assert u_coefficient_identities(pt)
print("coefficient identities in u hold at", [str(u) for u in u_from_z(pt)][:1], "...")
sigma = SignedPermutation((1, 2))
spec = LatticeSpec(Model.COLORED_SIGNED, 2, 4, lam, pt, sigma, tau)
assert check_dl_recursion(spec, 1)
assert check_dl_recursion(spec, 2)
print("Ztilde(sigma s_1) = Lhat_1 Ztilde(sigma) and "
      "Ztilde(sigma s_2) = -L_2 Ztilde(sigma): both hold exactly")
