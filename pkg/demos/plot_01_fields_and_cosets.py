"""
Finite fields and cyclotomic cosets
===================================

Arithmetic in GF(8), the cosets of 2 modulo 15, and which unions of cosets
avoid their own negatives.
"""

from sdcodes import field_new
from sdcodes.cosets import DefiningSet, all_cosets, bch_bound, is_dual_containing_defining_set, negate_set

# GF(8) elements are integers whose bits are polynomial coefficients
F = field_new(2, 3)
print("modulus", F.modulus, "primitive", F.primitive_element())
a, b = 3, 5
print(f"{a} * {b} =", F.mul(a, b), " inverse of 3 =", F.inv(3))

# cyclotomic cosets of 2 mod 15
for c in all_cosets(15, 2):
    print(sorted(c))

# a defining set is dual-containing when it meets none of its negatives
T = DefiningSet.from_reps(15, 2, [1])
print("T =", T.sorted_members, " -T =", sorted(negate_set(T).members))
print("dual-containing:", is_dual_containing_defining_set(T))
print("BCH bound:", bch_bound(T))
