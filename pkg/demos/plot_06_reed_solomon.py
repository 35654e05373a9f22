"""
Self-dual codes from Reed-Solomon codes
=======================================

Over GF(8), a generalized Reed-Solomon code with square-root column
multipliers is self-orthogonal.  Its dual is an MDS dual-containing code.
"""

from sdcodes import field_new, u_lambda_u_v
from sdcodes.distance import weight_enumerator_exhaustive
from sdcodes.selfdual import rs_dual_containing

F = field_new(2, 3)
C = rs_dual_containing(F, 8, 3)
print(C, "multipliers", C.provenance["multipliers"])

L = u_lambda_u_v(C)
print(L)

# 8^8 codewords; raise the budget above its default
W = weight_enumerator_exhaustive(L, budget=8 ** 8)
print("enumerator:", W.counts)
print("exact d =", W.min_distance)
