"""
Weight enumerators and MacWilliams
==================================

The [63, 42] code has 2^42 codewords, far too many to list.  Its dual has
only 2^21, so we enumerate that and transform.
"""

from sdcodes import dual_code, search_dual_containing, u_lambda_u_v
from sdcodes.distance import macwilliams_transform, weight_enumerator_exhaustive
from sdcodes.selfdual import certify_by_witness

C = search_dual_containing(63, 2, 42, limit=1)[0]
print("defining set reps:", C.defining_set.coset_reps)

D = dual_code(C)
WD = weight_enumerator_exhaustive(D)
W = macwilliams_transform(WD, 2, D.k)
print("d(C) =", W.min_distance, " d(C-perp) =", WD.min_distance)

# the doubled code has lower bound min(16, 14); a weight-14 (u | u) word closes the gap
L = u_lambda_u_v(C)
cert = certify_by_witness(L)
print(L, "exact d =", cert.d)
