"""
Families of self-dual codes
===========================

Lower bounds for the binary family and the q = 5 family, next to the
closed-form targets they are meant to beat.
"""

from sdcodes.selfdual import family, is_two_shift_closed

print(" q  m mu    n  claimed  computed")
for m in (3, 5, 7):
    fm = family(2, m, 1, "4.1")
    print(f" 2 {m:2d}  1 {fm.code.n:4d} {fm.claimed_bound:8.3f} {fm.computed_bound:9d}")

for mu in (1, 2, 4):
    fm = family(5, 3, mu, "5.1")
    print(f" 5  3 {mu:2d} {fm.code.n:4d} {fm.claimed_bound:8.3f} {fm.computed_bound:9d}",
          "shift2" if is_two_shift_closed(fm.code) else "")
