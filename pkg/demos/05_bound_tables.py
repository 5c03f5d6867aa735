"""
Closed-form lower bounds
========================

Every (n, t) gets a table of applicable bounds: the zig-zag formulas, the
one-strip bound at n = 2t+2, the two-strip bound at n = 2t+3, the
known exact values, and the best chainable combination.  All bounds sit at
or below the conjectured optimum 2t+1.
"""

from geostab import best_lower_bound, formula_bounds
from geostab.bounds import morestrips_lb, stronger_lb

print(f"{'n':>3} {'t':>3} {'conj':>5} {'zz-w':>5} {'zz-i':>5} "
      f"{'1strip':>7} {'2strip':>7} {'exact':>6} {'best-w':>7} {'best-i':>7}")
for n in range(3, 13):
    for t in range(0, (n - 1) // 2 + 1):
        bt = formula_bounds(n, t)
        def s(v):
            return "-" if v is None else str(v)
        print(f"{n:>3} {t:>3} {bt.conjecture:>5} {bt.zigzag_winst_lb:>5} "
              f"{s(bt.zigzag_inst_lb):>5} {s(bt.one_strip_lb):>7} "
              f"{s(bt.two_strip_lb):>7} {s(bt.known_exact):>6} "
              f"{bt.best_winst_lb:>7} {bt.best_inst_lb:>7}")

print("\nwhere the best winst bounds come from:")
for n, t in [(6, 2), (5, 1), (9, 2), (8, 3), (13, 5)]:
    b = best_lower_bound(n, t, "winst")
    print(f"  winst({n},{t}) >= {b.value}   via {b.via}")

print("\nchain arithmetic:")
print("  one-strip step:  winst(12,5) >= ", stronger_lb(5, 2, 5), " from winst(6,2) >= 5")
print("  multi-strip:     winst(11,4) >= ", morestrips_lb(11, 4, 1, 3), " from winst(5,1) >= 3")
