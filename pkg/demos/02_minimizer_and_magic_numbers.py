# Multi-start descent, a small scan at s = 0, and the N where the energy curve is locally convex.
#
# Run: python3 demos/02_minimizer_and_magic_numbers.py [n_max]
# The default n_max = 16 finishes in a few seconds; n_max = 33 reproduces {6, 12, 24, 32}
# but takes about two minutes.

import sys

from rieszsphere import MinimizeOptions, convexity_sets, multi_start, scan
from rieszsphere.core import separation

best, pool = multi_start(1.0, 12, MinimizeOptions(seed=1))
print(f"N=12, s=1: energy {best.energy:.12f}, min distance {separation(best.config):.6f}")
print(f"  {pool}")

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16
table, _ = scan(0.0, 3, n_max, MinimizeOptions(seed=2024),
                progress=lambda n, r: print(f"  N={n:3d}  v={r.energy:+.12f}"))
rep = convexity_sets(table)
print("second differences (positive = locally convex):")
for n, d in sorted(rep.ddv.items()):
    print(f"  N={n:3d}  {d:+.3e}{'  <- convex' if n in rep.c_plus else ''}")
print("C+ =", sorted(rep.c_plus))
