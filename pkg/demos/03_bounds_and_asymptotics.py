# Two-sided bounds on second differences for s < 0, and the large-N expansion at s = 0.
#
# Run: python3 demos/03_bounds_and_asymptotics.py

import numpy as np
from scipy.optimize import minimize_scalar

from rieszsphere import W_LOG, ddu_leading, ddv_bounds_prop1, exact_ddv, exact_v, log_energy_expansion
from rieszsphere.exact import ddv12_upper_bound, ddv5_lower_bound

# exact ddv sits inside the bounds computed from v(N) alone
for s in (-1.5, -1.0, -0.5):
    for n in (3, 4, 5):
        b = ddv_bounds_prop1(s, n, exact_v(n, s).value, exact_ddv(n, s).value)
        print(f"s={s:+.1f} N={n}: {b.lower:+.5f} <= {b.observed:+.5f} <= {b.upper:+.5f}")

# the N=5 expression stays negative up to s = 40; at s = 0 it is ln(3^8/2^13)/10
grid = np.arange(-1.99, 40.0, 0.01)
print(f"max over (-2, 40): {max(ddv5_lower_bound(float(s)) for s in grid):+.3e}")
print(f"s=0 value {ddv5_lower_bound(0.0):+.12f} vs {np.log(3**8 / 2**13) / 10:+.12f}")

# the N=12 upper bound dips lowest just above s = -2
res = minimize_scalar(ddv12_upper_bound, bounds=(-1.99, 2.0), method="bounded")
print(f"N=12 bound minimum {res.fun:.5f} at s = {res.x:.3f}")

# logarithmic energies: expansion and the sign of the leading second-difference term
print(f"W_log = {W_LOG:.10f}")
for n in (10, 100, 1000, 10**6):
    print(f"N={n:>7d}  log-energy sum {log_energy_expansion(n):+.6e}  ddu leading {ddu_leading(0.0, n):+.3e}")
