# Closed-form minimal energies for small N and where their second differences change sign.
#
# Run: python3 demos/01_exact_small_n.py

from fractions import Fraction

import numpy as np

from rieszsphere import exact_ddv, exact_ddv_rational, exact_v, find_critical_s, s_dagger
from rieszsphere.exact import square_pyramid_height

# standardized energies of the small universal optima at a few exponents
for s in (-1.0, 0.0, 1.0, 3.0):
    row = "  ".join(f"v({n})={exact_v(n, s).value:+.6f}" for n in (2, 3, 4, 6))
    print(f"s={s:+.1f}  {row}")

# at integer s the N=3 and N=4 second differences are exact rationals
for s in (2, 10):
    print(f"ddv_{s}(3) = {exact_ddv_rational(3, s)}")
print(f"ddv_2(4) = {exact_ddv_rational(4, 2)}")

# sign of ddv(N) along s; each sign change is a critical exponent
s_grid = np.linspace(0.25, 14.0, 12)
print("s      ddv(3)      ddv(4)")
for s in s_grid:
    print(f"{s:5.2f}  {exact_ddv(3, s).value:+.3e}  {exact_ddv(4, s).value:+.3e}")

print(f"ddv(3) changes sign at s = {find_critical_s('s1_of_3'):.6f}")
print(f"ddv(4) changes sign at s = {find_critical_s('s1_of_4'):.6f}")

# beyond s_dagger the square pyramid replaces the bipyramid as the 5-point candidate
sd = s_dagger()
print(f"s_dagger = {sd:.9f}, pyramid apex-to-base height {1 - square_pyramid_height(sd):.6f}")
print("exact check:", exact_ddv_rational(3, -2) == Fraction(-1, 3))
