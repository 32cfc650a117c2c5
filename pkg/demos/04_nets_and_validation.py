# Lifted Sobol' nets as a non-optimal reference, and table validation against necessary conditions.
#
# Run: python3 demos/04_nets_and_validation.py

import numpy as np

from rieszsphere import EnergyTable, convexity_sets, exact_v, net_energy_curve, validate
from rieszsphere.nets import cap_fraction, spherical_net

x = spherical_net(4096)
center = np.array([0.0, 0.6, 0.8])
for h in (-0.5, 0.0, 0.5):
    print(f"cap height {h:+.1f}: fraction {cap_fraction(x, center, h):.4f}, area {(1 - h) / 2:.4f}")

net = net_energy_curve(-1.0, 2048)
print(f"net <V_-1>(2048) = {net.v(2048):.6f} (continuum value -1/3)")
rep = convexity_sets(net)
print(f"net second differences: {len(rep.c_plus)} positive, {len(rep.c_minus)} negative")

# a clean table and one with a corrupted row
vals = {n: exact_v(n, -1.0).value for n in range(2, 7)}
good = EnergyTable.from_values(-1.0, vals)
bad = EnergyTable.from_values(-1.0, {**vals, 4: vals[3] - 0.5})
for name, t in (("exact", good), ("corrupted", bad)):
    r = validate([t])
    print(f"{name}: consistent={r.consistent}")
    for s, n, verdict in r.rows():
        print(f"  s={s} N={n}: {verdict}")
