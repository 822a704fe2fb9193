"""
Inner products and the half-way heuristic
=========================================

The inner product of the two s-state rows increases strictly from -a*m.
Its sign change marks the states most likely to hold a shortest vector.
"""

import statistics

from dayan import lattice, run
from dayan.suite import random_pairs

ip = lattice.inner_products(run(38887, 41130))
print(ip.values, "sign change at k0 =", ip.sign_change_index)
print(lattice.heuristic_shortest(run(38887, 41130)).to_dict())

# How often do the two states at the sign change already contain a shortest
# vector, and where does the sign change happen?
pairs = random_pairs(2000, 10**6, seed=1)
hits, ratios = 0, []
for a, m in pairs:
    t = run(a, m)
    hits += lattice.heuristic_shortest(t).norm_sq == lattice.shortest_via_states(t).norm_sq
    k0 = lattice.inner_products(t).sign_change_index
    if k0 is not None:
        ratios.append(k0 / t.n_steps)
print(f"heuristic agrees on {hits}/{len(pairs)}")
print(f"k0/N: mean {statistics.fmean(ratios):.3f}, median {statistics.median(ratios):.3f}")
