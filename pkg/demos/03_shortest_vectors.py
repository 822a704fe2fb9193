"""
Shortest vectors of a*x + y = 0 (mod m)
=======================================

Every s-state is a basis of the lattice, and scanning the rows of all
states together with their sums and differences finds a shortest vector.
"""

from dayan import lattice, run
from dayan.lattice import LatticeParams

trace = run(38887, 41130)
for k in range(trace.n_steps + 1):
    b = lattice.basis_at(trace, k)
    print(k, tuple(b.v1), tuple(b.v2), "det =", b.det)

rep = lattice.shortest_via_states(trace)
print("certified:", tuple(rep.shortest), rep.norm_sq, rep.source.value, rep.source_step)

# The brute-force oracle enumerates up to the 2-D Hermite bound and also
# returns the second successive minimum.
for v, n in lattice.oracle_shortest(LatticeParams(38887, 41130), 2):
    print("oracle:", tuple(v), n)

# (257, 631) is not a state row; it is 4*(55, -25) + (37, 731).
b4 = lattice.basis_at(trace, 4)
print(tuple(4 * b4.v1 + b4.v2))

# When a^2 < m the answer is simply (1, -a).
print(lattice.trivial_shortest(LatticeParams(3, 100)).to_dict())
