"""
Continued fractions from the states
===================================

The trace quotients, plus the final right-below entry, are the partial
quotients of a/m. Convergent denominators show up in the left column.
"""

from fractions import Fraction

from dayan import cf, run

trace = run(38887, 41130)
exp = cf.expansion(trace)
print("expansion:", exp, "->", cf.evaluate(exp))

for c in cf.convergents(exp):
    e = c.error_numerator(trace.a, trace.m)
    print(f"k={c.index}  {c.alpha}/{c.beta}  m*alpha - a*beta = {e}")

# Each s-state is (beta_{k-1}, e_{k-1}; beta_k, e_k) up to a row swap.
print("state correspondence:", cf.check_state_correspondence(trace).passed)

# Classical identities and bounds, all checked in integer arithmetic.
for name, rep in cf.check_identities(trace).items():
    print(f"{name:18s} {rep.checked:3d} checks  {'ok' if rep.passed else rep.first_failure}")

# Qin's least-positive division may end in "..., x, 1" where the usual
# expansion has "..., x+1". Same number either way.
print(cf.expansion(run(2, 7)), cf.canonical_expansion(2, 7), Fraction(2, 7))
