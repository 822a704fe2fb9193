"""
Tracing DaYan deriving one
==========================

Run Qin's algorithm on the pair (38887, 41130) and look at every state.
"""

from dayan import duality_closure, mod_inverse, run, step, StateMatrix
from dayan.cli import format_table

# The state starts as (1, a; 0, m). Odd steps divide right-below by
# right-above and update the bottom row, even steps do the opposite.
trace = run(38887, 41130)
print(format_table(trace))

# Every state keeps x11*x22 + x12*x21 equal to m.
print("invariant:", {s.invariant for s in trace.states})

# The loop always ends after an even number of steps with x12 = 1, and the
# left-above entry is the inverse.
print("steps:", trace.n_steps, "inverse:", trace.inverse, mod_inverse(38887, 41130))

# Remainders are taken in [1, d], never 0. For (2, 7) this matters on the
# last step: floor division of 2 by 1 would leave 0 and the loop would stall.
print(step(StateMatrix(1, 2, 3, 1), "even"))

# One more row operation turns the final s-state into ((a^-1, -1), (m, 0)).
print("duality:", duality_closure(trace).rows())
