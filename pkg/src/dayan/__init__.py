"""Qin's "DaYan deriving one" algorithm with continued-fraction and lattice layers."""

from dayan.arith import DivResult, div_floor, div_least_positive, gcd
from dayan.cf import (
    CFExpansion,
    Convergent,
    check_identities,
    check_state_correspondence,
    convergents,
    evaluate,
    expansion,
)
from dayan.lattice import (
    LatticeParams,
    LatticeVector,
    SVReport,
    heuristic_shortest,
    inner_products,
    oracle_shortest,
    shortest_via_states,
    trivial_shortest,
)
from dayan.qin import (
    IllegalStep,
    InvalidInput,
    SState,
    StateMatrix,
    Trace,
    duality_closure,
    mod_inverse,
    run,
    sstate,
    step,
)

__version__ = "0.1.0"
