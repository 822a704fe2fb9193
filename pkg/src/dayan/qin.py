"""Qin Jiushao's "DaYan deriving one" as a traced state machine.

The state is a 2x2 matrix of non-negative integers laid out as::

    left-above   right-above        x11  x12
    left-below   right-below        x21  x22

starting from ``(1, a; 0, m)``. Odd steps divide the right-below entry by
the right-above one and update the bottom row, even steps do the reverse,
always with a least-positive remainder. The loop stops once the
right-above entry reaches 1, and the left-above entry is then ``a^-1 mod m``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Literal

from dayan.arith import div_least_positive, gcd

Parity = Literal["odd", "even"]

TRACE_SCHEMA_VERSION = 1


class InvalidInput(ValueError):
    """Raised when ``(a, m)`` violates ``1 < a < m`` or ``gcd(a, m) = 1``."""


class IllegalStep(RuntimeError):
    """Raised when a state cannot be advanced by the requested step."""


@dataclass(frozen=True)
class StateMatrix:
    x11: int
    x12: int
    x21: int
    x22: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x11, self.x12, self.x21, self.x22)

    @property
    def invariant(self) -> int:
        """``x11*x22 + x12*x21``; equals ``m`` for every state of a run."""
        return self.x11 * self.x22 + self.x12 * self.x21


@dataclass(frozen=True)
class SState:
    """Signed view of a state: the top-right entry is negated.

    Its rows ``v1 = (x11, -x12)`` and ``v2 = (x21, x22)`` are vectors of the
    lattice ``{(x, y) : a*x + y = 0 mod m}``.
    """

    v1: tuple[int, int]
    v2: tuple[int, int]

    @property
    def det(self) -> int:
        return self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v1, self.v2)


def validate(a: int, m: int) -> None:
    for name, value in (("a", a), ("m", m)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidInput(f"{name} must be an integer")
    if a <= 1:
        raise InvalidInput(f"a must satisfy a > 1 (got a={a})")
    if a >= m:
        raise InvalidInput(f"a must satisfy a < m (got a={a}, m={m})")
    g = gcd(a, m)
    if g != 1:
        raise InvalidInput(f"gcd(a, m) must be 1 (got gcd({a}, {m}) = {g})")


def initial_state(a: int, m: int) -> StateMatrix:
    return StateMatrix(1, a, 0, m)


def step(state: StateMatrix, parity: Parity) -> tuple[StateMatrix, int]:
    """Advance ``state`` by one loop iteration.

    ``parity="odd"`` requires ``x22 > x12`` and updates the bottom row;
    ``parity="even"`` requires ``x12 > x22`` and updates the top row.
    """
    x11, x12, x21, x22 = state.as_tuple()
    if x12 == 1:
        raise IllegalStep("state is already final (x12 = 1)")
    if parity == "odd":
        if not x22 > x12:
            raise IllegalStep(f"odd step needs x22 > x12, got x12={x12}, x22={x22}")
        q, r = div_least_positive(x22, x12)
        return StateMatrix(x11, x12, x21 + q * x11, r), q
    if parity == "even":
        if not x12 > x22:
            raise IllegalStep(f"even step needs x12 > x22, got x12={x12}, x22={x22}")
        q, r = div_least_positive(x12, x22)
        return StateMatrix(x11 + q * x21, r, x21, x22), q
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def iter_states(a: int, m: int) -> Iterator[tuple[StateMatrix, int | None]]:
    """Yield ``(state, q)`` pairs lazily, starting with ``(X_0, None)``."""
    validate(a, m)
    state = initial_state(a, m)
    yield state, None
    k = 0
    while state.x12 != 1:
        k += 1
        state, q = step(state, "odd" if k % 2 else "even")
        yield state, q


@dataclass(frozen=True)
class Trace:
    a: int
    m: int
    states: tuple[StateMatrix, ...]
    quotients: tuple[int, ...]
    trailing_quotient: int
    n_steps: int

    @property
    def final(self) -> StateMatrix:
        return self.states[-1]

    @property
    def inverse(self) -> int:
        return self.final.x11

    def to_dict(self) -> dict:
        return {
            "version": TRACE_SCHEMA_VERSION,
            "a": str(self.a),
            "m": str(self.m),
            "n_steps": self.n_steps,
            "quotients": [str(q) for q in self.quotients],
            "trailing_quotient": str(self.trailing_quotient),
            "states": [[str(v) for v in s.as_tuple()] for s in self.states],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, doc: dict) -> "Trace":
        version = doc.get("version", TRACE_SCHEMA_VERSION)
        if version != TRACE_SCHEMA_VERSION:
            raise ValueError(f"unsupported trace schema version {version}")
        states = tuple(StateMatrix(*(int(v) for v in row)) for row in doc["states"])
        trace = cls(
            a=int(doc["a"]),
            m=int(doc["m"]),
            states=states,
            quotients=tuple(int(q) for q in doc["quotients"]),
            trailing_quotient=int(doc["trailing_quotient"]),
            n_steps=int(doc["n_steps"]),
        )
        if len(trace.states) != trace.n_steps + 1 or len(trace.quotients) != trace.n_steps:
            raise ValueError("trace document is inconsistent with n_steps")
        return trace

    @classmethod
    def from_json(cls, text: str) -> "Trace":
        return cls.from_dict(json.loads(text))


def run(a: int, m: int) -> Trace:
    states = []
    quotients = []
    for state, q in iter_states(a, m):
        states.append(state)
        if q is not None:
            quotients.append(q)
    n = len(quotients)
    return Trace(
        a=a,
        m=m,
        states=tuple(states),
        quotients=tuple(quotients),
        trailing_quotient=states[-1].x22,
        n_steps=n,
    )


def mod_inverse(a: int, m: int) -> int:
    """Return the inverse of ``a`` modulo ``m``, always in ``(0, m)``."""
    state = None
    for state, _ in iter_states(a, m):
        pass
    return state.x11


def sstate(state: StateMatrix) -> SState:
    return SState((state.x11, -state.x12), (state.x21, state.x22))


def duality_closure(trace: Trace) -> SState:
    """Add ``x22`` times the top row of the final s-state to its bottom row.

    The result is ``((a^-1 mod m, -1), (m, 0))``.
    """
    s = sstate(trace.final)
    t = trace.final.x22
    v1 = s.v1
    v2 = (s.v2[0] + t * v1[0], s.v2[1] + t * v1[1])
    return SState(v1, v2)
