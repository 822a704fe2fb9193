"""Shortest vectors of the lattice ``L(a, m) = {(x, y) : a*x + y = 0 mod m}``.

Every s-state of a Qin run is a basis of ``L(a, m)``, and some s-state
``(v1; v2)`` has a shortest lattice vector among ``v1, v2, v1 + v2, v1 - v2``.
:func:`shortest_via_states` scans all states, so its answer is certified.
:func:`heuristic_shortest` only looks at the two states where the inner
product of the rows changes sign. :func:`oracle_shortest` is a brute-force
enumeration kept independent of the trace for cross-checking.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from dayan.qin import SState, Trace, duality_closure, run, sstate, validate

DEFAULT_ORACLE_CAP = 10**12
ORACLE_CAP_ENV = "DAYAN_ORACLE_CAP"


class CapExceeded(ValueError):
    """The modulus is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class LatticeParams:
    a: int
    m: int

    def __post_init__(self):
        validate(self.a, self.m)


@dataclass(frozen=True)
class LatticeVector:
    x: int
    y: int

    @property
    def norm_sq(self) -> int:
        return self.x * self.x + self.y * self.y

    def normalized(self) -> "LatticeVector":
        """Representative of ``+-v`` with ``x > 0``, or ``x = 0`` and ``y > 0``."""
        if self.x < 0 or (self.x == 0 and self.y < 0):
            return LatticeVector(-self.x, -self.y)
        return self

    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm_sq, abs(self.x), self.y)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __rmul__(self, c: int) -> "LatticeVector":
        return LatticeVector(c * self.x, c * self.y)

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class Basis:
    v1: LatticeVector
    v2: LatticeVector

    @property
    def det(self) -> int:
        return self.v1.x * self.v2.y - self.v1.y * self.v2.x

    @classmethod
    def from_sstate(cls, s: SState) -> "Basis":
        return cls(LatticeVector(*s.v1), LatticeVector(*s.v2))


class Source(str, Enum):
    TRIVIAL_A = "trivial_a"
    TRIVIAL_AINV = "trivial_ainv"
    STATE_ROW = "state_row"
    ROW_SUM = "row_sum"
    ROW_DIFF = "row_diff"


@dataclass(frozen=True)
class InnerProductTrace:
    values: tuple[int, ...]
    sign_change_index: int | None


@dataclass(frozen=True)
class SVReport:
    shortest: LatticeVector
    norm_sq: int
    source: Source
    source_step: int | None
    inner_products: InnerProductTrace
    certified: bool
    # row index (0 or 1) when source is STATE_ROW
    source_row: int | None = None

    def to_dict(self) -> dict:
        return {
            "x": str(self.shortest.x),
            "y": str(self.shortest.y),
            "norm_sq": str(self.norm_sq),
            "source": self.source.value,
            "source_step": self.source_step,
            "certified": self.certified,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def contains(p: LatticeParams, v: LatticeVector) -> bool:
    return (p.a * v.x + v.y) % p.m == 0


def basis_at(trace: Trace, k: int) -> Basis:
    if not 0 <= k <= trace.n_steps:
        raise IndexError(f"step {k} outside [0, {trace.n_steps}]")
    return Basis.from_sstate(sstate(trace.states[k]))


def duality_basis(trace: Trace) -> Basis:
    """The basis ``((a^-1 mod m, -1), (m, 0))``."""
    return Basis.from_sstate(duality_closure(trace))


def inner_products(trace: Trace) -> InnerProductTrace:
    """Inner products ``I_k = x11*x21 - x12*x22`` of the s-state rows.

    Each value is also rebuilt by the recursion ``I_k = I_{k-1} + q_k*|w|^2``,
    ``w`` being the row left unchanged by step ``k``; a mismatch raises
    ``AssertionError``. ``sign_change_index`` is the unique ``k0`` with
    ``I_{k0} < 0 <= I_{k0+1}``, or ``None`` when ``I_N < 0``.
    """
    values = []
    for s in trace.states:
        values.append(s.x11 * s.x21 - s.x12 * s.x22)
    for k in range(1, trace.n_steps + 1):
        s = trace.states[k]
        keep = (s.x11, s.x12) if k % 2 else (s.x21, s.x22)
        rebuilt = values[k - 1] + trace.quotients[k - 1] * (keep[0] ** 2 + keep[1] ** 2)
        if rebuilt != values[k]:
            raise AssertionError(f"inner-product recursion broken at k={k}")
    k0 = None
    for k in range(trace.n_steps):
        if values[k] < 0 <= values[k + 1]:
            k0 = k
            break
    return InnerProductTrace(tuple(values), k0)


def _report(v, source, step, ip, certified, row=None) -> SVReport:
    return SVReport(v, v.norm_sq, source, step, ip, certified, row)


def trivial_shortest(p: LatticeParams, trace: Trace | None = None) -> SVReport | None:
    """``(1, -a)`` if ``a^2 < m``, else ``(a^-1, -1)`` if ``(a^-1)^2 < m``.

    Both are provably shortest under their hypotheses. Returns ``None`` when
    neither hypothesis holds.
    """
    trace = trace if trace is not None else run(p.a, p.m)
    ip = inner_products(trace)
    u = trace.inverse
    picks = []
    if p.a * p.a < p.m:
        picks.append((LatticeVector(1, -p.a), Source.TRIVIAL_A))
    if u * u < p.m:
        picks.append((LatticeVector(u, -1), Source.TRIVIAL_AINV))
    if not picks:
        return None
    # stable min keeps (1, -a) on ties
    v, src = min(picks, key=lambda t: t[0].norm_sq)
    return _report(v.normalized(), src, None, ip, True)


def _state_candidates(s: SState) -> list[tuple[LatticeVector, Source, int | None]]:
    v1, v2 = LatticeVector(*s.v1), LatticeVector(*s.v2)
    return [
        (v1, Source.STATE_ROW, 0),
        (v2, Source.STATE_ROW, 1),
        (v1 + v2, Source.ROW_SUM, None),
        (v1 - v2, Source.ROW_DIFF, None),
    ]


def _best(cands: Iterable[tuple[LatticeVector, Source, int | None, int | None]]):
    best = None
    for v, src, step, row in cands:
        v = v.normalized()
        if v.x == 0 and v.y == 0:
            continue
        if best is None or v.sort_key() < best[0].sort_key():
            best = (v, src, step, row)
    return best


def shortest_via_states(trace: Trace) -> SVReport:
    """Certified shortest vector: the best candidate over every s-state.

    Candidates are the two trivial vectors ``(1, -a)`` and ``(a^-1, -1)``
    (examined first) and, for each ``k``, the rows of the k-th s-state with
    their sum and difference. When the same vector is reachable several
    ways, provenance prefers trivial vectors, then state rows, then row
    combinations, each at the earliest step.
    """
    a, u = trace.a, trace.inverse
    ip = inner_products(trace)
    cands = [_state_candidates(sstate(s)) for s in trace.states]

    def gen():
        yield LatticeVector(1, -a), Source.TRIVIAL_A, None, None
        yield LatticeVector(u, -1), Source.TRIVIAL_AINV, None, None
        for k, c in enumerate(cands):
            for v, src, row in c[:2]:
                yield v, src, k, row
        for k, c in enumerate(cands):
            for v, src, row in c[2:]:
                yield v, src, k, row

    v, src, step, row = _best(gen())
    return _report(v, src, step, ip, True, row)


def heuristic_shortest(trace: Trace) -> SVReport:
    """Best candidate from the two s-states around the inner-product sign change.

    Falls back to :func:`trivial_shortest` when one of the trivial cases
    applies. The result is never marked certified.
    """
    p = LatticeParams(trace.a, trace.m)
    trivial = trivial_shortest(p, trace)
    if trivial is not None:
        return _report(trivial.shortest, trivial.source, None, trivial.inner_products, False)
    ip = inner_products(trace)
    k0 = ip.sign_change_index
    if k0 is None:
        # unreachable once (a^-1)^2 >= m; kept for robustness
        raise AssertionError("no inner-product sign change on a non-trivial lattice")

    cands = {k: _state_candidates(sstate(trace.states[k])) for k in (k0, k0 + 1)}

    def gen():
        for part in (slice(0, 2), slice(2, 4)):
            for k, c in cands.items():
                for v, src, row in c[part]:
                    yield v, src, k, row

    v, src, step, row = _best(gen())
    return _report(v, src, step, ip, False, row)


def reproduce(trace: Trace, report: SVReport) -> LatticeVector:
    """Rebuild ``report.shortest`` from its recorded provenance (sign-normalized)."""
    if report.source is Source.TRIVIAL_A:
        return LatticeVector(1, -trace.a).normalized()
    if report.source is Source.TRIVIAL_AINV:
        return LatticeVector(trace.inverse, -1).normalized()
    b = basis_at(trace, report.source_step)
    if report.source is Source.ROW_SUM:
        return (b.v1 + b.v2).normalized()
    if report.source is Source.ROW_DIFF:
        return (b.v1 - b.v2).normalized()
    return (b.v1 if report.source_row == 0 else b.v2).normalized()


# --- brute-force oracle -----------------------------------------------------
#
# The search radius uses the 2-D Hermite constant gamma_2 = 2/sqrt(3), which
# gives lambda_1^2 <= (2/sqrt(3)) * m and lambda_1 * lambda_2 <= (2/sqrt(3)) * m
# for a lattice of volume m. This is standard lattice theory, independent of
# the Qin machinery above.


def hermite_norm_sq_bound(m: int) -> int:
    """Largest integer ``N`` with ``N <= (2/sqrt(3)) * m``."""
    return math.isqrt(4 * m * m // 3)


def hermite_x_bound(m: int) -> int:
    """``ceil(sqrt((2/sqrt(3)) * m))`` computed exactly."""
    b = math.isqrt(math.isqrt(4 * m * m // 3))
    while 3 * b**4 < 4 * m * m:
        b += 1
    return b


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def _enumerate(a: int, m: int, bound: int):
    """All nonzero normalized lattice vectors with ``x^2 + y^2 <= bound``."""
    x_max = math.isqrt(bound)
    for x in range(0, x_max + 1):
        rest = bound - x * x
        y_max = math.isqrt(rest)
        r = (-a * x) % m
        # smallest y >= -y_max with y = r mod m
        y = r - ((r + y_max) // m) * m
        while y <= y_max:
            if x > 0 or y > 0:
                yield LatticeVector(x, y)
            y += m


def oracle_shortest(p: LatticeParams, count: int = 1, cap: int | None = None) -> list[tuple[LatticeVector, int]]:
    """Successive minima of ``L(a, m)`` by exhaustive enumeration.

    Returns up to ``count`` (at most 2) entries: a shortest vector, then the
    shortest vector linearly independent of it, each with its squared norm.
    """
    if count not in (0, 1, 2):
        raise ValueError("count must be 0, 1 or 2 in a 2-dimensional lattice")
    cap = oracle_cap() if cap is None else cap
    if p.m > cap:
        raise CapExceeded(f"m={p.m} exceeds the enumeration cap {cap}")
    if count == 0:
        return []
    a, m = p.a, p.m
    best = None
    for x in range(0, hermite_x_bound(m) + 1):
        r = (-a * x) % m
        for y in (r, r - m):
            v = LatticeVector(x, y).normalized()
            if v.x == 0 and v.y == 0:
                continue
            if best is None or v.sort_key() < best.sort_key():
                best = v
    out = [(best, best.norm_sq)]
    if count == 1:
        return out
    bound2 = (4 * m * m) // (3 * best.norm_sq)
    second = None
    for v in _enumerate(a, m, bound2):
        if v.x * best.y - v.y * best.x == 0:
            continue
        if second is None or v.sort_key() < second.sort_key():
            second = v
    out.append((second, second.norm_sq))
    return out


def shortest(a: int, m: int) -> SVReport:
    """Convenience wrapper: run Qin's algorithm and return the certified vector."""
    return shortest_via_states(run(a, m))


__all__ = [
    "Basis",
    "CapExceeded",
    "InnerProductTrace",
    "LatticeParams",
    "LatticeVector",
    "SVReport",
    "Source",
    "basis_at",
    "contains",
    "duality_basis",
    "heuristic_shortest",
    "hermite_norm_sq_bound",
    "hermite_x_bound",
    "inner_products",
    "oracle_shortest",
    "reproduce",
    "shortest",
    "shortest_via_states",
    "trivial_shortest",
]
