"""Continued fractions read off the states of a Qin trace.

For ``lambda = a/m`` the partial quotients are the trace quotients
``q_1 .. q_N`` followed by ``q_{N+1} = x22`` of the final state. The
denominators ``beta_k`` of the convergents reappear verbatim in the left
column of the states.

All comparisons between rationals are done by cross-multiplication; nothing
in this module touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from dayan.arith import div_floor
from dayan.qin import Trace, sstate


@dataclass(frozen=True)
class CFExpansion:
    leading: int
    partial_quotients: tuple[int, ...]

    def __str__(self) -> str:
        return "[" + f"{self.leading}; " + ", ".join(str(q) for q in self.partial_quotients) + "]"

    def to_dict(self) -> dict:
        return {"leading": self.leading, "pq": [str(q) for q in self.partial_quotients]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, doc: dict) -> "CFExpansion":
        return cls(int(doc["leading"]), tuple(int(q) for q in doc["pq"]))


@dataclass(frozen=True)
class Convergent:
    alpha: int
    beta: int
    index: int

    def error_numerator(self, a: int, m: int) -> int:
        """``m*alpha - a*beta``, i.e. ``m*beta*(alpha/beta - a/m)``."""
        return m * self.alpha - a * self.beta


def convergents_to_json(convs: Sequence[Convergent], **kwargs) -> str:
    return json.dumps([[str(c.alpha), str(c.beta)] for c in convs], **kwargs)


class BoundKind(str, Enum):
    INV_BETA_SQ = "inv_beta_sq"
    HALF_INV_BETA_SQ = "half_inv_beta_sq"


@dataclass(frozen=True)
class ApproxCertificate:
    """Exact statement that ``|alpha_k/beta_k - a/m|`` is below a bound."""

    k: int
    error_numerator: int
    bound_kind: BoundKind
    beta: int
    m: int

    @property
    def error(self) -> Fraction:
        return Fraction(abs(self.error_numerator), self.m * self.beta)

    @property
    def bound(self) -> Fraction:
        scale = 2 if self.bound_kind is BoundKind.HALF_INV_BETA_SQ else 1
        return Fraction(1, scale * self.beta * self.beta)


@dataclass
class CheckReport:
    """Outcome of an identity check; ``failures`` holds ``(k, label)`` pairs."""

    name: str
    checked: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> tuple[int, str] | None:
        return self.failures[0] if self.failures else None

    def expect(self, ok: bool, k: int, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append((k, label))

    def __bool__(self) -> bool:
        return self.passed


def expansion(trace: Trace) -> CFExpansion:
    return CFExpansion(0, tuple(trace.quotients) + (trace.trailing_quotient,))


def canonical_expansion(num: int, den: int) -> CFExpansion:
    """Ordinary floor-division expansion of ``num/den`` (``0 < num < den``)."""
    if not 0 < num < den:
        raise ValueError("expected 0 < num < den")
    pq = []
    c, d = den, num
    while d:
        q, r = div_floor(c, d)
        pq.append(q)
        c, d = d, r
    return CFExpansion(0, tuple(pq))


def evaluate(cf: CFExpansion) -> tuple[int, int]:
    """Return ``(num, den)`` of the expansion's value, in lowest terms."""
    for q in cf.partial_quotients:
        if q < 1:
            raise ValueError(f"partial quotients after the leading term must be >= 1, got {q}")
    p_prev, p = 1, cf.leading
    r_prev, r = 0, 1
    for q in cf.partial_quotients:
        p_prev, p = p, q * p + p_prev
        r_prev, r = r, q * r + r_prev
    return p, r


def convergents(cf: CFExpansion, include_final: bool = False) -> list[Convergent]:
    """Convergents ``alpha_k/beta_k`` for ``k = 0 .. N``.

    ``N`` is the number of trace steps, i.e. one less than the number of
    partial quotients. ``include_final=True`` appends ``k = N + 1`` whose
    value is the expanded number itself.
    """
    if not cf.partial_quotients:
        raise ValueError("expansion has no partial quotients")
    n = len(cf.partial_quotients) - 1
    last = n + 1 if include_final else n
    alpha_prev, alpha = 1, cf.leading
    beta_prev, beta = 0, 1
    out = [Convergent(alpha, beta, 0)]
    for k in range(1, last + 1):
        q = cf.partial_quotients[k - 1]
        alpha_prev, alpha = alpha, q * alpha + alpha_prev
        beta_prev, beta = beta, q * beta + beta_prev
        out.append(Convergent(alpha, beta, k))
    return out


def certificate(conv: Convergent, a: int, m: int) -> ApproxCertificate | None:
    """Strongest classical bound met by ``conv``, or ``None`` if neither holds."""
    e = conv.error_numerator(a, m)
    if 2 * conv.beta * abs(e) < m:
        kind = BoundKind.HALF_INV_BETA_SQ
    elif conv.beta * abs(e) < m:
        kind = BoundKind.INV_BETA_SQ
    else:
        return None
    return ApproxCertificate(conv.index, e, kind, conv.beta, m)


def check_state_correspondence(trace: Trace) -> CheckReport:
    """Compare every s-state with the convergent layout it should have.

    Odd ``k``: rows ``(beta_{k-1}, e_{k-1})`` then ``(beta_k, e_k)``; even
    ``k`` swaps the rows. Here ``e_j = m*alpha_j - a*beta_j``.
    """
    a, m = trace.a, trace.m
    convs = convergents(expansion(trace))
    report = CheckReport("state_correspondence")
    for k in range(1, trace.n_steps + 1):
        prev, cur = convs[k - 1], convs[k]
        r_prev = (prev.beta, prev.error_numerator(a, m))
        r_cur = (cur.beta, cur.error_numerator(a, m))
        expected = (r_prev, r_cur) if k % 2 else (r_cur, r_prev)
        got = sstate(trace.states[k]).rows()
        for (i, j), label in (((0, 0), "x11"), ((0, 1), "-x12"), ((1, 0), "x21"), ((1, 1), "x22")):
            report.expect(got[i][j] == expected[i][j], k, label)
    return report


def _matmul(p, q):
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


def check_identities(trace: Trace) -> dict[str, CheckReport]:
    """Run the classical convergent identities and bounds over a trace.

    Returned reports, keyed by name:

    ``determinant``
        ``alpha_k*beta_{k-1} - alpha_{k-1}*beta_k = (-1)^(k-1)``.
    ``matrix_product``
        alternating products of ``(1,0;q,1)`` and its transpose reproduce
        the convergent matrices.
    ``alternating_order``
        even convergents rise towards ``a/m`` from below, odd ones fall
        towards it from above.
    ``pair_sum``
        ``beta_k*|e_{k-1}| + beta_{k-1}*|e_k| = m``.
    ``inv_beta_sq``
        ``beta_j*|e_j| < m``.
    ``half_inv_beta_sq``
        of each consecutive pair, at least one has ``2*beta_j*|e_j| < m``.
    """
    a, m = trace.a, trace.m
    n = trace.n_steps
    cv = convergents(expansion(trace))
    al = [c.alpha for c in cv]
    be = [c.beta for c in cv]
    err = [m * al[j] - a * be[j] for j in range(n + 1)]

    det = CheckReport("determinant")
    for k in range(1, n + 1):
        det.expect(al[k] * be[k - 1] - al[k - 1] * be[k] == (-1) ** (k - 1), k, "det")

    prod = CheckReport("matrix_product")
    acc = ((1, 0), (0, 1))
    for k in range(1, n + 1):
        q = trace.quotients[k - 1]
        factor = ((1, 0), (q, 1)) if k % 2 else ((1, q), (0, 1))
        acc = _matmul(factor, acc)
        r_prev, r_cur = (be[k - 1], al[k - 1]), (be[k], al[k])
        expected = (r_prev, r_cur) if k % 2 else (r_cur, r_prev)
        prod.expect(acc == expected, k, "product")

    order = CheckReport("alternating_order")
    for k in range(n + 1):
        if k % 2 == 0:
            order.expect(al[k] * m < a * be[k], k, "even below a/m")
        else:
            order.expect(al[k] * m > a * be[k], k, "odd above a/m")
        if k + 2 <= n:
            if k % 2 == 0:
                order.expect(al[k] * be[k + 2] < al[k + 2] * be[k], k, "even increasing")
            else:
                order.expect(al[k] * be[k + 2] > al[k + 2] * be[k], k, "odd decreasing")

    pair = CheckReport("pair_sum")
    for k in range(1, n + 1):
        pair.expect(be[k] * abs(err[k - 1]) + be[k - 1] * abs(err[k]) == m, k, "pair sum")

    inv_sq = CheckReport("inv_beta_sq")
    for j in range(n + 1):
        inv_sq.expect(be[j] * abs(err[j]) < m, j, "1/beta^2")

    half = CheckReport("half_inv_beta_sq")
    for k in range(1, n + 1):
        ok = any(2 * be[j] * abs(err[j]) < m for j in (k - 1, k))
        half.expect(ok, k, "1/(2 beta^2)")

    return {r.name: r for r in (det, prod, order, pair, inv_sq, half)}


def same_value_variants(qin_cf: CFExpansion, canonical: CFExpansion) -> bool:
    """True if two finite expansions differ at most by ``[.., x, 1] <-> [.., x+1]``."""
    p, c = qin_cf.partial_quotients, canonical.partial_quotients
    if p == c:
        return True
    if len(p) == len(c) + 1 and p[-1] == 1 and p[:-2] == c[:-1] and p[-2] + 1 == c[-1]:
        return True
    if len(c) == len(p) + 1 and c[-1] == 1 and c[:-2] == p[:-1] and c[-2] + 1 == p[-1]:
        return True
    return False
