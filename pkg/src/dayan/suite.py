"""Invariant suites over random ``(a, m)`` corpora.

Each ``check_*`` function takes a completed trace and returns a list of
failure labels (empty means pass). :func:`verify_corpus` runs them all and
is what the ``verify`` command prints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from dayan import cf, lattice
from dayan.qin import Trace, run, sstate


def random_pairs(n: int, max_m: int, seed: int, min_m: int = 3) -> list[tuple[int, int]]:
    """``n`` deterministic random pairs with ``1 < a < m <= max_m``, ``gcd(a, m) = 1``."""
    if max_m < 3:
        raise ValueError("max_m must be at least 3")
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        m = rng.randint(min_m, max_m)
        a = rng.randint(2, m - 1)
        if gcd(a, m) == 1:
            out.append((a, m))
    return out


def ext_euclid_inverse(a: int, m: int) -> int:
    """Textbook extended Euclid, reduced into ``[0, m)``."""
    old_r, r = a, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ValueError("not invertible")
    return old_s % m


def check_qin(t: Trace) -> list[str]:
    a, m, n = t.a, t.m, t.n_steps
    fails = []
    st = t.states
    if n < 2 or n % 2:
        fails.append(f"N={n} not even >= 2")
    if st[0].as_tuple() != (1, a, 0, m):
        fails.append("initial state")
    if st[-1].x12 != 1:
        fails.append("final x12 != 1")
    u = st[-1].x11
    if not (0 < u < m and (u * a) % m == 1):
        fails.append("inverse")
    if u != ext_euclid_inverse(a, m):
        fails.append("inverse differs from extended Euclid")
    if t.trailing_quotient != st[-1].x22:
        fails.append("trailing quotient")
    for k, s in enumerate(st):
        if min(s.as_tuple()) < 0:
            fails.append(f"negative entry at k={k}")
        if s.invariant != m:
            fails.append(f"Qin invariant at k={k}")
        if s.x12 < 1 or s.x22 < 1:
            fails.append(f"right column vanished at k={k}")
    for k in range(1, n + 1):
        q = t.quotients[k - 1]
        if q < 1:
            fails.append(f"q_{k} < 1")
        p, c = sstate(st[k - 1]), sstate(st[k])
        if k % 2:
            want_v1 = p.v1
            want_v2 = (p.v2[0] + q * p.v1[0], p.v2[1] + q * p.v1[1])
        else:
            want_v1 = (p.v1[0] + q * p.v2[0], p.v1[1] + q * p.v2[1])
            want_v2 = p.v2
        if (c.v1, c.v2) != (want_v1, want_v2):
            fails.append(f"matrix recursion at k={k}")
        s0, s1 = st[k - 1], st[k]
        if k % 2:
            ok = s1.x11 == s0.x11 and s1.x21 > s0.x21 and s1.x12 == s0.x12 and s1.x22 < s0.x22
        else:
            ok = s1.x11 > s0.x11 and s1.x21 == s0.x21 and s1.x12 < s0.x12 and s1.x22 == s0.x22
        if not ok:
            fails.append(f"monotone columns at k={k}")
    return fails


def check_cf(t: Trace) -> list[str]:
    fails = []
    exp = cf.expansion(t)
    if cf.evaluate(exp) != (t.a, t.m):
        fails.append("round trip")
    if not cf.same_value_variants(exp, cf.canonical_expansion(t.a, t.m)):
        fails.append("differs from canonical expansion beyond last-term split")
    convs = cf.convergents(exp)
    for c in convs[1:]:
        if gcd(c.alpha, c.beta) != 1:
            fails.append(f"convergent {c.index} not reduced")
    for k in range(2, len(convs)):
        if not convs[k].beta > convs[k - 1].beta:
            fails.append(f"beta not increasing at {k}")
    reports = [cf.check_state_correspondence(t), *cf.check_identities(t).values()]
    for r in reports:
        if not r.passed:
            fails.append(f"{r.name} at k={r.first_failure[0]}")
    return fails


def check_lattice(t: Trace) -> list[str]:
    fails = []
    p = lattice.LatticeParams(t.a, t.m)
    for k in range(t.n_steps + 1):
        b = lattice.basis_at(t, k)
        if not (lattice.contains(p, b.v1) and lattice.contains(p, b.v2)):
            fails.append(f"basis rows outside lattice at k={k}")
        if b.det != t.m:
            fails.append(f"det != m at k={k}")
    db = lattice.duality_basis(t)
    if (tuple(db.v1), tuple(db.v2)) != ((t.inverse, -1), (t.m, 0)):
        fails.append("duality closure")
    try:
        ip = lattice.inner_products(t)
    except AssertionError as exc:
        return fails + [str(exc)]
    vals = ip.values
    if vals[0] != -t.a * t.m:
        fails.append("I_0 != -a*m")
    if any(vals[k] >= vals[k + 1] for k in range(len(vals) - 1)):
        fails.append("inner products not strictly increasing")
    u = t.inverse
    if u * u >= t.m and not (vals[-1] > 0 and ip.sign_change_index is not None):
        fails.append("I_N positivity")
    rep = lattice.shortest_via_states(t)
    if not lattice.contains(p, rep.shortest) or rep.norm_sq != rep.shortest.norm_sq:
        fails.append("shortest vector report inconsistent")
    if lattice.reproduce(t, rep) != rep.shortest:
        fails.append("provenance does not reproduce the vector")
    if rep.norm_sq * rep.norm_sq * 3 > 4 * t.m * t.m:
        fails.append("Hermite bound violated")
    return fails


def check_oracle(t: Trace) -> list[str]:
    p = lattice.LatticeParams(t.a, t.m)
    (v, n1), = lattice.oracle_shortest(p, 1, cap=t.m)
    fails = []
    if lattice.shortest_via_states(t).norm_sq != n1:
        fails.append("state scan disagrees with oracle")
    if t.a * t.a < t.m and n1 != 1 + t.a * t.a:
        fails.append("trivial case (1, -a)")
    if t.inverse**2 < t.m and n1 != 1 + t.inverse**2:
        fails.append("trivial case (a^-1, -1)")
    return fails


SUITES = {"qin": check_qin, "cf": check_cf, "lattice": check_lattice, "oracle": check_oracle}


@dataclass
class VerifyResult:
    samples: int
    seed: int
    max_m: int
    passed: dict[str, int] = field(default_factory=dict)
    ran: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[int, int, str, str]] = field(default_factory=list)
    all_passed: int = 0
    heuristic_matches: int = 0
    k0_ratios: list[float] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"samples={self.samples} seed={self.seed} max_m={self.max_m}"]
        for name in SUITES:
            if self.ran.get(name):
                out.append(f"{name}: {self.passed[name]}/{self.ran[name]} passed")
        out.append(f"heuristic agreement: {self.heuristic_matches}/{self.samples}")
        for a, m, suite, msg in self.failures[:20]:
            out.append(f"FAIL {suite} a={a} m={m}: {msg}")
        out.append(f"{self.all_passed}/{self.samples} passed")
        return out


def verify_corpus(samples: int, max_m: int, seed: int, oracle_max_m: int = 10**7) -> VerifyResult:
    res = VerifyResult(samples, seed, max_m)
    res.passed = {name: 0 for name in SUITES}
    res.ran = {name: 0 for name in SUITES}
    for a, m in random_pairs(samples, max_m, seed) if samples else []:
        t = run(a, m)
        sample_ok = True
        for name, fn in SUITES.items():
            if name == "oracle" and m > oracle_max_m:
                continue
            res.ran[name] += 1
            fails = fn(t)
            if fails:
                sample_ok = False
                res.failures.extend((a, m, name, f) for f in fails)
            else:
                res.passed[name] += 1
        res.all_passed += sample_ok
        h = lattice.heuristic_shortest(t)
        if h.norm_sq == lattice.shortest_via_states(t).norm_sq:
            res.heuristic_matches += 1
        k0 = lattice.inner_products(t).sign_change_index
        if k0 is not None:
            res.k0_ratios.append(k0 / t.n_steps)
    return res
