"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the report inline
(the lines are also written with capture disabled, so plain ``pytest -v``
shows them too).
"""

import json
import statistics
import time
from math import gcd

import pytest
from conftest import PAPER_A, PAPER_INNER, PAPER_M, PAPER_STATES, ext_euclid

from dayan import cf, lattice
from dayan.cli import main, parse_table
from dayan.lattice import LatticeParams
from dayan.qin import run, sstate
from dayan.suite import random_pairs

CORPUS_SIZE = 10_000
ORACLE_SIZE = 1_000
MAX_M = 10**6
SEED = 20240101


@pytest.fixture(scope="module")
def corpus():
    return random_pairs(CORPUS_SIZE, MAX_M, SEED)


@pytest.fixture(scope="module")
def traces(corpus):
    return [run(a, m) for a, m in corpus]


@pytest.fixture
def report(capsys):
    def _report(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}{': ' + detail if detail else ''}")
        assert ok, f"{name}: {detail}"

    return _report


def test_ac1_golden_trace(capsys, report):
    t0 = time.perf_counter()
    code = main(["trace", str(PAPER_A), str(PAPER_M), "--format", "table"])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    t = parse_table(out)
    ok = (
        code == 0
        and [s.as_tuple() for s in t.states] == PAPER_STATES
        and t.quotients == (1, 17, 2, 1, 29, 4)
        and t.trailing_quotient == 6
        and t == run(PAPER_A, PAPER_M)
        and elapsed < 0.010
    )
    report("AC1 golden replay of the 7-state example", ok, f"{elapsed * 1e3:.3f} ms")


def test_ac2_inner_products(report):
    ip = lattice.inner_products(run(PAPER_A, PAPER_M))
    ok = list(ip.values) == PAPER_INNER and ip.sign_change_index == 4
    report("AC2 inner-product column and k0 = 4", ok, str(list(ip.values)))


def test_ac3_shortest_vectors(capsys, report):
    main(["lattice", str(PAPER_A), str(PAPER_M), "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    (v1, n1), (v2, n2) = lattice.oracle_shortest(LatticeParams(PAPER_A, PAPER_M), 2)
    b4 = lattice.basis_at(run(PAPER_A, PAPER_M), 4)
    ok = (
        (doc["x"], doc["y"], doc["norm_sq"]) == ("55", "-25", "3650")
        and (tuple(v1), n1) == ((55, -25), 3650)
        and tuple(v2) == (257, 631)
        and 4 * b4.v1 + 1 * b4.v2 == v2
    )
    report("AC3 shortest (55,-25), second (257,631) = (4,1)*S_4", ok, f"second norm_sq={n2}")


def test_ac4_inverse_correctness(corpus, report):
    t0 = time.perf_counter()
    bad = []
    for a, m in corpus:
        t = run(a, m)
        u = t.inverse
        if not ((u * a) % m == 1 and 0 < u < m and t.n_steps % 2 == 0 and u == ext_euclid(a, m)):
            bad.append((a, m))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    report("AC4 inverse correctness", ok, f"{CORPUS_SIZE - len(bad)}/{CORPUS_SIZE} in {elapsed:.2f} s")


def _qin_invariants(t):
    st, m = t.states, t.m
    if any(s.invariant != m for s in st):
        return "invariant"
    if any(q < 1 for q in t.quotients):
        return "q_k < 1"
    for k in range(1, t.n_steps + 1):
        q = t.quotients[k - 1]
        (p11, p12), (p21, p22) = sstate(st[k - 1]).rows()
        # L(q) = (1,0;q,1) on odd steps, its transpose on even steps
        lm = ((1, 0), (q, 1)) if k % 2 else ((1, q), (0, 1))
        want = (
            (lm[0][0] * p11 + lm[0][1] * p21, lm[0][0] * p12 + lm[0][1] * p22),
            (lm[1][0] * p11 + lm[1][1] * p21, lm[1][0] * p12 + lm[1][1] * p22),
        )
        if sstate(st[k]).rows() != want:
            return f"recursion k={k}"
    cols = list(zip(*(s.as_tuple() for s in st)))
    x11, x12, x21, x22 = cols
    for k in range(1, t.n_steps + 1):
        if k % 2:
            ok = x11[k] == x11[k - 1] and x21[k] > x21[k - 1] and x12[k] == x12[k - 1] and x22[k] < x22[k - 1]
        else:
            ok = x11[k] > x11[k - 1] and x21[k] == x21[k - 1] and x12[k] < x12[k - 1] and x22[k] == x22[k - 1]
        if not ok:
            return f"monotone k={k}"
    return None


def test_ac5_invariant_suite(traces, report):
    bad = [(t.a, t.m, e) for t in traces if (e := _qin_invariants(t))]
    report("AC5 Qin invariant, matrix recursion, monotone columns, q_k >= 1", not bad,
           f"{len(traces) - len(bad)}/{len(traces)}" + (f" first failure {bad[0]}" if bad else ""))


def test_ac6_cf_suite(traces, report):
    bad = []
    for t in traces:
        exp = cf.expansion(t)
        if cf.evaluate(exp) != (t.a, t.m):
            bad.append((t.a, t.m, "round trip"))
            continue
        if not cf.check_state_correspondence(t).passed:
            bad.append((t.a, t.m, "correspondence"))
            continue
        failed = [name for name, r in cf.check_identities(t).items() if not r.passed]
        if failed:
            bad.append((t.a, t.m, failed))
    report("AC6 CF round trip, correspondence, identities and bounds", not bad,
           f"{len(traces) - len(bad)}/{len(traces)}" + (f" first failure {bad[0]}" if bad else ""))


def test_ac7_oracle_equivalence(report):
    pairs = random_pairs(ORACLE_SIZE, MAX_M, SEED + 1)
    t0 = time.perf_counter()
    bad = []
    trivial_checked = 0
    for a, m in pairs:
        t = run(a, m)
        (_, n1), = lattice.oracle_shortest(LatticeParams(a, m), 1)
        if lattice.shortest_via_states(t).norm_sq != n1:
            bad.append((a, m, "state scan vs oracle"))
        if 3 * n1 * n1 > 4 * m * m:
            bad.append((a, m, "Hermite bound"))
        u = t.inverse
        if a * a < m:
            trivial_checked += 1
            if n1 != 1 + a * a:
                bad.append((a, m, "trivial (1,-a)"))
        if u * u < m:
            trivial_checked += 1
            if n1 != 1 + u * u:
                bad.append((a, m, "trivial (a^-1,-1)"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    report("AC7 SVP oracle equivalence", ok,
           f"{ORACLE_SIZE - len({b[:2] for b in bad})}/{ORACLE_SIZE} in {elapsed:.2f} s, "
           f"trivial-case hypotheses met {trivial_checked}x")


def test_ac7_trivial_cases_exercised(report):
    # the random corpus rarely hits a^2 < m; check the proposition on a dense small range too
    bad = []
    hits = 0
    for m in range(3, 400):
        for a in range(2, m):
            if gcd(a, m) != 1 or (a * a >= m and pow(a, -1, m) ** 2 >= m):
                continue
            p = LatticeParams(a, m)
            hits += 1
            (_, n1), = lattice.oracle_shortest(p, 1)
            u = pow(a, -1, m)
            want = 1 + a * a if a * a < m else 1 + u * u
            if n1 != want or lattice.trivial_shortest(p).norm_sq != n1:
                bad.append((a, m))
    report("AC7 trivial-case proposition (dense small range)", not bad and hits > 0, f"{hits} lattices")


def test_ac8_inner_product_positivity(traces, report):
    bad, applicable = [], 0
    for t in traces:
        if t.inverse**2 >= t.m:
            applicable += 1
            ip = lattice.inner_products(t)
            if not (ip.values[-1] > 0 and ip.sign_change_index is not None):
                bad.append((t.a, t.m))
    report("AC8 I_N > 0 whenever (a^-1)^2 >= m", not bad, f"{applicable - len(bad)}/{applicable}")


def test_ac9_heuristic_measurement(traces, report):
    matches = 0
    ratios = []
    for t in traces:
        h = lattice.heuristic_shortest(t)
        if h.norm_sq == lattice.shortest_via_states(t).norm_sq:
            matches += 1
        k0 = lattice.inner_products(t).sign_change_index
        if k0 is not None:
            ratios.append(k0 / t.n_steps)
    q = statistics.quantiles(ratios, n=4)
    detail = (
        f"heuristic matches certified norm on {matches}/{len(traces)} "
        f"({matches / len(traces):.4f}); k0/N over {len(ratios)} traces: "
        f"mean={statistics.fmean(ratios):.3f} q1={q[0]:.3f} median={q[1]:.3f} q3={q[2]:.3f} "
        f"min={min(ratios):.3f} max={max(ratios):.3f}"
    )
    # measurement only: no threshold
    report("AC9 heuristic measurement (non-assertive)", True, detail)
