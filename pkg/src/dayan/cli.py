"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from dayan import cf, lattice
from dayan.qin import InvalidInput, StateMatrix, Trace, run
from dayan.suite import verify_corpus

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2

_DECIMAL = re.compile(r"-?[0-9]+")


def decimal(text: str) -> int:
    if not _DECIMAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


class UsageError(Exception):
    pass


def _params(args) -> tuple[int, int]:
    a, m = args.a, args.m
    if getattr(args, "reduce", False):
        if m < 1:
            raise InvalidInput(f"m must be positive to reduce a (got m={m})")
        a %= m
    return a, m


# --- trace table ------------------------------------------------------------

TABLE_HEADER = ("k", "x11", "x12", "x21", "x22", "q_k")


def format_table(trace: Trace) -> str:
    rows = [TABLE_HEADER]
    for k, s in enumerate(trace.states):
        q = "-" if k == 0 else str(trace.quotients[k - 1])
        rows.append((str(k), *(str(v) for v in s.as_tuple()), q))
    widths = [max(len(r[i]) for r in rows) for i in range(len(TABLE_HEADER))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def parse_table(text: str) -> Trace:
    """Inverse of :func:`format_table`."""
    lines = [ln.split() for ln in text.strip().splitlines()]
    if tuple(lines[0]) != TABLE_HEADER:
        raise ValueError("unrecognized table header")
    states, quotients = [], []
    for k, cols in enumerate(lines[1:]):
        if int(cols[0]) != k:
            raise ValueError(f"row {k} out of order")
        states.append(StateMatrix(*(int(c) for c in cols[1:5])))
        if k:
            quotients.append(int(cols[5]))
    return Trace(
        a=states[0].x12,
        m=states[0].x22,
        states=tuple(states),
        quotients=tuple(quotients),
        trailing_quotient=states[-1].x22,
        n_steps=len(quotients),
    )


# --- subcommands ------------------------------------------------------------


def cmd_inverse(args) -> int:
    a, m = _params(args)
    print(run(a, m).inverse)
    return EXIT_OK


def cmd_trace(args) -> int:
    a, m = _params(args)
    t = run(a, m)
    if args.format == "json":
        print(t.to_json())
    else:
        print(format_table(t))
    return EXIT_OK


def cmd_cf(args) -> int:
    a, m = _params(args)
    t = run(a, m)
    exp = cf.expansion(t)
    convs = cf.convergents(exp, include_final=args.include_final) if args.convergents else None
    if args.format == "json":
        doc = {"expansion": exp.to_dict()}
        if convs is not None:
            doc["convergents"] = [[str(c.alpha), str(c.beta)] for c in convs]
        print(json.dumps(doc))
        return EXIT_OK
    print(exp)
    for c in convs or ():
        print(f"{c.alpha}/{c.beta}")
    return EXIT_OK


def _fmt_vec(v) -> str:
    return f"({v.x}, {v.y})"


def _run_oracle(a: int, m: int, count: int, no_cap: bool, fmt: str) -> int:
    p = lattice.LatticeParams(a, m)
    cap = m if no_cap else None
    found = lattice.oracle_shortest(p, count, cap=cap)
    if fmt == "json":
        print(json.dumps([{"x": str(v.x), "y": str(v.y), "norm_sq": str(n)} for v, n in found]))
    else:
        for v, n in found:
            print(f"{_fmt_vec(v)} norm_sq={n}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    a, m = _params(args)
    if args.method == "oracle":
        return _run_oracle(a, m, args.count, args.unsafe_no_cap, args.format)
    t = run(a, m)
    rep = lattice.shortest_via_states(t) if args.method == "states" else lattice.heuristic_shortest(t)
    if args.format == "json":
        print(rep.to_json())
    else:
        where = rep.source.value if rep.source_step is None else f"{rep.source.value}@{rep.source_step}"
        print(f"{_fmt_vec(rep.shortest)} norm_sq={rep.norm_sq} source={where} "
              f"certified={str(rep.certified).lower()}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    a, m = _params(args)
    return _run_oracle(a, m, args.count, args.unsafe_no_cap, args.format)


def cmd_verify(args) -> int:
    if args.samples < 0:
        raise UsageError("--samples must be >= 0")
    if args.max_m < 3:
        raise UsageError("--max-m must be >= 3")
    if args.samples == 0:
        print("warning: --samples 0, nothing to verify", file=sys.stderr)
    res = verify_corpus(args.samples, args.max_m, args.seed, oracle_max_m=args.oracle_max_m)
    for line in res.lines():
        print(line)
    return EXIT_OK if res.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dayan", description="Qin's DaYan algorithm, continued fractions and 2-D lattices")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("a", type=decimal)
        p.add_argument("m", type=decimal)
        p.add_argument("--reduce", action="store_true", help="replace a by a mod m before validation")
        return p

    p = pair("inverse", "modular inverse of a mod m")
    p.set_defaults(func=cmd_inverse)

    p = pair("trace", "full state trace")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_trace)

    p = pair("cf", "continued fraction of a/m")
    p.add_argument("--convergents", action="store_true")
    p.add_argument("--include-final", action="store_true", help="also list the (N+1)-th convergent a/m")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cf)

    p = pair("lattice", "shortest vector of the lattice a*x + y = 0 mod m")
    p.add_argument("--method", choices=("states", "heuristic", "oracle"), default="states")
    p.add_argument("--count", type=int, default=1, choices=(1, 2), help="successive minima to report (oracle only)")
    p.add_argument("--unsafe-no-cap", action="store_true", help="UNSAFE: disable the oracle enumeration cap")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lattice)

    p = pair("oracle", "brute-force successive minima")
    p.add_argument("--count", type=int, default=1, choices=(1, 2))
    p.add_argument("--unsafe-no-cap", action="store_true", help="UNSAFE: disable the oracle enumeration cap")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the invariant suites over random inputs")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-m", type=decimal, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-max-m", type=decimal, default=10**7,
                   help="skip the brute-force comparison for larger m")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        sys.stdout.reconfigure(line_buffering=True)
    except AttributeError:
        pass
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, lattice.CapExceeded, UsageError) as exc:
        print(f"dayan: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"dayan: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
