"""Command-line front end: generation, correlation, distribution, verification.

Exit codes: 0 = all checks pass, 1 = mathematical mismatch, 2 = usage error.
Output is CSV by default (`--json` switches to a single JSON document) and
deterministic: rows sorted by tau ascending, distributions by value ascending.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import arith, blocks, closedform
from .errors import ArithCorrError, PolynomialFormatError
from .gf2m import GF2m, find_primitive_polynomials, format_poly, make_field, parse_poly
from .sequences import BinarySequence, m_sequence

POLY_TABLE_ENV = "ARITHCORR_POLY_TABLE"


@dataclass
class RunReport:
    """Outcome of a batch command: per-check rows plus any mismatches."""

    command: str
    parameters: dict
    rows: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.mismatches else "fail"

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "parameters": self.parameters,
                "rows": self.rows,
                "mismatches": self.mismatches,
                "status": self.status,
            }
        )


def _load_env_poly_table() -> dict[int, int]:
    """User polynomial table: lines `m,exponent-list`, '#' comments allowed."""
    path = os.environ.get(POLY_TABLE_ENV)
    if not path:
        return {}
    table = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(",")
            try:
                m = int(head)
            except ValueError:
                raise PolynomialFormatError(f"bad table line {raw!r}") from None
            table[m] = parse_poly(rest)
    return table


def _resolve_field(m: int, poly_text: str | None) -> GF2m:
    if poly_text is not None:
        return make_field(m, parse_poly(poly_text))
    return make_field(m, _load_env_poly_table().get(m))


def _map_taus(fn, taus, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, taus))
    return [fn(t) for t in taus]


def cmd_gen(args) -> int:
    ctx = _resolve_field(args.m, args.poly)
    seq = m_sequence(ctx)
    if args.json:
        print(
            json.dumps(
                {
                    "command": "gen",
                    "m": ctx.m,
                    "poly": format_poly(ctx.modulus),
                    "n": ctx.n,
                    "bits": str(seq),
                }
            )
        )
    elif args.format == "csv":
        print(seq.to_csv())
    else:
        print(seq)
    return 0


def cmd_acorr(args) -> int:
    ctx = _resolve_field(args.m, args.poly)
    seq = m_sequence(ctx)
    methods = ["direct", "blocks", "closed"] if args.method == "all" else [args.method]
    taus = list(range(1, ctx.n)) if args.all else [args.tau]

    def row(tau: int) -> dict:
        r = {"tau": tau}
        if "direct" in methods:
            r["direct"] = arith.arithmetic_autocorr(seq, tau)
        if "blocks" in methods:
            r["blocks"] = blocks.autocorr_via_blocks(seq, seq.shift(tau))
        if "closed" in methods:
            r["closed"] = closedform.predict_acorr(ctx, tau).predicted_A
        return r

    rows = _map_taus(row, taus, args.threads)
    mismatch = any(len(set(v for k, v in r.items() if k != "tau")) > 1 for r in rows)
    if args.json:
        print(
            json.dumps(
                {
                    "command": "acorr",
                    "m": ctx.m,
                    "poly": format_poly(ctx.modulus),
                    "methods": methods,
                    "rows": rows,
                    "status": "fail" if mismatch else "pass",
                }
            )
        )
    else:
        for r in rows:
            print(",".join(str(r[k]) for k in ["tau"] + methods))
    return 1 if mismatch else 0


def cmd_dist(args) -> int:
    ctx = _resolve_field(args.m, args.poly)
    seq = m_sequence(ctx)
    values = _map_taus(lambda t: arith.arithmetic_autocorr(seq, t), range(1, ctx.n), args.threads)
    dist: dict[int, int] = {}
    for v in values:
        dist[v] = dist.get(v, 0) + 1
    ok = dist == closedform.predict_distribution(ctx.m) if args.check else None
    if args.json:
        doc = {
            "command": "dist",
            "m": ctx.m,
            "poly": format_poly(ctx.modulus),
            "distribution": {str(v): dist[v] for v in sorted(dist)},
        }
        if args.check:
            doc["check"] = "pass" if ok else "fail"
        print(json.dumps(doc))
    else:
        for v in sorted(dist):
            print(f"{v},{dist[v]}")
        if args.check:
            print(f"check,{'pass' if ok else 'fail'}")
    return 0 if ok in (True, None) else 1


def _sample_taus(n: int, limit: int = 64) -> list[int]:
    if n - 1 <= limit:
        return list(range(1, n))
    step = (n - 1) // limit
    taus = list(range(1, n, step))
    if taus[-1] != n - 1:
        taus.append(n - 1)
    return taus


def _verify_field(ctx: GF2m, report: RunReport) -> None:
    m, n = ctx.m, ctx.n
    poly = f"0x{ctx.modulus:x}"
    seq = m_sequence(ctx)

    # three-way route agreement; the O(n)-per-tau blocks route is sampled
    # for m >= 13 to keep large fields tractable
    block_taus = set(range(1, n)) if m <= 12 else set(_sample_taus(n))
    bad = []
    for tau in range(1, n):
        direct = arith.arithmetic_autocorr(seq, tau)
        closed = closedform.predict_acorr(ctx, tau).predicted_A
        via_blocks = (
            blocks.autocorr_via_blocks(seq, seq.shift(tau)) if tau in block_taus else direct
        )
        if not direct == via_blocks == closed:
            bad.append(
                {
                    "check": "three_way",
                    "m": m,
                    "poly": poly,
                    "tau": tau,
                    "direct": direct,
                    "blocks": via_blocks,
                    "closed": closed,
                }
            )
    report.rows.append({"check": "three_way", "m": m, "poly": poly, "status": "pass" if not bad else "fail"})
    report.mismatches.extend(bad)

    # classical pseudorandomness: ideal autocorrelation, pattern counts (m <= 8)
    bad = []
    for tau in range(1, n):
        if seq.classical_autocorr(tau) != -1:
            bad.append({"check": "classical", "m": m, "poly": poly, "tau": tau})
    if m <= 8:
        from itertools import product

        for l in range(1, m + 1):
            for pattern in product((0, 1), repeat=l):
                expected = (1 << (m - l)) - 1 if not any(pattern) else 1 << (m - l)
                got = seq.pattern_count(pattern)
                if got != expected:
                    bad.append(
                        {
                            "check": "pattern",
                            "m": m,
                            "poly": poly,
                            "pattern": "".join(map(str, pattern)),
                            "expected": expected,
                            "got": got,
                        }
                    )
    report.rows.append({"check": "lemma1", "m": m, "poly": poly, "status": "pass" if not bad else "fail"})
    report.mismatches.extend(bad)

    # counting identities by field enumeration, capped at m <= 8
    if m <= 8:
        bad = []
        quarter = 1 << (m - 2)
        for tau in range(1, n):
            eq4 = [closedform.brute_count_eq4(ctx, tau, l) for l in range(m)]
            eq5 = [closedform.brute_count_eq5(ctx, tau, l) for l in range(m)]
            if sum(eq4) != quarter or sum(eq5) != quarter:
                bad.append({"check": "count_sums", "m": m, "poly": poly, "tau": tau})
            for l in range(1, m):
                if closedform.lemma4_count(ctx, tau, l) != eq4[l]:
                    bad.append({"check": "closed_count", "m": m, "poly": poly, "tau": tau, "l": l})
            if sum(l * c for l, c in enumerate(eq4)) != closedform.weighted_sum(ctx, tau):
                bad.append({"check": "weighted_sum", "m": m, "poly": poly, "tau": tau})
        report.rows.append(
            {"check": "counting", "m": m, "poly": poly, "status": "pass" if not bad else "fail"}
        )
        report.mismatches.extend(bad)

    # full distribution against the closed-form prediction
    dist = arith.distribution(seq)
    if dist != closedform.predict_distribution(m):
        report.mismatches.append({"check": "distribution", "m": m, "poly": poly})
        report.rows.append({"check": "distribution", "m": m, "poly": poly, "status": "fail"})
    else:
        report.rows.append({"check": "distribution", "m": m, "poly": poly, "status": "pass"})


def cmd_verify(args) -> int:
    try:
        lo_text, _, hi_text = args.m_range.partition("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        print(f"error: malformed m-range {args.m_range!r}, expected A..B", file=sys.stderr)
        return 2
    if not (2 <= lo <= hi <= 16):
        print(f"error: m-range {args.m_range!r} outside 2..16", file=sys.stderr)
        return 2
    report = RunReport(
        command="verify", parameters={"m_range": args.m_range, "polys": args.polys}
    )
    env_table = _load_env_poly_table()
    for m in range(lo, hi + 1):
        if args.polys == "all":
            polys = find_primitive_polynomials(m, 3)
        else:
            polys = [env_table.get(m)]
        for poly in polys:
            _verify_field(make_field(m, poly), report)
    if args.json:
        print(report.to_json())
    else:
        print("check,m,poly,status")
        for row in report.rows:
            print(f"{row['check']},{row['m']},{row['poly']},{row['status']}")
        for miss in report.mismatches:
            detail = ";".join(f"{k}={v}" for k, v in miss.items())
            print(f"mismatch,{detail}")
        print(f"status,{report.status}")
    return 0 if report.status == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithcorr",
        description="Arithmetic (2-adic) autocorrelation of binary m-sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an m-sequence")
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--poly", help="modulus as hex mask (0xB) or exponent list (3,1,0)")
    gen.add_argument("--format", choices=["bits", "csv"], default="bits")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_gen)

    acorr = sub.add_parser("acorr", help="arithmetic autocorrelation at one or all shifts")
    acorr.add_argument("--m", type=int, required=True)
    acorr.add_argument("--poly")
    group = acorr.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", type=int)
    group.add_argument("--all", action="store_true")
    acorr.add_argument("--method", choices=["direct", "blocks", "closed", "all"], default="direct")
    acorr.add_argument("--threads", type=int, default=1)
    acorr.add_argument("--json", action="store_true")
    acorr.set_defaults(func=cmd_acorr)

    dist = sub.add_parser("dist", help="full correlation distribution")
    dist.add_argument("--m", type=int, required=True)
    dist.add_argument("--poly")
    dist.add_argument("--check", action="store_true", help="compare against the closed form")
    dist.add_argument("--threads", type=int, default=1)
    dist.add_argument("--json", action="store_true")
    dist.set_defaults(func=cmd_dist)

    verify = sub.add_parser("verify", help="run the full verification suite")
    verify.add_argument("--m-range", required=True, help="degree range A..B, 2 <= A <= B <= 16")
    verify.add_argument("--polys", choices=["default", "all"], default="default")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ArithCorrError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
