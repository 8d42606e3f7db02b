"""Command-line front end.

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
2 when an input violates a precondition and 3 when an internal invariant
fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import cache
from .arith import primes_between, render_decimal
from .cohomology import (
    InconclusiveAtInfinity,
    no_overlap_certificate,
    overlap_at_infinity,
    sym3_infinity,
    tensor_infinity,
)
from .conductor import rs_conductor_range
from .dims import DimensionKey, dim_cusp, dim_new
from .errors import InvariantError, PreconditionError
from .estimator import EstimateReport, ScanFailure, scan
from .quadratic import DihedralBoundInput, ImagQuadField, class_number, dihedral_count_bound

log = logging.getLogger("cuspcount")

ESTIMATE_COLUMNS = (
    "p", "n1", "n2", "A", "B", "pairCount", "dihedralBound", "lowerBound",
    "ratio", "ratio_exact", "flags",
)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (tuple, list)):
        return " ".join(str(v) for v in value)
    return str(value)


def _json_value(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, tuple):
        return list(value)
    return value


def emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([{k: _json_value(v) for k, v in row.items()} for row in rows], out)
        out.write("\n")
    elif fmt == "csv":
        if not rows:
            return
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(_fmt(v) for v in row.values())
    else:
        for i, row in enumerate(rows):
            if i:
                out.write("\n")
            for key, value in row.items():
                out.write(f"{key}: {_fmt(value)}\n")


def parse_prime_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise PreconditionError(f"expected a range lo..hi, got {text!r}")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise PreconditionError(f"bad prime range {text!r}") from None
    return [p for p in primes_between(lo_i, hi_i) if p != 2]


def cmd_dim(args) -> list[dict]:
    key = DimensionKey(args.k, args.level)
    value = dim_new(key) if args.new else dim_cusp(key)
    return [{"k": key.k, "level": key.N, "new": args.new, "dim": value}]


def cmd_classnum(args) -> list[dict]:
    if args.disc is not None:
        return [{"D": args.disc, "h": class_number(args.disc)}]
    if args.p is None:
        raise PreconditionError("give a prime p = 3 (mod 4) or --disc D")
    field = ImagQuadField.for_prime(args.p)
    return [{"p": field.p, "D": field.discriminant, "h": field.class_number}]


def cmd_dihedral(args) -> list[dict]:
    inp = DihedralBoundInput(args.k, args.p, args.n)
    return [{"p": inp.p, "n": inp.n, "m": inp.m, "bound": dihedral_count_bound(inp)}]


def cmd_conductor(args) -> list[dict]:
    rng = rs_conductor_range(args.c1, args.c2)
    return [{"c1": args.c1, "c2": args.c2, "lo": rng.lo, "hi": rng.hi}]


def cmd_weights(args) -> list[dict]:
    if args.sym3 is not None:
        arch = sym3_infinity(args.sym3)
        head = {"kind": "sym3", "k3": args.sym3}
    else:
        if args.k1 is None or args.k2 is None:
            raise PreconditionError("give k1 k2, or --sym3 k3")
        arch = tensor_infinity(args.k1, args.k2)
        head = {"kind": "tensor", "k1": args.k1, "k2": args.k2}
    return [{
        **head,
        "w": arch.parameter.w,
        "ell": arch.parameter.ell,
        "twist": arch.twist_needed,
        "mu": arch.weight.mu,
    }]


def cmd_overlap(args) -> list[dict]:
    at_inf = overlap_at_infinity(args.k1, args.k2, args.k3)
    cert = no_overlap_certificate(args.k1, args.k2, args.k3)
    if isinstance(at_inf, InconclusiveAtInfinity):
        status = "inconclusive, conditions " + ("satisfied" if at_inf.satisfied else "violated")
        case = "d"
        ell_match = at_inf.ell_match
    else:
        status = "no overlap"
        case = at_inf.case
        ell_match = False
    if cert.verdict != "Contradiction":
        raise InvariantError(f"exterior-square certificate did not conclude: {cert}")
    return [{
        "k1": args.k1,
        "k2": args.k2,
        "k3": args.k3,
        "case": case,
        "at_infinity": status,
        "ell_match": ell_match,
        "tensor_partition": cert.tensor_partition,
        "sym3_partition": cert.sym3_partition,
        "verdict": "NoOverlap (exterior-square certificate)",
    }]


def _estimate_row(rep: EstimateReport) -> dict:
    return {
        "p": rep.p,
        "n1": rep.n1,
        "n2": rep.n2,
        "A": rep.A,
        "B": rep.B,
        "pairCount": rep.pair_count,
        "dihedralBound": rep.dihedral_bound,
        "lowerBound": rep.lower_bound,
        "ratio": render_decimal(rep.normalized_ratio),
        "ratio_exact": rep.normalized_ratio,
        "flags": ";".join(c.value for c in rep.caveats),
    }


def cmd_estimate(args) -> list[dict]:
    primes = parse_prime_range(args.primes)
    results = scan(args.k1, args.k2, args.N, primes, jobs=args.jobs)
    rows, failures = [], []
    for res in results:
        if isinstance(res, ScanFailure):
            failures.append(res)
        else:
            rows.append(_estimate_row(res))
    for f in failures:
        print(f"error: p={f.p}: {f.reason}", file=sys.stderr)
    if failures and not rows:
        raise PreconditionError(f"all {len(failures)} primes failed")
    return rows


def cmd_cache_check(args) -> list[dict]:
    path = Path(args.cache) if args.cache else cache.default_path()
    if path is None:
        raise PreconditionError(f"no cache file given (use --cache or {cache.ENV_VAR})")
    bad = cache.verify(path)
    if bad:
        for rec, fresh in bad:
            print(f"mismatch: {' '.join(map(str, rec))} (fresh value {fresh})", file=sys.stderr)
        raise InvariantError(f"{len(bad)} cache records disagree with recomputation")
    return [{"path": str(path), "records": len(cache.read_records(path)), "ok": True}]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=None)
    common.add_argument("--cache", default=None, help=f"cache file (default: ${cache.ENV_VAR})")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="cuspcount",
        description="Exact counts behind tensor-product contributions to GL(4) cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="dimension of S_k(Gamma_1(N)) or its new part")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--new", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("classnum", parents=[common], help="class number of Q(sqrt(-p))")
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("--disc", type=int, default=None, help="any negative fundamental discriminant")
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("dihedral", parents=[common], help="bound on dihedral newforms of level p^n")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("conductor", parents=[common], help="Rankin-Selberg conductor window")
    p.add_argument("c1", type=int)
    p.add_argument("c2", type=int)
    p.set_defaults(func=cmd_conductor)

    p = sub.add_parser("weights", parents=[common], help="archimedean parameters and weights")
    p.add_argument("k1", type=int, nargs="?")
    p.add_argument("k2", type=int, nargs="?")
    p.add_argument("--sym3", type=int, default=None, metavar="K3")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("overlap", parents=[common], help="tensor product vs symmetric cube")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("k3", type=int)
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("estimate", parents=[common], help="lower-bound scan over primes")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--primes", required=True, metavar="LO..HI")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_estimate, default_format="csv")

    p = sub.add_parser("cache-check", parents=[common], help="recompute every cached record")
    p.set_defaults(func=cmd_cache_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    fmt = args.format or getattr(args, "default_format", "text")
    cache_path = Path(args.cache) if args.cache else cache.default_path()
    try:
        if cache_path is not None and args.command != "cache-check":
            cache.load(cache_path)
        rows = args.func(args)
        buf = io.StringIO()
        emit(rows, fmt, buf)
        sys.stdout.write(buf.getvalue())
        if cache_path is not None and args.command != "cache-check":
            cache.save(cache_path)
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
