"""Command-line front end.

Exit codes: 0 = value computed / identity verified; 1 = a theorem identity
was violated (that always means an implementation bug, which makes the
binary usable as a CI property-test harness); 2 = input error.

The RECIPROCITY_SEED environment variable overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import corpus
from .artinian import ArtinianAlgebra
from .blockops import aggregate_sign, windings_sum_to_zero  # noqa: F401  (CLI passthrough)
from .curve import (
    AdeleVector,
    RationalFunction,
    divisor_of,
    sigma_perp_forward,
    verify_gf_global,
    verify_residue_theorem,
    verify_residues_local_data,
    verify_wrl,
    verify_wrl_local_data,
)
from .errors import ReciprocityError
from .fields import BaseField
from .laurent import DEFAULT_PRECISION
from .parsing import (
    parse_factored_rational,
    parse_field_spec,
    parse_rational,
    parse_ring_spec,
    parse_series,
)
from .symbols import (
    LoopMatrix,
    contou_carrere_symbol,
    gelfand_fuchs_cocycle,
    residue_from_dual_symbol,  # noqa: F401  (CLI passthrough)
    tame_symbol,
    tate_residue,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reciprocity",
        description="Exact local symbols, residues, and global verification on P^1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, ring=False, series=False, rational=False):
        if ring:
            p.add_argument("--ring", required=True, help="coefficient ring, e.g. Q[e1,e2]/(e1^2,e2^2)")
        else:
            p.add_argument("--field", default="Q", help="base field: Q, F5, F9:u^2+1")
        p.add_argument("--prec", type=int, default=DEFAULT_PRECISION, help="working precision")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized steps")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        if series or rational:
            p.add_argument("-f", required=False, help="first expression")
            p.add_argument("-g", required=False, help="second expression")
        if rational:
            p.add_argument("--factored", action="store_true",
                           help="treat -f/-g as products of declared irreducible factors")

    p = sub.add_parser("symbol-tame", help="signed tame symbol of two series over a field")
    add_common(p, series=True)

    p = sub.add_parser("symbol-cc", help="Contou-Carrère symbol over an Artinian ring")
    add_common(p, ring=True, series=True)

    p = sub.add_parser("residue", help="per-place residues of f dg and their sum")
    add_common(p, rational=True)

    p = sub.add_parser("tate-residue", help="res f dg from block-operator traces")
    add_common(p, series=True)
    p.add_argument("--window", type=int, default=None, help="window half-width")

    p = sub.add_parser("cocycle-gf", help="local Gelfand-Fuchs cocycle on matrix loops")
    add_common(p, series=True)
    p.add_argument("-S", required=True, help="integer matrix as JSON, e.g. [[0,1],[0,0]]")
    p.add_argument("-T", required=True, help="integer matrix as JSON")

    p = sub.add_parser("verify-wrl", help="verify the Weil reciprocity product")
    add_common(p, rational=True)
    p.add_argument("--local-data", default=None, help="JSON file with raw local expansions")

    p = sub.add_parser("verify-residues", help="verify the residue-theorem sum")
    add_common(p, rational=True)
    p.add_argument("--local-data", default=None, help="JSON file with raw local expansions")

    p = sub.add_parser("verify-gf", help="verify global Gelfand-Fuchs vanishing")
    add_common(p, rational=True)
    p.add_argument("-S", required=True, help="integer matrix as JSON")
    p.add_argument("-T", required=True, help="integer matrix as JSON")

    p = sub.add_parser("sweep", help="run seeded random verification instances")
    add_common(p)
    p.add_argument("--count", type=int, default=50, help="number of instances")
    p.add_argument("--mode", choices=["wrl", "residues", "all"], default="all")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _seed_of(args) -> int:
    env = os.environ.get("RECIPROCITY_SEED")
    if env is not None:
        return int(env)
    if args.seed is not None:
        return args.seed
    return 0


def _parse_pair(args, field: BaseField):
    if args.f is None or args.g is None:
        raise ReciprocityError("both -f and -g are required")
    if getattr(args, "factored", False):
        f = parse_factored_rational(args.f, field)
        g = parse_factored_rational(args.g, field)
    else:
        f = parse_rational(args.f, field)
        g = parse_rational(args.g, field)
    return f, g


def _emit_value(args, value, extra=None) -> int:
    if args.json:
        payload = {"value": str(value)}
        if extra:
            payload.update(extra)
        print(json.dumps(payload))
    else:
        print(value)
    return EXIT_OK


def _emit_report(args, report) -> int:
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.text())
    return EXIT_OK if report.verified else EXIT_VIOLATION


def _matrix_arg(text: str):
    try:
        m = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReciprocityError(f"bad matrix JSON: {exc}") from None
    if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
        raise ReciprocityError("matrix must be a JSON list of rows")
    return m


def _load_local_data(path: str, base: BaseField, prec: int):
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    entries = []
    for entry in payload.get("entries", []):
        spec = entry.get("field", "Q")
        kprime = parse_field_spec(spec)
        fs = parse_series(entry["f"], kprime, prec)
        gs = parse_series(entry["g"], kprime, prec)
        entries.append((kprime, fs, gs))
    return entries


def _cmd_symbol_tame(args) -> int:
    field = parse_field_spec(args.field)
    base = field.prime_subfield
    f = parse_series(args.f, field, args.prec)
    g = parse_series(args.g, field, args.prec)
    return _emit_value(args, tame_symbol(f, g, base), {"base": repr(base)})


def _cmd_symbol_cc(args) -> int:
    ring = parse_ring_spec(args.ring)
    if not isinstance(ring, ArtinianAlgebra):
        raise ReciprocityError("symbol-cc needs an Artinian ring spec")
    base = ring.base.prime_subfield
    f = parse_series(args.f, ring, args.prec)
    g = parse_series(args.g, ring, args.prec)
    return _emit_value(args, contou_carrere_symbol(f, g, base))


def _cmd_residue(args) -> int:
    field = parse_field_spec(args.field)
    f, g = _parse_pair(args, field)
    return _emit_report(args, verify_residue_theorem(f, g))


def _cmd_tate(args) -> int:
    field = parse_field_spec(args.field)
    f = parse_series(args.f, field, args.prec)
    g = parse_series(args.g, field, args.prec)
    supports = [e for s in (f, g) for e in s.support()]
    bound = max([0] + [abs(e) for e in supports])
    window = args.window if args.window is not None else 2 * bound + 1
    return _emit_value(args, tate_residue(f, g, window), {"window": window})


def _cmd_cocycle_gf(args) -> int:
    field = parse_field_spec(args.field)
    f = parse_series(args.f, field, args.prec)
    g = parse_series(args.g, field, args.prec)
    s_m = _matrix_arg(args.S)
    t_m = _matrix_arg(args.T)
    a_loop = LoopMatrix.from_tensor(s_m, f)
    b_loop = LoopMatrix.from_tensor(t_m, g)
    return _emit_value(args, gelfand_fuchs_cocycle(a_loop, b_loop, field.prime_subfield))


def _cmd_verify_wrl(args) -> int:
    field = parse_field_spec(args.field)
    if args.local_data:
        entries = _load_local_data(args.local_data, field, args.prec)
        return _emit_report(args, verify_wrl_local_data(entries, field.prime_subfield))
    f, g = _parse_pair(args, field)
    return _emit_report(args, verify_wrl(f, g))


def _cmd_verify_residues(args) -> int:
    field = parse_field_spec(args.field)
    if args.local_data:
        entries = _load_local_data(args.local_data, field, args.prec)
        return _emit_report(args, verify_residues_local_data(entries, field.prime_subfield))
    f, g = _parse_pair(args, field)
    return _emit_report(args, verify_residue_theorem(f, g))


def _cmd_verify_gf(args) -> int:
    field = parse_field_spec(args.field)
    f, g = _parse_pair(args, field)
    return _emit_report(args, verify_gf_global(_matrix_arg(args.S), _matrix_arg(args.T), f, g))


def _sweep_instance(payload) -> dict:
    spec, seed, index, mode, max_degree = payload
    field = parse_field_spec(spec)
    rng = random.Random(f"{seed}:{index}")
    force = index % 5 == 0
    f, g = corpus.random_rational_pair(rng, field, max_degree, force_higher_place=force)
    out = {"index": index, "f": str(f), "g": str(g)}
    ok = True
    if mode in ("wrl", "all"):
        rep = verify_wrl(f, g)
        out["wrl"] = rep.verified
        ok = ok and rep.verified
    if mode in ("residues", "all"):
        rep = verify_residue_theorem(f, g)
        out["residues"] = rep.verified
        ok = ok and rep.verified
    out["divisor_degree_zero"] = divisor_of(f).degree == 0 and divisor_of(g).degree == 0
    out["ok"] = ok and out["divisor_degree_zero"]
    return out


def _cmd_sweep(args) -> int:
    seed = _seed_of(args)
    payloads = [(args.field, seed, i, args.mode, args.max_degree) for i in range(args.count)]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_instance, payloads))
    else:
        results = [_sweep_instance(p) for p in payloads]
    results.sort(key=lambda r: r["index"])
    passed = sum(1 for r in results if r["ok"])
    summary = {
        "field": args.field,
        "seed": seed,
        "count": args.count,
        "passed": passed,
        "failed": args.count - passed,
        "failures": [r for r in results if not r["ok"]],
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"sweep {args.mode} over {args.field}: {passed}/{args.count} passed (seed {seed})")
        for r in summary["failures"]:
            print(f"  FAILED #{r['index']}: f={r['f']} g={r['g']}")
    return EXIT_OK if passed == args.count else EXIT_VIOLATION


_HANDLERS = {
    "symbol-tame": _cmd_symbol_tame,
    "symbol-cc": _cmd_symbol_cc,
    "residue": _cmd_residue,
    "tate-residue": _cmd_tate,
    "cocycle-gf": _cmd_cocycle_gf,
    "verify-wrl": _cmd_verify_wrl,
    "verify-residues": _cmd_verify_residues,
    "verify-gf": _cmd_verify_gf,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ReciprocityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
