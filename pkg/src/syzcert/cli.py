"""Command-line front end.

Exit codes: 0 all checks pass, 1 mathematical failure, 2 usage or input
error, 3 certificate that only passes weakly at k = 1.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from typing import Optional, Sequence

from . import reports
from .campaign import count_failures, run_campaign
from .ci_hilbert import MultiDegree, f_poly, nonneg_check
from .criterion import (
    Verdict,
    check_condition3,
    destabilizing_search,
    eq1_check,
    monotone_check,
    monotone_preconditions,
)
from .errors import InputError
from .exactalg import Polynomial, format_rational, parse_rational
from .rr_hilbert import (
    ChernData,
    ToddVector,
    abelian_poly,
    chern_to_todd,
    integrality_warnings,
    parse_chern_file,
    parse_poly_file,
    parse_poly_text,
    todd_poly,
)
from .weyl_hilbert import RootDatum, dim_check, hilbert_homogeneous, weyl_factors

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WEAK = 0, 1, 2, 3


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}") from None


def parse_degrees(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(_int(tok, "degree") for tok in text.split(","))


def parse_ci_source(text: str) -> MultiDegree:
    """``N:d1,d2,...`` e.g. ``3:4`` for a quartic surface."""
    n, sep, degs = text.partition(":")
    if not sep:
        raise InputError(f"expected N:d1,d2,... got {text!r}")
    return MultiDegree(_int(n, "n"), parse_degrees(degs))


def parse_homog_source(text: str) -> RootDatum:
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError(f"expected TYPE:RANK:NODE, got {text!r}")
    return RootDatum(parts[0], _int(parts[1], "rank"), _int(parts[2], "node"))


def parse_abelian_source(text: str) -> tuple[int, object]:
    n, sep, hn = text.partition(":")
    if not sep:
        raise InputError(f"expected N:H^N, got {text!r}")
    return _int(n, "n"), parse_rational(hn)


def parse_todd_entries(text: str) -> ToddVector:
    return ToddVector.from_entries([parse_rational(tok) for tok in text.split(",")])


def _default_workers() -> int:
    raw = os.environ.get("SYZCERT_WORKERS")
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        return -1


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default $SYZCERT_WORKERS or 1)")


def _sources(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ci", metavar="N:D1,D2,...", help="complete intersection in P^N")
    g.add_argument("--homog", metavar="TYPE:RANK:NODE", help="rational homogeneous space G/P")
    g.add_argument("--todd", metavar="E0,...,EN", help="Todd vector td_{n-i} H^i, i = 0..n")
    g.add_argument("--chern", metavar="PATH", help="key=value Chern data file")
    g.add_argument("--abelian", metavar="N:HN", help="abelian variety of dimension N with H^N = HN")
    g.add_argument("--poly", metavar="'A0 A1 ...'", help="polynomial coefficients, low to high")
    g.add_argument("--poly-file", metavar="PATH", help="polynomial file ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syzcert",
        description="Exact Hilbert polynomials and syzygy-bundle stability certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ci", help="Hilbert polynomial of a complete intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", default="", help="comma-separated degrees")
    p.add_argument("--criterion", action="store_true")
    _common(p)

    p = sub.add_parser("verify", help="exhaustive check over Fano/CY multidegrees")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-max", type=int, default=20)
    _common(p)

    p = sub.add_parser("criterion", help="criterion report for a polynomial")
    _sources(p)
    p.add_argument("--k-max", type=int, default=10)
    _common(p)

    p = sub.add_parser("homog", help="Hilbert polynomial of G/P")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--criterion", action="store_true")
    _common(p)

    p = sub.add_parser("todd", help="Hilbert polynomial from Todd or Chern data")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--entries", metavar="E0,...,EN")
    g.add_argument("--chern-file", metavar="PATH")
    for name in ChernData.FIELDS:
        p.add_argument(f"--{name}", dest=f"cd_{name}")
    p.add_argument("--criterion", action="store_true")
    _common(p)

    p = sub.add_parser("abelian", help="Hilbert polynomial of an abelian variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--Hn", required=True)
    p.add_argument("--criterion", action="store_true")
    _common(p)

    p = sub.add_parser("certify", help="stability certificate for M_L, L = H^ell")
    _sources(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--assume-picard-rank-one", action="store_true")
    p.add_argument("--assume-minus-k-nef", action="store_true")
    _common(p)
    return parser


def _polynomial_from_sources(args) -> tuple[Polynomial, dict, list[str]]:
    warn: list[str] = []
    if args.ci:
        md = parse_ci_source(args.ci)
        return f_poly(md), {"kind": "ci", "n": md.n, "degrees": ",".join(map(str, md.degrees))}, warn
    if args.homog:
        rd = parse_homog_source(args.homog)
        return hilbert_homogeneous(rd), {"kind": "homog", "datum": str(rd)}, warn
    if args.abelian:
        n, hn = parse_abelian_source(args.abelian)
        return abelian_poly(n, hn), {"kind": "abelian", "n": n, "Hn": format_rational(hn)}, warn
    if args.todd:
        tv = parse_todd_entries(args.todd)
        p = todd_poly(tv)
        return p, {"kind": "todd", "n": tv.n}, integrality_warnings(p)
    if args.chern:
        tv = chern_to_todd(parse_chern_file(args.chern))
        p = todd_poly(tv)
        return p, {"kind": "chern", "n": tv.n}, list(tv.notes) + integrality_warnings(p)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.poly is not None:
            p = parse_poly_text(args.poly)
            src = {"kind": "poly"}
        elif args.poly_file == "-":
            p = parse_poly_file(sys.stdin)
            src = {"kind": "poly-file", "path": "-"}
        else:
            p = parse_poly_file(args.poly_file)
            src = {"kind": "poly-file", "path": args.poly_file}
    warn.extend(str(w.message) for w in caught)
    return p, src, warn


def _criterion_block(p: Polynomial, k_max: Optional[int] = None) -> dict:
    out = {"report": reports.criterion_dict(check_condition3(p))}
    out["eq1"] = eq1_check(p)
    if k_max is not None:
        bad = monotone_preconditions(p)
        out["monotone"] = {"preconditions_failed": bad} if bad else reports.monotone_dict(monotone_check(p, k_max))
    return out


def _emit(args, payload: dict, tsv: Optional[str] = None) -> None:
    text = reports.dumps(payload) if args.format == "json" else (tsv or reports.flat_tsv(payload))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_ci(args) -> int:
    md = MultiDegree(args.n, parse_degrees(args.degrees))
    p = f_poly(md)
    ok, witness = nonneg_check(md)
    payload = {
        "n": md.n,
        "degrees": ",".join(map(str, md.degrees)),
        "dim": md.dim,
        "fano_cy": md.fano_cy,
        "polynomial": reports.poly_dict(p),
        "nonneg": ok,
        "witness": None if ok else {"index": witness[0], "coefficient": format_rational(witness[1])},
    }
    if args.criterion:
        payload["criterion"] = _criterion_block(p) if p.degree >= 2 else {"skipped": "degree < 2"}
    _emit(args, payload)
    return EXIT_FAIL if md.fano_cy and not ok else EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise InputError("--n-max must be at least 1")
    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        raise InputError("worker count must be a positive integer")
    rows = run_campaign(args.n_max, args.t_max, workers)
    failures = count_failures(rows)
    summary = f"cases={len(rows)} failures={failures}"
    if args.format == "json":
        _emit(args, reports.campaign_dict(rows, args.n_max, args.t_max))
    else:
        _emit(args, {}, reports.rows_tsv(rows) + f"# {summary}\n")
    print(summary, file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_criterion(args) -> int:
    p, source, warn = _polynomial_from_sources(args)
    block = _criterion_block(p, args.k_max)
    payload = {"source": source, "polynomial": reports.poly_dict(p), "warnings": warn, **block}
    _emit(args, payload)
    return EXIT_OK if block["report"]["condition3"] else EXIT_FAIL


def cmd_homog(args) -> int:
    rd = RootDatum(args.type, args.rank, args.node)
    p = hilbert_homogeneous(rd)
    payload = {
        "datum": {"type": rd.lie_type, "rank": rd.rank, "node": rd.marked_node},
        "polynomial": reports.poly_dict(p),
        "factors": [{"lambda": lam, "rho": rho} for lam, rho in weyl_factors(rd)],
        "dim": dim_check(rd),
    }
    if args.criterion:
        payload["criterion"] = _criterion_block(p) if p.degree >= 2 else {"skipped": "degree < 2"}
    _emit(args, payload)
    return EXIT_OK


def _chern_from_flags(args) -> Optional[ChernData]:
    given = {name: getattr(args, f"cd_{name}") for name in ChernData.FIELDS}
    given = {k: v for k, v in given.items() if v is not None}
    return ChernData.from_mapping(given) if given else None


def cmd_todd(args) -> int:
    notes: list[str] = []
    cd = _chern_from_flags(args)
    if args.entries:
        if cd is not None:
            raise InputError("--entries cannot be combined with Chern data flags")
        tv = parse_todd_entries(args.entries)
    else:
        if args.chern_file:
            if cd is not None:
                raise InputError("--chern-file cannot be combined with Chern data flags")
            cd = parse_chern_file(args.chern_file)
        if cd is None:
            raise InputError("supply --entries, --chern-file or the Chern data flags")
        tv = chern_to_todd(cd)
    p = todd_poly(tv)
    notes.extend(tv.notes)
    notes.extend(integrality_warnings(p))
    payload = {
        "n": tv.n,
        "entries": [format_rational(e) for e in tv.entries],
        "polynomial": reports.poly_dict(p),
        "warnings": notes,
    }
    if args.criterion:
        payload["criterion"] = _criterion_block(p)
    _emit(args, payload)
    return EXIT_OK


def cmd_abelian(args) -> int:
    p = abelian_poly(args.n, parse_rational(args.Hn))
    payload = {"n": args.n, "Hn": format_rational(parse_rational(args.Hn)), "polynomial": reports.poly_dict(p)}
    if args.criterion:
        payload["criterion"] = _criterion_block(p) if p.degree >= 2 else {"skipped": "degree < 2"}
    _emit(args, payload)
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.ell < 1:
        raise InputError("--ell must be at least 1")
    p, source, warn = _polynomial_from_sources(args)
    report = check_condition3(p)
    payload = {
        "source": source,
        "polynomial": reports.poly_dict(p),
        "warnings": warn,
        "criterion": reports.criterion_dict(report),
    }
    if not report.condition3:
        payload["certificate"] = None
        _emit(args, payload)
        return EXIT_FAIL
    cert = destabilizing_search(
        p,
        args.ell,
        picard_rank_one=args.assume_picard_rank_one,
        minus_K_nef=args.assume_minus_k_nef,
        report=report,
    )
    payload["certificate"] = reports.certificate_dict(cert)
    _emit(args, payload)
    return {Verdict.PASS_STRICT: EXIT_OK, Verdict.PASS_WEAK_AT_K1: EXIT_WEAK}.get(cert.verdict, EXIT_FAIL)


COMMANDS = {
    "ci": cmd_ci,
    "verify": cmd_verify,
    "criterion": cmd_criterion,
    "homog": cmd_homog,
    "todd": cmd_todd,
    "abelian": cmd_abelian,
    "certify": cmd_certify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ValueError, OSError) as exc:
        print(f"syzcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
