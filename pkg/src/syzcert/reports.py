"""JSON and TSV renderings of reports and certificates.

JSON is canonical: sorted keys, two-space indent, trailing newline, every
rational as a ``p/q`` string.  Loading and re-dumping a report reproduces it
byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .campaign import CHECKS, VerificationRow
from .criterion import CriterionReport, MonotoneResult, StabilityCertificate
from .exactalg import Polynomial, format_rational

TSV_COLUMNS = ("n", "degrees", "dim", "polynomial") + CHECKS


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _flag(x):
    return None if x is None else bool(x)


def poly_dict(p: Polynomial) -> dict:
    return {"coefficients": p.to_text(), "degree": None if p.is_zero() else p.degree, "pretty": str(p)}


def criterion_dict(rep: CriterionReport) -> dict:
    return {
        "p1": format_rational(rep.p1),
        "neg_coeff_indices": list(rep.neg_coeff_indices),
        "a1_negative": rep.a1_negative,
        "condition3": rep.condition3,
        "condition3prime": rep.condition3prime,
    }


def monotone_dict(res: MonotoneResult) -> dict:
    return {
        "ok": res.ok,
        "weak_at_k1": res.weak_at_k1,
        "table": [{"k": k, "value": format_rational(v)} for k, v in res.table],
    }


def certificate_dict(cert: StabilityCertificate) -> dict:
    out = {
        "ell": cert.ell,
        "h0": format_rational(cert.h0L),
        "rank": format_rational(cert.rank),
        "c1": cert.c1_ML,
        "verdict": cert.verdict.value,
        "rows": [
            {
                "k": r.k,
                "lhs": format_rational(r.lhs),
                "rhs": format_rational(r.rhs),
                "margin": format_rational(r.margin),
                "strict": r.strict,
            }
            for r in cert.rows
        ],
        "hypotheses_assumed": {
            "picard_rank_one": cert.picard_rank_one,
            "minus_K_nef": cert.minus_K_nef,
        },
    }
    if cert.notes:
        out["notes"] = list(cert.notes)
    return out


def row_dict(row: VerificationRow) -> dict:
    out = {
        "n": row.md.n,
        "degrees": ",".join(map(str, row.md.degrees)),
        "dim": row.md.dim,
        "polynomial": row.polynomial.to_text(),
    }
    for c in CHECKS:
        out[c] = _flag(getattr(row, c))
    return out


def _tsv_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def rows_tsv(rows: Sequence[VerificationRow]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        d = row_dict(row)
        lines.append("\t".join(_tsv_cell(d[c]) for c in TSV_COLUMNS))
    return "\n".join(lines) + "\n"


def campaign_dict(rows: Sequence[VerificationRow], n_max: int, t_max: int) -> dict:
    return {
        "n_max": n_max,
        "t_max": t_max,
        "cases": len(rows),
        "failures": sum(r.failed for r in rows),
        "rows": [row_dict(r) for r in rows],
    }


def flat_tsv(d: dict, prefix: str = "") -> str:
    """``key<TAB>value`` lines for a nested report; lists of scalars are
    comma-joined and lists of records get indexed keys."""
    lines = []

    def walk(obj, key):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(obj[k], f"{key}.{k}" if key else k)
        elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
            for i, item in enumerate(obj):
                walk(item, f"{key}[{i}]")
        elif isinstance(obj, list):
            lines.append(f"{key}\t{','.join(_tsv_cell(x) for x in obj)}")
        else:
            lines.append(f"{key}\t{_tsv_cell(obj)}")

    walk(d, prefix)
    return "\n".join(lines) + "\n"
