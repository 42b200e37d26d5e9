"""JSON and text rendering of analysis reports.

JSON is the single source of truth: the text format is rendered from the
same dictionary. Rationals are strings "p/q" (integers as "p"), polynomials
are strings in the parser's syntax, and keys are sorted, so identical input
gives byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..algebra.numberfield import NFElement, NumberField
from ..algebra.univariate import to_str
from ..analysis import AnalysisReport
from ..singularities import CA2, An, SingularityProfile, SingularityRecord, WorseGorenstein
from ..verdict import NonRational, Rational, RationalityWitness, Undetermined
from ..wps import VARIABLES, WPSPoint

SCHEMA = "sextic-report/1"


def scalar(x) -> str:
    if isinstance(x, NFElement):
        return str(x)
    return str(Fraction(x))


def field_json(K: NumberField | None):
    if K is None:
        return None
    return {"generator": K.name, "modulus": to_str(K.modulus, K.name), "degree": K.degree}


def point_json(p: WPSPoint | None):
    if p is None:
        return None
    return {
        "coordinates": dict(zip(VARIABLES, (scalar(c) for c in p.coords))),
        "field": field_json(p.field),
        "text": str(p),
    }


def kind_json(kind) -> dict:
    out = {"type": type(kind).__name__, "label": kind.label()}
    if isinstance(kind, CA2):
        out["moderate"] = kind.moderate
        out["aw"] = kind.aw
    elif isinstance(kind, An):
        out["n"] = kind.n
    elif isinstance(kind, WorseGorenstein):
        out["reason"] = kind.reason
    return out


def record_json(r: SingularityRecord) -> dict:
    return {
        "point": point_json(r.point),
        "class": kind_json(r.kind),
        "gorenstein": r.gorenstein,
        "count": r.count,
        "tjurina": r.tjurina,
        "detail": r.detail,
    }


def profile_json(p: SingularityProfile | None):
    if p is None:
        return None
    return {
        "non_gorenstein": [record_json(r) for r in p.non_gorenstein],
        "gorenstein": [record_json(r) for r in p.gorenstein],
        "gorenstein_count": p.gorenstein_count,
        "all_moderate": p.all_moderate,
        "all_nodes_or_cusps": p.all_nodes_or_cusps,
        "multiset": [[label, count] for label, count in p.multiset()],
    }


def witness_json(w: RationalityWitness | None):
    if w is None:
        return None
    return {
        "chart": f"{w.chart}=1",
        "chart_coordinates": list(w.ring.variables),
        "solved_variable": w.solved_variable,
        "numerator": str(w.numerator),
        "denominator": str(w.denominator),
        "expression": w.expression(),
        "change": {v: str(p) for v, p in w.change.items()},
        "chart_map": {v: str(p) for v, p in w.chart_map.items()},
        "inverse_data": w.inverse_data,
        "field": field_json(w.field),
    }


def verdict_json(v) -> dict | None:
    if v is None:
        return None
    if isinstance(v, Rational):
        return {"tag": v.tag, "reasons": [v.reason], "witness": witness_json(v.witness)}
    if isinstance(v, NonRational):
        return {
            "tag": v.tag,
            "reasons": [v.reason],
            "conditional_on": {"terminal": v.flags.terminal, "q_factorial": v.flags.q_factorial},
            "witness": None,
        }
    if isinstance(v, Undetermined):
        return {"tag": v.tag, "reasons": list(v.reasons), "witness": None}
    raise TypeError(f"unknown verdict {v!r}")


def normal_form_json(nf):
    if nf is None:
        return None
    return {
        "case": nf.case,
        "forms": {k: str(p) for k, p in sorted(nf.forms.items())},
        "scalar": scalar(nf.scalar),
        "forward": {v: str(p) for v, p in sorted(nf.forward.items())},
        "inverse": {v: str(p) for v, p in sorted(nf.inverse.items())},
        "field": field_json(nf.field),
        "template": str(nf.template()),
    }


def discriminant_json(d):
    if d is None:
        return None
    return {
        "paper": str(d.paper.D),
        "conic": str(d.conic.D),
        "degree": d.paper.degree,
        "smooth": d.smoothness.smooth if d.smoothness.decided else None,
        "passes_through_quotient_point": d.smoothness.through_singular_point,
        "smoothness_detail": d.smoothness.detail,
        "germ_tag": d.germ,
        "genus": d.genus,
        "prym_dimension": d.prym_dimension,
        "cover_genus": d.cover_genus,
    }


def ledger_json(rows) -> list:
    return [
        {"expression": name, "value": scalar(value), "expected": scalar(expected)}
        for name, value, expected in rows
    ]


def quasi_smooth_json(q):
    if q is None:
        return None
    return {
        "value": q.quasi_smooth,
        "witness": point_json(q.witness),
        "component": [str(p) for p in q.component],
        "detail": q.detail,
    }


def report_json(r: AnalysisReport, jet_order: int | None = None) -> dict:
    out = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": r.input,
        "flags": {"terminal": r.flags.terminal, "q_factorial": r.flags.q_factorial},
        "quasi_smooth": quasi_smooth_json(r.quasi_smooth),
        "case": r.case,
        "normal_form": normal_form_json(r.normal_form),
        "singularities": profile_json(r.profile),
        "verdict": verdict_json(r.verdict),
        "witness_verified": r.witness_verified,
        "discriminant": discriminant_json(r.discriminant),
        "ledger": ledger_json(r.ledger),
        "warnings": list(r.warnings),
    }
    if jet_order is not None:
        out["jet_order"] = jet_order
    if r.timing is not None:
        out["timing_seconds"] = round(r.timing, 3)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# -- text rendering ----------------------------------------------------------------


def render_text(d: dict) -> str:
    """Human-readable rendering of a report dictionary."""
    if d.get("command") == "analyze" and "verdict" in d:
        return _render_analysis(d)
    return _render_generic(d)


def _render_generic(d: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k in sorted(d):
        v = d[k]
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_render_generic(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(_render_generic(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(line for line in lines if line is not None)


def _render_analysis(d: dict) -> str:
    lines = [f"input:    {d['input']}"]
    flags = d["flags"]
    lines.append(f"flags:    terminal={flags['terminal']} q_factorial={flags['q_factorial']}")
    if d.get("quasi_smooth"):
        lines.append(f"quasi-smooth: {d['quasi_smooth']['value']}")
    lines.append(f"case:     {d['case']}")
    nf = d.get("normal_form")
    if nf:
        lines.append(f"normal form: {nf['template']}")
        if nf["field"]:
            lines.append(f"  over Q[{nf['field']['generator']}]/({nf['field']['modulus']})")
    sing = d.get("singularities")
    if sing:
        lines.append("singular points:")
        rows = [("class", "count", "point")]
        for r in sing["non_gorenstein"] + sing["gorenstein"]:
            pt = r["point"]["text"] if r["point"] else r["detail"]
            rows.append((r["class"]["label"], str(r["count"]), pt))
        w0 = max(len(r[0]) for r in rows)
        w1 = max(len(r[1]) for r in rows)
        for a, b, c in rows:
            lines.append(f"  {a:<{w0}}  {b:>{w1}}  {c}")
    v = d["verdict"]
    lines.append(f"verdict:  {v['tag']}")
    for reason in v["reasons"]:
        lines.append(f"  - {reason}")
    if v.get("witness"):
        w = v["witness"]
        lines.append(f"witness:  {w['expression']}  (chart {w['chart']}; {w['inverse_data']})")
        lines.append(f"  verified: {d['witness_verified']}")
    disc = d.get("discriminant")
    if disc:
        lines.append(f"discriminant (degree {disc['degree']}): {disc['paper']}")
        lines.append(
            f"  smooth={disc['smooth']} genus={disc['genus']} prym_dimension={disc['prym_dimension']}"
            f" germ={disc['germ_tag']}"
        )
    if d.get("ledger"):
        lines.append("ledger:")
        for row in d["ledger"]:
            lines.append(f"  {row['expression']} = {row['value']}")
    for wmsg in d.get("warnings", []):
        lines.append(f"warning: {wmsg}")
    if "timing_seconds" in d:
        lines.append(f"time: {d['timing_seconds']} s")
    return "\n".join(lines)
