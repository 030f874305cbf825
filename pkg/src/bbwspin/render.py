"""Text and JSON renderings of computation results, and JSON parsers back.

JSON is emitted with sorted keys and no trailing whitespace so identical
results give identical bytes.  Text renderings are ASCII only.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .bbw import GradedRepList, SpaceParams
from .diagrams import YoungDiagram
from .resolution import Resolution, ResolutionTerm
from .tensor import SchurSum
from .verify import CaseResult, CriterionReport, ExtTable, SweepResult
from .weyl import LieType, RepLabel, Weight


def rep_to_str(label: RepLabel) -> str:
    if label.kind == "highest":
        return f"V_{label.weight.type}({label.weight})"
    return str(label)


def rep_from_str(text: str) -> RepLabel:
    m = re.fullmatch(r"V_([ABD]\d+)\((.*)\)", text.strip())
    if m:
        return RepLabel.highest(Weight.parse(m.group(2), LieType.parse(m.group(1))))
    return RepLabel.parse(text)


def _sign_str(sign: int) -> str:
    return {1: "+", -1: "-", 0: ""}[sign]


def _sign_from_str(text: str) -> int:
    return {"+": 1, "-": -1, "": 0}[text]


# ---------------------------------------------------------------- to data


def graded_to_data(g: GradedRepList) -> list[dict]:
    return [{"degree": d, "rep": rep_to_str(lab), "mult": m} for d, lab, m in g]


def schur_sum_to_data(s: SchurSum) -> dict[str, int]:
    return {str(d): m for d, m in s}


def resolution_to_data(r: Resolution) -> list[dict]:
    return [
        {"t": term.t, "summands": [{"sign": _sign_str(s), "shape": str(d)} for s, d in term.summands]}
        for term in r
    ]


def ext_to_data(t: ExtTable) -> dict:
    return {
        "ext": [[d, m] for d, m in t.total],
        "per_m": [graded_to_data(g) for g in t.per_m],
        "status": t.status,
    }


def report_to_data(r: CriterionReport) -> dict:
    return {
        "genus": r.genus,
        "k": r.k,
        "verdict": r.verdict,
        "cases": {
            name: {"passed": c.passed, "detail": c.detail, **ext_to_data(c.table)}
            for name, c in r.cases.items()
        },
    }


def to_data(result: Any) -> Any:
    if isinstance(result, GradedRepList):
        return graded_to_data(result)
    if isinstance(result, SchurSum):
        return schur_sum_to_data(result)
    if isinstance(result, Resolution):
        return resolution_to_data(result)
    if isinstance(result, ExtTable):
        return ext_to_data(result)
    if isinstance(result, CriterionReport):
        return report_to_data(result)
    if isinstance(result, SweepResult):
        return result.as_dict()
    if isinstance(result, (list, tuple)):
        return [to_data(r) for r in result]
    raise TypeError(f"cannot render {type(result).__name__}")


# ---------------------------------------------------------------- from data


def graded_from_data(data: list[dict]) -> GradedRepList:
    return GradedRepList(tuple((e["degree"], rep_from_str(e["rep"]), e["mult"]) for e in data))


def schur_sum_from_data(data: dict[str, int]) -> SchurSum:
    return SchurSum({YoungDiagram.parse(k): v for k, v in data.items()})


def resolution_from_data(data: list[dict], params: SpaceParams, base_sign: int) -> Resolution:
    terms = tuple(
        ResolutionTerm(
            t["t"],
            tuple((_sign_from_str(s["sign"]), YoungDiagram.parse(s["shape"])) for s in t["summands"]),
        )
        for t in data
    )
    return Resolution(params, base_sign, terms)


def ext_from_data(data: dict) -> ExtTable:
    return ExtTable(
        tuple((d, m) for d, m in data["ext"]),
        tuple(graded_from_data(g) for g in data["per_m"]),
        data["status"],
    )


def report_from_data(data: dict) -> CriterionReport:
    cases = {
        name: CaseResult(ext_from_data(c), c["passed"], c["detail"]) for name, c in data["cases"].items()
    }
    return CriterionReport(data["genus"], data["k"], cases)


def sweep_from_data(data: dict) -> SweepResult:
    return SweepResult(
        data["check"],
        data["N"],
        data["k"],
        data["checked"],
        list(data["counterexamples"]),
        list(data["indeterminate"]),
        data["skipped"],
    )


# ---------------------------------------------------------------- text


def _shape_text(shape: YoungDiagram, rank: int) -> str:
    if shape.height == rank and len(set(shape.rows)) == 1:
        return f"O(-{shape.width})"
    if not shape:
        return "O"
    return f"Sigma^({shape}) U^perp"


def resolution_text(r: Resolution) -> str:
    rank = r.params.N - r.params.k
    target = "j_*S" if r.params.odd else f"j_*S{_sign_str(r.base_sign)}"
    parts = []
    for term in sorted(r.terms, key=lambda t: -t.t):
        pieces = [f"S{_sign_str(s)} (x) {_shape_text(d, rank)}" for s, d in term.summands]
        parts.append(" + ".join(pieces) if pieces else "0")
    return "0 -> " + " -> ".join(parts) + f" -> {target} -> 0"


def graded_text(g: GradedRepList) -> str:
    if not g:
        return "0 (acyclic)"
    return "\n".join(f"H^{d} = {rep_to_str(lab)} (x{m})" for d, lab, m in g)


def schur_sum_text(s: SchurSum) -> str:
    if not s:
        return "0"
    body = " + ".join(f"{m} x ({d})" for d, m in s)
    return body + (f"  [shift {s.shift}]" if s.shift else "")


def sweep_text(r: SweepResult) -> str:
    head = f"{r.check} N={r.N} k={r.k}"
    if r.skipped:
        return f"SKIP {head}: {r.skipped}"
    status = "PASS" if r.ok else ("FAIL" if r.counterexamples else "INDETERMINATE")
    lines = [f"{status} {head} checked={r.checked}"]
    lines += [f"  counterexample: {c}" for c in r.counterexamples]
    lines += [f"  indeterminate: {c}" for c in r.indeterminate]
    return "\n".join(lines)


def report_text(r: CriterionReport) -> str:
    lines = [f"genus {r.genus}, k = {r.k}: {r.verdict}"]
    for name, c in r.cases.items():
        ext = ", ".join(f"deg {d}: {m}" for d, m in c.table.total) or "0"
        mark = "ok" if c.passed else "FAILED"
        lines.append(f"  {name}: Ext = {ext} [{c.table.status}] {mark}")
        if c.detail:
            lines.append(f"    {c.detail}")
    return "\n".join(lines)


def render(result: Any, fmt: str = "json") -> str:
    """Serialize a result; ``fmt`` is ``"json"`` or ``"text"``."""
    if fmt == "json":
        return json.dumps(to_data(result), sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(result, GradedRepList):
        return graded_text(result)
    if isinstance(result, SchurSum):
        return schur_sum_text(result)
    if isinstance(result, Resolution):
        return resolution_text(result)
    if isinstance(result, CriterionReport):
        return report_text(result)
    if isinstance(result, SweepResult):
        return sweep_text(result)
    if isinstance(result, (list, tuple)):
        return "\n".join(render(r, "text") for r in result)
    raise TypeError(f"cannot render {type(result).__name__}")
