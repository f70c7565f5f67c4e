"""Run reports and their JSON, CSV and Markdown renderings.

A :class:`RunReport` is plain data (lists of dicts) built from a
:class:`~rational_tiles.classification.Classification` or from single case
results. JSON is the lossless form; CSV and Markdown are rendered from the
same records through pandas.

Public API
----------
RunReport
angle_array(angles) -> [p1, p2, p3, p4, q]
report_from_classification(classification) -> RunReport
report_from_cases(results) -> RunReport
render_roots(points, families, fmt) -> str
"""

from collections.abc import Iterable
from dataclasses import asdict, dataclass, field
from fractions import Fraction
import json
import math
import pathlib

import pandas as pd

from rational_tiles.classification import Classification, FamilyEntry, SporadicSolution
from rational_tiles.solver.roots import CyclotomicPoint, TorsionFamily
from rational_tiles.tiling.candidates import CandidateSolution
from rational_tiles.tiling.pipeline import CaseResult
from rational_tiles.utils.logger import logger

__all__ = [
    "FORMATS",
    "RunReport",
    "angle_array",
    "render_roots",
    "report_from_cases",
    "report_from_classification",
    "roots_frame",
]

FORMATS = ("json", "csv", "md")
SECTIONS = ("cases", "sporadic", "families", "discrepancies")


def angle_array(angles: Iterable) -> list[int]:
    """``(1/6, 4/3, 2/3, 1/2)`` → ``[1, 8, 4, 3, 6]``."""
    values = [Fraction(a) for a in angles]
    q = math.lcm(*(v.denominator for v in values))
    return [int(v * q) for v in values] + [q]


def _solution_record(sol: CandidateSolution) -> dict:
    return {"angles": angle_array(sol.angles), "text": sol.text, "f": sol.f, "provenance": sol.provenance}


def _case_record(result: CaseResult, branches: bool = False) -> dict:
    record = {"case": result.case_id, "error": result.error, "seconds": round(result.seconds, 2)}
    if result.form is not None:
        record["substitution"] = result.form.substitution_text()
        record["polynomial"] = str(result.form.poly)
    if result.rationalized is not None:
        record["rationalized"] = str(result.rationalized)
    if branches:
        record["branches"] = [
            {"number": b.number, "label": b.label, "factors": b.factor_text()} for b in result.branches
        ]
    solutions = []
    for sol in result.accepted:
        item = _solution_record(sol)
        balance = result.balance.get(sol)
        item["tiling"] = bool(balance and balance.feasible)
        item["balance"] = balance.explanation if balance else ""
        if branches:
            item["branches"] = result.branch_labels(sol)
        solutions.append(item)
    record["solutions"] = solutions
    record["families"] = [
        {"angles": r.family.text, "condition": r.admissibility.condition} for r in result.families
    ]
    record["dismissed"] = [
        {**_solution_record(d.candidate), "reasons": list(d.reasons)} for d in result.dismissed
    ]
    record["discrepancies"] = list(result.discrepancies)
    return record


def _sporadic_record(item: SporadicSolution) -> dict:
    record = _solution_record(item.solution)
    record["cases"] = list(item.cases)
    record["spectrum"] = item.balance.explanation
    if item.geometry is not None:
        record["a"] = round(item.geometry.a, 6)
        record["b"] = round(item.geometry.b, 6)
        record["convex"] = item.geometry.convex
        if item.geometry.ambiguous:
            record["alternatives"] = [list(pair) for pair in item.geometry.alternatives]
    return record


def _family_record(entry: FamilyEntry) -> dict:
    return {
        "angles": entry.family.text,
        "condition": entry.admissibility.condition,
        "threshold": entry.admissibility.threshold,
        "isolated": list(entry.admissibility.isolated),
        "cases": list(entry.cases),
    }


@dataclass
class RunReport:
    """Per-case records, the merged classification and discrepancy notes."""

    cases: list[dict] = field(default_factory=list)
    sporadic: list[dict] = field(default_factory=list)
    families: list[dict] = field(default_factory=list)
    no_tiling: list[dict] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        return cls(**{k: list(data.get(k, [])) for k in (*SECTIONS, "no_tiling")})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def frames(self) -> dict[str, pd.DataFrame]:
        """One table per section; nested fields are flattened to text."""
        case_rows = [
            {
                "case": c["case"],
                "substitution": c.get("substitution", ""),
                "solutions": "; ".join(f"{s['text']} f={s['f']}" for s in c["solutions"]),
                "families": "; ".join(f["angles"] for f in c["families"]),
                "dismissed": len(c["dismissed"]),
                "error": c["error"] or "",
            }
            for c in self.cases
        ]
        sporadic = []
        for records, tiling in ((self.sporadic, True), (self.no_tiling, False)):
            for r in records:
                row = {k: v for k, v in r.items() if k not in ("angles", "alternatives")}
                sporadic.append({**row, "cases": ", ".join(r["cases"]), "tiling": tiling})
        families = [
            {**r, "isolated": ", ".join(map(str, r["isolated"])), "cases": ", ".join(r["cases"])}
            for r in self.families
        ]
        return {
            "cases": pd.DataFrame(case_rows),
            "sporadic": pd.DataFrame(sporadic),
            "families": pd.DataFrame(families),
            "discrepancies": pd.DataFrame({"note": self.discrepancies}),
        }

    def to_csv(self) -> str:
        """All sections stacked in one table with a ``section`` column."""
        stacked = [frame.assign(section=name) for name, frame in self.frames().items() if not frame.empty]
        if not stacked:
            return "section\n"
        table = pd.concat(stacked, ignore_index=True)
        return table[["section", *[c for c in table.columns if c != "section"]]].to_csv(index=False)

    def to_markdown(self) -> str:
        parts = []
        for name, frame in self.frames().items():
            parts.append(f"## {name.capitalize()}\n")
            parts.append(frame.to_markdown(index=False) if not frame.empty else "_none_")
            parts.append("")
        return "\n".join(parts)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")

    def write(self, fmt: str, out: str | pathlib.Path | None = None) -> str:
        """Render and, when ``out`` is given, write to that file; returns the text."""
        text = self.render(fmt)
        if out is not None:
            path = pathlib.Path(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"Wrote {fmt} report to {path}")
        return text


def report_from_cases(results: Iterable[CaseResult], branches: bool = False) -> RunReport:
    """A report of per-case records only, e.g. for a single ``case`` run.

    ``branches=True`` adds the comparison eliminants, which can be slow to compute.
    """
    report = RunReport()
    for result in results:
        report.cases.append(_case_record(result, branches))
        report.discrepancies.extend(result.discrepancies)
    return report


def report_from_classification(classification: Classification, branches: bool = False) -> RunReport:
    return RunReport(
        cases=[_case_record(r, branches) for r in classification.results],
        sporadic=[_sporadic_record(s) for s in classification.sporadic],
        families=[_family_record(e) for e in classification.families],
        no_tiling=[_sporadic_record(s) for s in classification.no_tiling],
        discrepancies=list(classification.discrepancies),
    )


def roots_frame(points: Iterable[CyclotomicPoint], families: Iterable[TorsionFamily]) -> pd.DataFrame:
    """One row per isolated point (``(k/n, …)``) and per family (its binomial relations)."""
    rows = [{"kind": "point", "value": str(p)} for p in sorted(points)]
    rows += [{"kind": "family", "value": ", ".join(fam.relations_text())} for fam in sorted(families, key=str)]
    return pd.DataFrame(rows, columns=["kind", "value"])


def render_roots(points: Iterable[CyclotomicPoint], families: Iterable[TorsionFamily], fmt: str) -> str:
    """Cyclotomic points and families in one of :data:`FORMATS`."""
    points, families = sorted(points), sorted(families, key=str)
    if fmt == "json":
        data = {
            "points": [[str(x) for x in p.fractions] for p in points],
            "families": [fam.relations_text() for fam in families],
        }
        return json.dumps(data, indent=2, ensure_ascii=False)
    frame = roots_frame(points, families)
    if fmt == "csv":
        return frame.to_csv(index=False)
    if fmt == "md":
        return frame.to_markdown(index=False) if not frame.empty else "no cyclotomic solutions"
    raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
