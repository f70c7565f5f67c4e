"""Run reports and the command-line entry point."""

from fractions import Fraction
import json

import pytest

from rational_tiles.main import EXIT_OK, EXIT_USAGE, main
from rational_tiles.report import RunReport, angle_array, report_from_cases, report_from_classification


def test_angle_array():
    angles = (Fraction(1, 6), Fraction(4, 3), Fraction(2, 3), Fraction(1, 2))
    assert angle_array(angles) == [1, 8, 4, 3, 6]


def test_case_report_sections(b3_a4):
    report = report_from_cases([b3_a4], branches=True)
    (record,) = report.cases
    assert record["case"] == "b3+a4"
    assert record["substitution"] == "x = e^{iπ·δ}, y = e^{4iπ/f}"
    assert len(record["branches"]) == 7
    labels = {b["label"] for b in record["branches"]}
    assert all(set(s["branches"]) <= labels for s in record["solutions"])
    assert record["seconds"] >= 0
    assert {s["text"] for s in record["solutions"]} == {"(3,4,8,1)/6", "(3,4,6,2)/6"}
    assert {s["text"]: s["tiling"] for s in record["solutions"]} == {"(3,4,8,1)/6": True, "(3,4,6,2)/6": False}
    assert len(report.discrepancies) == 2


def test_branches_are_left_out_by_default(b3_a4):
    (record,) = report_from_cases([b3_a4]).cases
    assert "branches" not in record


def test_report_renderings(b3_a4):
    report = report_from_cases([b3_a4])
    data = json.loads(report.render("json"))
    assert set(data) == {"cases", "sporadic", "families", "no_tiling", "discrepancies"}
    assert RunReport.from_dict(data) == report
    csv = report.render("csv")
    assert csv.splitlines()[0].startswith("section,")
    assert "b3+a4" in csv
    markdown = report.render("md")
    assert "## Cases" in markdown and "## Sporadic" in markdown
    with pytest.raises(ValueError):
        report.render("xml")


def test_classification_report(full_classification):
    report = report_from_classification(full_classification)
    assert len(report.cases) == 36
    assert len(report.sporadic) == 15
    assert len(report.families) == 3
    assert len(report.no_tiling) == 3
    assert all("a" in r and "b" in r for r in report.sporadic)


def test_report_is_written_to_a_file(b3_a4, tmp_path):
    out = tmp_path / "reports" / "b3_a4.json"
    text = report_from_cases([b3_a4]).write("json", out)
    assert out.read_text(encoding="utf-8") == text


def test_cli_roots(capsys):
    assert main(["roots", "--vars", "1", "x^2 + 1"]) == EXIT_OK
    output = capsys.readouterr().out
    assert "1/4" in output and "3/4" in output


def test_cli_roots_family(capsys):
    assert main(["roots", "--vars", "2", "x*y - 1"]) == EXIT_OK
    output = capsys.readouterr().out
    assert "family" in output and "x*y = 0/1" in output


def test_cli_roots_formats(capsys):
    assert main(["roots", "--vars", "2", "--format", "json", "(x^2*y - 1)*(x + y + 1)"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["points"] == [["1/3", "2/3"], ["2/3", "1/3"]]
    assert data["families"] == [["x^2*y = 0/1"]]
    assert main(["roots", "--vars", "1", "--format", "csv", "x^2 + 1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "kind,value"
    assert len(lines) == 3 and all(line.startswith("point,") for line in lines[1:])


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "--vars", "2", "x +* y"],
        ["roots", "--vars", "2", "x + z"],
        ["roots", "--vars", "2", "0"],
        ["case", "a5"],
    ],
)
def test_cli_bad_input(argv):
    assert main(argv) == EXIT_USAGE


def test_cli_case_json(tmp_path, capsys):
    out = tmp_path / "case.json"
    assert main(["case", "b3+a4", "--format", "json", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert [c["case"] for c in data["cases"]] == ["b3+a4"]
    assert [s["text"] for s in data["sporadic"]] == ["(3,4,8,1)/6"]
    assert [s["text"] for s in data["no_tiling"]] == ["(3,4,6,2)/6"]
    assert capsys.readouterr().out == ""


def test_cli_case_with_branches(tmp_path):
    out = tmp_path / "case.json"
    assert main(["case", "b3+a4", "--branches", "--format", "json", "--out", str(out)]) == EXIT_OK
    (record,) = json.loads(out.read_text(encoding="utf-8"))["cases"]
    assert [b["number"] for b in record["branches"]] == list(range(1, 8))
