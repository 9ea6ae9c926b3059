import json

import matplotlib.pyplot as plt
import pandas as pd
from openpyxl import load_workbook

from src.cli.reports import Report, render_text, to_excel, to_json
from src.tcategories.simplicial import check_sa_axioms
from src.visualizations.report_visuals import (
    plot_check_matrix,
    plot_level_cardinalities,
    save_report_figure,
    sizes_frame,
)


def sample_report():
    report = Report("nerve", ("arrow.json",), 3)
    report.add("checks", pd.DataFrame({"axiom": ["SA1", "SA2"], "n": [2, 2], "passed": [True, False]}))
    report.add("extra", pd.DataFrame({"passed": [False]}), required=False)
    return report


def test_required_sections_decide_the_verdict():
    report = sample_report()
    assert not report.passed
    assert report.exit_code == 1
    summary = report.summary()
    assert list(summary["failures"]) == [1, 1]

    ok = Report("segal", ("a.json",), 2)
    ok.add("optional", pd.DataFrame({"passed": [False]}), required=False)
    assert ok.exit_code == 0
    ok.fail()
    assert ok.exit_code == 1


def test_text_and_json_rendering():
    report = sample_report()
    report.note("arrow is a T-category")
    text = render_text(report)
    assert text.startswith("command: nerve\n")
    assert "note: arrow is a T-category" in text
    assert text.endswith("result: FAIL\n")
    payload = json.loads(to_json(report))
    assert payload["passed"] is False
    assert payload["sections"][0]["rows"][1] == {"axiom": "SA2", "n": 2, "passed": False}


def test_excel_sheet_names(tmp_path):
    report = Report("copower", ("p.json", "horn:2,1"), 2)
    report.add("weight: identities", pd.DataFrame({"passed": [True]}))
    report.add("weight: identities", pd.DataFrame({"passed": [True]}))
    path = to_excel(report, tmp_path / "out.xlsx")
    assert load_workbook(path).sheetnames == ["summary", "weight_ identities", "weight_ identities_1"]


def test_sizes_frame(arrow_nerve, point_nerve):
    frame = sizes_frame([("N[1]", arrow_nerve), ("N[0]", point_nerve)])
    assert list(frame.columns) == ["object", "n", "size"]
    assert list(frame[frame["object"] == "N[1]"]["size"]) == [2, 3, 4, 5]


def test_figures(arrow_nerve):
    fig = plot_level_cardinalities(sizes_frame([("N[1]", arrow_nerve)]))
    assert fig.axes[0].get_xlabel() == "Level n"
    plt.close(fig)
    fig = plot_check_matrix(check_sa_axioms(arrow_nerve))
    assert fig.axes
    plt.close(fig)


def test_save_report_figure(tmp_path, arrow_nerve):
    report = Report("nerve", ("arrow.json",), 3)
    report.add("identities", check_sa_axioms(arrow_nerve))
    path = save_report_figure(report, tmp_path / "checks.png")
    assert path is not None and path.exists()

    bare = Report("compose", ("a", "b"), 3)
    bare.add("laws", pd.DataFrame({"law": ["left unit"], "passed": [True]}))
    assert save_report_figure(bare, tmp_path / "none.png") is None
