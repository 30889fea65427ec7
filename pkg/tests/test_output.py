import xml.etree.ElementTree as ET

import pytest

from agentecon.errors import OutputError
from agentecon.output import (
    ChartSeries,
    ChartSpec,
    chart_for_report,
    format_csv,
    read_csv,
    render_svg,
    write_csv,
    write_svg_chart,
)
from agentecon.scenario import RunReport, ScenarioSpec, catalog_entry, run_scenario

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def fig4(baseline):
    return run_scenario(catalog_entry("fig4"), baseline)


def test_csv_layout(fig4, tmp_path):
    path = write_csv(fig4, tmp_path / "fig4.csv")
    lines = path.read_text().splitlines()
    assert len(lines) == 21
    assert lines[0] == "year,Model 2,Model 3,gain Model 3 vs Model 2"
    assert lines[1].startswith("0,")
    assert "e+13" in lines[1]


def test_csv_round_trip(fig4, tmp_path):
    path = write_csv(fig4, tmp_path / "fig4.csv")
    cols = read_csv(path)
    for series in fig4.series + fig4.derived:
        for a, b in zip(cols[series.name], series.values):
            assert abs(a - b) <= 1e-12 * abs(b)


def test_csv_deterministic(fig4, tmp_path):
    a = write_csv(fig4, tmp_path / "a.csv").read_bytes()
    b = write_csv(fig4, tmp_path / "b.csv").read_bytes()
    assert a == b


def test_empty_report_is_error(tmp_path):
    empty = RunReport(ScenarioSpec("empty", (1,)))
    path = tmp_path / "empty.csv"
    with pytest.raises(OutputError):
        write_csv(empty, path)
    assert not path.exists()


def test_csv_io_error_has_path(fig4, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OutputError) as info:
        write_csv(fig4, blocker / "sub" / "x.csv")
    assert "file" in str(info.value)


def test_allocation_csv(baseline):
    report = run_scenario(catalog_entry("fig2"), baseline)
    text = format_csv(report)
    assert text.splitlines()[0] == "human_share,Model 2 (t=20)"
    assert len(text.splitlines()) == 201


def test_svg_structure(fig4, tmp_path):
    path = write_svg_chart(chart_for_report(fig4), tmp_path / "fig4.svg")
    text = path.read_text()
    assert text.startswith('<?xml version="1.0"')
    root = ET.fromstring(text.encode())
    assert root.tag == f"{SVG_NS}svg"
    polylines = root.findall(f".//{SVG_NS}polyline")
    assert len(polylines) == 2
    legend = [g for g in root.iter(f"{SVG_NS}g") if g.get("class") == "legend"][0]
    assert [t.text for t in legend.iter(f"{SVG_NS}text")] == ["Model 2", "Model 3"]
    ticks = [g for g in root.iter(f"{SVG_NS}g") if g.get("class") == "ticks"][0]
    assert len(list(ticks)) >= 6


def test_svg_deterministic(baseline):
    for spec in (catalog_entry("fig2"), catalog_entry("fig5")):
        chart = chart_for_report(run_scenario(spec, baseline))
        assert render_svg(chart) == render_svg(chart)


def test_svg_escapes_text():
    chart = ChartSpec("a < b & c", "x", "y", (ChartSeries("s<1>", (0.0, 1.0), (1.0, 2.0)),))
    ET.fromstring(render_svg(chart).encode())


def test_chart_rejections():
    with pytest.raises(ValueError):
        ChartSpec("t", "x", "y", ())
    with pytest.raises(ValueError):
        ChartSpec("t", "x", "y", (ChartSeries("one", (0.0,), (1.0,)),))
    with pytest.raises(ValueError):
        ChartSpec(
            "t",
            "x",
            "y",
            (ChartSeries("a", (0.0, 1.0), (1.0, 2.0)), ChartSeries("b", (0.0, 2.0), (1.0, 2.0))),
        )


def test_flat_series_renders(baseline):
    report = run_scenario(ScenarioSpec("m1", (1,), 5), baseline)
    ET.fromstring(render_svg(chart_for_report(report)).encode())
