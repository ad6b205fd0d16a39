import xml.etree.ElementTree as ET

import pytest

from a2g_sim.errors import ConfigError
from a2g_sim.scenario import CurveSeries, sweep_rx_power_vs_elevation
from a2g_sim.svg import nice_ticks, render_svg, write_svg_plot

NS = "{http://www.w3.org/2000/svg}"


def test_single_series_one_polyline(tmp_path):
    s = CurveSeries("line", "x", "m", "y", "", ((0.0, 0.0), (1.0, 2.0)))
    path = write_svg_plot([s], "two points", tmp_path / "p.svg")
    root = ET.parse(path).getroot()
    assert root.tag == f"{NS}svg"
    assert (root.get("width"), root.get("height")) == ("800", "600")
    assert len(root.findall(f"{NS}polyline")) == 1


def test_empty_list_rejected():
    with pytest.raises(ConfigError):
        render_svg([], "nothing")


def test_byte_identical():
    series = sweep_rx_power_vs_elevation()
    assert render_svg(series, "fig6") == render_svg(series, "fig6")


def test_legend_and_no_external_refs():
    series = sweep_rx_power_vs_elevation()
    text = render_svg(series, "fig6 <&>")
    root = ET.fromstring(text)
    labels = [t.text for t in root.findall(f"{NS}text")]
    assert {"alpha=2", "alpha=2.5", "alpha=3"} <= set(labels)
    assert "fig6 <&>" in labels
    assert len(root.findall(f"{NS}polyline")) == 3
    assert "href" not in text and "http://" not in text.replace("http://www.w3.org/2000/svg", "")


def test_ticks():
    assert nice_ticks(0, 1000) == [0, 200, 400, 600, 800, 1000]
    assert nice_ticks(-150, -90) == [-150, -140, -130, -120, -110, -100, -90]
    ticks = nice_ticks(0.02, 1.0)
    assert ticks[0] >= 0.02 - 1e-12 and ticks[-1] <= 1.0 + 1e-12
    assert all("-0" != format(t, "g") for t in nice_ticks(-1, 1))
