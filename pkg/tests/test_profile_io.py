"""Profile parsing, sample files, and report serialization."""

import json
import math

import numpy as np
import numpy.testing as npt
import pytest

from spiralbounds.analysis import analyze
from spiralbounds.compliance import check_containment
from spiralbounds.errors import EmptySamplesError, ParseError
from spiralbounds.profile_io import (
    compliance_report_dict,
    load_profile,
    load_samples,
    parse_profile,
    region_report,
    report_json,
    save_samples,
)
from spiralbounds.regions import build_region

from conftest import profile_dict, sparse_dataset, write_profile

VALID = {
    "version": 1,
    "points": [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]],
    "closed": False,
    "tangents": {"start": 0.0, "end": 1.5707963267948966},
}


def test_parse_minimal_profile():
    data, overrides = parse_profile(VALID)
    assert data.points.shape == (3, 2)
    assert not data.closed
    assert overrides == {}
    npt.assert_allclose(data.tau_end, math.pi / 2)


def test_parse_vector_tangents():
    prof = dict(VALID, tangents={"start": [2.0, 0.0], "end": [0.0, -3.0]})
    data, _ = parse_profile(prof)
    npt.assert_allclose(data.tau_start, 0.0)
    npt.assert_allclose(data.tau_end, -math.pi / 2)


def test_parse_degrees_flag():
    prof = dict(VALID, tangents={"start": 0.0, "end": 90.0})
    data, _ = parse_profile(prof, degrees=True)
    npt.assert_allclose(data.tau_end, math.pi / 2)
    # vectors are direction pairs, unaffected by the flag
    prof = dict(VALID, tangents={"start": [1.0, 1.0], "end": 90.0})
    data, _ = parse_profile(prof, degrees=True)
    npt.assert_allclose(data.tau_start, math.pi / 4)


def test_parse_closed_profile():
    prof = {"version": 1, "closed": True,
            "points": [[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]]}
    data, _ = parse_profile(prof)
    assert data.closed and data.tau_start is None


def test_parse_overrides():
    prof = dict(VALID, curvature_overrides={"2": {"a": -0.5, "b": 2.0},
                                            "1": {"a": 0.0}})
    _, overrides = parse_profile(prof)
    assert overrides == {2: {"a": -0.5, "b": 2.0}, 1: {"a": 0.0}}


@pytest.mark.parametrize("mutate", [
    lambda p: p.update(version=2),
    lambda p: p.update(extra_key=1),
    lambda p: p.update(points=[[0, 0], [1, 1]]),
    lambda p: p.update(points=[[0, 0], [1, "x"], [2, 2]]),
    lambda p: p.update(points=[[0, 0], [1, math.nan], [2, 2]]),
    lambda p: p.update(closed="yes"),
    lambda p: p.update(tangents={"start": 0.0}),
    lambda p: p.update(tangents={"start": 0.0, "end": [0.0, 0.0]}),
    lambda p: p.update(tangents={"start": 0.0, "middle": 1.0, "end": 0.0}),
    lambda p: p.update(tangents={"start": True, "end": 0.0}),
    lambda p: p.update(curvature_overrides={"x": {"a": 0.0}}),
    lambda p: p.update(curvature_overrides={"1": {"c": 0.0}}),
    lambda p: p.update(curvature_overrides={"1": {"a": "big"}}),
    lambda p: p.update(curvature_overrides=[1, 2]),
])
def test_parse_rejects_malformed(mutate):
    prof = json.loads(json.dumps(VALID))
    mutate(prof)
    with pytest.raises(ParseError):
        parse_profile(prof)


def test_parse_rejects_closed_with_tangents():
    prof = {"version": 1, "closed": True,
            "points": [[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]],
            "tangents": {"start": 0.0, "end": 0.0}}
    with pytest.raises(ParseError):
        parse_profile(prof)


def test_parse_rejects_non_dict():
    with pytest.raises(ParseError):
        parse_profile([1, 2, 3])


def test_load_profile_round_trip(tmp_path, circle_data):
    path = write_profile(tmp_path / "circle.json", circle_data)
    data, overrides = load_profile(path)
    npt.assert_allclose(data.points, circle_data.points)
    assert overrides == {}


def test_load_profile_bad_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_profile(str(p))


# ---------------------------------------------------------------------------
# Sample files
# ---------------------------------------------------------------------------


def test_samples_text_round_trip(tmp_path):
    pts = np.array([[0.1, -0.2], [1.5, 2.5], [-3.0, 0.125]])
    path = tmp_path / "samples.txt"
    save_samples(str(path), pts)
    npt.assert_allclose(load_samples(str(path)), pts, rtol=1e-15)


def test_samples_json_array(tmp_path):
    path = tmp_path / "samples.json"
    path.write_text("[[0.0, 1.0], [2.0, 3.0]]")
    npt.assert_allclose(load_samples(str(path)), [[0, 1], [2, 3]])


def test_samples_text_comments(tmp_path):
    path = tmp_path / "samples.txt"
    path.write_text("# header\n0 1\n2 3  # trailing\n\n4 5\n")
    npt.assert_allclose(load_samples(str(path)), [[0, 1], [2, 3], [4, 5]])


def test_samples_empty_rejected(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing\n")
    with pytest.raises(EmptySamplesError):
        load_samples(str(path))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def test_region_report_structure(circle_analysis):
    reg = build_region(circle_analysis)
    rep = region_report(circle_analysis, reg)
    assert rep["version"] == 1
    assert rep["grade"] == "narrowed"
    assert rep["classification"]["kind"] == "spiral"
    assert len(rep["chords"]) == 20
    assert len(rep["nodes"]) == 21
    ch = rep["chords"][0]
    assert {"index", "half_length", "direction", "midpoint",
            "xi", "eta", "width", "width_estimate",
            "lower", "upper"} <= set(ch)
    assert ch["lower"]["type"] in ("arc", "biarc")
    # must serialize cleanly and round-trip through strict JSON
    text = report_json(rep)
    back = json.loads(text)
    assert back["width"] == rep["width"]


def test_region_report_vertices():
    t = np.linspace(0.0, 2 * math.pi, 17)[:-1]
    pts = np.column_stack([2.0 * np.cos(t), np.sin(t)])
    from spiralbounds.analysis import SplineInput
    an = analyze(SplineInput(pts, closed=True))
    rep = region_report(an, build_region(an))
    kinds = {v["kind"] for v in rep["classification"]["vertices"]}
    assert kinds == {"min", "max"}
    assert len(rep["classification"]["vertices"]) == 4


def test_compliance_report_dict(sparse_data):
    from spiralbounds.splinefit import cubic_spline_fixture
    an = analyze(sparse_data)
    reg = build_region(an)
    rep = check_containment(reg, cubic_spline_fixture(sparse_data))
    d = compliance_report_dict(rep)
    assert d["verdict"] == "fail"
    assert d["violation_count"] == len(rep.violations)
    assert len(d["violations"]) <= 50
    assert d["worst_margin"] < 0
    json.loads(report_json(d))


def test_compliance_report_no_assigned_samples(circle_analysis):
    reg = build_region(circle_analysis)
    rep = check_containment(reg, np.array([[99.0, 99.0]]))
    d = compliance_report_dict(rep)
    assert d["verdict"] == "pass"
    assert d["worst_margin"] is None  # not a float: nothing was assigned
    json.loads(report_json(d))
