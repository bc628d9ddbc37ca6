import json

from burnkit import (
    verify_burning_sets,
    verify_conjecture,
    verify_corollary_bounds,
)
from burnkit.io import dump_json


def strip_timing(report):
    data = report.to_json_dict()
    data.pop("elapsed_seconds")
    return data


def test_conjecture_no_violations_small():
    report = verify_conjecture(8)
    assert report.violations == []
    assert report.trees_checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23
    assert report.checks_passed["sqrt_bound"] == report.trees_checked


def test_conjecture_single_vertex():
    report = verify_conjecture(1)
    assert report.trees_checked == 1 and report.violations == []


def test_conjecture_caterpillar_filter():
    report = verify_conjecture(8, growth_at_most=1)
    assert report.violations == []
    assert report.per_n["8"] == 20  # caterpillars on 8 vertices


def test_conjecture_determinism():
    a = verify_conjecture(7)
    b = verify_conjecture(7)
    assert strip_timing(a) == strip_timing(b)
    assert json.loads(dump_json(strip_timing(a))) == strip_timing(b)


def test_sharded_equals_sequential():
    seq = verify_conjecture(7, shards=1)
    par = verify_conjecture(7, shards=2)
    a, b = strip_timing(seq), strip_timing(par)
    a.pop("shards")
    b.pop("shards")
    assert a == b


def test_resume_covers_suffix():
    from burnkit.enumeration import enumerate_trees

    items = list(enumerate_trees(7).items())
    start = items[5][0]
    report = verify_conjecture(7, resume=(7, start))
    assert report.per_n == {"7": len(items) - 5}
    assert report.violations == []
    assert report.extra["resumed_from"] == {"n": 7, "levels": list(start)}


def test_burning_sets_small():
    report = verify_burning_sets(6)
    assert report.violations == []
    assert report.extra["pairs_checked"] > 0


def test_burning_sets_counts_p5_example():
    # (P_5, {0,2}) is a burning set and burnable; it contributes a pass.
    report = verify_burning_sets(5)
    assert report.violations == []
    assert report.checks_passed["burning_sets_burnable"] == report.extra["pairs_checked"]


def test_corollary_bounds_small():
    report = verify_corollary_bounds(8)
    assert report.violations == []
    assert report.extra["min_margin"] >= 0


def test_corollary_star_example():
    # K_{1,5}: growth 1, b = 2 <= ceil(sqrt(6 + 20)) = 6.
    from burnkit import burning_number_exact, star_graph
    from burnkit.util import ceil_sqrt

    assert burning_number_exact(star_graph(5))[0] == 2
    assert ceil_sqrt(6 + 20) == 6


def test_report_json_is_stable():
    report = verify_conjecture(6)
    text1 = dump_json(strip_timing(report))
    text2 = dump_json(strip_timing(verify_conjecture(6)))
    assert text1 == text2
