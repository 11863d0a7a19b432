"""The registered cross-checks and their grid/report plumbing."""

from __future__ import annotations

import json

import pytest

from hyperbetti import THEOREM_IDS, ParameterError, run_check
from hyperbetti.verify import parse_grid


def test_registry_lists_twenty_five_checks():
    assert len(THEOREM_IDS) == 25
    assert len(set(THEOREM_IDS)) == 25


def test_parse_grid_forms():
    assert parse_grid(None) == {}
    assert parse_grid("") == {}
    assert parse_grid("smoke") == {"preset": "smoke"}
    assert parse_grid("n=3..5, d=3") == {"n": (3, 5), "d": (3, 3)}


def test_parse_grid_rejects_junk():
    with pytest.raises(ParameterError):
        parse_grid("n=a..b")


def test_unknown_theorem_id():
    with pytest.raises(ParameterError):
        run_check("nope")


def test_closed_form_check_small_grid():
    rep = run_check("P", "n=3..4,d=3..3,alpha=1..1")
    assert rep.ok
    assert rep.grid == "n=3..4,d=3..3,alpha=1..1"
    summary = rep.summary_line()
    assert "theorem=P" in summary and "mismatch=0" in summary


def test_star_check_small_grid():
    rep = run_check("star", "n=2..3,d=3..3,alpha=1..2")
    assert rep.ok


def test_report_json_is_canonical():
    rep = run_check("knd-complement", "n=3..4,d=2..3")
    obj = rep.to_json_obj()
    text = json.dumps(obj, sort_keys=True)
    assert json.loads(text) == obj
    assert {"theorem", "grid", "summary", "results", "notes"} <= set(obj)
    assert all(r["status"] in {"match", "mismatch", "skipped"} for r in obj["results"])


def test_timings_are_opt_in():
    rep = run_check("b", "i=2..3,n=4..5")
    assert "timings_ms" not in rep.to_json_obj()
    assert "timings_ms" in rep.to_json_obj(include_timings=True)


def test_mismatch_flips_ok():
    """A report with zero mismatches is ok; the flag follows the tally."""
    rep = run_check("u", "n=3..3,d=3..3,alpha=1..1")
    assert rep.ok == (rep.to_json_obj()["summary"]["mismatch"] == 0)
    assert rep.ok
