"""End-to-end command behavior: exit codes, bytes, and the cache."""

from __future__ import annotations

import io
import json

import pytest

from hyperbetti.cli import main


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERBETTI_CACHE_DIR", str(tmp_path / "cache"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_line_embeds_family_tag(capsys):
    code, out, _ = run(capsys, "gen", "--family", "line", "--n", "3", "--d", "3", "--alpha", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 7
    assert obj["family"] == {"alpha": 1, "d": 3, "kind": "line", "n": 3}


def test_gen_is_deterministic(capsys):
    args = ("gen", "--family", "cycle", "--n", "4", "--d", "3", "--alpha", "1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_gen_complete_below_degree(capsys):
    code, out, _ = run(capsys, "gen", "--family", "complete", "--n", "3", "--d", "4")
    assert code == 0
    assert json.loads(out)["edges"] == []


def test_gen_bad_overlap_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "--family", "line", "--n", "3", "--d", "3", "--alpha", "9")
    assert code == 2
    assert "error:" in err


def test_gen_multipartite(capsys):
    code, out, _ = run(capsys, "gen", "--family", "multipartite", "--parts", "2,2", "--d", "2")
    assert code == 0
    assert len(json.loads(out)["edges"]) == 4


def _gen_to_file(capsys, tmp_path, *argv):
    _, out, _ = run(capsys, *argv)
    path = tmp_path / "input.json"
    path.write_text(out)
    return str(path)


def test_betti_closed_form_matches_hochster(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "star", "--n", "3", "--d", "3", "--alpha", "1"
    )
    code, closed, _ = run(capsys, "betti", path, "--method", "closed-form", "--no-cache")
    assert code == 0
    code2, summed, _ = run(capsys, "betti", path, "--method", "hochster", "--no-cache")
    assert code2 == 0
    assert closed == summed


def test_betti_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n":4,"edges":[[0,1,2],[1,2,3]]}'))
    code, out, _ = run(capsys, "betti", "-", "--no-cache")
    assert code == 0
    table = json.loads(out)
    assert {"i": 2, "j": 4, "beta": 1} in table["entries"]


def test_betti_csv_and_ideal_convention(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "3", "--d", "3", "--alpha", "1"
    )
    code, out, _ = run(
        capsys, "betti", path, "--format", "csv", "--convention", "ideal", "--no-cache"
    )
    assert code == 0
    assert out.splitlines()[0] == "i,j,beta"
    assert "0,3,3" in out


def test_betti_cache_replays_bytes(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "2", "--d", "3", "--alpha", "1"
    )
    code, first, err1 = run(capsys, "betti", path)
    code2, second, err2 = run(capsys, "betti", path)
    assert code == code2 == 0
    assert first == second
    assert "[cache] hit" not in err1
    assert "[cache] hit" in err2


def test_betti_cache_keys_include_flags(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "2", "--d", "3", "--alpha", "1"
    )
    run(capsys, "betti", path)
    _, csv_out, err = run(capsys, "betti", path, "--format", "csv")
    assert "[cache] hit" not in err
    assert csv_out.startswith("i,j,beta")


def test_betti_thread_count_does_not_split_the_cache(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "2", "--d", "3", "--alpha", "1"
    )
    run(capsys, "betti", path, "--threads", "1")
    _, _, err = run(capsys, "betti", path, "--threads", "3")
    assert "[cache] hit" in err


def test_betti_rejects_composite_field(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "2", "--d", "3", "--alpha", "1"
    )
    code, _, err = run(capsys, "betti", path, "--field", "gfP:6", "--no-cache")
    assert code == 2
    assert "prime" in err


def test_betti_closed_form_needs_family_tag(capsys, tmp_path):
    path = tmp_path / "raw.json"
    path.write_text('{"n":5,"edges":[[0,1,2],[2,3,4]]}')
    code, _, err = run(capsys, "betti", str(path), "--method", "closed-form", "--no-cache")
    assert code == 2
    assert "family" in err


def test_betti_closed_form_rejects_tampered_tag(capsys, tmp_path):
    obj = {
        "n": 5,
        "edges": [[0, 1, 2], [1, 2, 3]],
        "family": {"kind": "line", "n": 2, "d": 3, "alpha": 1},
    }
    path = tmp_path / "forged.json"
    path.write_text(json.dumps(obj))
    code, _, err = run(capsys, "betti", str(path), "--method", "closed-form", "--no-cache")
    assert code == 2
    assert "does not match" in err


def test_betti_closed_form_other_families_are_usage_errors(capsys, tmp_path):
    path = _gen_to_file(capsys, tmp_path, "gen", "--family", "complete", "--n", "4", "--d", "3")
    code, _, err = run(capsys, "betti", str(path), "--method", "closed-form", "--no-cache")
    assert code == 2
    assert "closed-form" in err


def test_betti_vertex_budget_exit(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "3", "--d", "3", "--alpha", "1"
    )
    code, _, err = run(capsys, "betti", path, "--max-vertices", "4", "--no-cache")
    assert code == 3
    assert "budget" in err


def test_betti_clique_route_needs_uniformity_hint_when_edgeless(capsys, tmp_path):
    path = tmp_path / "edgeless.json"
    path.write_text('{"n":3,"edges":[]}')
    code, _, err = run(capsys, "betti", str(path), "--complex", "clique", "--no-cache")
    assert code == 2
    code2, out, _ = run(
        capsys, "betti", str(path), "--complex", "clique", "--d", "2", "--no-cache"
    )
    assert code2 == 0
    assert json.loads(out)["entries"][0] == {"i": 0, "j": 0, "beta": 1}


def test_verify_round_trip(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "P", "--grid", "n=3..3,d=3..3")
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["mismatch"] == 0
    assert "theorem=P" in err


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "zzz")
    assert code == 2
    assert "unknown theorem id" in err


def test_shell_finds_an_order(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text('{"n":4,"edges":[[0,1,2],[1,2,3]]}')
    code, out, _ = run(capsys, "shell", str(path), "--d", "1")
    assert code == 0
    cert = json.loads(out)
    assert cert["d"] == 1
    assert len(cert["ordering"]) == 2


def test_shell_reports_absence(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text('{"n":5,"edges":[[0,1,2],[2,3,4]]}')
    code, _, err = run(capsys, "shell", str(path), "--d", "1")
    assert code == 1
    assert "no 1-shelling" in err


def test_shell_checks_an_explicit_order(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text('{"n":5,"edges":[[0,1,2],[2,3,4]]}')
    code, _, err = run(capsys, "shell", str(path), "--d", "1", "--order", "0,1")
    assert code == 1
    assert "not a 1-shelling" in err


def test_shell_budget_exit(capsys, tmp_path):
    path = tmp_path / "big.json"
    facets = [[i, j] for i in range(6) for j in range(i + 1, 6)]
    path.write_text(json.dumps({"n": 6, "facets": facets, "void": False}))
    code, _, err = run(capsys, "shell", str(path), "--d", "1", "--max-facets", "5")
    assert code == 3


def test_dual_is_an_involution(capsys, tmp_path):
    path = tmp_path / "cx.json"
    path.write_text('{"n":4,"facets":[[0,1],[1,2],[2,3]],"void":false}')
    _, once, _ = run(capsys, "dual", str(path))
    back = tmp_path / "dual.json"
    back.write_text(once)
    _, twice, _ = run(capsys, "dual", str(back))
    original = json.loads(path.read_text())
    assert json.loads(twice) == original
    # a second double application reproduces the file byte for byte
    twice_file = tmp_path / "twice.json"
    twice_file.write_text(twice)
    _, thrice, _ = run(capsys, "dual", str(twice_file))
    four = tmp_path / "thrice.json"
    four.write_text(thrice)
    _, fourth, _ = run(capsys, "dual", str(four))
    assert fourth == twice


def test_dual_rejects_hypergraph_input(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text('{"n":4,"edges":[[0,1]]}')
    code, _, err = run(capsys, "dual", str(path))
    assert code == 2


def test_chordal_build_then_recognize(capsys, tmp_path):
    code, built, _ = run(capsys, "chordal", "--build", "4,3:2", "--d", "3")
    assert code == 0
    path = tmp_path / "built.json"
    path.write_text(built)
    code2, verdict, _ = run(capsys, "chordal", str(path))
    assert code2 == 0
    obj = json.loads(verdict)
    assert obj["chordal"] is True
    assert "witness" in obj


def test_chordal_recipe_json_input(capsys, tmp_path):
    recipe = {"d": 3, "steps": [{"i": 4, "j": 0, "glue": []}, {"i": 3, "j": 2, "glue": [0, 1]}]}
    path = tmp_path / "recipe.json"
    path.write_text(json.dumps(recipe))
    code, out, _ = run(capsys, "chordal", str(path))
    assert code == 0
    assert len(json.loads(out)["edges"]) == 5


def test_chordal_negative_and_budget(capsys, tmp_path):
    path = tmp_path / "c4.json"
    path.write_text('{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}')
    code, out, _ = run(capsys, "chordal", str(path))
    assert code == 1
    assert json.loads(out) == {"chordal": False, "states": 0}
    cyc = tmp_path / "cyc.json"
    _, gen_out, _ = run(capsys, "gen", "--family", "cycle", "--n", "4", "--d", "3", "--alpha", "1")
    cyc.write_text(gen_out)
    code2, _, err = run(capsys, "chordal", str(cyc), "--node-budget", "40")
    assert code2 == 3
    assert "budget" in err


def test_export_hypergraph_and_ideal_inputs(capsys, tmp_path):
    h = tmp_path / "h.json"
    h.write_text('{"n":4,"edges":[[0,1,2],[1,2,3]]}')
    code, out, _ = run(capsys, "export", str(h))
    assert code == 0
    assert out == "x1*x2*x3\nx2*x3*x4\n"
    ideal = tmp_path / "ideal.json"
    ideal.write_text('{"n":3,"generators":[[0],[1,2]]}')
    code2, out2, _ = run(capsys, "export", str(ideal))
    assert code2 == 0
    assert out2 == "x1\nx2*x3\n"


def test_malformed_json_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    code, _, err = run(capsys, "betti", str(path), "--no-cache")
    assert code == 2
    assert "not valid JSON" in err


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "betti", str(tmp_path / "absent.json"), "--no-cache")
    assert code == 2
    assert "cannot read" in err


def test_timings_go_to_stderr_only(capsys, tmp_path):
    path = _gen_to_file(
        capsys, tmp_path, "gen", "--family", "line", "--n", "2", "--d", "3", "--alpha", "1"
    )
    _, out, err = run(capsys, "betti", path, "--no-cache")
    assert "[time]" in err
    assert "[time]" not in out
