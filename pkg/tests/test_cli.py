"""CLI surface: commands, exit codes, deterministic JSON."""

import json

from click.testing import CliRunner

from triplepoint.cli import main


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_classify_a123_text():
    res = invoke("classify", "--tag", "A:1,2,3")
    assert res.exit_code == 0
    assert "residue        : 2 (expected 2)" in res.output
    assert res.output.count("verdict=ulrich") == 2
    assert "rejected by trace containment: True" in res.output


def test_classify_json_deterministic():
    a = invoke("classify", "--tag", "B:1,3", "--json")
    b = invoke("classify", "--tag", "B:1,3", "--json")
    assert a.exit_code == 0 and a.output == b.output
    data = json.loads(a.output)
    assert data["status"] == "pass"
    assert len(data["ulrich"]) == 2


def test_classify_ex52_notes_nonrational():
    res = invoke("classify", "--tag", "EX-5.2", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["ulrich"]) == 3
    assert "non-rational" in data["note"]


def test_classify_rdp_delegates_to_list():
    res = invoke("classify", "--tag", "RDP-E8", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["ulrich"]) == 2
    assert data["next"]["verdict"] != "ulrich"


def test_classify_ex53_is_input_error():
    res = invoke("classify", "--tag", "EX-5.3")
    assert res.exit_code == 3  # engine refuses CM type 3 trace by design


def test_classify_bad_tag_exit_2():
    assert invoke("classify", "--tag", "Q:9").exit_code == 2
    assert invoke("classify", "--tag", "A:3,2,1").exit_code == 2


def test_residue_table():
    res = invoke("residue-table", "--max-param", "2", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["status"] == "pass"
    tags = {r["tag"] for r in data["rows"]}
    assert {"A:0,0,0", "D:2", "Gamma1"} <= tags


def test_residue_table_bound():
    assert invoke("residue-table", "--max-param", "9").exit_code == 2


def test_quotient_sweep_small():
    res = invoke("quotient-sweep", "--max-param", "3", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["status"] == "pass"
    by_tag = {r["tag"]: r for r in data["rows"]}
    assert by_tag["G10:2"]["multiplicity"] == 4
    assert by_tag["G10:2"]["chainCount"] == 1
    assert by_tag["G10:2"]["status"] == "pass"
    assert by_tag["cyclic:2,3,2"]["filter"] is True
    assert by_tag["G11:2"]["chainCount"] == 2  # multiplicity 3, two cycles
    assert by_tag["G11:2"]["status"] == "pass"


def test_cross_check_examples():
    for tag in ("A:1,2,3", "H:5", "Gamma1"):
        res = invoke("cross-check", "--tag", tag, "--json")
        assert res.exit_code == 0, res.output
        data = json.loads(res.output)
        assert data["status"] == "pass"
    data = json.loads(invoke("cross-check", "--tag", "A:1,2,3", "--json").output)
    assert data["graph"]["traceCycleLength"] == data["algebra"]["res"] == 2


def test_cross_check_ex53():
    res = invoke("cross-check", "--tag", "EX-5.3", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["algebra"]["e0"] == 4 and data["graph"]["e0"] == 4
    assert data["algebra"]["mu"] == 5 and data["graph"]["mu"] == 5


def test_graph_z0_matches_figure():
    res = invoke("graph", "z0", "--tag", "G10:2")
    assert res.exit_code == 0
    assert json.loads(res.output) == {"E1": 1, "E2": 1, "E0": 2, "E3": 1, "F": 1}


def test_graph_stats_cycle():
    res = invoke(
        "graph",
        "stats",
        "--tag",
        "G10:2",
        "--cycle",
        '{"E1":1,"E2":2,"E0":2,"E3":1,"F":1}',
    )
    assert res.exit_code == 0
    assert json.loads(res.output) == {"len": 2, "e0": 7, "mu": 5}


def test_graph_filter_single_vertex(tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"vertices":[{"id":"E0","weight":-3}],"edges":[]}')
    res = invoke("graph", "filter", "--file", str(path))
    assert res.exit_code == 0
    assert json.loads(res.output) is True


def test_graph_chains_output():
    res = invoke("graph", "chains", "--tag", "A:1,2,3")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["count"] == 2
    assert data["truncated"] is False


def test_graph_pa_defaults_to_fundamental_cycle():
    res = invoke("graph", "pa", "--tag", "Gamma2")
    assert res.exit_code == 0
    assert json.loads(res.output) == {"pa": 0}
    res = invoke(
        "graph", "pa", "--tag", "RDP-A:2", "--cycle", '{"E1":1,"E2":0}'
    )
    assert json.loads(res.output) == {"pa": 0}


def test_graph_parse_error_exit_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    assert invoke("graph", "z0", "--file", str(path)).exit_code == 2


def test_graph_invariant_violation_exit_3(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"vertices":[{"id":"a","weight":-1}],"edges":[]}'
    )
    assert invoke("graph", "z0", "--file", str(path)).exit_code == 3


def test_rdp_verify_single():
    res = invoke("rdp-verify", "--tag", "RDP-E7", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    row = data["rows"][0]
    assert row["count"] == 3 and row["status"] == "pass"
    assert row["next"] != "ulrich"


def test_socle_experiment_single():
    res = invoke("socle-experiment", "--tag", "A:1,2,3", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["rows"][0]["gorensteinQuotient"] is True


def test_byte_identical_json_across_runs():
    outs = {invoke("graph", "chains", "--tag", "H:8").output for _ in range(3)}
    assert len(outs) == 1
