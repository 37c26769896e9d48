import json

import pytest

import equipath.cli as cli
from equipath.constructions import complete_bipartite, half_graph
from equipath.graphs import to_graph6
from equipath.reproduce import CheckRow


def test_check_construction_examples(capsys):
    assert cli.main(["check", "--construct", "half_graph:5", "--len", "2"]) == 0
    assert "absent" in capsys.readouterr().out
    assert cli.main(["check", "--construct", "complete_bipartite:3,4",
                     "--len", "3"]) == 0
    assert "absent" in capsys.readouterr().out
    assert cli.main(["check", "--construct", "complete_bipartite:3,3",
                     "--len", "3"]) == 0
    out = capsys.readouterr().out
    assert "present" in out and "share degree 3" in out and "path" in out


def test_check_graph6_file_and_json(tmp_path, capsys):
    listing = tmp_path / "graphs.g6"
    listing.write_text("C~\nCh\n")
    report = tmp_path / "run.json"
    rc = cli.main(["check", "--file", str(listing), "--len", "1",
                   "--json", str(report)])
    assert rc == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 2
    assert out[0].startswith("C~:") and "present" in out[0]
    blob = json.loads(report.read_text())
    assert set(blob) == {"command", "version", "params", "results", "wall_ms"}
    assert blob["command"] == "check"
    assert len(blob["params"]["input_digest"]) == 64
    checks = blob["results"]["checks"]
    assert [c["verdict"] for c in checks] == ["present", "present"]
    wit = checks[0]["witness"]
    assert wit["shared_degree"] == 3 and len(wit["path"]) == 2

    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert cli.main(["check", "--file", str(empty), "--len", "1"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_construct_emits_graph6(capsys):
    rc = cli.main(["construct", "half_graph:2", "complete_bipartite:2,3"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == to_graph6(half_graph(2)).decode()
    assert lines[1] == to_graph6(complete_bipartite(2, 3)).decode()
    assert cli.main(["construct", "mystery:4"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_extremal_exact_with_json_and_csv(tmp_path, capsys):
    report, table = tmp_path / "r.json", tmp_path / "r.csv"
    rc = cli.main(["extremal", "--len", "2", "--order", "8",
                   "--json", str(report), "--csv", str(table)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "p_2(8) = 10" in out and "extremal classes: 2" in out
    blob = json.loads(report.read_text())
    res = blob["results"]
    assert res["value"] == 10 and res["exact"] is True
    assert len(res["witnesses"]) == 2
    assert res["witnesses"] == sorted(res["witnesses"])
    lines = table.read_text().splitlines()
    assert lines == ["ell,n,value,exact,witness_count", "2,8,10,True,2"]


def test_extremal_constructions_only(tmp_path, capsys):
    table = tmp_path / "bound.csv"
    rc = cli.main(["extremal", "--len", "3", "--order", "12",
                   "--constructions-only", "--csv", str(table)])
    assert rc == 0
    assert "p_3(12) = 35" in capsys.readouterr().out
    assert table.read_text().splitlines()[1] == "3,12,35,False,1"


def test_extremal_capacity_is_an_error(capsys):
    assert cli.main(["extremal", "--len", "2", "--order", "11"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_reproduce_suite_passes(tmp_path, capsys):
    report = tmp_path / "suite.json"
    rc = cli.main(["reproduce", "halfgraph", "--scale", "0.1",
                   "--json", str(report)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "[pass]" in out and "checks passed" in out
    blob = json.loads(report.read_text())
    assert blob["results"]["failures"] == 0
    assert all(r["status"] in ("ok", "report")
               for r in blob["results"]["rows"])


def test_reproduce_reports_mismatches(monkeypatch, capsys):
    rows = [CheckRow("demo", "made-up quantity", "mismatch", "1", "2")]
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: rows)
    rc = cli.main(["reproduce", "p2"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "[FAIL]" in out and "0/1 checks passed" in out
    assert "mismatch: demo: made-up quantity" in out


def test_reproduce_rejects_unknown_suite():
    with pytest.raises(SystemExit) as err:
        cli.main(["reproduce", "nonsense"])
    assert err.value.code == 2


def test_table_grid_and_csv(tmp_path, capsys):
    table = tmp_path / "grid.csv"
    rc = cli.main(["table", "--len", "1", "2", "--min-order", "4",
                   "--max-order", "5", "--csv", str(table)])
    assert rc == 0
    lines = table.read_text().splitlines()
    assert lines[0] == "ell,n,value,exact,witness_count"
    assert lines[1:] == ["1,4,3,True,1", "1,5,6,True,2",
                         "2,4,3,True,1", "2,5,3,True,1"]


def test_csv_note_on_unsupported_command(tmp_path, capsys):
    rc = cli.main(["check", "--construct", "half_graph:3", "--len", "2",
                   "--csv", str(tmp_path / "x.csv")])
    assert rc == 0
    assert "--csv applies to extremal and table only" in capsys.readouterr().err


def test_results_identical_across_workers_and_reruns(tmp_path, capsys):
    blobs = []
    for i, workers in enumerate(("1", "2", "1")):
        path = tmp_path / f"r{i}.json"
        assert cli.main(["extremal", "--len", "2", "--order", "6",
                         "--workers", workers, "--json", str(path)]) == 0
        blobs.append(json.loads(path.read_text()))
    capsys.readouterr()
    assert blobs[0]["results"] == blobs[1]["results"] == blobs[2]["results"]
    assert blobs[0]["params"] == blobs[1]["params"]


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["--version"])
    assert err.value.code == 0
