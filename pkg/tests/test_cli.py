import json

import pytest

from nakayama import harness, validate
from nakayama.cli import algebra_from_dict, main


@pytest.fixture
def l1_file(tmp_path):
    path = tmp_path / "l1.json"
    path.write_text('{"n": 5, "relations": [[2,2],[3,2],[5,3]]}')
    return str(path)


@pytest.fixture
def l2_file(tmp_path):
    path = tmp_path / "l2.json"
    path.write_text('{"n": 5, "relations": [[1,3],[2,4],[4,3],[5,3]]}')
    return str(path)


@pytest.fixture
def l3_file(tmp_path):
    path = tmp_path / "l3.json"
    path.write_text('{"kupisch": [2, 2, 2, 2]}')
    return str(path)


def test_analyze_lambda1_text(l1_file, capsys):
    assert main(["analyze", l1_file]) == 0
    out = capsys.readouterr().out
    assert "weight: 1" in out
    assert "euler: 1" in out
    assert "gldim: finite" in out


def test_analyze_lambda2_text(l2_file, capsys):
    assert main(["analyze", l2_file]) == 0
    out = capsys.readouterr().out
    assert "weight: 2" in out
    assert "euler: 0" in out
    assert "gldim: infinite" in out
    assert "hc_euler: 1" in out


def test_analyze_is_deterministic(l2_file, capsys):
    main(["analyze", l2_file, "--format", "json"])
    first = capsys.readouterr().out
    main(["analyze", l2_file, "--format", "json"])
    assert capsys.readouterr().out == first


def test_analyze_json_round_trips(l1_file, capsys):
    assert main(["analyze", l1_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    algebra = algebra_from_dict(data["algebra"])
    assert algebra == validate(5, [(2, 2), (3, 2), (5, 3)])
    assert data["checks"]["A"] is True


def test_kupisch_input_form(l3_file, capsys):
    assert main(["analyze", l3_file]) == 0
    out = capsys.readouterr().out
    assert "components: 2" in out
    assert "gldim: infinite" in out


def test_quiver_dot(l1_file, tmp_path, capsys):
    dot_path = tmp_path / "rq.dot"
    assert main(["quiver", l1_file, "--dot", str(dot_path)]) == 0
    text = dot_path.read_text()
    assert "digraph resolution_quiver" in text
    assert "3 -> 5 [style=bold];" in text


def test_complex_json(l2_file, capsys):
    assert main(["complex", l2_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"euler": 0, "f_vector": [4, 5, 1], "reduced_betti": [0, 1], "empty": False}


def test_complex_off_style_dump(l2_file, capsys):
    assert main(["complex", l2_file, "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("OFF\n4 6 0\n")


def test_hc_report(l3_file, capsys):
    assert main(["hc", l3_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hc_dims"] == [0, 0, 0, 1]
    assert data["basis_sizes"] == [0, 0, 0, 1]
    assert data["hc_euler"] == -1


def test_gldim(l1_file, capsys):
    assert main(["gldim", l1_file]) == 0
    assert capsys.readouterr().out == "gldim: finite (4)\n"


def test_unamalgamate_lambda2(l2_file, tmp_path, capsys):
    out_path = tmp_path / "step.json"
    assert main(["unamalgamate", l2_file, "--leaf", "5", "--out", str(out_path)]) == 0
    data = json.loads(out_path.read_text())
    assert data["leaf"] == 5
    assert data["raw_relations"] == [[1, 3], [2, 3], [4, 2], [4, 3]]
    assert data["output"] == {"n": 4, "relations": [[1, 3], [2, 3], [4, 2]]}
    assert data["checks"] == {"quiver": True, "weight": True, "betti": True, "gldim": True}


def test_unamalgamate_not_a_leaf(l3_file, capsys):
    assert main(["unamalgamate", l3_file, "--leaf", "1"]) == 1
    err = capsys.readouterr().err
    assert "error[not-a-leaf]" in err


def test_reduce(l1_file, capsys):
    assert main(["reduce", l1_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["steps"]) == 3
    assert data["semisimple"] is True
    assert data["terminal_kupisch"] == [1, 1]


def test_bad_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["analyze", str(path)]) == 1
    assert "error[bad-json]" in capsys.readouterr().err


def test_bad_schema(tmp_path, capsys):
    path = tmp_path / "schema.json"
    path.write_text('{"n": 5, "relations": [[2,2]], "kupisch": [1,1]}')
    assert main(["analyze", str(path)]) == 1
    assert "error[bad-schema]" in capsys.readouterr().err


def test_invalid_algebra(tmp_path, capsys):
    path = tmp_path / "dup.json"
    path.write_text('{"n": 5, "relations": [[2,2],[2,3]]}')
    assert main(["analyze", str(path)]) == 1
    assert "error[duplicate-start]" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["analyze", "/nonexistent/x.json"]) == 1
    assert "error[bad-file]" in capsys.readouterr().err


def test_sweep_writes_csv_and_json(tmp_path, capsys):
    base = str(tmp_path / "sweep")
    assert main(["sweep", "--n-max", "3", "--c-max", "3", "--out", base]) == 0
    csv_lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert csv_lines[0].startswith("n,kupisch,")
    data = json.loads((tmp_path / "sweep.json").read_text())
    assert data["ok"] is True
    assert "wrote" in capsys.readouterr().out


def test_sweep_stdout_json(capsys):
    assert main(["sweep", "--n-max", "2", "--c-max", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["algebra_count"] == 4


def test_counterexample_exit_code(l1_file, monkeypatch, capsys):
    real_verify = harness.verify

    def broken_verify(algebra, checks=harness.THEOREM_CHECKS):
        verdict = real_verify(algebra, checks)
        verdict.checks["A"] = False
        return verdict

    monkeypatch.setattr(harness, "verify", broken_verify)
    assert main(["analyze", l1_file]) == 2
    assert "A=FAIL" in capsys.readouterr().out
    assert main(["sweep", "--n-max", "2", "--c-max", "2"]) == 2
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is False and data["counterexamples"]


def test_sweep_honors_thread_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("NAKAYAMA_THREADS", "2")
    assert harness.default_workers() == 2
    base = str(tmp_path / "par")
    assert main(["sweep", "--n-max", "4", "--c-max", "3", "--out", base]) == 0
    monkeypatch.setenv("NAKAYAMA_THREADS", "1")
    base2 = str(tmp_path / "ser")
    assert main(["sweep", "--n-max", "4", "--c-max", "3", "--out", base2]) == 0
    assert (tmp_path / "par.csv").read_text() == (tmp_path / "ser.csv").read_text()
    monkeypatch.setenv("NAKAYAMA_THREADS", "junk")
    assert harness.default_workers() == 1
