import json

import pytest

from andegen.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCheck:
    def test_unsolvable_exit_3(self, capsys):
        code, out, _ = run(capsys, "check", "--n", "2", "--t", "1", "--m", "3",
                           "--fiber", "irreducible")
        assert code == 3
        assert "solver      : unsolvable" in out
        assert "closed form : unsolvable" in out
        assert "PropertyLFails" in out

    def test_solvable_exit_0(self, capsys):
        code, out, _ = run(capsys, "check", "--n", "2", "--t", "2", "--m", "2",
                           "--fiber", "reducible", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["agree"] is True
        assert doc["verdict"]["witness"] == [1, 1, 0]
        assert doc["verdict"]["interpretation"] == "ObstructionCanVanish"

    @pytest.mark.parametrize("argv,flag", [
        (["--n", "0", "--t", "1", "--m", "2"], "--n"),
        (["--n", "2", "--t", "3", "--m", "2"], "--t"),
        (["--n", "2", "--t", "1", "--m", "1"], "--m"),
    ])
    def test_validation_exit_1(self, capsys, argv, flag):
        code, _, err = run(capsys, "check", *argv, "--fiber", "reducible")
        assert code == 1
        assert flag in err

    def test_unknown_flag_exit_1(self, capsys):
        code, _, _ = run(capsys, "check", "--n", "2", "--t", "1", "--m", "2",
                         "--fiber", "reducible", "--verbose")
        assert code == 1

    def test_missing_subcommand_exit_1(self, capsys):
        assert run(capsys)[0] == 1

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "check", "--n", "4", "--t", "2", "--m", "6",
                        "--fiber", "irreducible", "--format", "json")
        assert dump_json(json.loads(out)) == out


class TestScan:
    def test_csv_to_file(self, capsys, tmp_path):
        path = tmp_path / "scan.csv"
        code, _, _ = run(capsys, "scan", "--n-min", "1", "--n-max", "2",
                         "--m-min", "2", "--m-max", "3", "--out", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 13

    def test_json_stdout(self, capsys):
        code, out, _ = run(capsys, "scan", "--n-min", "1", "--n-max", "3",
                           "--m-min", "2", "--m-max", "4", "--fibers", "reducible",
                           "--format", "json", "--oracle-cap", "0")
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["configs"] == 6 * 3
        assert dump_json(doc) == out

    def test_bad_grid(self, capsys):
        assert run(capsys, "scan", "--n-min", "0", "--n-max", "2",
                   "--m-min", "2", "--m-max", "3")[0] == 1


def test_graph(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--n", "2", "--t", "2", "--fiber", "reducible")
    assert code == 0
    assert out.startswith("graph resolution {")
    assert 'E2 -- D [label="1"];' in out
    path = tmp_path / "g.dot"
    run(capsys, "graph", "--n", "2", "--t", "2", "--fiber", "reducible", "--out", str(path))
    assert path.read_text() == out


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_snf(capsys, tmp_path):
    mat = write_json(tmp_path, "a.json", {"rows": 2, "cols": 2, "entries": [2, 0, 0, 3]})
    code, out, _ = run(capsys, "snf", "--matrix", mat)
    assert code == 0
    assert json.loads(out)["D"] == {"rows": 2, "cols": 2, "entries": [1, 0, 0, 6]}


def test_snf_bad_matrix(capsys, tmp_path):
    mat = write_json(tmp_path, "a.json", {"rows": 2, "cols": 2, "entries": [1]})
    assert run(capsys, "snf", "--matrix", mat)[0] == 1


class TestSolve:
    def test_integer(self, capsys, tmp_path):
        mat = write_json(tmp_path, "a.json", {"rows": 2, "cols": 2, "entries": [1, 1, 0, 2]})
        vec = write_json(tmp_path, "c.json", [3, "4"])
        code, out, _ = run(capsys, "solve", "--matrix", mat, "--vector", vec)
        assert code == 0
        assert json.loads(out) == {"status": "solvable", "witness": [1, 2]}

    def test_mod_unsolvable(self, capsys, tmp_path):
        mat = write_json(tmp_path, "a.json", {"rows": 1, "cols": 1, "entries": [2]})
        vec = write_json(tmp_path, "c.json", [1])
        code, out, _ = run(capsys, "solve", "--matrix", mat, "--vector", vec, "--mod", "4")
        assert code == 3
        assert json.loads(out)["certificate"] == {"diag": 2, "rhs": 1, "modulus": 4}

    def test_big_integers(self, capsys, tmp_path):
        big = 3 * 10 ** 40
        mat = write_json(tmp_path, "a.json", {"rows": 1, "cols": 1, "entries": ["3"]})
        vec = write_json(tmp_path, "c.json", [str(big)])
        code, out, _ = run(capsys, "solve", "--matrix", mat, "--vector", vec)
        assert code == 0
        assert json.loads(out)["witness"] == [10 ** 40]

    def test_length_mismatch(self, capsys, tmp_path):
        mat = write_json(tmp_path, "a.json", {"rows": 2, "cols": 1, "entries": [1, 2]})
        vec = write_json(tmp_path, "c.json", [1])
        assert run(capsys, "solve", "--matrix", mat, "--vector", vec)[0] == 1
