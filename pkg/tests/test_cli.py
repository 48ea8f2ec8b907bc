import json
import math

import numpy as np
import pytest

from circxi.cli import main


def write_csv(path, x, y, header=None):
    lines = []
    if header:
        lines.append(",".join(header))
    lines += [f"{a},{b}" for a, b in zip(x, y)]
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def rotation_csv(tmp_path, rng):
    x = rng.uniform(0, 2 * math.pi, 60)
    y = np.mod(x + math.pi / 3, 2 * math.pi)
    return write_csv(tmp_path / "rot.csv", x, y)


class TestXi:
    def test_rotation_plain(self, rotation_csv, capsys):
        assert main(["xi", "--input", rotation_csv]) == 0
        out = capsys.readouterr().out
        assert "corrected   1.000000" in out

    def test_json_output(self, rotation_csv, capsys):
        assert main(["xi", "--input", rotation_csv, "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["corrected"] == 1.0
        assert doc["n"] == 60
        assert doc["direction"] == "x_to_y"

    def test_unit_roundtrip(self, tmp_path, rng, capsys):
        x = rng.uniform(0, 1, 40)
        y = rng.uniform(0, 1, 40)
        p_turns = write_csv(tmp_path / "t.csv", x, y)
        p_deg = write_csv(tmp_path / "d.csv", 360 * x, 360 * y)
        main(["xi", "--input", p_turns, "--unit", "turns", "--format", "json"])
        a = json.loads(capsys.readouterr().out)
        main(["xi", "--input", p_deg, "--unit", "degrees", "--format", "json"])
        b = json.loads(capsys.readouterr().out)
        assert a["raw"] == pytest.approx(b["raw"], abs=1e-12)

    def test_named_columns(self, tmp_path, rng, capsys):
        x = rng.uniform(0, 1, 30)
        y = rng.uniform(0, 1, 30)
        path = write_csv(tmp_path / "h.csv",
                         ["%.12f" % v for v in x], ["%.12f" % v for v in y],
                         header=["wind", "wave"])
        code = main(["xi", "--input", path, "--header", "--columns", "wave", "wind",
                     "--unit", "turns", "--format", "json"])
        assert code == 0
        swapped = json.loads(capsys.readouterr().out)
        main(["xi", "--input", path, "--header", "--unit", "turns",
              "--direction", "yx", "--format", "json"])
        direct = json.loads(capsys.readouterr().out)
        assert swapped["raw"] == pytest.approx(direct["raw"], abs=1e-12)

    def test_ties_rejected_exit_3(self, tmp_path, capsys):
        path = write_csv(tmp_path / "tie.csv", [0.1, 0.1, 0.3, 0.7],
                         [0.2, 0.4, 0.6, 0.8])
        assert main(["xi", "--input", path, "--unit", "turns"]) == 3
        assert "tie" in capsys.readouterr().err.lower()

    def test_ties_jitter_succeeds(self, tmp_path, capsys):
        path = write_csv(tmp_path / "tie.csv", [0.1, 0.1, 0.3, 0.7],
                         [0.2, 0.4, 0.6, 0.8])
        code = main(["xi", "--input", path, "--unit", "turns", "--ties", "jitter",
                     "--seed", "3", "--format", "json"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["ties_applied"] is True

    def test_non_numeric_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("0.1,0.2\noops,0.4\n0.5,0.6\n")
        assert main(["xi", "--input", str(path)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_too_small_exit_4(self, tmp_path, capsys):
        path = write_csv(tmp_path / "one.csv", [0.1], [0.2])
        assert main(["xi", "--input", path]) == 4
        capsys.readouterr()

    def test_missing_file_exit_2(self, tmp_path):
        assert main(["xi", "--input", str(tmp_path / "nope.csv")]) == 2

    def test_stdin(self, monkeypatch, capsys):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("0.1,0.2\n0.4,0.5\n0.8,0.9\n0.9,0.95\n"))
        assert main(["xi", "--input", "-", "--unit", "turns"]) == 0
        assert "raw" in capsys.readouterr().out


class TestTest:
    def test_normal_rejects_rotation(self, rotation_csv, capsys):
        assert main(["test", "--input", rotation_csv, "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["p_value"] < 1e-10
        assert doc["decision"] == "reject"

    def test_permutation_deterministic(self, rotation_csv, capsys):
        args = ["test", "--input", rotation_csv, "--method", "perm",
                "--permutations", "199", "--seed", "42", "--format", "json"]
        main(args)
        a = json.loads(capsys.readouterr().out)
        main(args)
        b = json.loads(capsys.readouterr().out)
        assert a == b
        assert a["p_value"] == pytest.approx(1 / 200)
        assert a["permutations_used"] == 199


class TestPopulation:
    def test_wrapped_normal(self, capsys):
        code = main(["population", "--kind", "wrapped-normal", "--sigma-rad", "0.5",
                     "--format", "json"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == pytest.approx(0.5373, abs=1e-3)
        assert doc["tail_bound"] <= 1e-8

    def test_missing_parameter_exit_2(self, capsys):
        assert main(["population", "--kind", "von-mises"]) == 2
        capsys.readouterr()

    def test_none_is_one(self, capsys):
        main(["population", "--kind", "none", "--tol", "1e-6", "--format", "json"])
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(1.0, abs=1e-6)


class TestCutscan:
    def test_gaps_mode_reports_cut_average(self, rotation_csv, capsys):
        code = main(["cutscan", "--input", rotation_csv, "--grid", "gaps",
                     "--format", "json"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["cuts"] == 60 * 60
        assert doc["cut_average"] == pytest.approx(doc["raw"], abs=1e-12)

    def test_angle_grid_size(self, rotation_csv, capsys):
        main(["cutscan", "--input", rotation_csv, "--grid", "4", "--format", "json"])
        doc = json.loads(capsys.readouterr().out)
        assert doc["cuts"] == 16
        assert doc["min"] <= doc["mean"] <= doc["max"]

    def test_bad_grid_exit_2(self, rotation_csv, capsys):
        assert main(["cutscan", "--input", rotation_csv, "--grid", "zero"]) == 2
        capsys.readouterr()


class TestSimulate:
    def test_table3_smoke_deterministic(self, tmp_path, capsys):
        out1 = tmp_path / "a.tsv"
        out2 = tmp_path / "b.tsv"
        args = ["simulate", "--table", "3", "--replicates", "5",
                "--permutations", "19", "--seed", "2"]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()
        lines = out1.read_text().strip().split("\n")
        assert len(lines) == 1 + 4  # header + n in {30, 50, 100, 200}

    def test_stdout_and_curves(self, tmp_path, capsys):
        curves = tmp_path / "curves.tsv"
        out = tmp_path / "t4.tsv"
        code = main(["simulate", "--table", "4", "--replicates", "2",
                     "--permutations", "9", "--seed", "1",
                     "--out", str(out), "--curves-out", str(curves)])
        assert code == 0
        capsys.readouterr()
        assert curves.read_text().startswith("model\tsigma\tn\tmeasure\tmean")

    def test_unwritable_out_exit_5(self, tmp_path, capsys):
        bad = tmp_path / "no" / "such" / "dir" / "x.tsv"
        code = main(["simulate", "--table", "3", "--replicates", "2",
                     "--permutations", "9", "--out", str(bad)])
        assert code == 5
        capsys.readouterr()
