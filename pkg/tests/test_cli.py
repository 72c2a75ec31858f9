import csv
import io
import json
from fractions import Fraction

import pytest

from fraccolor import cli
from fraccolor.dimacs import parse_dimacs
from fraccolor.lp import rational_from_json


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestGen:
    def test_complete(self, capsys):
        code, out, _ = run(capsys, "gen", "complete:4")
        assert code == 0 and "p edge 4 6" in out.splitlines()

    def test_kneser(self, capsys):
        code, out, _ = run(capsys, "gen", "kneser:5:2")
        assert code == 0 and parse_dimacs(out).m == 15 and "p edge 10 15" in out

    def test_bad_cycle(self, capsys):
        code, _, err = run(capsys, "gen", "cycle:2")
        assert code == 2 and "n >= 3" in err

    def test_malformed(self, capsys):
        assert run(capsys, "gen", "wheel:5")[0] == 2
        assert run(capsys, "gen", "complete:x")[0] == 2

    def test_mycielski_of_file(self, capsys, tmp_path):
        path = tmp_path / "c5.col"
        assert run(capsys, "gen", "cycle:5", "-o", str(path))[0] == 0
        code, out, _ = run(capsys, "gen", f"mycielski:{path}")
        g = parse_dimacs(out)
        assert code == 0 and (g.n, g.m) == (11, 20)
        assert run(capsys, "gen", "mycielski:cycle:5")[1] == out


class TestChif:
    @pytest.mark.parametrize("spec,value", [("cycle:5", "5/2"), ("complete:6", "6"), ("edgeless:4", "1")])
    def test_values(self, capsys, spec, value):
        code, out, _ = run(capsys, "chif", "--gen", spec)
        data = json.loads(out)
        assert code == 0 and data["verified"]
        assert rational_from_json(data["value"]) == Fraction(value)

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "g.col"
        path.write_text("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        code, out, _ = run(capsys, "chif", "--input", str(path))
        assert code == 0 and rational_from_json(json.loads(out)["value"]) == 3

    def test_cap(self, capsys):
        code, _, err = run(capsys, "chif", "--gen", "complete:9", "--max-n", "8")
        assert code == 3 and "cap" in err

    def test_needs_one_source(self, capsys, tmp_path):
        assert run(capsys, "chif")[0] == 2
        assert run(capsys, "chif", "--gen", "cycle:5", "--input", "x.col")[0] == 2


class TestVerifyLemmas:
    def test_c5_passes(self, capsys):
        code, out, _ = run(capsys, "verify-lemmas", "--gen", "cycle:5", "--trials", "50")
        report = json.loads(out)
        assert code == 0 and report["passed"]
        equiv = report["checks"][0]
        assert equiv["instances"] == 32 * 5 and equiv["violations"] == 0

    def test_small_random_graph(self, capsys, tmp_path):
        path = tmp_path / "g.col"
        path.write_text("p edge 8 10\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 5 6\ne 6 7\ne 7 8\ne 8 6\ne 1 7\n")
        code, out, _ = run(capsys, "verify-lemmas", "--input", str(path), "--trials", "40", "--seed", "3")
        assert code == 0 and all(c["passed"] for c in json.loads(out)["checks"])

    def test_corrupted_certificate(self, capsys, tmp_path):
        code, out, _ = run(capsys, "chif", "--gen", "cycle:5")
        cert = json.loads(out)
        cert["value"] = {"num": "251", "den": "100"}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(cert))
        code, out, _ = run(capsys, "verify-lemmas", "--gen", "cycle:5", "--certificate", str(path))
        report = json.loads(out)
        assert code == 1 and not report["passed"] and report["certificate_problems"]


class TestMc:
    def test_k8_corollary(self, capsys):
        code, out, _ = run(capsys, "mc", "theorem", "--gen", "complete:8", "--p", "1/2",
                           "--corollary", "--trials", "200", "--seed", "4")
        report = json.loads(out)
        assert code == 0 and report["verdict"] == "consistent"
        assert rational_from_json(report["bound"]["lo"]) == Fraction(15, 16)

    @pytest.mark.parametrize("mode", ["theorem", "lemma5"])
    def test_vacuous_flag(self, capsys, mode):
        code, out, _ = run(capsys, "mc", mode, "--gen", "cycle:5", "--p", "1/4", "--c", "1/2", "--trials", "5")
        report = json.loads(out)
        assert code == 0 and report["verdict"] == "vacuous"
        assert any("vacuous bound" in n for n in report["notes"])

    def test_usage_errors(self, capsys):
        base = ("mc", "theorem", "--gen", "cycle:5")
        assert run(capsys, *base, "--p", "1/2", "--c", "1", "--trials", "0")[0] == 2
        assert run(capsys, *base, "--p", "0.5", "--c", "1")[0] == 2
        assert run(capsys, *base, "--p", "1", "--c", "1")[0] == 2
        assert run(capsys, *base, "--p", "1/2")[0] == 2
        assert run(capsys, "mc", "lemma5", "--gen", "cycle:5", "--p", "1/2", "--corollary")[0] == 2

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "mc", "theorem", "--gen", "cycle:7", "--p", "1/2", "--c", "2",
                           "--trials", "30", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 1 and rows[0]["trials"] == "30" and rows[0]["t"] == "7/3"

    def test_byte_identical_reruns(self, capsys):
        argv = ("mc", "lemma5", "--gen", "petersen", "--p", "1/2", "--c", "1", "--trials", "100", "--seed", "17")
        first = run(capsys, *argv)
        assert first == run(capsys, *argv)
        argv = ("mc", "theorem", "--gen", "grotzsch", "--p", "3/4", "--c", "1", "--trials", "30", "--seed", "2")
        assert run(capsys, *argv) == run(capsys, *argv)
        assert run(capsys, "verify-lemmas", "--gen", "petersen", "--trials", "30") == run(
            capsys, "verify-lemmas", "--gen", "petersen", "--trials", "30"
        )


class TestBounds:
    def test_corollary_value(self, capsys):
        code, out, _ = run(capsys, "bounds", "--t", "4", "--p", "1/2")
        report = json.loads(out)
        assert code == 0
        assert rational_from_json(report["corollary_probability"]) == Fraction(7, 8)

    def test_inapplicable(self, capsys):
        code, out, err = run(capsys, "bounds", "--t", "3/2", "--p", "1/2")
        report = json.loads(out)
        assert code == 0 and report["theorem_applicable"] is False
        assert "threshold" in report and "inapplicable" in err

    def test_p_one(self, capsys):
        assert run(capsys, "bounds", "--t", "4", "--p", "1")[0] == 2
