import json
from pathlib import Path

import pytest

from cudlab import cli
from cudlab import oracle

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestSeq:
    def test_gcud(self, capsys):
        code, out = run(capsys, "seq", "gcud", "--n", "9")
        assert code == 0
        values = [int(line.split()[1]) for line in out.strip().splitlines()]
        assert values == [1, 2, 6, 21, 97, 491, 2989, 19756, 148444]

    def test_euler(self, capsys):
        code, out = run(capsys, "seq", "euler", "--n", "7")
        assert code == 0
        assert [int(l.split()[1]) for l in out.strip().splitlines()] == [1, 1, 1, 2, 5, 16, 61, 272]
        assert out.startswith("0 1\n")  # b-file style: index then value

    def test_cud_derangements(self, capsys):
        code, out = run(capsys, "seq", "cud-derangements", "--n", "9")
        assert code == 0
        assert [int(l.split()[1]) for l in out.strip().splitlines()] == [
            0, 1, 1, 5, 15, 71, 341, 1945, 12135,
        ]

    def test_marked_sequence_json(self, capsys):
        code, out = run(capsys, "seq", "cud-cycles", "--n", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["values"][2] == {"t^1": 1, "t^2": 1}

    def test_unknown_id_exits_2(self, capsys):
        assert cli.main(["seq", "nope", "--n", "3"]) == 2

    def test_cap_exceeded_exits_3(self, capsys):
        assert cli.main(["seq", "euler", "--n", "30"]) == 3
        assert cli.main(["seq", "euler", "--n", "30", "--cap", "32"]) == 0

    def test_deterministic(self, capsys):
        _, first = run(capsys, "seq", "gcud", "--n", "8", "--format", "json")
        _, second = run(capsys, "seq", "gcud", "--n", "8", "--format", "json")
        assert first == second


class TestEnumerate:
    def test_cud_table(self, capsys):
        code, out = run(capsys, "enumerate", "cud", "--n", "2", "--stats", "c")
        assert code == 0
        assert "1 1" in out and "2 1" in out and "total 2" in out

    def test_st_table_json(self, capsys):
        code, out = run(
            capsys, "enumerate", "all", "--n", "3", "--stats", "st", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["rows"] == [
            {"st": 1, "count": 2},
            {"st": 2, "count": 3},
            {"st": 3, "count": 1},
        ]

    def test_csv(self, capsys):
        code, out = run(
            capsys, "enumerate", "cud", "--n", "4", "--stats", "c_o,c_e", "--format", "csv"
        )
        assert out == (GOLDEN / "cud4_odd_even.csv").read_text(encoding="ascii")

    def test_joint_ud_table(self, capsys):
        code, out = run(
            capsys, "enumerate", "ud", "--n", "4", "--stats", "lrm,st", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["total"] == 5
        # marginals match the marked series polynomials at n=4
        from cudlab.catalog import catalog_series
        from cudlab.series import MPoly

        lrm_poly = MPoly.zero()
        st_poly = MPoly.zero()
        t = MPoly.marker("t")
        for row in payload["rows"]:
            lrm_poly = lrm_poly + row["count"] * t ** row["lrm"]
            st_poly = st_poly + row["count"] * t ** row["st"]
        assert lrm_poly == catalog_series("ud-lrm", 4).egf_term(4)
        assert st_poly == catalog_series("ud-st", 4).egf_term(4)

    def test_bad_family(self, capsys):
        assert cli.main(["enumerate", "wat", "--n", "2"]) == 2

    def test_bad_stat(self, capsys):
        assert cli.main(["enumerate", "cud", "--n", "2", "--stats", "zork"]) == 2

    def test_cap_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CUDLAB_CAP", "3")
        assert cli.main(["enumerate", "all", "--n", "4", "--stats", "c"]) == 3
        assert cli.main(["enumerate", "all", "--n", "4", "--stats", "c", "--cap", "5"]) == 0


class TestMap:
    CASES = [
        (["map", "jbij", "3 5 1 8 2 7 4 9 6"], "(1,4)(2,8,3,6)(5)(7)"),
        (["map", "jbij-inv", "(1,4)(2,8,3,6)(5)(7)"], "3 5 1 8 2 7 4 9 6"),
        (["map", "h", "4 8 1 2 7 6 3 5"], "5 3 6 2 7 1 8 4"),
        (["map", "ell", "8 6 7 4 2 5 1 3", "--bits", "10011"], "5 7 2 4 1 8 6 9 3"),
        (["map", "ell-inv", "5 7 2 4 1 8 6 9 3"], "8 6 7 4 2 5 1 3 / 10011"),
        (["map", "g", "4 7 2 6 1 5 3 8"], "(1,5,3,8)(2,6)(4,7)"),
        (["map", "g-inv", "(4,7)(2,6)(1,5,3,8)"], "4 7 2 6 1 5 3 8"),
        (["map", "f", "4 7 1 9 3 8 5 6 2"], "(1,7,4)(2)(3,8,6,9,5)"),
        (["map", "f-inv", "(1,8,5,7,2)(3,6,4)"], "2 7 5 8 1 4 3 6"),
        (["map", "phi", "6 9 3 8 5 12 1 10 2 11 4 7"], "(1,10,3)(2,7,4,11)(5,8)(6)(9)"),
        (["map", "phi-inv", "(5,8)(2,7,4,11)(1,10,3)(6)(9)"], "6 9 3 8 5 12 1 10 2 11 4 7"),
        (["map", "foata", "(1,4)(2,8,3,6)(5)(7)"], "7 5 2 8 3 6 1 4"),
        (["map", "foata", "(1,4)(2,8,3,6)(5)(7)", "--order", "asc"], "1 4 2 8 3 6 5 7"),
    ]

    @pytest.mark.parametrize("argv,expected", CASES)
    def test_worked_examples(self, capsys, argv, expected):
        code, out = run(capsys, *argv)
        assert code == 0
        assert out.strip() == expected

    def test_pattern_flag(self, capsys):
        code, out = run(
            capsys, "map", "h", "4 8 1 2 7 6 3 5", "--pattern", "min,..."
        )
        assert code == 0
        assert out.strip() == "5 3 6 7 2 1 8 4"  # reversal of the input word

    def test_domain_error_exits_2(self, capsys):
        assert cli.main(["map", "jbij", "2 1 3"]) == 2
        assert cli.main(["map", "ell", "2 1"]) == 2  # missing --bits
        assert cli.main(["map", "nope", "1 2"]) == 2


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out = run(capsys, "verify", "--n", "2")
        assert code == 0
        assert "passed" in out and "FAIL" not in out

    def test_json_report(self, capsys):
        code, out = run(capsys, "verify", "--n", "3", "--json")
        assert code == 0
        report = json.loads(out)
        assert len(report) >= 40
        assert all(entry["pass"] for entry in report)
        names = {entry["check"] for entry in report}
        assert "cud-count" in names and "cf-convergent" in names

    def test_failure_exit_code(self, capsys, monkeypatch):
        fake = [{"check": "x", "n": 1, "expected": 1, "actual": 2, "pass": False}]
        monkeypatch.setattr(oracle, "verify_all", lambda n: fake)
        code, out = run(capsys, "verify", "--n", "2")
        assert code == 1
        assert "FAIL" in out

    def test_cap_exceeded_exits_3(self, capsys):
        assert cli.main(["verify", "--n", "12"]) == 3


class TestExpect:
    def test_exact(self, capsys):
        code, out = run(capsys, "expect", "ud-cycles", "--n", "3", "--exact")
        assert code == 0
        assert out.startswith("5/3")

    def test_exact_n1(self, capsys):
        code, out = run(capsys, "expect", "ud-cycles", "--n", "1", "--exact")
        assert out.startswith("1 ")

    def test_float_at_40(self, capsys):
        code, out = run(capsys, "expect", "ud-cycles", "--n", "40", "--exact", "--float")
        assert code == 0
        assert abs(float(out.strip()) - 1.841817641) < 1e-9

    def test_montecarlo_within_four_sigma(self, capsys):
        # deterministic given the seed; 4-sigma band per the contract
        code, out = run(
            capsys,
            "expect",
            "ud-cycles",
            "--n",
            "6",
            "--montecarlo",
            "--samples",
            "20000",
            "--seed",
            "0",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        from fractions import Fraction

        exact = float(Fraction(payload["exact"]))
        assert abs(payload["estimate"] - exact) < 4 * payload["stderr"]

    def test_montecarlo_seed_reproducible(self, capsys):
        args = ("expect", "ud-cycles", "--n", "5", "--montecarlo", "--samples", "2000")
        _, first = run(capsys, *args, "--seed", "7")
        _, second = run(capsys, *args, "--seed", "7")
        _, third = run(capsys, *args, "--seed", "8")
        assert first == second
        assert first != third

    def test_unknown_target(self, capsys):
        assert cli.main(["expect", "nope", "--n", "3"]) == 2


class TestDiagram:
    def test_golden_output(self, capsys, tmp_path):
        out_path = tmp_path / "fig.svg"
        code, out = run(capsys, "diagram", "(1,4,2,6,3,7)(5,8)", "--out", str(out_path))
        assert code == 0
        assert out.strip() == "red: 1-4 2-6 3-7 5-8 / blue: 1-7 2-4 3-6 5-8"
        assert out_path.read_text(encoding="ascii") == (
            GOLDEN / "example_arc_diagram.svg"
        ).read_text(encoding="ascii")

    def test_tiny(self, capsys, tmp_path):
        out_path = tmp_path / "tiny.svg"
        code, _ = run(capsys, "diagram", "(1,2)", "--out", str(out_path))
        assert code == 0
        assert out_path.exists()

    def test_odd_cycle_exits_2(self, capsys, tmp_path):
        code = cli.main(["diagram", "(1,3,2)", "--out", str(tmp_path / "x.svg")])
        assert code == 2

    def test_missing_out_exits_2(self, capsys):
        assert cli.main(["diagram", "(1,2)"]) == 2


class TestOutputFile:
    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "seq.txt"
        code, out = run(capsys, "seq", "euler", "--n", "5", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").splitlines()[0] == "0 1"
