import json

import pytest

from arithcorr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_m3_bits(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "3")
        assert code == 0
        assert out == "1001011\n"

    def test_m2_bits(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "2")
        assert code == 0
        assert out == "011\n"

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "2", "--format", "csv")
        assert code == 0
        assert out == "lambda,bit\n0,0\n1,1\n2,1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "3", "--json")
        doc = json.loads(out)
        assert (code, doc["bits"], doc["n"], doc["poly"]) == (0, "1001011", 7, "3,1,0")

    def test_degree_mismatch_exits_2(self, capsys):
        code, _, err = run(capsys, "gen", "--m", "4", "--poly", "3,1,0")
        assert code == 2
        assert "DegreeMismatch" in err

    def test_reducible_poly_exits_2(self, capsys):
        code, _, err = run(capsys, "gen", "--m", "4", "--poly", "4,2,0")
        assert code == 2
        assert "NotIrreducible" in err


class TestAcorr:
    def test_single_tau_all_methods(self, capsys):
        code, out, _ = run(capsys, "acorr", "--m", "3", "--tau", "5", "--method", "all")
        assert code == 0
        assert out == "5,3,3,3\n"

    def test_all_taus_direct(self, capsys):
        code, out, _ = run(capsys, "acorr", "--m", "3", "--all", "--method", "direct")
        assert code == 0
        assert out == "1,-1\n2,-3\n3,1\n4,-1\n5,3\n6,1\n"

    def test_tau_zero_exits_2(self, capsys):
        code, _, err = run(capsys, "acorr", "--m", "3", "--tau", "0")
        assert code == 2
        assert "TauOutOfRange" in err

    def test_threads_same_output(self, capsys):
        _, single, _ = run(capsys, "acorr", "--m", "5", "--all", "--method", "all")
        code, threaded, _ = run(
            capsys, "acorr", "--m", "5", "--all", "--method", "all", "--threads", "4"
        )
        assert code == 0
        assert threaded == single

    def test_json(self, capsys):
        code, out, _ = run(capsys, "acorr", "--m", "3", "--tau", "1", "--method", "all", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["status"] == "pass"
        assert doc["rows"] == [{"tau": 1, "direct": -1, "blocks": -1, "closed": -1}]


class TestDist:
    def test_m3_check(self, capsys):
        code, out, _ = run(capsys, "dist", "--m", "3", "--check")
        assert code == 0
        assert out == "-3,1\n-1,2\n1,2\n3,1\ncheck,pass\n"

    def test_m4_check(self, capsys):
        code, out, _ = run(capsys, "dist", "--m", "4", "--check")
        assert code == 0
        assert out.endswith("check,pass\n")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "dist", "--m", "4", "--check", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["check"] == "pass"
        assert doc["distribution"]["7"] == 1


class TestVerify:
    def test_small_range_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--m-range", "2..5")
        assert code == 0
        assert out.endswith("status,pass\n")

    def test_all_polys(self, capsys):
        code, out, _ = run(capsys, "verify", "--m-range", "3..4", "--polys", "all")
        assert code == 0
        # two primitive polynomials exist for each of m=3 and m=4
        assert out.count("three_way") == 4

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--m-range", "2..3", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["status"] == "pass"
        assert doc["mismatches"] == []

    @pytest.mark.parametrize("bad", ["5", "5..", "a..b", "1..3", "9..8", "2..17"])
    def test_malformed_range_exits_2(self, capsys, bad):
        code, _, err = run(capsys, "verify", "--m-range", bad)
        assert code == 2
        assert "error" in err


class TestEnvPolyTable:
    def test_overrides_default(self, capsys, tmp_path, monkeypatch):
        table = tmp_path / "polys.txt"
        # x^3 + x^2 + 1, the other degree-3 primitive polynomial
        table.write_text("# alternates\n3,3,2,0\n")
        monkeypatch.setenv("ARITHCORR_POLY_TABLE", str(table))
        code, out, _ = run(capsys, "gen", "--m", "3")
        assert code == 0
        from arithcorr import m_sequence, make_field

        assert out == f"{m_sequence(make_field(3, 0b1101))}\n"
        assert out != "1001011\n"

    def test_explicit_poly_wins(self, capsys, tmp_path, monkeypatch):
        table = tmp_path / "polys.txt"
        table.write_text("3,3,2,0\n")
        monkeypatch.setenv("ARITHCORR_POLY_TABLE", str(table))
        code, out, _ = run(capsys, "gen", "--m", "3", "--poly", "3,1,0")
        assert code == 0
        assert out == "1001011\n"


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "dist", "--m", "6", "--check")
    _, second, _ = run(capsys, "dist", "--m", "6", "--check")
    assert first == second


def test_missing_subcommand_exits_2(capsys):
    assert main([]) == 2
