import json

import pytest

from twoline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_known_values(self, capsys):
        assert run(capsys, "count", "a", "--k", "2", "--n", "4") == (0, "4\n", "")
        assert run(capsys, "count", "r", "--n", "3") == (0, "5\n", "")
        assert run(capsys, "count", "a", "--k", "1", "--n", "2") == (0, "0\n", "")

    def test_other_families(self, capsys):
        assert run(capsys, "count", "b", "--k", "4", "--n", "4")[1] == "11\n"
        assert run(capsys, "count", "z", "--n", "8", "--k", "3")[1] == "10\n"
        assert run(capsys, "count", "d", "--k", "3", "--n", "5")[1] == "10\n"
        assert run(capsys, "count", "m", "--k", "3", "--n", "1")[1] == "4\n"
        assert run(capsys, "count", "s", "--n", "3", "--k", "3")[1] == "5\n"

    def test_missing_index_is_usage_error(self, capsys):
        code, out, err = run(capsys, "count", "a", "--k", "2")
        assert code == 2 and out == "" and err

    def test_bad_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "q", "--k", "1", "--n", "1"])
        assert exc.value.code == 2


class TestTable:
    def test_z_csv(self, capsys):
        code, out, _ = run(capsys, "table", "z", "--max", "4", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["1", "1,1", "1,1,1", "1,2,1,1", "1,2,2,2,1"]

    def test_a_single_entry(self, capsys):
        assert run(capsys, "table", "a", "--max", "0")[1] == "1\n"

    def test_b_central_value(self, capsys):
        _, out, _ = run(capsys, "table", "b", "--max", "8", "--format", "csv")
        last = out.splitlines()[-1].split(",")
        assert last[len(last) // 2] == "11"

    def test_bfile_layout(self, capsys):
        _, out, _ = run(capsys, "table", "z", "--max", "3", "--format", "bfile")
        assert out.splitlines() == [
            "0 1",
            "1 1",
            "2 1",
            "3 1",
            "4 1",
            "5 1",
            "6 1",
            "7 2",
            "8 1",
            "9 1",
        ]

    def test_json(self, capsys):
        _, out, _ = run(capsys, "table", "a", "--max", "2", "--format", "json")
        data = json.loads(out)
        assert data["rows"] == [[1], [1, 1, 1], [1, 2, 2, 2, 1]]

    def test_unwritable_output_is_io_error(self, capsys):
        code, _, err = run(
            capsys, "table", "z", "--max", "2", "--out", "/nonexistent-dir/t.txt"
        )
        assert code == 3 and err


class TestEnumerate:
    def test_s012(self, capsys):
        code, out, _ = run(capsys, "enumerate", "s012", "--n", "3", "--k", "3")
        assert code == 0 and len(out.splitlines()) == 5

    def test_motzkin_single(self, capsys):
        assert run(capsys, "enumerate", "motzkin", "--k", "1", "--n", "1")[1] == "U\n"

    def test_weighted(self, capsys):
        _, out, _ = run(capsys, "enumerate", "weighted", "--cost", "3")
        assert out.splitlines() == ["CCC", "CL", "DU", "LC", "UD"]

    def test_limit(self, capsys):
        _, out, _ = run(capsys, "enumerate", "weighted", "--cost", "3", "--limit", "2")
        assert out.splitlines() == ["CCC", "CL"]

    def test_compositions_filters(self, capsys):
        _, out, _ = run(
            capsys,
            "enumerate", "compositions", "--n", "5", "--set", "s1",
            "--part-count", "2", "1",
        )
        assert len(out.splitlines()) == 4
        _, out, _ = run(
            capsys,
            "enumerate", "compositions", "--n", "7", "--set", "s3", "--summands", "2",
        )
        assert out.splitlines() == ["2+5", "3+4", "4+3", "5+2"]

    def test_line_counts_match_counts(self, capsys):
        _, out, _ = run(capsys, "enumerate", "matchings", "--k", "3", "--n", "5")
        assert len(out.splitlines()) == 10

    def test_too_large_is_exit_4(self, capsys):
        code, _, err = run(capsys, "enumerate", "matchings", "--k", "13", "--n", "13")
        assert code == 4 and err

    def test_bad_params_is_exit_2(self, capsys):
        code, _, _ = run(capsys, "enumerate", "matchings", "--k", "3")
        assert code == 2


class TestMap:
    def test_closed_to_012_anchor(self, capsys):
        code, out, _ = run(capsys, "map", "closed-to-012", "00001110111000")
        assert code == 0 and out == "0+0+2+1+2+1+0\n"

    def test_s1_to_s2_anchor(self, capsys):
        assert run(capsys, "map", "s1-to-s2", "1+2+2+1+2+1+2")[1] == "1+5+3+3\n"

    def test_chords_both_ways(self, capsys):
        _, out, _ = run(capsys, "map", "motzkin-to-chords", "DHDUUHDDUU")
        assert out == "10:4-8,5-7:1-10,3-9\n"
        _, out, _ = run(capsys, "map", "chords-to-motzkin", "10:4-8,5-7:1-10,3-9")
        assert out == "DHDUUHDDUU\n"

    def test_split_and_join(self, capsys):
        m = "U1-L1,U2-U3,L2-L3"
        _, out, _ = run(capsys, "map", "split-horizontals", m)
        assert out == "2-3;2-3\n"
        _, out, _ = run(
            capsys, "map", "join-horizontals", "2-3;2-3", "--k", "3", "--n", "3"
        )
        assert out == m + "\n"

    def test_invalid_object_is_exit_2(self, capsys):
        code, _, err = run(capsys, "map", "closed-to-012", "0102")
        assert code == 2 and err

    def test_invalid_domain_is_exit_2(self, capsys):
        # odd fence cannot be arranged as a matching
        code, _, _ = run(capsys, "map", "closed-to-matching", "000")
        assert code == 2


class TestVerify:
    def test_triangle_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "triangle", "--max", "10")
        assert code == 0
        report = json.loads(out)
        assert report["overall"] is True
        assert all(c["status"] == "pass" for c in report["checks"])

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "fibonacci", "--max", "10", "--format", "text"
        )
        assert code == 0
        assert out.splitlines()[-1] == "overall: pass"

    def test_bounds_suite_mentions_forty(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bounds", "--max", "20")
        report = json.loads(out)
        assert code == 0
        ids = [c["id"] for c in report["checks"]]
        assert "forty-points-bound" in ids

    def test_lacing_suite_records_resolution(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lacing")
        report = json.loads(out)
        assert code == 0
        byid = {c["id"]: c for c in report["checks"]}
        assert byid["defective-formula-resolution"]["status"] == "pass"
        assert "(k-1)!(n-1)!" in byid["defective-formula-resolution"]["detail"]


class TestExport:
    def test_diagonal(self, capsys):
        _, out, _ = run(capsys, "export", "A051286", "--terms", "6")
        assert out.splitlines() == ["0 1", "1 1", "2 2", "3 5", "4 11", "5 26"]

    def test_fence_triangle(self, capsys):
        _, out, _ = run(capsys, "export", "A079487", "--terms", "5")
        assert [line.split()[1] for line in out.splitlines()] == ["1"] * 5

    def test_staircase_triangle(self, capsys):
        _, out, _ = run(capsys, "export", "A125250", "--terms", "6")
        values = [line.split()[1] for line in out.splitlines()]
        assert values == ["1", "0", "0", "0", "1", "0"]

    def test_lacings(self, capsys):
        _, out, _ = run(capsys, "export", "A078698", "--terms", "3")
        assert out.splitlines() == ["0 1", "1 2", "2 20"]

    def test_bad_terms_is_exit_2(self, capsys):
        code, _, _ = run(capsys, "export", "A051286", "--terms", "0")
        assert code == 2


class TestAsymptotic:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "asymptotic", "--n", "4")
        assert code == 0 and "relative_error=5.46" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "asymptotic", "--n", "10", "--format", "json")
        data = json.loads(out)
        assert 0 < data["relative_error"] < 0.03


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "enumerate", "matchings", "--k", "4", "--n", "4")
    second = run(capsys, "enumerate", "matchings", "--k", "4", "--n", "4")
    assert first == second


def test_count_matches_enumerate(capsys):
    for family, args, count_args in (
        ("matchings", ["--k", "3", "--n", "3"], ["a", "--k", "3", "--n", "3"]),
        ("s012", ["--n", "4", "--k", "5"], ["s", "--n", "4", "--k", "5"]),
        ("weighted", ["--cost", "4"], ["r", "--n", "4"]),
    ):
        _, lines, _ = run(capsys, "enumerate", family, *args)
        _, value, _ = run(capsys, "count", *count_args)
        assert len(lines.splitlines()) == int(value)
