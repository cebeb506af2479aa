"""Command-line behaviour: formats, exit codes, manifests, determinism."""

import json

import pytest

import sigperm.gentree
from sigperm.cli import dumps_payload, main
from sigperm.gentree import TreeLabel


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestCount:
    def test_row_table(self, capsys):
        code, out = run(capsys, "count", "--n", "2", "--pattern", "1234")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["n", "j", "pattern", "method", "count"]
        cells = [line.split() for line in lines[1:5]]
        assert [c[-1] for c in cells] == ["2", "4", "1", "7"]

    def test_row_json(self, capsys):
        code, doc = run_json(
            capsys, "count", "--n", "2", "--pattern", "1234", "--method", "brute"
        )
        assert code == 0
        counts = {row["j"]: row["count"] for row in doc["rows"]}
        assert counts == {0: "2", 1: "4", 2: "1", None: "7"}
        assert doc["manifest"]["patterns"] == ["1234"]
        assert all(isinstance(row["count"], str) for row in doc["rows"])

    def test_formula_total(self, capsys):
        code, doc = run_json(
            capsys, "count", "--n", "6", "--pattern", "1234", "--method", "formula"
        )
        assert code == 0
        assert doc["rows"] == [
            {"n": 6, "j": None, "pattern": "1234", "method": "formula", "count": "7281"}
        ]

    def test_gf_single_cell(self, capsys):
        code, doc = run_json(
            capsys,
            "count", "--n", "3", "--j", "3", "--pattern", "2143", "--method", "gf",
        )
        assert code == 0
        assert doc["rows"][0]["count"] == "1"

    def test_methods_agree(self, capsys):
        rows = {}
        for method in ("brute", "tree", "gf"):
            _, doc = run_json(
                capsys,
                "count", "--n", "4", "--pattern", "2143", "--method", method,
            )
            rows[method] = [(r["j"], r["count"]) for r in doc["rows"]]
        assert rows["brute"] == rows["tree"] == rows["gf"]

    def test_json_round_trips_byte_identical(self, capsys):
        _, out = run(
            capsys, "count", "--n", "3", "--pattern", "2143", "--format", "json"
        )
        assert dumps_payload(json.loads(out)) == out

    def test_csv(self, capsys):
        code, out = run(
            capsys, "count", "--n", "2", "--pattern", "1234", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# manifest: ")
        json.loads(lines[0].removeprefix("# manifest: "))
        assert lines[1] == "n,j,pattern,method,count"
        assert lines[2] == "2,0,1234,brute,2"
        assert lines[-1] == "2,,1234,brute,7"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "row.json"
        code, _ = run(
            capsys,
            "count", "--n", "2", "--pattern", "1234",
            "--format", "json", "--output", str(target),
        )
        assert code == 0
        doc = json.loads(target.read_text())
        assert "manifest" in doc and "rows" in doc

    def test_deterministic_across_workers(self, capsys):
        _, doc1 = run_json(
            capsys, "count", "--n", "5", "--pattern", "2143", "--threads", "1"
        )
        _, doc2 = run_json(
            capsys, "count", "--n", "5", "--pattern", "2143", "--threads", "2"
        )
        assert doc1["rows"] == doc2["rows"]
        assert doc1["manifest"]["workers"] == 1
        assert doc2["manifest"]["workers"] == 2

    def test_threads_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("SIGPERM_THREADS", "3")
        _, doc = run_json(capsys, "count", "--n", "2", "--pattern", "1234")
        assert doc["manifest"]["workers"] == 3


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("count", "--n", "3", "--pattern", "321", "--method", "tree"),
            ("count", "--n", "3", "--pattern", "2143", "--method", "formula"),
            ("count", "--n", "3", "--j", "1", "--pattern", "1234", "--method", "formula"),
            ("count", "--n", "3", "--j", "4", "--pattern", "1234"),
            ("count", "--n", "-1", "--pattern", "1234"),
            ("count", "--n", "3", "--pattern", "1,1"),
            ("gf", "--pattern", "2143", "--k", "0", "--q", "1", "--gamma", "3,1"),
            ("gf", "--pattern", "123", "--k", "0", "--q", "1", "--gamma", "2"),
            ("tree", "--pattern", "2143", "--j", "9", "--depth", "1"),
            ("conjecture", "--p1", "123", "--p2", "1234"),
            ("conjecture", "--p1", "12345", "--p2", "21354", "--max-n", "7"),
        ],
    )
    def test_exit_code_two(self, argv):
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        assert exc.value.code == 2


class TestVerify:
    def test_passes(self, capsys):
        code, doc = run_json(capsys, "verify", "--max-n", "3")
        assert code == 0
        assert {c["status"] for c in doc["rows"]} == {"pass"}
        names = {c["name"] for c in doc["rows"]}
        assert names == {
            "cross-method[1234]",
            "cross-method[2143]",
            "refined-wilf",
            "egge-total",
            "type-d-slice",
            "series-grid",
        }

    def test_injected_fault_is_caught_and_named(self, capsys, monkeypatch):
        true_successors = sigperm.gentree.successors

        def corrupted(label, pattern):
            out = true_successors(label, pattern)
            if label == TreeLabel(1, 1, 1):
                return out + [TreeLabel(2, 2, 1)]
            return out

        monkeypatch.setattr(sigperm.gentree, "successors", corrupted)
        code, doc = run_json(capsys, "verify", "--max-n", "3")
        assert code == 1
        failed = [c["name"] for c in doc["rows"] if c["status"] == "fail"]
        assert "cross-method[1234]" in failed or "cross-method[2143]" in failed


class TestConjecture:
    def test_equal_patterns_exit_zero(self, capsys):
        code, doc = run_json(
            capsys,
            "conjecture", "--p1", "12345", "--p2", "21354", "--max-n", "3",
        )
        assert code == 0
        assert all(row["equal"] for row in doc["rows"])

    def test_theorem_pair_through_generic_path(self, capsys):
        code, doc = run_json(
            capsys, "conjecture", "--p1", "1234", "--p2", "2143", "--max-n", "4"
        )
        assert code == 0
        assert all(row["equal"] for row in doc["rows"])

    def test_discrepancy_reported(self, capsys):
        # 1243 is not realized by any embedding, so its avoider counts sit
        # strictly above the 1234 ones from size 2 on
        code, doc = run_json(
            capsys, "conjecture", "--p1", "1234", "--p2", "1243", "--max-n", "2"
        )
        assert code == 1
        unequal = [row for row in doc["rows"] if not row["equal"]]
        assert unequal
        assert unequal[0]["n"] == 2 and unequal[0]["j"] == 2
        assert (unequal[0]["count1"], unequal[0]["count2"]) == ("1", "2")

    def test_allow_long_overrides_guard(self, capsys):
        code, doc = run_json(
            capsys,
            "conjecture", "--p1", "12345", "--p2", "21354",
            "--max-n", "3", "--guard", "2", "--allow-long",
        )
        assert code == 0
        assert all(row["equal"] for row in doc["rows"])


class TestGf:
    def test_geometric_series(self, capsys):
        code, out = run(
            capsys,
            "gf", "--pattern", "2143", "--k", "2", "--q", "1",
            "--gamma", "3", "--degree", "4",
        )
        assert code == 0
        assert out.splitlines()[0] == "1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4"

    def test_cross_check_reported(self, capsys):
        code, doc = run_json(
            capsys,
            "gf", "--pattern", "1234", "--k", "0", "--q", "1",
            "--gamma", "1,2", "--degree", "3",
        )
        assert code == 0
        assert doc["coefficients"] == ["1", "0", "0", "0"]
        assert doc["cross_check"]["agrees"] is True

    def test_series_equal_across_patterns(self, capsys):
        _, doc1 = run_json(
            capsys,
            "gf", "--pattern", "1234", "--k", "1", "--q", "2",
            "--gamma", "2,3", "--degree", "6",
        )
        _, doc2 = run_json(
            capsys,
            "gf", "--pattern", "2143", "--k", "1", "--q", "2",
            "--gamma", "2,3", "--degree", "6",
        )
        assert doc1["coefficients"] == doc2["coefficients"]


class TestTree:
    def test_dump_shape(self, capsys):
        code, doc = run_json(capsys, "tree", "--pattern", "2143", "--j", "1", "--depth", "1")
        assert code == 0
        tree = doc["tree"]
        assert tree["perm"] == "[-1]"
        assert tree["label"] == [2, 2, 2]
        assert len(tree["children"]) == 4
        for child in tree["children"]:
            assert child["children"] == []

    def test_matches_level_counts(self, capsys):
        code, doc = run_json(capsys, "tree", "--pattern", "1234", "--j", "0", "--depth", "3")
        assert code == 0

        def level_sizes(node):
            sizes = [1]
            frontier = [node]
            while any(n["children"] for n in frontier):
                frontier = [c for n in frontier for c in n["children"]]
                sizes.append(len(frontier))
            return sizes

        assert level_sizes(doc["tree"]) == [1, 1, 2, 6]
