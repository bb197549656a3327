"""Tests for the command-line harness (exit codes, files, determinism)."""

import json
import os

import pytest

from hypermatch.cli import main
from hypermatch.core import read_h3


def run_json(tmp_path, argv, name="out.json"):
    out = tmp_path / name
    rc = main(argv + ["--out", str(out)])
    return rc, json.loads(out.read_text())


class TestGen:
    def test_star9(self, tmp_path):
        out = tmp_path / "star9.h3"
        assert main(["gen", "star", "--n", "9", "--out", str(out)]) == 0
        H = read_h3(out)
        assert H.n == 9 and H.m == 49
        meta = json.loads((tmp_path / "star9.json").read_text())
        assert meta["partition"]["W"] == [7, 8]
        assert meta["kind"] == "star"

    def test_hnd_9_3(self, tmp_path):
        out = tmp_path / "hnd.h3"
        assert main(["gen", "hnd", "--n", "9", "--d", "3", "--out", str(out)]) == 0
        assert read_h3(out).m == 63

    def test_random_p0(self, tmp_path):
        out = tmp_path / "r.h3"
        assert main(["gen", "random", "--n", "12", "--p", "0", "--seed", "1", "--out", str(out)]) == 0
        assert read_h3(out).m == 0

    def test_roundtrip_bytes(self, tmp_path):
        out = tmp_path / "b.h3"
        main(["gen", "bde", "--n", "12", "--d", "3", "--out", str(out)])
        text = out.read_text()
        from hypermatch.core import parse_h3, to_h3

        assert to_h3(parse_h3(text)) == text

    def test_missing_param(self, tmp_path):
        assert main(["gen", "hnd", "--n", "9"]) == 2

    def test_usage_error(self):
        assert main(["gen", "nosuch", "--n", "9"]) == 2


class TestDegreesCmd:
    def test_degrees(self, tmp_path):
        h3 = tmp_path / "x.h3"
        main(["gen", "hnd", "--n", "9", "--d", "3", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["degrees", str(h3)])
        assert rc == 0
        assert rep["delta1"] == 18
        assert rep["delta2"] == 3


class TestSolveCmd:
    def test_exact_star(self, tmp_path):
        h3 = tmp_path / "star9.h3"
        main(["gen", "star", "--n", "9", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["solve", "--exact", str(h3)])
        assert rc == 0
        assert rep["size"] == 2 and rep["optimal"]

    def test_exact_budget_exit_code(self, tmp_path):
        h3 = tmp_path / "k12.h3"
        main(["gen", "random", "--n", "12", "--p", "1", "--seed", "0", "--out", str(h3)])
        out = tmp_path / "r.json"
        rc = main(["solve", "--exact", str(h3), "--budget-nodes", "2", "--out", str(out)])
        assert rc == 3

    def test_augment(self, tmp_path):
        h3 = tmp_path / "hnd12.h3"
        main(["gen", "hnd", "--n", "12", "--d", "4", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["solve", "--augment", str(h3), "--d", "4"])
        assert rc == 0
        assert rep["size"] == 4
        assert rep["trace"]["initial"] is not None

    def test_extremal_uses_sidecar(self, tmp_path):
        h3 = tmp_path / "hnd30.h3"
        main(["gen", "hnd", "--n", "30", "--d", "10", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["solve", "--extremal", str(h3), "--d", "10"])
        assert rc == 0
        assert rep["size"] == 10
        assert rep["stage_log"]["stalled_stage"] is None

    def test_absorbing(self, tmp_path):
        h3 = tmp_path / "r15.h3"
        main(["gen", "random", "--n", "15", "--p", "0.8", "--seed", "4", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["solve", "--absorbing", str(h3)])
        assert rc == 0
        assert rep["size"] == 5 and rep["optimal"]

    def test_method_required(self, tmp_path):
        h3 = tmp_path / "x.h3"
        main(["gen", "star", "--n", "9", "--out", str(h3)])
        assert main(["solve", str(h3)]) == 2


class TestClosenessCmd:
    def test_recovers_partition(self, tmp_path):
        h3 = tmp_path / "h.h3"
        main(["gen", "hnd", "--n", "12", "--d", "4", "--out", str(h3)])
        rc, rep = run_json(tmp_path, ["closeness", str(h3), "--d", "4"])
        assert rc == 0
        assert rep["deficiency"] == 0
        assert rep["W"] == [8, 9, 10, 11]


class TestVerifyCmd:
    def test_fact1(self, tmp_path):
        rc, rep = run_json(tmp_path, ["verify", "fact1"])
        assert rc == 0
        assert rep["total"] == 512 and rep["violations"] == 0

    def test_tightness(self, tmp_path):
        rc, rep = run_json(tmp_path, ["verify", "tightness", "--n-max", "12"])
        assert rc == 0
        assert rep["ok"] and len(rep["rows"]) == 3

    def test_thresholds_small_deterministic(self, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        assert main(["verify", "thresholds", "--n", "5", "--d", "1", "--out", str(out1)]) == 0
        assert main(["verify", "thresholds", "--n", "5", "--d", "1", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        rep = json.loads(out1.read_text())
        # only the empty hypergraph lacks a 1-matching
        assert rep["without_d_matching"] == 1
        assert rep["max_delta1_without_d_matching"] == 0

    def test_thresholds_rejects_large_n(self):
        assert main(["verify", "thresholds", "--n", "7", "--d", "2"]) == 2

    def test_thresholds_threads_env_agrees(self, tmp_path):
        out1 = tmp_path / "s.json"
        out2 = tmp_path / "p.json"
        main(["verify", "thresholds", "--n", "5", "--d", "1", "--out", str(out1)])
        os.environ["HYPERMATCH_THREADS"] = "2"
        try:
            main(["verify", "thresholds", "--n", "5", "--d", "1", "--out", str(out2)])
        finally:
            del os.environ["HYPERMATCH_THREADS"]
        assert out1.read_bytes() == out2.read_bytes()


class TestSweepCmd:
    def test_header_only(self, tmp_path):
        out = tmp_path / "s.csv"
        rc = main(["sweep", "--n", "9", "--d", "3", "--trials", "0", "--out", str(out)])
        assert rc == 0
        assert out.read_text() == "n,d,p,seed,delta1,threshold,oracle_size,augment_size,agree\n"

    def test_deterministic_bytes(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        argv = ["sweep", "--n", "9", "--d", "3", "--trials", "3", "--p-grid", "0.3,0.7", "--seed", "5"]
        assert main(argv + ["--out", str(a)]) == 0
        assert main(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_columns_and_agreement(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["sweep", "--n", "9", "--d", "3", "--trials", "4", "--p-grid", "0.8", "--out", str(out)])
        rows = out.read_text().strip().splitlines()
        assert rows[0].count(",") == 8
        for row in rows[1:]:
            fields = row.split(",")
            assert fields[0] == "9" and fields[1] == "3"
            assert fields[8] in ("0", "1")

    def test_bad_grid(self, tmp_path):
        assert main(["sweep", "--n", "9", "--d", "3", "--p-grid", "x"]) == 2
