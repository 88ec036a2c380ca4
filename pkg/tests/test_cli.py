import importlib.resources
import json

import pytest

from twclust.cli import main

KARATE = importlib.resources.files("twclust") / "data" / "karate.edges"
FACTIONS = importlib.resources.files("twclust") / "data" / "karate_factions.labels"


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCmdTest:
    def test_karate_rejects_hard(self, capsys):
        code, out, _ = run_cli(capsys, "test", KARATE, "--seed", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["report"]["p_value"] < 1e-4
        assert doc["report"]["n"] == 34
        assert doc["manifest"]["subcommand"] == "test"
        assert doc["isolated_nodes_removed"] == 0

    def test_er_file_accepts(self, capsys, tmp_path):
        from twclust import ErParams, sample_er, write_edge_list
        g = sample_er(ErParams(n=500, p=0.2), seed=0)
        path = tmp_path / "er.edges"
        write_edge_list(g, path)
        code, out, _ = run_cli(capsys, "test", path, "--seed", "0")
        assert code == 0
        assert json.loads(out)["report"]["p_value"] >= 0.01

    def test_laplacian_variant(self, capsys):
        code, out, _ = run_cli(capsys, "test", KARATE,
                               "--statistic", "laplacian", "--seed", "1")
        assert code == 0
        assert json.loads(out)["report"]["p_value"] < 0.01

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "test", tmp_path / "nope.edges")
        assert code == 2
        assert "error" in err

    def test_empty_graph_exit_3(self, capsys, tmp_path):
        path = tmp_path / "empty.edges"
        path.write_text("# no edges at all\n")
        code, _, err = run_cli(capsys, "test", path)
        assert code == 3

    def test_degenerate_density_exit_3(self, capsys, tmp_path):
        path = tmp_path / "pair.edges"
        path.write_text("a b\n")
        code, _, err = run_cli(capsys, "test", path)
        assert code == 3


class TestCmdCluster:
    def test_karate_two_factions(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        code, out, _ = run_cli(capsys, "cluster", KARATE, "--alpha", "1e-4",
                               "--seed", "0", "--out", out_dir)
        assert code == 0
        doc = json.loads((out_dir / "tree.json").read_text())
        assert doc["manifest"] == "manifest.json"
        tree = doc["tree"]
        assert len(tree["children"]) == 2
        sizes = sorted(c["size"] for c in tree["children"])
        assert sizes == [16, 18]
        assert (out_dir / "ordering.txt").exists()
        assert (out_dir / "blocks.csv").exists()
        assert (out_dir / "manifest.json").exists()

    def test_karate_alpha_001_splits_faction(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        code, _, _ = run_cli(capsys, "cluster", KARATE, "--alpha", "0.01",
                             "--seed", "0", "--out", out_dir)
        assert code == 0
        tree = json.loads((out_dir / "tree.json").read_text())["tree"]
        depth2 = [c for child in tree["children"]
                  for c in child.get("children", [])]
        assert depth2, "expected a second-level rejection"

    def test_deterministic_outputs(self, capsys, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        for d in (d1, d2):
            code, _, _ = run_cli(capsys, "cluster", KARATE, "--alpha", "0.01",
                                 "--seed", "3", "--out", d)
            assert code == 0
        for name in ("tree.json", "ordering.txt", "blocks.csv"):
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_validate_accepts_cluster_output(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        run_cli(capsys, "cluster", KARATE, "--alpha", "0.01", "--out", out_dir)
        code, out, _ = run_cli(capsys, "validate", out_dir / "tree.json")
        assert code == 0 and out.strip() == "ok"

    def test_laplacian_variant_clusters(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        code, _, _ = run_cli(capsys, "cluster", KARATE, "--alpha", "1e-4",
                             "--statistic", "laplacian", "--seed", "0",
                             "--out", out_dir)
        assert code == 0
        code, out, _ = run_cli(capsys, "validate", out_dir / "tree.json")
        assert code == 0


class TestCmdEval:
    @pytest.fixture
    def karate_tree(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        run_cli(capsys, "cluster", KARATE, "--alpha", "1e-4", "--seed", "0",
                "--out", out_dir)
        return out_dir / "tree.json"

    def test_ari_against_factions(self, capsys, karate_tree):
        code, out, _ = run_cli(capsys, "eval", karate_tree, FACTIONS,
                               "--metric", "ari")
        assert code == 0
        assert float(out.strip()) == pytest.approx(1.0)

    def test_hf_against_faction_sets(self, capsys, karate_tree, tmp_path):
        labels = {}
        for line in FACTIONS.read_text().splitlines():
            if line.startswith("#"):
                continue
            node, cluster = line.split()
            labels.setdefault(cluster, []).append(node)
        truth = tmp_path / "truth.txt"
        truth.write_text("\n".join(" ".join(v) for v in labels.values()) + "\n")
        code, out, _ = run_cli(capsys, "eval", karate_tree, truth,
                               "--metric", "hf")
        assert code == 0
        assert float(out.strip()) == pytest.approx(1.0)

    def test_universe_mismatch_exit_2(self, capsys, karate_tree, tmp_path):
        bad = tmp_path / "bad.labels"
        bad.write_text("0 0\n1 1\n")
        code, _, err = run_cli(capsys, "eval", karate_tree, bad,
                               "--metric", "ari")
        assert code == 2


class TestCmdValidateAndSimulate:
    def test_validate_rejects_garbage(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run_cli(capsys, "validate", bad)
        assert code == 2

    def test_validate_rejects_corrupt_tree(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "tree": {"id": 0, "size": 2, "p_hat": None, "p_value": None,
                     "stop_reason": None, "children": [], "members": ["a"]},
        }))
        code, _, err = run_cli(capsys, "validate", bad)
        assert code == 2

    def test_simulate_unknown_recipe(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "simulate", "bogus", "--out", tmp_path)
        assert code == 2
        assert "available" in err

    def test_simulate_with_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "tiny.cfg"
        cfg.write_text(
            "runs 2\nn 60\nb11 0.8\nbase_b12 0.1\nn1_values 20\n"
            "b12_values 0.1\nb12_sweep_n1 20\nbootstrap_samples 4\n"
        )
        out = tmp_path / "out"
        code, _, _ = run_cli(capsys, "simulate", "planted-cluster",
                             "--out", out, "--config", cfg, "--seed", "5")
        assert code == 0
        assert (out / "pvalues_b12_sweep.csv").exists()
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["inputs"]  # config digest recorded
