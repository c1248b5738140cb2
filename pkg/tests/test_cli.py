"""End-to-end tests for the kic command line."""

import json
import random

import pytest
from click.testing import CliRunner

import src.config
from src.cli import EXIT_OK, EXIT_SEARCH, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from src.constructions.coloring import CompleteColoring
from src.constructions.factorization import blowup_min_coloring
from src.constructions.max_span import max_span_coloring
from src.graphs.base import PartiteSpec
from src.output.document import ProvenanceSource, read_document, write_document


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def workspace(tmp_path, monkeypatch):
    """An isolated config file whose output_dir points into tmp_path."""
    for name in ("KIC_MAX_NODES", "KIC_MAX_SECONDS", "KIC_WORKERS", "KIC_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps({"output_dir": str(tmp_path / "out")}))
    monkeypatch.setattr(src.config, "CONFIG_FILE", config_file)
    return tmp_path


@pytest.fixture
def k4_base(workspace):
    return write_document(
        CompleteColoring(m=4, t=4, colors=(1, 2, 3, 3, 2, 4)), workspace / "k4.json"
    )


@pytest.fixture
def broken_doc(workspace):
    path = workspace / "broken.json"
    path.write_text(json.dumps({"kind": "kpartite", "k": 2, "n": 2, "t": 3, "colors": [1, 3, 2, 1]}))
    return path


def invoke(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


class TestTopLevel:
    def test_version(self, runner, workspace):
        result = invoke(runner, "--version")
        assert result.exit_code == EXIT_OK
        assert "0.1.0" in result.output

    def test_help(self, runner, workspace):
        result = invoke(runner, "--help")
        assert result.exit_code == EXIT_OK
        assert "construct" in result.output

    def test_missing_option_is_usage_error(self, runner, workspace):
        assert invoke(runner, "construct", "--k", 4).exit_code == EXIT_USAGE

    def test_log_level(self, runner, workspace):
        out = workspace / "k.json"
        result = invoke(runner, "--log-level", "DEBUG", "construct", "--k", 2, "--n", 1, "--out", out)
        assert result.exit_code == EXIT_OK


# ── construct ──

class TestConstruct:
    def test_max_span(self, runner, workspace):
        out = workspace / "k4n2.json"
        result = invoke(runner, "construct", "--k", 4, "--n", 2, "--out", out)
        assert result.exit_code == EXIT_OK, result.output
        assert "Wrote K_2^4 with t = 9" in result.output
        document = read_document(out)
        assert document.t == 9
        assert document.provenance.source == ProvenanceSource.MAX_SPAN

    def test_method_name_and_alias(self, runner, workspace):
        for method in ("theorem3", "max-span"):
            out = workspace / f"{method}.json"
            result = invoke(runner, "construct", "--k", 4, "--n", 1, "--method", method, "--out", out)
            assert result.exit_code == EXIT_OK, result.output
            assert json.loads(out.read_text())["provenance"]["source"] == "theorem3"

    def test_default_output_dir(self, runner, workspace):
        result = invoke(runner, "construct", "--k", 2, "--n", 2)
        assert result.exit_code == EXIT_OK
        assert (workspace / "out" / "kpartite_k2_n2_t3.json").exists()

    def test_compressed_target(self, runner, workspace):
        out = workspace / "k4n2t7.json"
        assert invoke(runner, "construct", "--k", 4, "--n", 2, "--t", 7, "--out", out).exit_code == EXIT_OK
        assert read_document(out).t == 7

    def test_target_out_of_range(self, runner, workspace):
        result = invoke(runner, "construct", "--k", 4, "--n", 2, "--t", 12)
        assert result.exit_code == EXIT_USAGE

    def test_odd_k(self, runner, workspace):
        assert invoke(runner, "construct", "--k", 3, "--n", 2).exit_code == EXIT_USAGE

    def test_blowup(self, runner, workspace):
        out = workspace / "min.json"
        result = invoke(runner, "construct", "--k", 4, "--n", 2, "--method", "blowup", "--out", out)
        assert result.exit_code == EXIT_OK
        assert read_document(out).t == 6
        bad = invoke(runner, "construct", "--k", 4, "--n", 2, "--method", "blowup", "--t", 7)
        assert bad.exit_code == EXIT_USAGE

    def test_lift(self, runner, workspace, k4_base):
        out = workspace / "lifted.json"
        result = invoke(
            runner, "construct", "--k", 4, "--n", 2, "--method", "lift", "--base", k4_base, "--out", out
        )
        assert result.exit_code == EXIT_OK
        document = read_document(out)
        assert document.t == 9
        assert document.provenance.parent == str(k4_base)

    def test_lift_needs_matching_base(self, runner, workspace, k4_base):
        assert invoke(runner, "construct", "--k", 4, "--n", 2, "--method", "lift").exit_code == EXIT_USAGE
        result = invoke(runner, "construct", "--k", 6, "--n", 2, "--method", "lift", "--base", k4_base)
        assert result.exit_code == EXIT_USAGE

    def test_solver(self, runner, workspace):
        out = workspace / "odd.json"
        result = invoke(
            runner, "construct", "--k", 3, "--n", 2, "--method", "solver", "--t", 4, "--out", out
        )
        assert result.exit_code == EXIT_OK
        assert read_document(out).provenance.source == ProvenanceSource.SOLVER

    def test_solver_errors(self, runner, workspace):
        assert invoke(runner, "construct", "--k", 2, "--n", 2, "--method", "solver").exit_code == EXIT_USAGE
        result = invoke(runner, "construct", "--k", 2, "--n", 2, "--method", "solver", "--t", 4)
        assert result.exit_code == EXIT_SEARCH
        assert "proven infeasible" in result.output

    def test_structured(self, runner, workspace):
        out = workspace / "s.json"
        result = invoke(runner, "construct", "--k", 2, "--n", 3, "--out", out, "--format", "structured")
        payload = json.loads(result.output)
        assert payload == {"label": "K_3^2", "t": 5, "path": str(out), "source": "theorem3"}


# ── verify ──

class TestVerify:
    def test_pass(self, runner, workspace, k4_base):
        result = invoke(runner, "verify", k4_base)
        assert result.exit_code == EXIT_OK
        assert "PASS" in result.output

    def test_fail(self, runner, workspace, broken_doc):
        result = invoke(runner, "verify", broken_doc)
        assert result.exit_code == EXIT_VERIFY_FAILED
        assert "GapAtVertex" in result.output

    def test_structured(self, runner, workspace, broken_doc):
        payload = json.loads(invoke(runner, "verify", broken_doc, "--format", "structured").output)
        assert payload["passed"] is False
        assert payload["proper"] is True
        assert payload["violations"][0]["kind"] == "GapAtVertex"

    def test_palettes(self, runner, workspace):
        span = workspace / "span.json"
        invoke(runner, "construct", "--k", 4, "--n", 2, "--out", span)
        assert invoke(runner, "verify", span, "--palettes").exit_code == EXIT_OK
        minimal = write_document(blowup_min_coloring(PartiteSpec(k=4, n=2)), workspace / "min.json")
        result = invoke(runner, "verify", minimal, "--palettes")
        assert result.exit_code == EXIT_VERIFY_FAILED
        assert "mismatches" in result.output

    def test_palettes_need_kpartite(self, runner, workspace, k4_base):
        assert invoke(runner, "verify", k4_base, "--palettes").exit_code == EXIT_USAGE

    def test_hand_written_document(self, runner, workspace):
        path = workspace / "k4.json"
        path.write_text(json.dumps({
            "format_version": "1", "kind": "kpartite", "k": 4, "n": 1, "t": 4,
            "colors": [1, 2, 3, 3, 2, 4],
            "provenance": {"source": "theorem3", "notes": ""},
        }))
        assert invoke(runner, "verify", path).exit_code == EXIT_OK
        assert read_document(path).provenance.source == ProvenanceSource.MAX_SPAN

    def test_t_above_edge_count_is_malformed(self, runner, workspace):
        path = workspace / "wide.json"
        path.write_text(json.dumps({"kind": "kpartite", "k": 2, "n": 1, "t": 1000000, "colors": [1]}))
        result = invoke(runner, "verify", path)
        assert result.exit_code == EXIT_USAGE
        assert "exceeds" in result.output

    @pytest.mark.parametrize("seed", range(6))
    def test_adjacent_color_copy_fails(self, runner, workspace, seed):
        coloring = max_span_coloring(PartiteSpec(k=4, n=2))
        path = write_document(coloring, workspace / f"mutant{seed}.json")
        rng = random.Random(seed)
        edges = coloring.edge_list()
        i = rng.randrange(len(edges))
        neighbours = [j for j, edge in enumerate(edges) if j != i and set(edge) & set(edges[i])]
        j = rng.choice(neighbours)
        raw = json.loads(path.read_text())
        raw["colors"][i] = raw["colors"][j]
        path.write_text(json.dumps(raw))
        result = invoke(runner, "verify", path)
        assert result.exit_code == EXIT_VERIFY_FAILED
        assert "DuplicateAtVertex" in result.output

    def test_malformed_and_missing(self, runner, workspace):
        junk = workspace / "junk.json"
        junk.write_text("{}")
        assert invoke(runner, "verify", junk).exit_code == EXIT_USAGE
        assert invoke(runner, "verify", workspace / "nope.json").exit_code == EXIT_USAGE


# ── spectrum ──

class TestSpectrum:
    def test_construct(self, runner, workspace):
        out_dir = workspace / "spectrum"
        result = invoke(runner, "spectrum", "--k", 4, "--n", 2, "--out-dir", out_dir)
        assert result.exit_code == EXIT_OK, result.output
        files = sorted(p.name for p in out_dir.glob("*.json"))
        assert files == [f"kpartite_k4_n2_t{t}.json" for t in (6, 7, 8, 9)]
        top = read_document(out_dir / "kpartite_k4_n2_t9.json")
        assert top.provenance.source == ProvenanceSource.MAX_SPAN
        low = read_document(out_dir / "kpartite_k4_n2_t6.json")
        assert low.provenance.source == ProvenanceSource.COMPRESS
        assert low.provenance.parent == "kpartite_k4_n2_t9.json"

    def test_lifted_top(self, runner, workspace):
        out_dir = workspace / "k12"
        result = invoke(runner, "spectrum", "--k", 12, "--n", 1, "--out-dir", out_dir, "--format", "structured")
        assert result.exit_code == EXIT_OK
        assert sorted(int(t) for t in json.loads(result.output)) == list(range(11, 19))
        top = read_document(out_dir / "kpartite_k12_n1_t18.json")
        assert top.provenance.source == ProvenanceSource.LIFT

    def test_oracle(self, runner, workspace):
        result = invoke(runner, "spectrum", "--k", 2, "--n", 2, "--mode", "oracle")
        assert result.exit_code == EXIT_OK
        assert "K_2^2: {2:F, 3:F, 4:I}" in result.output

    def test_oracle_structured(self, runner, workspace):
        result = invoke(runner, "spectrum", "--k", 2, "--n", 2, "--mode", "oracle", "--format", "structured")
        assert json.loads(result.output) == {"2": "Feasible", "3": "Feasible", "4": "Infeasible"}

    def test_unavailable(self, runner, workspace):
        assert invoke(runner, "spectrum", "--k", 3, "--n", 2).exit_code == EXIT_SEARCH
        assert invoke(runner, "spectrum", "--k", 3, "--n", 3).exit_code == EXIT_SEARCH

    def test_base_must_be_complete(self, runner, workspace, broken_doc):
        assert invoke(runner, "spectrum", "--k", 12, "--n", 1, "--base", broken_doc).exit_code == EXIT_USAGE

    def test_base_must_match_k(self, runner, workspace, k4_base):
        assert invoke(runner, "spectrum", "--k", 12, "--n", 1, "--base", k4_base).exit_code == EXIT_USAGE


# ── bounds ──

class TestBounds:
    def test_csv_to_stdout(self, runner, workspace):
        result = invoke(runner, "bounds", "--k-range", "3,8", "--n-range", "1")
        assert result.exit_code == EXIT_OK
        lines = result.output.splitlines()
        assert lines[0].startswith("k,n,delta")
        assert lines[1] == "3,1,2,3,false,,,,,"
        assert lines[2] == "8,1,7,7,true,7,11,11,11,"

    def test_csv_to_file(self, runner, workspace):
        out = workspace / "tables" / "bounds.csv"
        result = invoke(runner, "bounds", "--k-range", "2-4", "--n-range", "1-2", "--out", out)
        assert result.exit_code == EXIT_OK
        assert len(out.read_text().splitlines()) == 7

    def test_oracle_column(self, runner, workspace):
        result = invoke(runner, "bounds", "--k-range", "2", "--n-range", "2", "--oracle-max-edges", 4)
        assert result.output.splitlines()[1].endswith(",3")

    def test_bad_range(self, runner, workspace):
        assert invoke(runner, "bounds", "--k-range", "x", "--n-range", "1").exit_code == EXIT_USAGE

    def test_report(self, runner, workspace):
        result = invoke(runner, "bounds-report", "--k", 12, "--n", 2, "--format", "structured")
        payload = json.loads(result.output)
        assert payload["W_lower"] == 37
        assert payload["W_lower_source"] == "Theorem4"
        assert invoke(runner, "bounds-report", "--k", 4, "--n", 2).exit_code == EXIT_OK


# ── export ──

class TestExport:
    def test_edgelist(self, runner, workspace, k4_base):
        result = invoke(runner, "export", k4_base)
        assert result.exit_code == EXIT_OK
        assert result.output.splitlines()[0] == "1 2 1"

    def test_matrix(self, runner, workspace, k4_base):
        result = invoke(runner, "export", k4_base, "--format", "matrix")
        assert result.output == ". 1 2 3\n1 . 3 2\n2 3 . 4\n3 2 4 .\n"

    def test_refuses_invalid(self, runner, workspace, broken_doc):
        assert invoke(runner, "export", broken_doc).exit_code == EXIT_VERIFY_FAILED


# ── complete, lift, compress ──

class TestCompleteLiftCompress:
    def test_complete(self, runner, workspace):
        out = workspace / "k6.json"
        result = invoke(runner, "complete", "--m", 6, "--out", out)
        assert result.exit_code == EXIT_OK
        assert read_document(out).t == 7

    def test_complete_baseline_source(self, runner, workspace):
        out = workspace / "k6min.json"
        invoke(runner, "complete", "--m", 6, "--t", 5, "--out", out)
        assert read_document(out).provenance.source == ProvenanceSource.BLOWUP

    def test_complete_errors(self, runner, workspace):
        assert invoke(runner, "complete", "--m", 5).exit_code == EXIT_USAGE
        result = invoke(runner, "complete", "--m", 4, "--t", 5)
        assert result.exit_code == EXIT_SEARCH
        assert "proven infeasible" in result.output

    def test_lift(self, runner, workspace, k4_base):
        out = workspace / "lift.json"
        result = invoke(runner, "lift", k4_base, "--n", 3, "--out", out)
        assert result.exit_code == EXIT_OK
        assert read_document(out).t == 14

    def test_lift_rejects_partite_base(self, runner, workspace):
        base = write_document(blowup_min_coloring(PartiteSpec(k=2, n=2)), workspace / "p.json")
        assert invoke(runner, "lift", base, "--n", 2).exit_code == EXIT_USAGE

    def test_lift_rejects_unverified_base(self, runner, workspace):
        base = workspace / "bad_k4.json"
        base.write_text(json.dumps({"kind": "complete", "m": 4, "t": 4, "colors": [1, 1, 3, 3, 2, 4]}))
        assert invoke(runner, "lift", base, "--n", 2).exit_code == EXIT_VERIFY_FAILED

    def test_compress(self, runner, workspace):
        span = workspace / "span.json"
        invoke(runner, "construct", "--k", 4, "--n", 2, "--out", span)
        out = workspace / "squeezed.json"
        result = invoke(runner, "compress", span, "--steps", 2, "--out", out)
        assert result.exit_code == EXIT_OK
        document = read_document(out)
        assert document.t == 7
        assert document.provenance.source == ProvenanceSource.COMPRESS

    def test_compress_errors(self, runner, workspace, broken_doc):
        span = workspace / "span.json"
        invoke(runner, "construct", "--k", 4, "--n", 2, "--out", span)
        assert invoke(runner, "compress", span, "--steps", 4).exit_code == EXIT_VERIFY_FAILED
        assert invoke(runner, "compress", broken_doc).exit_code == EXIT_VERIFY_FAILED
        assert invoke(runner, "compress", span, "--steps", 0).exit_code == EXIT_USAGE


# ── solve ──

class TestSolve:
    def test_exact_W(self, runner, workspace):
        result = invoke(runner, "solve", "--m", 4, "--what", "W")
        assert result.exit_code == EXIT_OK
        assert "W(K_4) = 4" in result.output

    def test_exact_w_structured(self, runner, workspace):
        result = invoke(runner, "solve", "--k", 2, "--n", 2, "--what", "w", "--format", "structured")
        assert json.loads(result.output) == {"label": "K_2^2", "w": 2}

    def test_single_t(self, runner, workspace):
        result = invoke(runner, "solve", "--k", 2, "--n", 2, "--what", "t", "--t", 4)
        assert result.exit_code == EXIT_SEARCH
        assert "ProvenInfeasible" in result.output

    def test_t_above_edge_count(self, runner, workspace):
        result = invoke(runner, "solve", "--k", 2, "--n", 1, "--what", "t", "--t", 100000000000)
        assert result.exit_code == EXIT_SEARCH
        assert "ProvenInfeasible (0 nodes)" in result.output

    def test_witness_written(self, runner, workspace):
        out = workspace / "witness.json"
        result = invoke(runner, "solve", "--m", 4, "--t", 4, "--out", out)
        assert result.exit_code == EXIT_OK
        assert read_document(out).t == 4

    def test_budget_gives_unknown(self, runner, workspace):
        assert invoke(runner, "config", "set", "max_nodes", 1).exit_code == EXIT_OK
        result = invoke(runner, "solve", "--m", 4, "--what", "W")
        assert result.exit_code == EXIT_SEARCH
        assert "W(K_4) = Unknown" in result.output

    def test_not_colorable(self, runner, workspace):
        assert invoke(runner, "solve", "--m", 5, "--what", "W").exit_code == EXIT_SEARCH

    def test_argument_errors(self, runner, workspace):
        assert invoke(runner, "solve", "--m", 4, "--k", 2, "--what", "W").exit_code == EXIT_USAGE
        assert invoke(runner, "solve", "--what", "W").exit_code == EXIT_USAGE
        assert invoke(runner, "solve", "--m", 4).exit_code == EXIT_USAGE
        assert invoke(runner, "solve", "--m", 4, "--t", 2).exit_code == EXIT_USAGE


# ── config ──

class TestConfigCommands:
    def test_set_and_show(self, runner, workspace):
        result = invoke(runner, "config", "set", "workers", 2)
        assert result.exit_code == EXIT_OK
        assert json.loads((workspace / "config.json").read_text())["workers"] == 2
        shown = invoke(runner, "config", "show")
        assert shown.exit_code == EXIT_OK
        assert "workers" in shown.output

    def test_bad_key_and_value(self, runner, workspace):
        assert invoke(runner, "config", "set", "colour", "blue").exit_code == EXIT_USAGE
        assert invoke(runner, "config", "set", "workers", "many").exit_code == EXIT_USAGE
