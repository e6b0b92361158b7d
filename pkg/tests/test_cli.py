import io
import json

import pytest

from copwin.cli import (
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    EXIT_VIOLATION,
    main,
)
from copwin.families import petersen
from copwin.graph6 import emit_graph6


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(emit_graph6(petersen()) + "\n")
    return str(p)


class TestSolve:
    def test_file_input(self, petersen_file):
        code, text = run(["solve", "--input", petersen_file])
        assert code == EXIT_OK
        assert "c=3" in text and "status=ok" in text

    def test_json(self, petersen_file):
        code, text = run(["solve", "--input", petersen_file, "--json"])
        rec = json.loads(text.strip())
        assert rec["c"] == 3 and rec["n"] == 10

    def test_teleport_variant_reports_both(self, petersen_file):
        code, text = run(
            ["solve", "--input", petersen_file, "--variant", "teleport"]
        )
        assert "c=3" in text and "c_T=3" in text

    def test_builtin_enumeration(self):
        code, text = run(["solve", "--nmax", "3"])
        assert code == EXIT_OK
        assert len(text.strip().splitlines()) == 4  # classes up to n=3

    def test_parse_error_keeps_streaming(self, tmp_path):
        p = tmp_path / "bad.g6"
        p.write_text("!!\n@\n")
        code, text = run(["solve", "--input", str(p)])
        lines = text.strip().splitlines()
        assert "parse_error" in lines[0]
        assert "c=1" in lines[1]

    def test_deterministic_output(self, petersen_file):
        _, a = run(["solve", "--input", petersen_file])
        _, b = run(["solve", "--input", petersen_file])
        assert a == b

    def test_budget_exhaustion_marks_unresolved(self, petersen_file):
        code, text = run(["solve", "--input", petersen_file, "--budget", "10"])
        assert "status=unresolved" in text
        assert "c_lower_bound=1" in text

    def test_nmax_cap(self):
        code, _ = run(["solve", "--nmax", "12"])
        assert code == EXIT_USAGE


class TestScan:
    def test_theorem1_clean(self):
        code, text = run(["scan", "--check", "theorem1", "--nmax", "5"])
        assert code == EXIT_OK
        assert "violations=0" in text

    def test_header_and_summary_lines(self):
        _, text = run(["scan", "--check", "lemma4", "--nmax", "4"])
        lines = text.strip().splitlines()
        assert lines[0].startswith("# check=lemma4")
        assert lines[-1].startswith("# summary")

    def test_all_flag_emits_passes(self):
        _, quiet = run(["scan", "--check", "lemma4", "--nmax", "4"])
        _, loud = run(["scan", "--check", "lemma4", "--nmax", "4", "--all"])
        assert len(loud.splitlines()) > len(quiet.splitlines())

    def test_conjecture_scan_report_only(self):
        code, text = run(["scan", "--check", "conj_sqrt_n", "--nmax", "5"])
        assert code == EXIT_OK  # candidates never fail the run

    def test_teleport_conjecture(self):
        code, text = run(["scan", "--check", "conj_teleport", "--nmax", "5"])
        assert code == EXIT_OK
        assert "violations=0" in text

    def test_preceq_scan(self):
        code, text = run(["scan", "--check", "preceq_equiv", "--nmax", "4"])
        assert code == EXIT_OK
        assert "violations=0" in text

    def test_unresolved_returns_resource(self, petersen_file):
        code, text = run(
            ["scan", "--check", "theorem1", "--input", petersen_file,
             "--budget", "10"]
        )
        assert code == EXIT_RESOURCE
        assert "unresolved=1" in text

    def test_json_summary(self):
        _, text = run(["scan", "--check", "lemma5", "--nmax", "4", "--json"])
        last = json.loads(text.strip().splitlines()[-1])
        assert last["violations"] == 0


class TestGen:
    def test_petersen(self):
        code, text = run(["gen", "--family", "petersen"])
        assert code == EXIT_OK
        assert text.strip() == emit_graph6(petersen())

    def test_cycle_param(self):
        code, text = run(["gen", "--family", "cycle", "--param", "5"])
        assert code == EXIT_OK

    def test_missing_param(self):
        code, _ = run(["gen", "--family", "cycle"])
        assert code == EXIT_USAGE

    def test_large_graph_uses_extended_header(self):
        code, text = run(["gen", "--family", "hoffman_singleton"])
        assert code == EXIT_OK
        assert text.strip()


class TestTrap:
    def test_petersen_thresholds(self, petersen_file):
        code, text = run(["trap", "--input", petersen_file])
        assert code == EXIT_OK
        assert "thresholds=3,3,3,3,3,3,3,3,3,3" in text
        assert "alpha_traps=10" in text

    def test_alpha_override(self, petersen_file):
        _, text = run(["trap", "--input", petersen_file, "--alpha", "2"])
        assert "alpha_traps=0" in text


class TestIneq:
    def test_clean(self):
        code, text = run(["ineq", "--mmax", "100000"])
        assert code == EXIT_OK
        assert "violations=0" in text

    def test_json(self):
        _, text = run(["ineq", "--mmax", "1000", "--json"])
        rec = json.loads(text.strip())
        assert rec["violations"] == 0


class TestSimulate:
    def test_petersen(self, petersen_file):
        code, text = run(["simulate", "--input", petersen_file])
        assert code == EXIT_OK
        assert "captured round=" in text

    def test_greedy_robber(self, petersen_file):
        code, text = run(["simulate", "--input", petersen_file, "--robber", "greedy"])
        assert code == EXIT_OK
        assert "captured round=" in text
