"""Command-line interface: exit codes, output shapes, determinism."""

import json
import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "blfkit.cli", *args],
        capture_output=True,
        text=True,
    )


class TestVerify:
    def test_passing_scenario_exits_zero(self):
        proc = run_cli("verify", "negative-modification")
        assert proc.returncode == 0
        assert "[ok] round-invariance" in proc.stdout
        assert "[ok] reduced-monodromy" in proc.stdout
        assert "[FAIL]" not in proc.stdout

    def test_failing_check_exits_one(self):
        proc = run_cli("verify", "positive-modification")
        assert proc.returncode == 1
        assert "[FAIL] reduced-monodromy" in proc.stdout
        assert "[ok] vertex-joining" in proc.stdout

    def test_json_report_written(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "family-1", "--json", str(out))
        assert proc.returncode == 0
        data = json.loads(out.read_text())
        assert data["scenario"] == "family-1"
        assert data["ok"] is True

    def test_unknown_scenario_rejected(self):
        proc = run_cli("verify", "nope")
        assert proc.returncode == 2


class TestListScenarios:
    def test_lists_all_five(self):
        proc = run_cli("list-scenarios")
        assert proc.returncode == 0
        names = [line.split(":")[0] for line in proc.stdout.splitlines() if line]
        assert sorted(names) == [
            "family-1",
            "family-2",
            "family-3",
            "negative-modification",
            "positive-modification",
        ]


class TestDumpDeterminism:
    @pytest.mark.parametrize("name", ["negative-modification", "positive-modification"])
    def test_dump_is_byte_identical_across_runs(self, name):
        a = run_cli("dump-scenario", name)
        b = run_cli("dump-scenario", name)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
        json.loads(a.stdout)

    def test_generate_family_matches_dump(self):
        a = run_cli("generate-family", "2")
        b = run_cli("dump-scenario", "family-2")
        assert a.returncode == b.returncode == 0
        assert json.loads(a.stdout) == json.loads(b.stdout)


class TestRender:
    def test_svg_byte_identical_across_runs(self, tmp_path):
        one, two = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run_cli("render", "negative-modification", "-o", str(one)).returncode == 0
        assert run_cli("render", "negative-modification", "-o", str(two)).returncode == 0
        data = one.read_bytes()
        assert data == two.read_bytes()
        assert data.startswith(b"<svg") or b"<svg" in data[:200]


class TestOracleCrosscheck:
    def test_agreement_run_exits_zero(self):
        proc = run_cli("oracle-crosscheck", "--count", "10", "--seed", "3",
                       "--max-length", "4")
        assert proc.returncode == 0
        assert "10/10" in proc.stdout or "ok" in proc.stdout.lower()

    def test_seeded_runs_identical(self):
        a = run_cli("oracle-crosscheck", "--count", "10", "--seed", "3")
        b = run_cli("oracle-crosscheck", "--count", "10", "--seed", "3")
        assert a.stdout == b.stdout


class TestHandleSim:
    def test_full_picture_trace(self):
        proc = run_cli("handle-sim", "--genus", "2")
        assert proc.returncode == 0
        assert "cancel12" in proc.stdout
        assert "slide" in proc.stdout

    def test_localized_piece(self):
        proc = run_cli("handle-sim", "--localized")
        assert proc.returncode == 0
