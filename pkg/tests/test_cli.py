import json
import subprocess

import pytest

from charp.cli import main
from charp.suites import SUITE_NAMES, verify_suite

PASS_SCRIPT = """
ring R = char 2 vars x, y;
ideal I = x, y;
assert member(x, I);
"""

FAIL_SCRIPT = """
ring R = char 2 vars x, y;
ideal I = x;
assert member(y, I);
"""

BAD_SCRIPT = "ring R = char 4 vars x;"


def run_alg(args):
    return subprocess.run(["alg", *args], capture_output=True, text=True)


class TestRunCommand:
    def test_exit_zero_on_pass(self, tmp_path):
        f = tmp_path / "ok.alg"
        f.write_text(PASS_SCRIPT)
        assert main(["run", str(f)]) == 0

    def test_exit_one_on_assert_failure(self, tmp_path):
        f = tmp_path / "bad.alg"
        f.write_text(FAIL_SCRIPT)
        assert main(["run", str(f)]) == 1

    def test_exit_two_on_ring_error(self, tmp_path):
        f = tmp_path / "err.alg"
        f.write_text(BAD_SCRIPT)
        assert main(["run", str(f)]) == 2

    def test_exit_two_on_missing_file(self):
        assert main(["run", "/nonexistent/x.alg"]) == 2

    def test_json_report_written(self, tmp_path):
        f = tmp_path / "ok.alg"
        f.write_text(PASS_SCRIPT)
        out = tmp_path / "report.json"
        assert main(["run", str(f), "--json", str(out)]) == 0
        data = json.loads(out.read_text())
        assert set(data) == {"suite", "params", "seed", "checks", "timings"}
        assert data["checks"][0]["status"] == "pass"


class TestVerifyCommand:
    def test_paper_example_passes(self, tmp_path):
        out = tmp_path / "r.json"
        assert main(["verify", "paper-example", "--json", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["suite"] == "paper-example"
        assert all(c["status"] == "pass" for c in data["checks"])

    def test_all_suites_registered(self):
        assert len(SUITE_NAMES) == 13

    def test_unknown_suite_is_input_error(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "no-such-suite"])
        assert err.value.code == 2

    def test_custom_ring_flags(self):
        # regular ambient ring: tau = (1), everything trivial but runnable
        assert main(["verify", "decr", "--p", "3", "--vars", "x,y",
                     "--qmax", "1"]) == 0

    def test_named_ring_flag(self):
        assert main(["verify", "decr", "--ring", "poly2_2",
                     "--qmax", "1"]) == 0

    def test_entry_point_installed(self):
        result = run_alg(["verify", "paper-example"])
        assert result.returncode == 0
        assert "[pass]" in result.stdout


class TestDeterminism:
    def test_reports_byte_identical_modulo_timings(self):
        a = verify_suite("paper-example", {"seed": 5})
        b = verify_suite("paper-example", {"seed": 5})
        a.pop("timings"), b.pop("timings")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_subprocess_reports_byte_identical(self, tmp_path):
        outs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            result = run_alg(["verify", "mapping-cone", "--seed", "3",
                              "--json", str(out)])
            assert result.returncode == 0
            data = json.loads(out.read_text())
            data.pop("timings")
            outs.append(json.dumps(data, sort_keys=True))
        assert outs[0] == outs[1]
