import json

import pytest

from tilegroups.cli import build_case_report, main, reference_cases
from tilegroups.exactnum import QuadraticRational as QR


class TestGenerate:
    def test_case_dump(self, tmp_path):
        out = tmp_path / "dump.json"
        rc = main(["generate", "--case", "fib", "--half-width", "10",
                   "--max-len", "4", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["spec"]["kind"] == "substitution"
        assert len(data["pointset"]["points"]) == 22
        # exact strings parse back
        for p in data["pointset"]["points"]:
            QR.from_string(p)
        assert "bb" not in data["language"]["words"]

    def test_scheme_dump(self, tmp_path):
        out = tmp_path / "model.json"
        rc = main(["generate", "--builtin-scheme", "--radius", "20", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["count"] == len(data["points"]) > 0
        values = [QR.from_string(p) for p in data["points"]]
        assert values == sorted(values)

    def test_custom_spec_file(self, tmp_path):
        spec_file = tmp_path / "spec.json"
        spec_file.write_text('{"kind":"periodic","word":"ab"}')
        out = tmp_path / "dump.json"
        rc = main(["generate", "--spec", str(spec_file), "--lengths", "a=2,b=1",
                   "--half-width", "10", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        # leftmost point r_{-11}: gaps T(0..-10) alternate a,b from a: 6*2+5*1
        assert data["pointset"]["points"][0] == "-17"

    def test_invalid_scheme_window_diagnostic(self, tmp_path, capsys):
        scheme_file = tmp_path / "bad.json"
        scheme_file.write_text(json.dumps({
            "v1": {"phys": "1", "int": "1"},
            "v2": {"phys": "1/2+1/2*sqrt(5)", "int": "1/2-1/2*sqrt(5)"},
            "window": [["1", "0"]],
        }))
        rc = main(["generate", "--scheme", str(scheme_file), "--radius", "5"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestPresent:
    def test_fib_report(self, tmp_path):
        out = tmp_path / "report.json"
        rc = main(["present", "--case", "fib", "--half-width", "30",
                   "--max-len", "8", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["universal_group"]["statement"].startswith("Z^2")
        assert data["difference_group"]["rank"] == 2

    def test_reports_deterministic(self):
        cases = reference_cases()
        a = build_case_report(cases["periodic-ab-2-1"], 20, 6)
        b = build_case_report(cases["periodic-ab-2-1"], 20, 6)
        assert a == b

    def test_splice_flag_present(self):
        rep = build_case_report(reference_cases()["splice-irrational"], 20, 10)
        assert rep["difference_group"]["table_discrepancy"] is True
        assert rep["table"] == {"universal_group": "FG_2", "difference_group": "Z"}


class TestVerify:
    def test_single_suite_exit_zero(self, capsys, tmp_path):
        out = tmp_path / "verify.json"
        rc = main(["verify", "--suite", "partial-action", "--out", str(out)])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert any(line.startswith("[PASS]") for line in lines)
        assert not any(line.startswith("[FAIL]") for line in lines)
        data = json.loads(out.read_text())
        assert data["failed"] == 0

    def test_empire_suite_seeded(self, capsys):
        rc = main(["verify", "--suite", "empire", "--pairs", "30", "--seed", "7"])
        assert rc == 0

    def test_unknown_case_rejected(self):
        with pytest.raises(SystemExit):
            main(["present", "--case", "nonesuch"])
