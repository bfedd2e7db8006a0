"""End-to-end command line behaviour: exit codes, JSON output, SVG output."""
import json
import subprocess
import sys

import pytest

from maxminsep.cli import main

SEPARABLE = {
    "dimension": 2,
    "box": {"lower": ["0.2", "0.2"], "upper": ["0.8", "0.5"]},
    "sets": {"C": [["0.1", "0.8"]]},
    "options": {"grid": 6, "fallback": True},
}

# hull sits straight above a full-width box: no semispace works, the
# hemispace fallback does
BLOCKED = {
    "dimension": 2,
    "box": {"lower": ["0", "0.3"], "upper": ["1", "0.5"]},
    "sets": {"C": [["0.4", "0.8"]]},
    "options": {"grid": 10, "fallback": True},
}

TWO_SETS = {
    "dimension": 2,
    "box": None,
    "sets": {
        "C1": [["0.55", "0.65"], ["0.85", "0.95"]],
        "C2": [["0.2", "0.3"], ["0.4", "0.2"]],
    },
    "options": {"grid": 8, "fallback": True},
}


def write_instance(tmp_path, data, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeparateBox:
    def test_separable_instance(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SEPARABLE)
        out_path = tmp_path / "cert.json"
        code, out, _ = run(capsys, ["separate-box", "-i", inst, "-o", str(out_path)])
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "box"
        assert data["outcome"] == "semispace"
        assert out_path.read_text(encoding="utf-8") == out

    def test_fallback_reaches_hemispace(self, tmp_path, capsys):
        inst = write_instance(tmp_path, BLOCKED)
        code, out, _ = run(capsys, ["separate-box", "-i", inst])
        assert code == 0
        data = json.loads(out)
        assert data["outcome"] == "hemispace"
        assert data["separator"]["M"] == [2]

    def test_no_fallback_is_a_clean_negative(self, tmp_path, capsys):
        inst = write_instance(tmp_path, BLOCKED)
        code, out, _ = run(capsys, ["separate-box", "-i", inst, "--no-fallback"])
        assert code == 2
        data = json.loads(out)
        assert data["outcome"] == "not-separable"
        assert data["witness"] == ["0.4", "0.8"]

    def test_instance_without_box_fails(self, tmp_path, capsys):
        inst = write_instance(tmp_path, {"dimension": 2, "sets": {"C": [["0.5", "0.5"]]}})
        code, _, err = run(capsys, ["separate-box", "-i", inst])
        assert code == 1
        assert "error:" in err

    def test_intersecting_instance_fails(self, tmp_path, capsys):
        bad = dict(SEPARABLE, sets={"C": [["0.5", "0.3"]]})
        inst = write_instance(tmp_path, bad)
        code, _, err = run(capsys, ["separate-box", "-i", inst])
        assert code == 1
        assert "error:" in err

    def test_float_coordinates_are_rejected(self, tmp_path, capsys):
        bad = dict(SEPARABLE, sets={"C": [[0.1, 0.8]]})
        inst = write_instance(tmp_path, bad)
        code, _, err = run(capsys, ["separate-box", "-i", inst])
        assert code == 1
        assert "error:" in err


class TestSeparateTwoSets:
    def test_box_certificate(self, tmp_path, capsys):
        inst = write_instance(tmp_path, TWO_SETS)
        code, out, _ = run(capsys, ["separate-2d", "-i", inst])
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "two-set"
        assert data["boxed_set"] == 1
        assert data["semispace"] is None

    def test_with_semispace(self, tmp_path, capsys):
        inst = write_instance(tmp_path, TWO_SETS)
        code, out, _ = run(capsys, ["separate-2d", "-i", inst, "--with-semispace"])
        assert code == 0
        data = json.loads(out)
        assert data["semispace"] is not None

    def test_boundary_generators_fail_with_semispace(self, tmp_path, capsys):
        bad = dict(TWO_SETS, sets={"C1": [["0", "0.5"]], "C2": [["0.8", "0.2"]]})
        inst = write_instance(tmp_path, bad)
        code, _, err = run(capsys, ["separate-2d", "-i", inst, "--with-semispace"])
        assert code == 1
        assert "error:" in err


class TestFamily:
    def test_interior_point_gets_dimension_plus_one(self, capsys):
        code, out, _ = run(capsys, ["family", "-p", "0.6,0.3"])
        assert code == 0
        data = json.loads(out)
        assert data["x0"] == ["0.6", "0.3"]
        assert len(data["family"]) == 3
        assert data["family"][0]["type"] == "S0"

    def test_point_with_a_one_drops_s0(self, capsys):
        code, out, _ = run(capsys, ["family", "-p", "1,0.5"])
        assert code == 0
        data = json.loads(out)
        assert len(data["family"]) == 2
        assert all(entry["type"] == "Si" for entry in data["family"])

    def test_bad_coordinate(self, capsys):
        code, _, err = run(capsys, ["family", "-p", "0.5,1.5"])
        assert code == 1
        assert "error:" in err


class TestCheckCond:
    def test_condition_holds(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SEPARABLE)
        code, out, _ = run(capsys, ["check-cond", "-i", inst])
        assert code == 0
        assert json.loads(out) == {"holds": True, "witness": None}

    def test_condition_violated(self, tmp_path, capsys):
        inst = write_instance(tmp_path, BLOCKED)
        code, out, _ = run(capsys, ["check-cond", "-i", inst])
        assert code == 2
        data = json.loads(out)
        assert data["holds"] is False
        assert data["witness"] == ["0.4", "0.8"]


class TestVerify:
    def emit_certificate(self, tmp_path, capsys, instance, extra=()):
        inst = write_instance(tmp_path, instance)
        cert_path = tmp_path / "cert.json"
        code, _, _ = run(
            capsys, ["separate-box", "-i", inst, "-o", str(cert_path), *extra]
        )
        return code, cert_path

    def test_semispace_certificate_is_valid(self, tmp_path, capsys):
        _, cert_path = self.emit_certificate(tmp_path, capsys, SEPARABLE)
        code, out, _ = run(capsys, ["verify", "-i", str(cert_path)])
        assert code == 0
        data = json.loads(out)
        assert data["valid"] is True
        assert data["grid"] == 6
        assert all(c["ok"] for c in data["checks"])

    def test_hemispace_certificate_is_valid(self, tmp_path, capsys):
        _, cert_path = self.emit_certificate(tmp_path, capsys, BLOCKED)
        code, out, _ = run(capsys, ["verify", "-i", str(cert_path), "--grid", "8"])
        assert code == 0
        data = json.loads(out)
        assert data["valid"] is True
        assert data["grid"] == 8

    def test_negative_certificate_is_valid(self, tmp_path, capsys):
        code, cert_path = self.emit_certificate(
            tmp_path, capsys, BLOCKED, extra=["--no-fallback"]
        )
        assert code == 2
        code, out, _ = run(capsys, ["verify", "-i", str(cert_path), "--grid", "10"])
        assert code == 0
        assert json.loads(out)["valid"] is True

    def test_tampered_certificate_is_invalid(self, tmp_path, capsys):
        _, cert_path = self.emit_certificate(tmp_path, capsys, SEPARABLE)
        data = json.loads(cert_path.read_text(encoding="utf-8"))
        data["separator"]["x0"] = ["0.9", "0.9"]
        cert_path.write_text(json.dumps(data), encoding="utf-8")
        code, out, _ = run(capsys, ["verify", "-i", str(cert_path)])
        assert code == 1
        report = json.loads(out)
        assert report["valid"] is False
        assert any(not c["ok"] for c in report["checks"])

    def test_two_set_certificate_verifies(self, tmp_path, capsys):
        inst = write_instance(tmp_path, TWO_SETS)
        cert_path = tmp_path / "cert.json"
        run(capsys, ["separate-2d", "-i", inst, "--with-semispace", "-o", str(cert_path)])
        code, out, _ = run(capsys, ["verify", "-i", str(cert_path)])
        assert code == 0
        assert json.loads(out)["valid"] is True

    def test_certificate_without_instance(self, tmp_path, capsys):
        path = tmp_path / "bare.json"
        path.write_text(json.dumps({"kind": "box", "outcome": "semispace"}))
        code, _, err = run(capsys, ["verify", "-i", str(path)])
        assert code == 1
        assert "error:" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, ["verify", "-i", str(tmp_path / "nope.json")])
        assert code == 1
        assert "error:" in err


class TestPlot:
    def test_writes_svg(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SEPARABLE)
        out_path = tmp_path / "scene.svg"
        code, out, _ = run(capsys, ["plot", "-i", inst, "-o", str(out_path)])
        assert code == 0
        text = out_path.read_text(encoding="utf-8")
        assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
        assert str(out_path) in out

    def test_certificate_overlay(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SEPARABLE)
        cert_path = tmp_path / "cert.json"
        run(capsys, ["separate-box", "-i", inst, "-o", str(cert_path)])
        out_path = tmp_path / "scene.svg"
        code, _, _ = run(
            capsys, ["plot", "-i", inst, "-c", str(cert_path), "-o", str(out_path)]
        )
        assert code == 0
        assert "<svg" in out_path.read_text(encoding="utf-8")

    def test_rejects_non_planar_instances(self, tmp_path, capsys):
        inst = write_instance(
            tmp_path,
            {"dimension": 3, "sets": {"C": [["0.2", "0.5", "0.4"]]}},
        )
        code, _, err = run(capsys, ["plot", "-i", inst, "-o", str(tmp_path / "x.svg")])
        assert code == 1
        assert "error:" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "maxminsep", "family", "-p", "0.5,0.5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["x0"] == ["0.5", "0.5"]
