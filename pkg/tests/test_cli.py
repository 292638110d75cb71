import json

import jsonschema
import pytest

from galois_polylog.cli import main, sample_points
from galois_polylog.report import REPORT_SCHEMA, VerificationReport


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_landen3_ladic_symbolic(capsys):
    code, out, _ = run(capsys, "verify", "landen3", "--side", "ladic", "--mode", "symbolic")
    assert code == 0 and "[PASS] landen3-ladic" in out


def test_swapped_square_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "landen3", "--side", "ladic", "--swapped-square")
    assert code == 1 and "[FAIL]" in out


def test_tensor_criterion(capsys):
    code, out, _ = run(capsys, "verify", "tensor-criterion")
    assert code == 0 and "modulo torsion: 0" in out


@pytest.mark.parametrize("args", [
    ("verify", "oiueno", "--k", "9", "--mode", "symbolic"),
    ("verify", "landen3", "--side", "ladic", "--mode", "numeric"),
    ("verify", "oiueno", "--k", "6", "--mode", "numeric", "--side", "complex"),
    ("bch", "--degree", "9"),
    ("frobnicate",),
    ("verify", "landen3", "--bogus"),
])
def test_usage_errors(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2 and "usage" in err


def test_json_reports_follow_schema(capsys):
    code, out, _ = run(capsys, "--json", "verify", "pipeline")
    assert code == 0
    data = json.loads(out)
    assert [r["check-id"] for r in data] == sorted(r["check-id"] for r in data)
    for r in data:
        jsonschema.validate(r, REPORT_SCHEMA)
        assert VerificationReport.from_dict(r).to_dict() == r


def test_numeric_csv(capsys):
    code, out, _ = run(capsys, "verify", "landen3", "--side", "complex", "--mode", "numeric")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "equation-id,z,residual,terms"
    assert sum(1 for line in lines if line.startswith("landen-1.3,")) == 10


def test_tolerance_flag_can_fail(capsys):
    code, _, _ = run(capsys, "verify", "landen3", "--side", "complex", "--mode", "numeric", "--tol", "1e-40")
    assert code == 1


def test_expand_and_bch(capsys):
    code, out, _ = run(capsys, "expand", "--which", "G0", "--degree", "3")
    assert code == 0 and "XY\t-Li2_z" in out.splitlines()[5]
    code, out, _ = run(capsys, "--json", "bch", "--degree", "3")
    data = json.loads(out)
    assert {"lyndon": "XY", "bracket": "[X,Y]", "coefficient": "1/2"} in data["terms"]


def test_integrality(capsys):
    code, out, _ = run(capsys, "verify", "integrality", "--eq", "4.7", "--ell", "2", "3")
    assert code == 0
    code, _, err = run(capsys, "verify", "integrality", "--ell", "4")
    assert code == 2


def test_selftest_deterministic(capsys):
    first = run(capsys, "--json", "selftest", "--seed", "7")
    second = run(capsys, "--json", "selftest", "--seed", "7")
    assert first[0] == 0 and first[1] == second[1]


def test_sample_points():
    pts = sample_points(0, 10)
    assert len(pts) == 10 and max(pts) == 0.5 and min(pts) > 0.05
    assert pts == sample_points(0, 10)
