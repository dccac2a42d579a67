import json
import subprocess
import sys
from fractions import Fraction

import pytest

from pennercert.cli import main
from pennercert.family import claim_operator
from pennercert.intmatrix import from_rows, identity, matrix_to_json
from pennercert.spectral import SpectralInterval


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def text_fields(out):
    fields = {}
    for line in out.splitlines():
        key, _, value = line.partition(": ")
        fields[key] = value
    return fields


def test_analyze_claim_operator(capsys, files):
    path = files("c5.json", matrix_to_json(claim_operator(5)))
    code, out, _ = run(capsys, "analyze", path, "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert len(rep["components"]) == 5
    assert rep["perron_frobenius"] is False and rep["exceeds_one"] is True
    assert rep["spectral_radius"] == {"lower": "2/1", "upper": "2/1"}


def test_analyze_permutation(capsys, files):
    path = files("p.txt", "0 1 0\n0 0 1\n1 0 0\n")
    code, out, _ = run(capsys, "analyze", path)
    f = text_fields(out)
    assert code == 0
    assert f["exceeds_one"] == "false"
    assert f["spectral_radius"].startswith("[1/1, 1/1]")


def test_analyze_fibonacci_text_matches_json(capsys, files):
    path = files("fib.txt", "0 1\n1 1\n")
    _, out_json, _ = run(capsys, "analyze", path, "--format", "json", "--gap", "1/1000000")
    _, out_text, _ = run(capsys, "analyze", path, "--gap", "1/1000000")
    rep, f = json.loads(out_json), text_fields(out_text)
    assert rep["perron_frobenius"] is True
    lo, hi = Fraction(rep["spectral_radius"]["lower"]), Fraction(rep["spectral_radius"]["upper"])
    assert lo < (1 + 5**0.5) / 2 < hi and hi - lo <= Fraction(1, 10**6)
    for key, value in rep.items():
        if isinstance(value, dict):
            assert f[key].startswith(f"[{value['lower']}, {value['upper']}]")
        elif isinstance(value, bool):
            assert f[key] == str(value).lower()
        elif isinstance(value, list):
            assert json.loads(f[key]) == value
        else:
            assert f[key] == str(value)


def test_gap_cap_exit_3(capsys, files):
    path = files("fib.txt", "0 1\n1 1\n")
    tiny = "1/" + "1" + "0" * 30
    code, out, _ = run(capsys, "analyze", path, "--format", "json", "--gap", tiny, "--max-iter", "2")
    rep = json.loads(out)
    assert code == 3
    assert rep["complete"] is False
    lo, hi = (Fraction(rep["spectral_radius"][k]) for k in ("lower", "upper"))
    assert lo < (1 + 5**0.5) / 2 < hi
    sub = files("fib.sub", "a -> a b\nb -> a\n")
    assert run(capsys, "entropy", sub, "--gap", tiny, "--max-iter", "2")[0] == 3


@pytest.mark.parametrize("text", ["0 1\n1\n", "0 -1\n1 1\n", "{bad", "a b\nc d\n"])
def test_parse_errors_exit_2(capsys, files, text):
    path = files("bad.txt", text)
    for cmd in ("analyze", "certify"):
        code, _, err = run(capsys, cmd, path)
        assert code == 2 and "ParseError" in err


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 2


def test_certify_check_roundtrip(capsys, files, tmp_path):
    mpath = files("m.txt", "0 1 1\n1 0 0\n1 1 0\n")
    cpath = str(tmp_path / "cert.json")
    assert run(capsys, "certify", mpath, "--output", cpath)[0] == 0
    code, out, _ = run(capsys, "check", mpath, cpath)
    assert code == 0 and "valid: true" in out


def test_certify_permutation_exit_1(capsys, files):
    path = files("id.txt", matrix_to_json(identity(3)))
    code, out, err = run(capsys, "certify", path)
    assert code == 1 and "LeadingEigenvalueNotAboveOne" in err and out == ""


def test_check_tampered_exit_1(capsys, files):
    mpath = files("fib.txt", "0 1\n1 1\n")
    _, out, _ = run(capsys, "certify", mpath)
    doc = json.loads(out)
    doc["power_column_sums"][0] = "1"
    cpath = files("bad.json", json.dumps(doc))
    code, out, _ = run(capsys, "check", mpath, cpath, "--format", "json")
    assert code == 1 and json.loads(out) == {"valid": False}


def test_check_dimension_mismatch_exit_1(capsys, files):
    mpath = files("fib.txt", "0 1\n1 1\n")
    other = files("c.txt", matrix_to_json(claim_operator(4)))
    _, cert, _ = run(capsys, "certify", other)
    cpath = files("c.json", cert)
    assert run(capsys, "check", mpath, cpath)[0] == 1


def test_check_bad_certificate_exit_2(capsys, files):
    mpath = files("fib.txt", "0 1\n1 1\n")
    cpath = files("c.json", "{not json")
    assert run(capsys, "check", mpath, cpath)[0] == 2


def test_certify_text_format(capsys, files):
    path = files("c.txt", matrix_to_json(claim_operator(6)))
    code, out, _ = run(capsys, "certify", path, "--format", "text")
    f = text_fields(out)
    assert code == 0
    assert f["dominant_vertices"] == "[2]" and f["n_prime"] == "1"


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "1")
    assert code == 0
    assert "log λ ≥ log 2 / 3 ≈ 0.2310490602" in out
    code, out, _ = run(capsys, "bound", "10", "--format", "json")
    assert json.loads(out)["exponent"] == "1/30"
    code, _, err = run(capsys, "bound", "0")
    assert code == 1 and "NonPositiveChi" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "2", "--k", "8", "--chi", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["lambda_exponent"] == "1/2"
    assert rep["bound_exponent"] == "1/6"
    assert rep["ratio"] == "3/1"
    assert rep["k"] == 8
    assert rep["claim_operator_radius"] == {"lower": "2/1", "upper": "2/1"}
    code, out, _ = run(capsys, "family", "2", "--k", "8", "--chi", "2")
    f = text_fields(out)
    assert f["ratio"].startswith("3/1") and f["bound_exponent"].startswith("1/6")


def test_family_bad_k_exit_1(capsys):
    code, _, err = run(capsys, "family", "2", "--k", "1")
    assert code == 1 and "DimensionTooSmall" in err


def test_entropy(capsys, files):
    path = files("fib.sub", "# Fibonacci\na -> a b\nb -> a\n")
    code, out, _ = run(capsys, "entropy", path, "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["incidence"] == [[1, 1], [1, 0]]
    I = SpectralInterval(Fraction(rep["spectral_radius"]["lower"]), Fraction(rep["spectral_radius"]["upper"]))
    assert I.contains((1 + 5**0.5) / 2, tol=1e-12)
    assert float(rep["entropy"][0]) == pytest.approx(0.4812118251, abs=1e-9)


def test_entropy_parse_error(capsys, files):
    path = files("bad.sub", "a -> z\n")
    assert run(capsys, "entropy", path)[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["analyze", "x", "--gap", "-1/2"])
    assert info.value.code == 2


def test_stdin_and_byte_for_byte_pipeline(tmp_path):
    matrix = "0 1 2\n1 0 0\n0 1 1\n"
    mpath = tmp_path / "m.txt"
    mpath.write_text(matrix)
    cli = [sys.executable, "-m", "pennercert"]
    cert = subprocess.run(cli + ["certify", "-"], input=matrix, capture_output=True, text=True, check=True)
    checked = subprocess.run(cli + ["check", str(mpath), "-"], input=cert.stdout, capture_output=True, text=True)
    assert checked.returncode == 0
    both = subprocess.run(cli + ["check", "-", "-"], input="", capture_output=True, text=True)
    assert both.returncode == 2
