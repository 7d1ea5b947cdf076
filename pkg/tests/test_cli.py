import io
import json
import re
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from chevbass import cli, cohom
from chevbass.report import ReportDocument


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_text():
    code, out = run("compute", "-m", "13203", "-g", "8353")
    assert code == 0
    assert re.search(r"^lambda_cb\s+36$", out, re.M)
    assert "j=2 t=3 n=4401 surjective" in out


def test_compute_crt_matches_generator():
    a = run("compute", "-m", "13203", "--crt", "3^4:10,163:40", "--json")
    b = run("compute", "-m", "13203", "-g", "8353", "--json")
    assert a[0] == b[0] == 0
    da, db = ReportDocument.from_json(a[1]), ReportDocument.from_json(b[1])
    assert da.generators == (8353,)
    assert da.numeric_content() == db.numeric_content()


def test_cyclotomic():
    code, out = run("cyclotomic", "7", "--json")
    assert code == 0 and json.loads(out)["lambda_cb"] == 28


def test_h1_subcommand():
    code, out = run("h1", "-n", "4", "-g", "3", "-p", "2", "-t", "2")
    assert code == 0 and out.splitlines()[0] == "[2]"
    code, out = run("h1", "-n", "81", "-g", "28", "-p", "3", "-t", "4", "--json")
    assert code == 0 and json.loads(out)["invariant_factors"] == []


def test_verbose_streams_checks(capsys):
    code, _ = run("compute", "-m", "13203", "-g", "8353", "--verbose")
    assert code == 0
    assert "check p=3 j=2 t=3 n=4401 surjective" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("compute", "-m", "12", "-g", "6"),
    ("compute", "-m", "abc"),
    ("compute", "-m", "0"),
    ("compute", "-m", "13203", "--crt", "81:10,167:40"),
    ("cyclotomic", "-3"),
    ("h1", "-n", "10", "-p", "3", "-t", "1"),
    ("frobnicate",),
    (),
])
def test_input_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    assert "error" in capsys.readouterr().err


def test_factorization_bound_exit_3(capsys):
    m = (2**31 - 1) * (2**61 - 1)
    assert run("compute", "-m", str(m))[0] == 3
    assert "resource bound" in capsys.readouterr().err


def schema():
    text = resources.files("chevbass").joinpath("report.schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("argv", [
    ("cyclotomic", "7"),
    ("cyclotomic", str(2**60)),
    ("compute", "-m", "13203", "-g", "8353"),
    ("compute", "-m", "16", "-g", "15", "--full-scan"),
])
def test_json_schema_and_round_trip(argv):
    code, out = run(*argv, "--json")
    assert code == 0
    d = json.loads(out)
    jsonschema.validate(d, schema())
    doc = ReportDocument.from_dict(d)
    assert json.loads(doc.to_json()) == d


def test_large_values_are_strings():
    d = json.loads(run("cyclotomic", str(2**60), "--json")[1])
    assert d["lambda_cb"] == str(2**60)
    assert d["input"]["modulus"] == str(2**60)
    assert d["per_prime"][0]["valuation"] == 60
    d = json.loads(run("cyclotomic", str(2**52), "--json")[1])
    assert d["lambda_cb"] == 2**52


def test_text_and_json_carry_same_numbers():
    _, text = run("compute", "-m", "13203", "-g", "8353")
    doc = ReportDocument.from_json(run("compute", "-m", "13203", "-g", "8353", "--json")[1])
    rows = dict(re.findall(r"^(\w+)\s{2,}(\S+)$", text, re.M))
    assert int(rows["lambda_cb"]) == doc.lambda_cb
    assert int(rows["conductor"]) == doc.conductor
    assert int(rows["lambda"]) == doc.lam
    assert int(rows["f_prime"]) == doc.f_prime
    assert int(rows["total_checks"]) == doc.total_checks
    assert doc.to_text().splitlines()[:-1] == text.splitlines()[:-1]


def test_threads_flag_same_output():
    a = ReportDocument.from_json(run("compute", "-m", "13203", "-g", "8353", "--json")[1])
    b = ReportDocument.from_json(run("compute", "-m", "13203", "-g", "8353", "--json", "--threads", "4")[1])
    assert a.numeric_content() == b.numeric_content()


def test_selftest_quick_passes():
    code, out = run("selftest", "--depth", "quick")
    assert code == 0, out
    assert out.strip().splitlines()[-1].startswith("PASS")


def test_selftest_detects_broken_engine(monkeypatch):
    real = cohom.h1

    def broken(basis, p, t):
        g = real(basis, p, t)
        return cohom.H1Group(p, t, g.invariant_factors + ((p,) if t else ()))

    monkeypatch.setattr(cohom, "h1", broken)
    code, out = run("selftest", "--depth", "quick")
    assert code == 1
    assert "FAIL" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "chevbass", "cyclotomic", "5"],
                       capture_output=True, text=True, check=True)
    assert re.search(r"^lambda_cb\s+20$", r.stdout, re.M)
