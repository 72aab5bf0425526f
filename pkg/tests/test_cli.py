import json

import pytest

from cubic_hecke import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sieve_csv(capsys, tmp_path):
    out = tmp_path / "p.csv"
    code, _, _ = run(capsys, "--cache-dir", str(tmp_path / "c"), "sieve", "--limit", "300", "--out", str(out))
    lines = out.read_text().splitlines()
    assert code == 0 and lines[0] == "a,b,norm,splitting" and lines[1] == "-8,-9,73,split"


def test_symbol_and_gauss(capsys):
    code, out, _ = run(capsys, "symbol", "--a", "2+3w", "--n", "1+9w")
    assert code == 0 and json.loads(out)["exponent"] in (0, 1, 2)
    code, out, _ = run(capsys, "gauss", "--n", "1+9w")
    assert code == 0 and abs(json.loads(out)["abs2_over_norm"] - 1) < 1e-12


def test_lvalue_and_zeros(capsys, tmp_path):
    code, out, _ = run(capsys, "lvalue", "--pi", "1+9w", "--s", "2,0")
    assert code == 0 and json.loads(out)["side"] == "K"
    code, out, _ = run(capsys, "lvalue", "--pi", "1+9w", "--s", "0.5,3", "--q-side")
    assert code == 0 and json.loads(out)["side"] == "Q"
    f = tmp_path / "z.csv"
    code, _, _ = run(capsys, "--cache-dir", "", "zeros", "--pi", "1+9w", "--T", "6", "--out", str(f))
    text = f.read_text().splitlines()
    assert code == 0 and text[0].startswith("# height=") and text[1] == "ordinate,refined_error"


def test_moment_report(capsys, tmp_path):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "moment", "--kind", "first", "--X", "2e3", "--alpha", "0,0")
    rep = json.loads(out)
    assert code == 0 and rep["kind"] == "first" and set(rep) >= {"lhs", "main_term", "ratio", "predicted_exponent", "flags"}
    # same config, populated cache: byte-identical
    code, out2, _ = run(capsys, "--cache-dir", str(tmp_path), "moment", "--kind", "first", "--X", "2e3", "--alpha", "0,0")
    assert out2 == out


def test_dump_terms(capsys, tmp_path):
    d = tmp_path / "t.csv"
    code, _, _ = run(capsys, "moment", "--kind", "negative", "--X", "2e3", "--beta", "1", "--dump-terms", str(d))
    assert code == 0 and d.read_text().startswith("a,b,norm,weight,lambda,re,im")


@pytest.mark.parametrize("argv,code", [
    (("lvalue", "--pi", "1+3w", "--s", "2"), 1),  # norm 7: not 1 mod 9
    (("moment", "--kind", "first", "--X", "1e3", "--alpha", "-0.5"), 1),
    (("moment", "--kind", "ratios", "--X", "1e3", "--alpha", "0.1"), 1),
    (("lvalue", "--pi", "1+9w", "--s", "0.7", "--mode", "direct"), 1),  # divergent series
    (("lvalue", "--pi", "1+9w", "--s", "1.05", "--mode", "direct"), 2),  # tail bound unreachable
    (("sieve", "--limit", "1e12"), 3),
    (("symbol", "--a", "9999999999999999999", "--n", "1+9w"), 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code
