import json
import subprocess
import sys

import pytest

from kpschubert import polyring as pr
from kpschubert.cli import main
from kpschubert.permkit import Permutation as P
from kpschubert.polyring import SparsePoly, x


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_schubert_text(capsys):
    assert run(capsys, "schubert", "2", "1")[:2] == (0, "x1")
    assert run(capsys, "schubert", "1")[:2] == (0, "1")
    assert run(capsys, "schubert", "132")[:2] == (0, "x1 + x2")


def test_schubert_json_round_trips(capsys):
    code, out, _ = run(capsys, "schubert", "4", "2", "1", "6", "3", "5", "--json")
    assert code == 0
    p = SparsePoly.from_json(json.loads(out))
    w = P([4, 2, 1, 6, 3, 5])
    assert p == pr.schubert(w)
    assert sum(c for _, c in p.items()) == p.evaluate([1] * 6)


def test_schubert_latex(capsys):
    assert run(capsys, "schubert", "2,1", "--latex")[1] == "x_{1}"


def test_malformed_permutation_is_usage_error(capsys):
    code, _, err = run(capsys, "schubert", "1", "1")
    assert code == 1 and "malformed permutation" in err


def test_unknown_command_exits_1():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_monk(capsys):
    code, out, _ = run(capsys, "monk", "1", "3", "5", "2", "4", "6", "2")
    assert code == 0
    assert {P(list(map(int, line))) for line in out.splitlines()} == {
        P([2, 3, 5, 1, 4, 6]), P([1, 5, 3, 2, 4, 6]), P([1, 4, 5, 2, 3, 6])}
    assert run(capsys, "monk", "2")[0] == 1


def test_transition(capsys):
    code, out, _ = run(capsys, "transition", "521863479", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1 and (data[0]["j"], data[0]["s"]) == (5, 7)
    code, out, _ = run(capsys, "transition", "521863479", "--all")
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "transition", "1")[0] == 1


def test_kp_char(capsys):
    assert run(capsys, "kp-char", "2", "1")[:2] == (0, "x1")
    code, out, _ = run(capsys, "kp-char", "132", "--ranks", "--json")
    assert json.loads(out) == [{"weight": [0, 1], "rank": 1}, {"weight": [1], "rank": 1}]


def test_kp_prime_char(capsys):
    code, out, _ = run(capsys, "kp-prime-char", "2", "1", "3", "--json")
    assert code == 0
    assert SparsePoly.from_json(json.loads(out)) == pr.schubert(P([1, 3, 2]))
    assert run(capsys, "kp-prime-char", "4123", "3")[0] == 1


def test_positivity(capsys):
    code, out, _ = run(capsys, "positivity", "monomial", "2", "2", "1")
    assert code == 0 and "nonnegative" in out
    code, out, _ = run(capsys, "positivity", "linear", "1,1", "132", "--json")
    assert code == 0 and json.loads(out)["nonnegative"]
    assert run(capsys, "positivity", "monomial", "1,2", "21")[0] == 1


def test_positivity_negative_exits_2(capsys, monkeypatch):
    from kpschubert import positivity
    real = positivity.schur_of_monomials

    def fake(sigma, w):
        rep = real(sigma, w)
        rep.expansion[P([])] = -1
        rep.failures.append((P([]), -1))
        return rep

    monkeypatch.setattr(positivity, "schur_of_monomials", fake)
    code, out, _ = run(capsys, "positivity", "monomial", "1", "21")
    assert code == 2 and "NEGATIVE" in out


def test_expand(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(((x(1) + x(2)) * pr.schubert(P([1, 3, 5, 2, 4, 6]))).to_json()))
    code, out, _ = run(capsys, "expand", str(path), "--json")
    assert code == 0
    exp = pr.Expansion.from_json(json.loads(out)["expansion"])
    assert exp == {P([2, 3, 5, 1, 4, 6]): 1, P([1, 5, 3, 2, 4, 6]): 1, P([1, 4, 5, 2, 3, 6]): 1}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "expand", str(bad))[0] == 1
    assert run(capsys, "expand", str(tmp_path / "missing.json"))[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "monk", "--n", "4")
    assert code == 0 and "72/72" in out
    code, out, _ = run(capsys, "verify", "box-basis", "--n", "2", "--json")
    assert code == 0
    assert json.loads(out) == [{"suite": "box-basis", "run": 2, "passed": 2,
                                "counterexample": None, "seconds": json.loads(out)[0]["seconds"]}]


def test_verify_failure_exits_2(capsys, monkeypatch):
    from kpschubert import verify
    builder, default, bound = verify.SUITES["box-basis"]
    monkeypatch.setitem(verify.SUITES, "box-basis",
                        (lambda n, s: builder(n, s) + [("planted", bool, (0,))], default, bound))
    code, out, _ = run(capsys, "verify", "box-basis", "--n", "2")
    assert code == 2 and "counterexample: planted" in out


def test_verify_bad_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "monk", "--n", "0"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 1


def test_verify_warns_above_bound(capsys):
    code, _, err = run(capsys, "verify", "positivity-monomial", "--n", "5")
    assert code == 0 and "desk-scale bound" in err


def test_cache_command(capsys, tmp_path):
    path = tmp_path / "t.json"
    assert run(capsys, "cache", str(path), "--n", "3")[0] == 0
    assert len(json.loads(path.read_text())) == 6


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kpschubert", "schubert", "3", "2", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "x1^2*x2"
    res = subprocess.run([sys.executable, "-m", "kpschubert"], capture_output=True, text=True)
    assert res.returncode == 1
