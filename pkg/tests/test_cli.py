import json
import subprocess
import sys

import pytest

from kbsm.cli import main
from kbsm.elements import SkeinElement, cheb_elem
from kbsm.jsonio import dumps, element_from_json, element_to_json
from kbsm.laurent import LaurentPoly
from kbsm.relators import relator
from kbsm.torsion import tau


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRelatorCmd:
    def test_c11(self, capsys):
        code, out, _ = run(capsys, "relator", "--family", "C", "--m", "1", "--n", "1", "--q", "0")
        obj = json.loads(out)
        assert code == 0 and len(obj["terms"]) == 2
        assert (obj["family"], obj["m"], obj["n"], obj["q"]) == ("C", 1, 1, 0)

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "relator", "--family", "C", "--m", "0", "--n", "0", "--q", "5")
        assert code == 0 and json.loads(out)["terms"] == []

    def test_cbar(self, capsys):
        code, out, _ = run(capsys, "relator", "--family", "Cbar", "--m", "0", "--n", "0", "--q", "2")
        obj = json.loads(out)
        assert obj["terms"] == [{"i": 0, "j": 2, "k": 0, "coeff": [[-4, 1], [4, -1]]}]

    def test_byte_stable(self, capsys):
        argv = ("relator", "--family", "C", "--m", "3", "--n", "-2", "--q", "4")
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]

    @pytest.mark.parametrize("argv", [
        ("relator", "--family", "C", "--m", "-1", "--n", "0", "--q", "0"),
        ("relator", "--family", "X", "--m", "1", "--n", "0", "--q", "0"),
        ("relator", "--family", "C", "--m", "1", "--n", "0", "--q", "0", "--bogus"),
        ("nonsplit", "--depth", "0"),
        ("certify-eprime", "--i", "0"),
    ])
    def test_usage_errors(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        assert exc.value.code == 2


class TestVerifyCmd:
    @pytest.mark.parametrize("suite", ["appendix", "antisymmetry", "mirror", "closed-form", "vanishing"])
    def test_pass(self, capsys, suite):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--max-m", "5", "--max-n", "5", "--max-q", "3")
        assert code == 0 and out.strip().endswith("PASS")

    def test_torsion_counts(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "torsion", "--max-m", "3", "--max-n", "3", "--max-q", "3")
        assert code == 0 and "tau-certificate" in out

    def test_seed_printed_and_env_override(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "verify", "--suite", "soundness", "--samples", "5", "--seed", "11")
        assert code == 0 and out.startswith("seed: 11")
        monkeypatch.setenv("SKEIN_SEED", "42")
        code, out, _ = run(capsys, "verify", "--suite", "soundness", "--samples", "5", "--seed", "11")
        assert out.startswith("seed: 42")

    def test_failure_exit_code(self, capsys, monkeypatch):
        from kbsm import checks
        bad = checks.CheckResult("broken", "always fails")
        bad.record(False, "here")
        monkeypatch.setitem(checks.SUITES, "mirror", lambda *a, **k: [bad])
        code, out, _ = run(capsys, "verify", "--suite", "mirror")
        assert code == 1 and "FAIL broken" in out and "here" in out


class TestRankCmd:
    def test_a1(self, capsys):
        code, out, _ = run(capsys, "rank", "--A-num", "1", "--A-den", "1", "--degree", "4")
        rows = out.strip().splitlines()
        assert rows[0] == "D,relators,rank" and all(r.endswith(",0") for r in rows[1:])

    def test_fixture(self, capsys):
        from pathlib import Path
        fixture = (Path(__file__).parent / "fixtures" / "rank_A2_D6.csv").read_text()
        assert run(capsys, "rank", "--A-num", "2", "--A-den", "1", "--degree", "6")[1] == fixture

    def test_prime(self, capsys):
        code, out, _ = run(capsys, "rank", "--prime", "65537", "--A-val", "3", "--degree", "5")
        assert code == 0
        _, rat, _ = run(capsys, "rank", "--A-num", "3", "--A-den", "1", "--degree", "5")
        assert out == rat

    @pytest.mark.parametrize("argv", [
        ("rank", "--A-num", "0", "--degree", "3"),
        ("rank", "--A-num", "2", "--A-den", "0", "--degree", "3"),
        ("rank", "--prime", "10", "--A-val", "3", "--degree", "3"),
        ("rank", "--A-val", "3", "--degree", "3"),
    ])
    def test_invalid_field(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestElementCmds:
    def test_reduce_member(self, capsys, tmp_path):
        path = tmp_path / "e.json"
        e = relator(2, 1, 0).element.scale(LaurentPoly.mono(3)) + relator(1, 0, 2).element
        path.write_text(dumps(element_to_json(e)))
        code, out, _ = run(capsys, "reduce", "--input", str(path))
        obj = json.loads(out)
        assert code == 0 and obj["member"] and obj["residue"]["terms"] == []

    def test_reduce_a1_line(self, capsys, tmp_path):
        path = tmp_path / "e.json"
        path.write_text(dumps(element_to_json(cheb_elem(1, 0, 0, 1 - LaurentPoly.mono(6)))))
        code, out, _ = run(capsys, "reduce", "--input", str(path), "--a1-line")
        assert json.loads(out)["steps"][0]["multiplier"] == [[3, 1]]
        path.write_text(dumps(element_to_json(cheb_elem(1, 1, 0))))
        assert run(capsys, "reduce", "--input", str(path), "--a1-line")[0] == 2

    def test_reduce_bad_input(self, capsys, tmp_path):
        path = tmp_path / "e.json"
        path.write_text("{not json")
        assert run(capsys, "reduce", "--input", str(path))[0] == 2

    def test_nonzero(self, capsys, tmp_path):
        path = tmp_path / "e.json"
        path.write_text(dumps(element_to_json(tau(1, 1, 0))))
        obj = json.loads(run(capsys, "nonzero", "--input", str(path))[1])
        assert obj["status"] == "nonzero" and obj["witness"]["value"] == 4
        path.write_text(dumps(element_to_json(relator(2, 1, 0).element)))
        obj = json.loads(run(capsys, "nonzero", "--input", str(path))[1])
        assert obj == {"status": "inconclusive", "witness": None}


class TestCertifyCmds:
    def test_tau(self, capsys):
        code, out, _ = run(capsys, "certify-tau", "--m", "1", "--n", "1", "--q", "0")
        obj = json.loads(out)
        assert code == 0 and obj["nonzero"]["value"] == 4 and obj["witness_kind"] == "identity"

    def test_tau_zero(self, capsys):
        code, _, err = run(capsys, "certify-tau", "--m", "0", "--n", "0", "--q", "3")
        assert code == 1 and "zero" in err

    def test_eprime(self, capsys):
        code, out, _ = run(capsys, "certify-eprime", "--i", "4")
        assert code == 0 and json.loads(out)["annihilator"] == [[0, 1], [12, -1]]


class TestNonsplitCmd:
    def test_depth1(self, capsys):
        code, out, err = run(capsys, "nonsplit", "--depth", "1")
        obj = json.loads(out)
        assert code == 0 and len(obj["steps"]) == 3 and "premise" in err

    def test_depth10(self, capsys):
        code, out, _ = run(capsys, "nonsplit", "--depth", "10", "--quiet")
        chain = json.loads(out)["breadth_chain"]
        assert code == 0 and [c["decrement"] for c in chain] == [4] * 10


def test_json_roundtrip():
    e = cheb_elem(2, 0, 1, LaurentPoly([(3, -2), (-1, 5)])) + SkeinElement.empty_link()
    assert element_from_json(json.loads(dumps(element_to_json(e)))) == e


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kbsm", "relator", "--family", "C",
                          "--m", "1", "--n", "0", "--q", "0"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["leading"]["monomial"] == [1, 0, 0]
