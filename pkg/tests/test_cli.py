import io
import json

import pytest

from qgroups import __version__
from qgroups.cli import main
from qgroups.hopf import DEFAULT_CHECK_DEGREE


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestElementCommands:
    def test_normalize(self):
        assert run("normalize", "--algebra", "slq2", "d*a") == (0, "1 + q^-1*b*c\n")

    def test_normalize_json(self):
        code, text = run("normalize", "--format", "json", "b*a")
        assert code == 0
        assert json.loads(text) == {"element": "q^-1*a*b"}

    def test_delta(self):
        assert run("delta", "a") == (0, "a ⊗ a + b ⊗ c\n")

    def test_antipode(self):
        assert run("antipode", "b") == (0, "-q^-1*b\n")

    def test_star(self):
        assert run("star", "--algebra", "suq2", "b") == (0, "-q*c\n")

    def test_star_without_star_data(self, capsys):
        code, _ = run("star", "--algebra", "slq2", "b")
        assert code == 2
        assert "qg star: error:" in capsys.readouterr().err

    def test_parse_error_position(self, capsys):
        code, _ = run("normalize", "a + )")
        assert code == 2
        assert "line 1" in capsys.readouterr().err

    def test_classical_value(self):
        assert run("normalize", "--q", "1", "b*a") == (0, "a*b\n")


class TestCheckCommands:
    def test_check_hopf(self):
        code, text = run("check-hopf", "--algebra", "sl_t1_2", "--max-degree", "1")
        assert code == 0
        assert "coassociativity" in text

    def test_failing_check_exits_with_one(self):
        code, text = run("check-hopf", "--file", "qgroups/sampledata/slq2_without_eprime.qg",
                         "--max-degree", "1", "--format", "json")
        assert code == 1
        payload = json.loads(text)
        assert payload["passed"] is False

    def test_corep(self):
        code, text = run("corep", "--format", "json", "w@w")
        assert code == 0
        assert len(json.loads(text)["matrix"]) == 4

    def test_corep_json_matrix(self):
        code, _ = run("corep", '[["a", "b"], [0, "d"]]')
        assert code == 1

    def test_mor(self):
        code, text = run("mor", "trivial", "w@w")
        assert code == 0
        assert text.startswith("dim Mor = 1")

    def test_spin(self):
        code, text = run("spin", "--format", "json", "1")
        assert code == 0
        assert len(json.loads(text)["matrix"]) == 3

    def test_clebsch(self):
        assert run("clebsch", "1/2", "1/2")[0] == 0


class TestHaarCommands:
    def test_haar(self):
        assert run("haar", "a*a^*") == (0, "1/(1+q^2)\n")

    def test_haar_cutoff(self, capsys):
        code, _ = run("haar", "--spin-cutoff", "1/2", "a*a^*")
        assert code == 2
        assert "cutoff" in capsys.readouterr().err

    def test_pw_check(self):
        assert run("pw-check", "1/2", "1/2")[0] == 0

    def test_gram(self):
        code, text = run("gram", "--format", "json", "1", "--at", "1/2")
        assert code == 0
        assert json.loads(text)["passed"] is True


class TestSphereCommand:
    def test_normalize(self):
        assert run("sphere", "--c", "inf", "normalize", "e0*em1") == (0, "q^2*em1*e0\n")

    def test_check(self):
        code, text = run("sphere", "--c", "c(1)", "--max-degree", "2", "--format", "json", "check")
        assert code == 0
        names = [check["name"] for check in json.loads(text)["checks"]]
        assert "u1-equivalence" in names

    def test_missing_element(self):
        assert run("sphere", "normalize")[0] == 2


class TestLorentzCommand:
    def test_flip_at_one(self):
        assert run("lorentz", "--q", "1", "flip")[0] == 0

    def test_identity(self):
        code, text = run("lorentz", "--format", "json", "1")
        assert code == 1
        checks = {c["name"]: c for c in json.loads(text)["checks"]}
        assert checks["commutation"]["witness"] == "(-q^-1+q)*b*c"


class TestParseCommand:
    def test_file(self):
        code, text = run("parse", "--file", "tests/test_files/suq2.qg")
        assert code == 0
        assert text.startswith("matrix 2\nname suq2\n")
        assert "confluence" in text

    def test_malformed_file(self, capsys):
        code, _ = run("parse", "--file", "tests/test_files/no_matrix.qg")
        assert code == 2
        assert "line 2" in capsys.readouterr().err


class TestArguments:
    def test_version(self, capsys):
        with pytest.raises(SystemExit):
            main(["--version"])
        assert __version__ in capsys.readouterr().out

    def test_command_required(self):
        with pytest.raises(SystemExit):
            main([])

    def test_check_degree_default_in_help(self, capsys):
        with pytest.raises(SystemExit):
            main(["check-hopf", "--help"])
        text = " ".join(capsys.readouterr().out.split())
        assert "(default {})".format(DEFAULT_CHECK_DEGREE) in text
