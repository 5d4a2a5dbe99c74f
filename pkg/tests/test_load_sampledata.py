import pytest

from qgroups.hopf import Presentation, builtin, check_hopf_axioms
from qgroups.sampledata import (load_sl_t1_2, load_slq2,
                                load_slq2_without_eprime, load_suq2)
from qgroups.sampledata._load import load_sample_data


class TestLoadSampleData:
    def test_load_sample_slq2(self, slq2):
        P = load_sample_data("slq2.qg")

        assert isinstance(P, Presentation)
        assert P == slq2

    def test_load_slq2_function(self, slq2):
        assert load_slq2() == slq2

    def test_load_suq2_function(self, suq2):
        P = load_suq2()

        assert P == suq2
        assert P.has_star

    def test_load_sl_t1_2_function(self, sl_t1_2):
        P = load_sl_t1_2()

        assert P == sl_t1_2
        assert P.q == 1

    def test_load_slq2_without_eprime(self):
        P = load_slq2_without_eprime()

        assert [r.name for r in P.relations] == ["E"]
        assert not check_hopf_axioms(P, 1)["antipode"].passed

    def test_unsupported_extension(self):
        with pytest.raises(ValueError):
            load_sample_data("slq2.txt")

    def test_sample_differs_from_other_builtins(self):
        assert load_slq2() != builtin("suq11")
