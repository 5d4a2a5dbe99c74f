from fractions import Fraction
from unittest import mock

import matplotlib
import pytest

from qgroups.exceptions import CutoffError, StarStructureError
from qgroups.haar import (build_pw_basis, check_haar, check_modular,
                          check_pw_relations, describe_expansion, expand,
                          f_matrix, gram_positivity, haar, modular_sigma)
from qgroups.hopf import star
from qgroups.linalg import format_matrix
from qgroups.ncalg import format_element, parse_element
from qgroups.scalar import format_scalar


@pytest.fixture(scope="module")
def pw(suq2):
    return build_pw_basis(suq2, 1)


@pytest.fixture(scope="module")
def pw2(suq2):
    return build_pw_basis(suq2, 2)


def element(text, P):
    return parse_element(text, P.alphabet, P.field, star=lambda x: star(x, P))


class TestPWBasis:
    def test_size(self, pw):
        assert len(pw) == 14
        assert len(pw.words) == 14

    def test_is_cached(self, pw, suq2):
        assert build_pw_basis(suq2, 1) is pw

    @pytest.mark.parametrize("L", [-1, "1/3"])
    def test_invalid_cutoff(self, suq2, L):
        with pytest.raises(ValueError):
            build_pw_basis(suq2, L)


class TestHaar:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1", "1"),
            ("a", "0"),
            ("b*c", "-q/(1+q^2)"),
            ("a*a^*", "1/(1+q^2)"),
            ("c*c^*", "1/(1+q^2)"),
            ("b*b^*", "q^2/(1+q^2)"),
            ("d*a", "q^2/(1+q^2)"),
            ("a*b", "0"),
        ],
    )
    def test_values(self, pw, suq2, text, expected):
        assert format_scalar(haar(element(text, suq2), pw)) == expected

    def test_cutoff(self, pw, suq2):
        with pytest.raises(CutoffError) as exc:
            haar(element("a*a*a", suq2), pw)
        assert exc.value.required == Fraction(3, 2)

    def test_expansion_of_the_unit(self, pw, suq2):
        assert expand(element("1", suq2), pw) == {(Fraction(0), 0, 0): 1}
        assert describe_expansion(element("0", suq2), pw) == "0"

    def test_invariance(self, pw):
        report = check_haar(pw)
        assert report.passed, repr(report)


class TestFMatrix:
    def test_spin_one_half(self, suq2):
        F = f_matrix("1/2", suq2)
        assert format_matrix(F.matrix) == '[["q^-1", "0"], ["0", "q"]]'
        assert F.trace == F.inverse_trace

    def test_spin_one(self, suq2):
        F = f_matrix(1, suq2)
        assert format_matrix(F.matrix) == '[["q^-2", "0", "0"], ["0", "1", "0"], ["0", "0", "q^2"]]'
        assert F.trace == F.inverse_trace


class TestPWRelations:
    @pytest.mark.parametrize("alpha, beta", [(0, 0), ("1/2", "1/2"), ("1/2", 0)])
    def test_orthogonality(self, pw, alpha, beta):
        report = check_pw_relations(alpha, beta, pw)
        assert report.passed, repr(report)

    @pytest.mark.parametrize("alpha, beta", [(1, 1), ("1/2", 1), (1, 0), ("1/2", "1/2")])
    def test_orthogonality_up_to_spin_one(self, pw2, alpha, beta):
        report = check_pw_relations(alpha, beta, pw2)
        assert report.passed, repr(report)

    def test_spin_one_counts_every_product(self, pw2):
        report = check_pw_relations(1, 1, pw2)
        assert report["h(v v'*)"].detail == "81 products"
        assert report["h(v'* v)"].detail == "81 products"

    def test_cutoff(self, pw):
        with pytest.raises(CutoffError):
            check_pw_relations(1, 1, pw)

    def test_needs_a_star(self, slq2):
        with pytest.raises(StarStructureError):
            check_pw_relations(0, 0, build_pw_basis(slq2, 0))


class TestModular:
    def test_sigma_on_generators(self, suq2):
        assert format_element(modular_sigma(suq2.gen(0, 0), suq2)) == "q^-2*a"
        assert format_element(modular_sigma(suq2.gen(0, 1), suq2)) == "b"

    def test_modular_property(self, pw):
        report = check_modular(pw)
        assert report.passed, repr(report)


class TestGramPositivity:
    def test_degree_one(self, pw):
        report = gram_positivity(1, "1/2", B=pw)
        assert report.passed
        assert report.symmetric
        assert len(report.minors) == 5
        assert report.min_eigenvalue > 0
        assert report.report().passed

    @pytest.mark.parametrize("q0", ["1/3", "1/2", "2/3"])
    def test_degree_two(self, pw2, q0):
        report = gram_positivity(2, q0, B=pw2)
        assert report.passed, repr(report.report())
        assert len(report.minors) == 14
        assert report.minors[-1] > 0

    def test_cutoff(self, pw):
        with pytest.raises(CutoffError):
            gram_positivity(2, "1/2", B=pw)

    def test_negative_degree(self, pw):
        with pytest.raises(ValueError):
            gram_positivity(-1, "1/2", B=pw)

    def test_plot(self, pw):
        report = gram_positivity(1, "1/2", B=pw)
        with mock.patch("qgroups.haar.plt.show"):
            fig, ax = report.plot()

        assert isinstance(fig, matplotlib.figure.Figure)
        assert isinstance(ax, matplotlib.figure.Axes)

    def test_plot_on_given_axes(self, pw):
        report = gram_positivity(1, "1/2", B=pw)
        ax_mock = mock.MagicMock()
        with mock.patch("qgroups.haar.plt.show"):
            report.plot(ax=ax_mock)

        ax_mock.plot.assert_called_once()
