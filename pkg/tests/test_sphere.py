import pytest

from qgroups.exceptions import RegimeError
from qgroups.hopf import builtin
from qgroups.ncalg import critical_pairs, format_element
from qgroups.scalar import SPHERE_FIELD, format_scalar
from qgroups.sphere import (INFINITY, c_special, check_coaction,
                            check_star_consistency, coaction, sphere_presentation,
                            sphere_star, u1_equivalence)


@pytest.fixture(scope="module")
def sphere():
    return sphere_presentation()


@pytest.fixture(scope="module")
def podles_inf():
    return sphere_presentation(c="inf")


class TestSpherePresentation:
    def test_symbolic_c(self, sphere):
        assert sphere.field == SPHERE_FIELD
        assert sphere.c_text == "c"
        assert sphere.group.name == "suq2"

    def test_leading_words(self, sphere):
        leads = {format_element(sphere.element(lead)) for lead, _ in sphere.rewrite.rules}
        assert leads == {"e1*e0", "e1*em1", "e0*e0", "e0*em1"}

    def test_infinite_c(self, podles_inf):
        assert podles_inf.c == INFINITY
        assert not podles_inf.lam
        assert format_element(podles_inf.reduce("e0*em1")) == "q^2*em1*e0"

    @pytest.mark.parametrize("degree", [1, 2, 3, 4])
    def test_normal_words_per_degree(self, sphere, degree):
        count = len(sphere.basis(degree)) - len(sphere.basis(degree - 1))
        assert count == 2 * degree + 1

    def test_special_value(self):
        S = sphere_presentation(c="c(1)")
        assert format_scalar(S.c) == format_scalar(c_special(1))

    def test_rational_c(self):
        S = sphere_presentation(q="1/2", c="1/3")
        assert S.c * 3 == 1

    def test_zero_q(self):
        with pytest.raises(RegimeError):
            sphere_presentation(q=0, c="inf")

    def test_c_special_index(self):
        with pytest.raises(ValueError):
            c_special(0)

    @pytest.mark.parametrize("c", ["c", "inf"])
    def test_confluence(self, c):
        S = sphere_presentation(c=c)
        assert all(not difference for _, difference in critical_pairs(S.rewrite))

    def test_classical_limit_commutes(self):
        S = sphere_presentation(q=1)
        assert not S.lam
        for text in ("e1*em1 - em1*e1", "e0*em1 - em1*e0", "e1*e0 - e0*e1"):
            assert format_element(S.reduce(text)) == "0"

    def test_with_rho_keeps_the_rules(self, sphere):
        other = sphere.with_rho(1)
        assert other.rewrite is sphere.rewrite
        assert other.rho == 1

    def test_builtin_name(self):
        S = builtin("sphere", c="inf")
        assert S.c_text == "inf"


class TestStar:
    def test_generators(self, sphere):
        assert sphere_star(sphere.gen(1), sphere) == sphere.gen(-1)
        assert sphere_star(sphere.gen(0), sphere) == sphere.gen(0)

    def test_postfix_star_in_text(self, sphere):
        assert sphere.element("e1^*") == sphere.gen(-1)

    def test_consistent_with_reduction(self, sphere):
        assert check_star_consistency(sphere, 3).passed

    def test_consistent_at_infinity(self, podles_inf):
        assert check_star_consistency(podles_inf, 2).passed


class TestCoaction:
    def test_u1_is_a_corepresentation(self, sphere):
        assert sphere.u1.verify().passed

    def test_generator_images(self, podles_inf):
        image = coaction(podles_inf.gen(1), podles_inf)
        assert len(image.terms) == 3

    @pytest.mark.parametrize("c", ["c", "inf", "c(1)", "c(2)", "0"])
    def test_checks(self, c):
        report = check_coaction(sphere_presentation(c=c))
        assert report.passed, repr(report)
        assert list(report) == ["relations", "coassociativity", "counit", "star"]

    @pytest.mark.parametrize("c", ["c", "inf", "0"])
    def test_checks_at_the_classical_point(self, c):
        report = check_coaction(sphere_presentation(q=1, c=c))
        assert report.passed, repr(report)

    def test_wrong_rho_breaks_the_coaction(self, podles_inf):
        report = check_coaction(podles_inf.with_rho(1))
        assert not report["relations"].passed
        assert report["relations"].witness is not None

    def test_u1_equivalence(self, podles_inf):
        T = u1_equivalence(podles_inf)
        assert T.shape == (3, 3)
        assert T.to_dense().det()
