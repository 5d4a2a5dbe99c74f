from fractions import Fraction

import pytest

from qgroups.exceptions import EvaluationError, ParseError
from qgroups.scalar import (FIELD, SPHERE_FIELD, Involution, canonicalize,
                            conjugate, evaluate_at, format_scalar, generator,
                            parse_scalar, power, sqrt_exact, to_scalar)

q = generator()


class TestCanonicalize:
    def test_cancels_common_factors(self):
        assert canonicalize(q ** 2 - 1, q - 1) == q + 1

    def test_equal_fractions_are_equal(self):
        assert canonicalize(2 * q, 4 * q ** 2) == canonicalize(1, 2 * q)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            canonicalize(q, 0)


class TestFormatAndParse:
    @pytest.mark.parametrize(
        "text",
        ["0", "1", "-1", "q", "-q^-1", "q^-1+q", "1/(1+q^2)", "(1-q^2)/(1+q^2)", "1/2*q", "-q/(1+q^2)"],
    )
    def test_canonical_text_round_trips(self, text):
        assert format_scalar(parse_scalar(text)) == text

    def test_laurent_form(self):
        assert format_scalar(q + power(q, -1)) == "q^-1+q"

    def test_juxtaposition_and_signs(self):
        assert parse_scalar("2 q - -q") == 3 * q

    def test_unknown_symbol(self):
        with pytest.raises(ParseError):
            parse_scalar("q + x")

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as exc:
            parse_scalar("(1+q")
        assert exc.value.line == 1

    def test_star_is_not_a_scalar_operation(self):
        with pytest.raises(ParseError):
            parse_scalar("q^*")

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            parse_scalar("1/(q-q)")


class TestToScalar:
    def test_integers_and_fractions(self):
        assert to_scalar(3) == FIELD.convert(3)
        assert format_scalar(to_scalar(Fraction(1, 2))) == "1/2"

    def test_text(self):
        assert to_scalar("q^2") == q ** 2

    def test_moves_between_fields(self):
        value = to_scalar(q + 1, SPHERE_FIELD)
        assert format_scalar(value) == "1+q"

    def test_booleans_are_rejected(self):
        with pytest.raises(TypeError):
            to_scalar(True)


class TestEvaluateAt:
    def test_exact_value(self):
        assert evaluate_at(parse_scalar("1/(1+q^2)"), Fraction(1, 2)) == Fraction(4, 5)

    def test_pole(self):
        with pytest.raises(EvaluationError):
            evaluate_at(parse_scalar("1/(1-q)"), 1)

    def test_text_keeps_removable_poles(self):
        with pytest.raises(EvaluationError):
            evaluate_at("(1-q^2)/(1-q^6)", 1)

    def test_reduced_scalar_has_no_pole(self):
        assert evaluate_at(parse_scalar("(1-q^2)/(1-q^6)"), 1) == Fraction(1, 3)

    def test_other_parameters_are_rejected(self):
        c = generator("c", SPHERE_FIELD)
        with pytest.raises(ValueError):
            evaluate_at(c + 1, 1)


class TestConjugate:
    def test_identity_fixes_q(self):
        assert conjugate(q, Involution.IDENTITY) == q

    def test_q_inverse(self):
        assert conjugate(q + 2, Involution.Q_INVERSE) == power(q, -1) + 2

    def test_involution_from_text(self):
        assert Involution.from_text("Q-Inverse") is Involution.Q_INVERSE
        with pytest.raises(ValueError):
            Involution.from_text("transpose")


class TestSqrtExact:
    def test_square_root_is_positive(self):
        assert sqrt_exact(power(q, -2)) == power(q, -1)
        assert sqrt_exact((1 + q ** 2) ** 2 / q ** 4) == (1 + q ** 2) / q ** 2

    def test_not_a_square(self):
        with pytest.raises(ValueError):
            sqrt_exact(q)
