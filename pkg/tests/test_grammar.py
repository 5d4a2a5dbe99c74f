import pytest

from qgroups.exceptions import ParseError
from qgroups.grammar import fold, parse_tree


class _Printer:
    """Fully parenthesized text of a tree."""

    def number(self, n):
        return str(n)

    def symbol(self, name):
        return name

    def add(self, x, y):
        return "({}+{})".format(x, y)

    def sub(self, x, y):
        return "({}-{})".format(x, y)

    def mul(self, x, y):
        return "({}*{})".format(x, y)

    def div(self, x, y):
        return "({}/{})".format(x, y)

    def neg(self, x):
        return "(-{})".format(x)

    def pow(self, x, n):
        return "{}^{}".format(x, n)

    def star(self, x):
        return "{}^*".format(x)


def render(text):
    return fold(parse_tree(text), _Printer())


class TestParseTree:
    def test_precedence(self):
        assert render("1 + q*a^2") == "(1+(q*a^2))"

    def test_left_associative(self):
        assert render("a - b - c") == "((a-b)-c)"
        assert render("a / 2 * b") == "((a/2)*b)"

    def test_juxtaposition_is_a_product(self):
        assert render("a b c") == "((a*b)*c)"

    def test_juxtaposition_does_not_absorb_signs(self):
        assert render("a -b") == "(a-b)"

    def test_negative_exponent(self):
        assert render("q^-1") == "q^-1"

    def test_star_then_power(self):
        assert render("a^*^2") == "a^*^2"

    def test_parentheses_and_unary_minus(self):
        assert render("-(a+b)") == "(-(a+b))"

    def test_identifiers_with_digits(self):
        assert parse_tree("em1") == ("sym", "em1")

    @pytest.mark.parametrize("text", ["", "   ", "a +", "(a", "a ^ x", "1a)"])
    def test_invalid_text(self, text):
        with pytest.raises(ParseError):
            parse_tree(text)

    def test_error_column(self):
        with pytest.raises(ParseError) as exc:
            parse_tree("a + )")
        assert exc.value.line == 1
        assert exc.value.col >= 2
