"""
Exact scalars: rational functions in the deformation parameter q.

Every structure constant of the library lives in the field Q(q), realized
by sympy's sparse fraction field over the integers. Elements are always
stored reduced, with a denominator of positive leading coefficient, so
equality of scalars is a syntactic check. A second field Q(q, c) hosts the
free parameter of the quantum spheres.

Functions
---------
 - `to_scalar` -- coerce ints, fractions, text and field elements
 - `canonicalize` -- reduced representative of a fraction of polynomials
 - `evaluate_at` -- exact substitution of a rational value for q
 - `conjugate` -- action of complex conjugation on scalars
 - `sqrt_exact` -- exact square roots (positive-q convention)
 - `format_scalar`, `parse_scalar` -- canonical text representation
"""

from enum import Enum
from fractions import Fraction
from numbers import Integral, Rational

from sympy import Symbol, integer_nthroot
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from qgroups.exceptions import EvaluationError, ParseError
from qgroups.grammar import fold, parse_tree

__all__ = [
    'FIELD', 'SPHERE_FIELD', 'SIGN_POINTS', 'Involution', 'generator',
    'to_scalar', 'canonicalize', 'power', 'evaluate_at', 'conjugate',
    'sqrt_exact', 'format_scalar', 'parse_scalar',
]

FIELD = ZZ.frac_field(Symbol("q"))
SPHERE_FIELD = ZZ.frac_field(Symbol("q"), Symbol("c"))

# points used to fix the sign of square roots
SIGN_POINTS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


class Involution(Enum):
    """Action of complex conjugation on q."""

    IDENTITY = "identity"
    Q_INVERSE = "q-inverse"

    @classmethod
    def from_text(cls, text):
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(
                "Involution not supported! Choose among: {}".format(
                    ", ".join(member.value for member in cls)
                )
            )


def generator(name="q", field=FIELD):
    """Return the field generator called `name`."""
    for symbol, gen in zip(field.symbols, field.gens):
        if str(symbol) == name:
            return gen
    raise ValueError("field {} has no generator {!r}".format(field, name))


def to_scalar(value, field=FIELD):
    """
    Coerce `value` into `field`.

    Parameters
    ----------
    value : int, Fraction, str, sympy field or polynomial element
        value to convert. Text goes through `parse_scalar`.
    field : sympy FractionField, optional
        target field, defaults to Q(q)

    Returns
    -------
    scalar : FracElement
        reduced element of `field`
    """
    if isinstance(value, FracElement):
        if value.field == field.field:
            return value
        return value.set_field(field.field)
    if isinstance(value, PolyElement):
        return canonicalize(value, value.ring.one, field)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Integral):
        return field.convert(int(value))
    if isinstance(value, Rational):
        return field.convert(int(value.numerator)) / int(value.denominator)
    if isinstance(value, str):
        return parse_scalar(value, field)
    raise TypeError("can not convert {!r} to a scalar".format(value))


def canonicalize(numerator, denominator=1, field=FIELD):
    """
    Return the reduced representative of ``numerator / denominator``.

    Parameters
    ----------
    numerator, denominator : int, polynomial or field element
        an unreduced fraction. Polynomials are taken over the integers.
    field : sympy FractionField, optional

    Returns
    -------
    scalar : FracElement
        gcd-reduced, denominator with positive leading coefficient; zero is
        represented as 0/1

    Raises
    ------
    ZeroDivisionError
        if the denominator is zero

    Examples
    --------
    >>> q = generator()
    >>> canonicalize(q**2 - 1, q - 1)
    q + 1
    """
    num = _lift(numerator, field)
    den = _lift(denominator, field)
    if not den:
        raise ZeroDivisionError("zero denominator")
    return num / den


def _lift(value, field):
    if isinstance(value, PolyElement):
        ring = field.field.ring
        return field.field.new(value.set_ring(ring))
    return to_scalar(value, field)


def power(x, n):
    """Integer power, negative exponents included, kept canonical."""
    if n >= 0:
        return x ** n
    if not x:
        raise ZeroDivisionError("zero to a negative power")
    return x.field.one / x ** (-n)


def _field_of(x):
    return x.field.to_domain()


def evaluate_at(x, q0):
    """
    Substitute the rational number `q0` for q.

    Parameters
    ----------
    x : FracElement or str
        scalar of Q(q). Text is evaluated term by term as written, so no
        cancellation happens before the substitution.
    q0 : int, Fraction or str
        exact value of the parameter

    Returns
    -------
    value : Fraction

    Raises
    ------
    EvaluationError
        if a denominator vanishes at `q0`
    ValueError
        if `x` depends on a parameter other than q

    Examples
    --------
    >>> evaluate_at(parse_scalar("1/(1+q^2)"), Fraction(1, 2))
    Fraction(4, 5)
    """
    q0 = Fraction(q0)
    if isinstance(x, str):
        return fold(parse_tree(x), _FractionSemantics(q0))

    x = to_scalar(x, _field_of(x)) if isinstance(x, FracElement) else to_scalar(x)
    symbols = [str(s) for s in x.field.symbols]
    position = symbols.index("q")
    num = _evaluate_poly(x.numer, position, q0)
    den = _evaluate_poly(x.denom, position, q0)
    if den == 0:
        raise EvaluationError("pole at q = {}".format(q0))
    return num / den


def _evaluate_poly(poly, position, q0):
    total = Fraction(0)
    for monom, coeff in poly.terms():
        if any(e for i, e in enumerate(monom) if i != position):
            raise ValueError("scalar depends on a parameter other than q")
        exponent = monom[position]
        if exponent and q0 == 0:
            continue
        total += Fraction(int(coeff)) * q0 ** exponent
    return total


class _FractionSemantics:
    def __init__(self, q0):
        self.q0 = q0

    def number(self, n):
        return Fraction(n)

    def symbol(self, name):
        if name != "q":
            raise ParseError("unknown symbol {!r} in scalar".format(name))
        return self.q0

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def div(self, x, y):
        if y == 0:
            raise EvaluationError("pole at q = {}".format(self.q0))
        return x / y

    def pow(self, x, n):
        if n < 0 and x == 0:
            raise EvaluationError("pole at q = {}".format(self.q0))
        return x ** n

    def star(self, x):
        raise ParseError("star is not defined on scalars")


def conjugate(x, inv):
    """
    Apply complex conjugation to a scalar.

    `Involution.IDENTITY` fixes every scalar (real q). `Involution.Q_INVERSE`
    substitutes q -> 1/q (the regime ``|q| = 1``); other parameters of the
    field are treated as real.
    """
    inv = Involution(inv)
    if inv is Involution.IDENTITY or not x:
        return x
    field = x.field
    position = [str(s) for s in field.symbols].index("q")
    gens = field.gens
    q_inverse = field.one / gens[position]

    def substitute(poly):
        total = field.zero
        for monom, coeff in poly.terms():
            term = field.one * int(coeff)
            for i, exponent in enumerate(monom):
                base = q_inverse if i == position else gens[i]
                term = term * base ** exponent
            total = total + term
        return total

    return substitute(x.numer) / substitute(x.denom)


def sqrt_exact(x):
    """
    Exact square root in the rational function field.

    The root is chosen positive at the first point of `SIGN_POINTS` where it
    is defined and nonzero (positive-q convention).

    Raises
    ------
    ValueError
        if `x` is not a perfect square
    """
    if not x:
        return x
    field = x.field
    numer = _sqrt_poly(x.numer)
    denom = _sqrt_poly(x.denom)
    root = field.new(numer, denom)
    for point in SIGN_POINTS:
        try:
            value = evaluate_at(root, point)
        except (EvaluationError, ValueError):
            continue
        if value:
            return -root if value < 0 else root
    return root


def _sqrt_poly(poly):
    content, factors = poly.factor_list()
    content = int(content)
    if content < 0:
        raise ValueError("not a perfect square: negative content")
    root, exact = integer_nthroot(content, 2)
    if not exact:
        raise ValueError("not a perfect square: content {}".format(content))
    result = poly.ring.one * int(root)
    for factor, multiplicity in factors:
        if multiplicity % 2:
            raise ValueError("not a perfect square: odd multiplicity")
        result = result * factor ** (multiplicity // 2)
    return result


def format_scalar(x):
    """
    Canonical text of a scalar, without spaces.

    Laurent form (``q^-1+q``) when the denominator is a monomial, otherwise
    ``numerator/denominator`` with parentheses around multi-term parts, e.g.
    ``1/(1+q^2)``. The text re-parses to an equal scalar.
    """
    if not x:
        return "0"
    names = [str(s) for s in x.field.symbols]
    den_terms = x.denom.terms()
    if len(den_terms) == 1:
        (den_monom, den_coeff), = den_terms
        terms = []
        for monom, coeff in x.numer.terms():
            shifted = tuple(e - d for e, d in zip(monom, den_monom))
            terms.append((shifted, Fraction(int(coeff), int(den_coeff))))
        return _format_terms(terms, names)

    numer = _format_terms(
        [(m, Fraction(int(c))) for m, c in x.numer.terms()], names
    )
    denom = _format_terms(
        [(m, Fraction(int(c))) for m, c in x.denom.terms()], names
    )
    if len(x.numer.terms()) > 1:
        numer = "(" + numer + ")"
    return "{}/({})".format(numer, denom)


def _format_terms(terms, names):
    terms = sorted(terms, key=lambda t: (sum(t[0]), tuple(reversed(t[0]))))
    text = ""
    for monom, coeff in terms:
        piece = _format_term(monom, coeff, names)
        if text and not piece.startswith("-"):
            text += "+"
        text += piece
    return text


def _format_term(monom, coeff, names):
    factors = []
    for name, exponent in zip(names, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append("{}^{}".format(name, exponent))
    if not factors:
        return _format_fraction(coeff)
    monomial = "*".join(factors)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return "-" + monomial
    return "{}*{}".format(_format_fraction(coeff), monomial)


def _format_fraction(value):
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


class _ScalarSemantics:
    def __init__(self, field):
        self.field = field
        self.names = {str(s): g for s, g in zip(field.symbols, field.gens)}

    def number(self, n):
        return self.field.convert(n)

    def symbol(self, name):
        if name not in self.names:
            raise ParseError("unknown symbol {!r} in scalar".format(name))
        return self.names[name]

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def div(self, x, y):
        if not y:
            raise ZeroDivisionError("division by zero in scalar expression")
        return x / y

    def pow(self, x, n):
        return power(x, n)

    def star(self, x):
        raise ParseError("star is not defined on scalars")


def parse_scalar(text, field=FIELD):
    """
    Parse scalar text such as ``(1-q^2)/(1+q^2)`` into `field`.

    Raises
    ------
    ParseError
        on syntax errors or unknown symbols
    """
    return fold(parse_tree(text), _ScalarSemantics(field))
