"""
Expression grammar shared by scalars, elements and presentation files.

Expressions are parsed into small syntax trees made of tuples, which are
then folded by a semantics object. The same tree can therefore be read as
an exact rational function, as a noncommutative polynomial or evaluated
numerically at a given value of q.

Syntax
------
 - integers, identifiers (``q``, ``a``, ``em1``, ``alpha``)
 - postfix powers ``x^3``, ``q^-2`` and the postfix star ``x^*``
 - ``*`` and ``/``, or juxtaposition (``a b c`` means ``a*b*c``)
 - unary ``+``/``-`` and binary ``+``/``-``
 - parentheses
"""

import pyparsing as pp

from qgroups.exceptions import ParseError

__all__ = ['parse_tree', 'fold']

pp.ParserElement.enable_packrat()


def _binary(tokens):
    tokens = tokens.as_list()
    tree = tokens[0]
    for op, operand in zip(tokens[1::2], tokens[2::2]):
        tree = (_BINARY_NAMES[op], tree, operand)
    return tree


def _signed(tokens):
    tokens = tokens.as_list()
    tree = tokens[-1]
    for sign in reversed(tokens[:-1]):
        if sign == "-":
            tree = ("neg", tree)
    return tree


def _postfix(tokens):
    tokens = tokens.as_list()
    tree = tokens[0]
    for op in tokens[1:]:
        exponent = op[1:].strip()
        if exponent == "*":
            tree = ("star", tree)
        else:
            tree = ("pow", tree, int(exponent))
    return tree


_BINARY_NAMES = {"+": "add", "-": "sub", "*": "mul", "/": "div"}


def _build():
    expr = pp.Forward()

    integer = pp.Regex(r"\d+").set_parse_action(lambda t: ("num", int(t[0])))
    identifier = pp.Regex(r"[^\W\d]\w*").set_parse_action(lambda t: ("sym", t[0]))
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")

    atom = integer | identifier | (lpar + expr + rpar)
    power_op = pp.Regex(r"\^\s*(\*|[+-]?\d+)")
    factor = (atom + pp.ZeroOrMore(power_op)).set_parse_action(_postfix)

    sign = pp.one_of("+ -")
    signed = (pp.ZeroOrMore(sign) + factor).set_parse_action(_signed)

    mul_op = pp.one_of("* /")
    # juxtaposition only binds unsigned factors, so "a -b" stays a difference
    term = (
        signed
        + pp.ZeroOrMore((mul_op + signed) | (pp.Empty().set_parse_action(lambda: "*") + factor))
    ).set_parse_action(_binary)

    add_op = pp.one_of("+ -")
    expr <<= (term + pp.ZeroOrMore(add_op + term)).set_parse_action(_binary)
    return expr


_EXPRESSION = _build()


def parse_tree(text):
    """
    Parse an expression into a syntax tree.

    Parameters
    ----------
    text : str
        expression text

    Returns
    -------
    tree : tuple
        nested tuples such as ``("mul", ("sym", "a"), ("num", 2))``

    Raises
    ------
    ParseError
        with the 1-based line and column of the offending character
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression", 1, 1)
    try:
        return _EXPRESSION.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ParseError("invalid expression {!r}: {}".format(text, exc.msg), exc.lineno, exc.col)


def fold(tree, semantics):
    """
    Fold a syntax tree with a semantics object.

    The semantics object provides ``number``, ``symbol``, ``add``, ``sub``,
    ``mul``, ``div``, ``neg``, ``pow`` and ``star``.
    """
    kind = tree[0]
    if kind == "num":
        return semantics.number(tree[1])
    if kind == "sym":
        return semantics.symbol(tree[1])
    if kind == "neg":
        return semantics.neg(fold(tree[1], semantics))
    if kind == "pow":
        return semantics.pow(fold(tree[1], semantics), tree[2])
    if kind == "star":
        return semantics.star(fold(tree[1], semantics))
    left, right = fold(tree[1], semantics), fold(tree[2], semantics)
    return getattr(semantics, kind)(left, right)
