import logging

from qgroups.exceptions import DimensionError, EmptyFileError, ParseError
from qgroups.hopf import Presentation, Relation
from qgroups.linalg import entries, matrix
from qgroups.ncalg import MonomialOrder
from qgroups.scalar import FIELD, Involution, format_scalar, parse_scalar

__all__ = ['read_presentation', 'parse_presentation', 'serialize_presentation']

logger = logging.getLogger(__name__)

_DIRECTIVES = ("matrix", "name", "generators", "order", "relation", "star", "parameter")


def read_presentation(pathname, field=FIELD):
    """
    Read a presentation from a text file (*.qg).

    The file is line oriented:
       # SL_q(2)
       matrix 2
       relation E s=0 t=2
       0 1 -q 0
       relation E' s=2 t=0
       0 -q^-1 1 0

    See `parse_presentation` for the full list of directives.

    Parameters
    ----------
    pathname : str
        string containing the path to the file
    field : sympy FractionField, optional
        coefficient field, defaults to Q(q)

    Returns
    -------
    presentation : Presentation

    See Also
    --------
    parse_presentation, serialize_presentation

    Examples
    --------
    >>> from qgroups.io import read_presentation
    >>> P = read_presentation('/path/to/slq2.qg')
    Presentation(name='slq2', N=2, relations=['E', "E'"], star=False)
    """
    with open(pathname, "r", encoding="utf-8") as fileobj:
        file_content = fileobj.read()
        if not file_content.strip():
            raise EmptyFileError("empty file!")

    return parse_presentation(file_content, field)


def _tokens(line):
    """Whitespace separated tokens with their 1-based columns."""
    tokens = []
    col = 0
    for piece in line.split():
        col = line.index(piece, col)
        tokens.append((piece, col + 1))
        col += len(piece)
    return tokens


def _scalar(token, lineno, col, field):
    try:
        return parse_scalar(token, field)
    except ParseError as exc:
        raise ParseError(exc.value, lineno, col + exc.col - 1)
    except ZeroDivisionError:
        raise ParseError("division by zero in {!r}".format(token), lineno, col)


def _int(token, lineno, col):
    try:
        return int(token)
    except ValueError:
        raise ParseError("expected an integer, got {!r}".format(token), lineno, col)


def _int_list(text, lineno, col):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError("expected a comma separated list of integers", lineno, col)


def _keyword(tokens, key, lineno):
    for token, col in tokens:
        if token.startswith(key + "="):
            return token[len(key) + 1:], col
    raise ParseError("missing {}=".format(key), lineno, len(tokens[0][0]) + 2)


def parse_presentation(text, field=FIELD):
    """
    Parse the text form of a presentation.

    Directives
    ----------
     - ``matrix N`` -- size of the generator matrix, must come first
     - ``name IDENT``
     - ``generators IDENT ...`` -- N*N generator names
     - ``order weights=1,0,0,1 precedence=0,2,3,1``
     - ``relation NAME s=INT t=INT`` -- followed by the N^t x N^s entries
       of E in row-major order, on one or more lines
     - ``star Q x11 x12 ... involution=identity|q-inverse``
     - ``parameter q = SCALAR`` -- value of q used by Hecke operators

    Lines starting with ``#`` are comments.

    Raises
    ------
    ParseError
        with line and column of the offending token
    DimensionError
        if a relation has the wrong number of entries
    """
    N = None
    name = ""
    alphabet = None
    order = None
    q = None
    star_Q = None
    involution = Involution.IDENTITY
    relations = []
    pending = None

    def close(lineno):
        if pending is None:
            return
        expected = N ** pending["t"] * N ** pending["s"]
        found = len(pending["entries"])
        if found != expected:
            raise DimensionError(
                "relation {} (line {}) needs {} entries, found {}".format(
                    pending["name"], pending["line"], expected, found
                )
            )
        width = N ** pending["s"]
        rows = [pending["entries"][k:k + width] for k in range(0, found, width)]
        E = matrix(rows, field)
        relations.append(Relation(pending["name"], E, pending["s"], pending["t"]))

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokens(line)
        if not tokens:
            continue
        head, head_col = tokens[0]

        if head not in _DIRECTIVES:
            if pending is None:
                raise ParseError("unknown directive {!r}".format(head), lineno, head_col)
            pending["entries"].extend(_scalar(t, lineno, c, field) for t, c in tokens)
            continue

        close(lineno)
        pending = None
        if N is None and head != "matrix":
            raise ParseError("the first directive must be 'matrix'", lineno, head_col)

        if head == "matrix":
            if N is not None:
                raise ParseError("duplicate 'matrix' directive", lineno, head_col)
            if len(tokens) != 2:
                raise ParseError("usage: matrix N", lineno, head_col)
            N = _int(tokens[1][0], lineno, tokens[1][1])
            if N < 1:
                raise ParseError("N must be positive", lineno, tokens[1][1])
        elif head == "name":
            if len(tokens) != 2:
                raise ParseError("usage: name IDENT", lineno, head_col)
            name = tokens[1][0]
        elif head == "generators":
            alphabet = tuple(t for t, _ in tokens[1:])
            if len(alphabet) != N * N:
                raise DimensionError(
                    "line {}: need {} generator names, found {}".format(lineno, N * N, len(alphabet))
                )
        elif head == "order":
            weights = precedence = None
            for token, col in tokens[1:]:
                if token.startswith("weights="):
                    weights = _int_list(token[8:], lineno, col)
                elif token.startswith("precedence="):
                    precedence = _int_list(token[11:], lineno, col)
                else:
                    raise ParseError("unknown order option {!r}".format(token), lineno, col)
            if weights is None:
                weights = [0] * (N * N)
            if len(weights) != N * N or (precedence is not None and len(precedence) != N * N):
                raise DimensionError("line {}: order needs {} values".format(lineno, N * N))
            try:
                order = MonomialOrder(weights, precedence)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, head_col)
        elif head == "relation":
            if len(tokens) != 4:
                raise ParseError("usage: relation NAME s=INT t=INT", lineno, head_col)
            s_text, s_col = _keyword(tokens, "s", lineno)
            t_text, t_col = _keyword(tokens, "t", lineno)
            pending = {
                "name": tokens[1][0],
                "s": _int(s_text, lineno, s_col + 2),
                "t": _int(t_text, lineno, t_col + 2),
                "entries": [],
                "line": lineno,
            }
        elif head == "star":
            if len(tokens) < 2 or tokens[1][0] != "Q":
                raise ParseError("usage: star Q ENTRIES involution=...", lineno, head_col)
            values = []
            for token, col in tokens[2:]:
                if token.startswith("involution="):
                    try:
                        involution = Involution.from_text(token[len("involution="):])
                    except ValueError as exc:
                        raise ParseError(str(exc), lineno, col)
                else:
                    values.append(_scalar(token, lineno, col, field))
            if len(values) != N * N:
                raise DimensionError(
                    "line {}: star Q needs {} entries, found {}".format(lineno, N * N, len(values))
                )
            star_Q = matrix([values[k:k + N] for k in range(0, N * N, N)], field)
        elif head == "parameter":
            if len(tokens) != 4 or tokens[1][0] != "q" or tokens[2][0] != "=":
                raise ParseError("usage: parameter q = SCALAR", lineno, head_col)
            q = _scalar(tokens[3][0], lineno, tokens[3][1], field)

    if N is None:
        raise ParseError("no 'matrix' directive", max(len(lines), 1), 1)
    close(len(lines))
    logger.info("parsed presentation %s with %d relations", name, len(relations))
    return Presentation(
        N, relations, star_Q=star_Q, involution=involution, name=name,
        order=order, alphabet=alphabet, field=field, q=q,
    )


def serialize_presentation(P):
    """
    Text form of a presentation, read back by `parse_presentation`.

    Examples
    --------
    >>> from qgroups.hopf import builtin
    >>> print(serialize_presentation(builtin("slq2")))
    matrix 2
    name slq2
    ...
    """
    out = ["matrix {}".format(P.N)]
    if P.name:
        out.append("name {}".format(P.name))
    out.append("generators {}".format(" ".join(P.alphabet)))
    out.append(
        "order weights={} precedence={}".format(
            ",".join(str(w) for w in P.order.weights),
            ",".join(str(p) for p in P.order.precedence),
        )
    )
    out.append("parameter q = {}".format(format_scalar(P.q)))
    for rel in P.relations:
        out.append("relation {} s={} t={}".format(rel.name, rel.s, rel.t))
        for row in entries(rel.E):
            out.append(" ".join(format_scalar(x) for x in row))
    if P.star_Q is not None:
        values = [format_scalar(x) for row in entries(P.star_Q) for x in row]
        out.append("star Q {} involution={}".format(" ".join(values), P.involution.value))
    return "\n".join(out) + "\n"
