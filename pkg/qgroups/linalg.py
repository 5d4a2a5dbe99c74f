"""
Exact linear algebra helpers over the scalar field.

Thin layer over sympy's sparse `DomainMatrix`: identity and Kronecker
products, null spaces in a deterministic echelon order, left inverses,
and the JSON text form of scalar matrices used on the command line.
"""

import json
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from qgroups.exceptions import DimensionError, ParseError
from qgroups.scalar import FIELD, evaluate_at, format_scalar, to_scalar

__all__ = [
    'matrix', 'identity', 'kron', 'entries', 'entry', 'nullspace',
    'from_columns', 'left_inverse', 'inverse', 'rank', 'is_zero',
    'evaluate_matrix', 'to_fraction', 'format_matrix', 'parse_matrix',
    'equal', 'scale',
]


def matrix(rows, field=FIELD):
    """Sparse DomainMatrix from a list of rows of scalar-like values."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    dod = {}
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise DimensionError("ragged matrix rows")
        entries_ = {j: to_scalar(v, field) for j, v in enumerate(row)}
        entries_ = {j: v for j, v in entries_.items() if v}
        if entries_:
            dod[i] = entries_
    return DomainMatrix.from_dod(dod, (len(rows), ncols), field)


def identity(n, field=FIELD):
    return DomainMatrix.eye(n, field).to_sparse()


def kron(A, B):
    """Kronecker product, rows indexed by ``i * rows(B) + k``."""
    (m, n), (p, r) = A.shape, B.shape
    a, b = A.to_dod(), B.to_dod()
    dod = {}
    for i, row_a in a.items():
        for k, row_b in b.items():
            target = dod.setdefault(i * p + k, {})
            for j, x in row_a.items():
                for l, y in row_b.items():
                    target[j * r + l] = x * y
    return DomainMatrix.from_dod(dod, (m * p, n * r), A.domain)


def entries(M):
    """Dense list of lists of scalars."""
    zero = M.domain.zero
    rows, cols = M.shape
    dod = M.to_dod()
    return [[dod.get(i, {}).get(j, zero) for j in range(cols)] for i in range(rows)]


def entry(M, i, j):
    return M.to_dod().get(i, {}).get(j, M.domain.zero)


def nullspace(M):
    """
    Basis of the right null space of `M`.

    One vector per free column of the reduced row echelon form, in
    increasing column order, with entry 1 at its free column.

    Returns
    -------
    basis : list of DomainMatrix
        column vectors
    """
    rows, cols = M.shape
    if rows == 0:
        echelon, pivots = {}, ()
    else:
        reduced, pivots = M.to_sparse().rref(method="GJ")
        echelon = reduced.to_dod()
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        dod = {free: {0: M.domain.one}}
        for row_index, pivot in enumerate(pivots):
            value = echelon.get(row_index, {}).get(free)
            if value:
                dod[pivot] = {0: -value}
        basis.append(DomainMatrix.from_dod(dod, (cols, 1), M.domain))
    return basis


def from_columns(columns, nrows, field=FIELD):
    dod = {}
    for j, column in enumerate(columns):
        for i, row in column.to_dod().items():
            if row.get(0):
                dod.setdefault(i, {})[j] = row[0]
    return DomainMatrix.from_dod(dod, (nrows, len(columns)), field)


def inverse(M):
    return M.to_dense().inv().to_sparse()


def left_inverse(F):
    """``(F^T F)^-1 F^T`` for a matrix of full column rank."""
    Ft = F.transpose()
    return inverse(Ft.matmul(F)).matmul(Ft)


def rank(M):
    if 0 in M.shape:
        return 0
    return M.to_sparse().rank()


def is_zero(M):
    return not any(row for row in M.to_dod().values())


def equal(A, B):
    """Entrywise equality, independent of the sparse or dense format."""
    return A.shape == B.shape and A.to_dod() == B.to_dod()


def scale(M, value):
    """Sparse product of a matrix and a scalar."""
    dod = {i: {j: x * value for j, x in row.items()} for i, row in M.to_dod().items()}
    if not value:
        dod = {}
    return DomainMatrix.from_dod(dod, M.shape, M.domain)


def evaluate_matrix(M, q0):
    """Evaluate every entry at ``q = q0``; returns a DomainMatrix over QQ."""
    dod = {}
    for i, row in M.to_dod().items():
        for j, value in row.items():
            x = evaluate_at(value, q0)
            dod.setdefault(i, {})[j] = QQ(x.numerator, x.denominator)
    return DomainMatrix.from_dod(dod, M.shape, QQ)


def to_fraction(x):
    return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))


def format_matrix(M):
    """JSON nested arrays of scalar strings."""
    return json.dumps([[format_scalar(x) for x in row] for row in entries(M)])


def parse_matrix(text, field=FIELD):
    """
    Parse a JSON matrix whose entries are numbers or scalar strings.

    Raises
    ------
    ParseError
        if the text is not a JSON list of equally long lists
    """
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid matrix: {}".format(exc.msg), exc.lineno, exc.colno)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("a matrix must be a list of rows")
    converted = [[_scalar_cell(v, field) for v in row] for row in rows]
    return matrix(converted, field)


def _scalar_cell(value, field):
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return to_scalar(value, field)
    raise ParseError("matrix entries must be integers or scalar strings")
