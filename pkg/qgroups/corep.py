"""
Corepresentations of quantum matrix groups.

A corepresentation is a square matrix ``v`` over the algebra with
``Δv_ab = Σ_c v_ac ⊗ v_cb`` and ``ε(v_ab) = δ_ab``. This module builds
them (fundamental, trivial, sums, tensor products, contragredients, the
spin tower), solves for intertwiners and provides the Hecke operators on
tensor powers of the fundamental corepresentation of a 2x2 quantum group.

Classes
-------
 - `CorepMatrix` -- checked corepresentation matrix
 - `HeckeOp` -- Hecke operator acting on positions k, k+1 of (C^2)^{⊗n}
"""

import json
import logging
from collections import deque
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from qgroups.exceptions import (CorepError, DimensionError, InvariantViolation,
                                PresentationError)
from qgroups.hopf import antipode, counit, delta, star
from qgroups.linalg import (entries, equal, from_columns, identity, inverse,
                            is_zero, kron, matrix, nullspace, scale)
from qgroups.ncalg import NCPoly, TensorPoly, format_element, tensor_reduce
from qgroups.report import CheckReport
from qgroups.scalar import Involution, conjugate, format_scalar, power

__all__ = [
    'CorepMatrix', 'HeckeOp', 'fundamental', 'trivial', 'direct_sum',
    'tensor_prod', 'tensor_power', 'contragredient', 'conjugate_corep',
    'subcorep', 'kernel_is_invariant', 'mor_space', 'hecke_sigma',
    'symmetrizer', 'sym_subspace', 'spin_corep', 'multiplicity_table',
    'clebsch_gordan_check', 'check_lorentz_X', 'flip',
    'CHECKED_SPIN_LIMIT', 'CLEBSCH_GORDAN_CAP',
]

logger = logging.getLogger(__name__)

# spin corepresentations up to this spin are verified when built
CHECKED_SPIN_LIMIT = Fraction(3, 2)
CLEBSCH_GORDAN_CAP = Fraction(3, 2)


class CorepMatrix:
    """
    Square matrix over a presentation, verified to be a corepresentation.

    Parameters
    ----------
    rows : list of lists
        entries as NCPolys, words or scalars; they are reduced
    P : Presentation
    check : bool, optional
        verify ``Δv_ab = Σ_c v_ac ⊗ v_cb`` and ``ε(v_ab) = δ_ab``,
        defaults to True

    Raises
    ------
    DimensionError
        if the matrix is not square
    CorepError
        if a corepresentation condition fails; the message names the entry
    """

    def __init__(self, rows, P, check=True):
        rows = [list(row) for row in rows]
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DimensionError("a corepresentation matrix must be square and nonempty")
        self.presentation = P
        self.dim = len(rows)
        self.entries = [[P.reduce(P.element(x)) for x in row] for row in rows]
        if check:
            report = self.verify()
            if not report.passed:
                failure = report.failures[0]
                raise CorepError(
                    "{}: {} (witness {})".format(failure.name, failure.detail, failure.witness)
                )

    def __getitem__(self, index):
        a, b = index
        return self.entries[a][b]

    def verify(self):
        """Report on the corepresentation conditions, entry by entry."""
        P = self.presentation
        report = CheckReport("corepresentation of dimension {}".format(self.dim))
        systems = (P.rewrite, P.rewrite)
        comult, unit = None, None
        for a in range(self.dim):
            for b in range(self.dim):
                x = self.entries[a][b]
                expected = TensorPoly.zero((P.alphabet, P.alphabet), P.field)
                for c in range(self.dim):
                    expected = expected + TensorPoly.from_legs(self.entries[a][c], self.entries[c][b])
                if comult is None and delta(x, P) != tensor_reduce(expected, *systems):
                    comult = "Δv_ab differs from Σ_c v_ac ⊗ v_cb at entry ({}, {})".format(a + 1, b + 1), \
                        format_element(x)
                target = P.field.one if a == b else P.field.zero
                if unit is None and counit(x, P) != target:
                    unit = "ε(v_ab) differs from δ_ab at entry ({}, {})".format(a + 1, b + 1), \
                        format_element(x)
        for name, failure in (("comultiplication", comult), ("counit", unit)):
            if failure is None:
                report.add(name, True, "{} entries".format(self.dim ** 2))
            else:
                report.add(name, False, *failure)
        return report

    def format(self):
        return [[format_element(x) for x in row] for row in self.entries]

    def to_json(self):
        return json.dumps(self.format(), ensure_ascii=False)

    def __eq__(self, other):
        if not isinstance(other, CorepMatrix):
            return NotImplemented
        return self.presentation is other.presentation and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return "CorepMatrix({})".format(self.to_json())


def _check_same(v, w):
    if v.presentation is not w.presentation:
        raise PresentationError("corepresentations over different presentations")


def fundamental(P):
    """The generator matrix w as a corepresentation."""
    return CorepMatrix(P.generator_matrix(), P)


def trivial(P):
    """The one-dimensional trivial corepresentation (1)."""
    return CorepMatrix([[1]], P)


def direct_sum(v, w):
    _check_same(v, w)
    P = v.presentation
    size = v.dim + w.dim
    rows = [[0] * size for _ in range(size)]
    for a in range(v.dim):
        for b in range(v.dim):
            rows[a][b] = v.entries[a][b]
    for a in range(w.dim):
        for b in range(w.dim):
            rows[v.dim + a][v.dim + b] = w.entries[a][b]
    return CorepMatrix(rows, P, check=False)


def tensor_prod(v, w):
    """
    Tensor product ``(v ⊗ w)_{ij,kl} = v_ik w_jl``.

    Rows and columns are indexed by ``i * dim(w) + j`` (lexicographic).
    """
    _check_same(v, w)
    P = v.presentation
    size = v.dim * w.dim
    rows = [[None] * size for _ in range(size)]
    for i in range(v.dim):
        for j in range(w.dim):
            for k in range(v.dim):
                for l in range(w.dim):
                    rows[i * w.dim + j][k * w.dim + l] = v.entries[i][k] * w.entries[j][l]
    return CorepMatrix(rows, P, check=False)


def tensor_power(P, n):
    """``w^{⊗n}``, the trivial corepresentation for n = 0."""
    if n < 0:
        raise ValueError("n must be a non-negative integer")
    result = trivial(P)
    w = fundamental(P)
    for _ in range(n):
        result = tensor_prod(result, w)
    return result


def contragredient(v):
    """The contragredient ``v^c_ij = S(v_ji)``."""
    P = v.presentation
    rows = [[antipode(v.entries[j][i], P) for j in range(v.dim)] for i in range(v.dim)]
    return CorepMatrix(rows, P)


def _scalar_product(A, V, P):
    """Product of a scalar matrix (list of rows) and a matrix of NCPolys."""
    zero = NCPoly.zero(P.alphabet, P.field)
    result = []
    for row in A:
        out = []
        for b in range(len(V[0])):
            total = zero
            for k, coeff in enumerate(row):
                if coeff:
                    total = total + V[k][b] * coeff
            out.append(total)
        result.append(out)
    return result


def _product_scalar(V, A, P):
    """Product of a matrix of NCPolys and a scalar matrix."""
    zero = NCPoly.zero(P.alphabet, P.field)
    result = []
    for row in V:
        out = []
        for b in range(len(A[0])):
            total = zero
            for k, x in enumerate(row):
                if A[k][b]:
                    total = total + x * A[k][b]
            out.append(total)
        result.append(out)
    return result


def conjugate_corep(v, T):
    """The equivalent corepresentation ``T v T^-1`` for an invertible scalar T."""
    P = v.presentation
    if T.shape != (v.dim, v.dim):
        raise DimensionError("T must be {0}x{0}".format(v.dim))
    rows = _product_scalar(_scalar_product(entries(T), v.entries, P), entries(inverse(T)), P)
    return CorepMatrix(rows, P, check=False)


def subcorep(v, K):
    """
    Restriction of v to the subspace spanned by the columns of K.

    Solves ``v K = K u`` for u.

    Raises
    ------
    CorepError
        if the subspace is not invariant
    """
    P = v.presentation
    Kt = K.transpose()
    projector = entries(inverse(Kt.matmul(K)).matmul(Kt))
    K_rows = entries(K)
    vK = _product_scalar(v.entries, K_rows, P)
    u = _scalar_product(projector, vK, P)
    if _scalar_product(K_rows, u, P) != vK:
        raise CorepError("subspace is not invariant under the corepresentation")
    return CorepMatrix(u, P, check=False)


def kernel_is_invariant(A, v):
    """True if the kernel of the scalar matrix A is an invariant subspace of v."""
    kernel = nullspace(A)
    if not kernel:
        return True
    try:
        subcorep(v, from_columns(kernel, v.dim, v.presentation.field))
    except CorepError:
        return False
    return True


def mor_space(v, w):
    """
    Basis of the intertwiner space ``Mor(v, w) = {A : A v = w A}``.

    The entries of ``A v - w A`` are linear in the unknown entries of A;
    equating the coefficient of every normal word to zero gives a sparse
    linear system over the scalar field.

    Returns
    -------
    basis : list of DomainMatrix
        dim(w) x dim(v) matrices, in echelon order of the unknowns
    """
    _check_same(v, w)
    P = v.presentation
    m, n = w.dim, v.dim
    equations = {}

    def accumulate(a, b, unknown, poly, sign):
        for word, coeff in poly.terms.items():
            row = equations.setdefault((a, b, word), {})
            value = row.get(unknown, P.field.zero) + (coeff if sign > 0 else -coeff)
            if value:
                row[unknown] = value
            else:
                row.pop(unknown, None)

    for a in range(m):
        for b in range(n):
            for j in range(n):
                accumulate(a, b, a * n + j, v.entries[j][b], 1)
            for i in range(m):
                accumulate(a, b, i * n + b, w.entries[a][i], -1)

    rows = [row for row in equations.values() if row]
    dod = {k: row for k, row in enumerate(rows)}
    system = DomainMatrix.from_dod(dod, (len(rows), m * n), P.field)
    basis = []
    for vector in nullspace(system):
        values = vector.to_dod()
        dod = {}
        for index, row in values.items():
            if row.get(0):
                dod.setdefault(index // n, {})[index % n] = row[0]
        basis.append(DomainMatrix.from_dod(dod, (m, n), P.field))
    logger.debug("Mor space of dimension %d between %dx%d and %dx%d", len(basis), n, n, m, m)
    return basis


def flip(field):
    """The flip ``e_i ⊗ e_j -> e_j ⊗ e_i`` on C^2 ⊗ C^2."""
    rows = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[j * 2 + i][i * 2 + j] = 1
    return matrix(rows, field)


def _relation(P, s, t):
    for rel in P.relations:
        if rel.s == s and rel.t == t:
            return rel.E
    return None


def _hecke_generator(P):
    """``σ = 1 + q E E'`` on C^2 ⊗ C^2."""
    if P.N != 2:
        raise PresentationError("Hecke operators need a 2x2 presentation")

    def build():
        E, E_prime = _relation(P, 0, 2), _relation(P, 2, 0)
        if E is None or E_prime is None:
            raise PresentationError("presentation {} lacks E and E'".format(P.name))
        return (identity(4, P.field) + scale(E.matmul(E_prime), P.q)).to_sparse()

    return P.cached("hecke-generator", build)


def _padded(sigma, n, k, field):
    """``1^{⊗(k-1)} ⊗ σ ⊗ 1^{⊗(n-k-1)}``."""
    return kron(kron(identity(2 ** (k - 1), field), sigma), identity(2 ** (n - k - 1), field))


class HeckeOp:
    """
    Hecke operator σ_k on (C^2)^{⊗n}.

    Verifies ``(σ_k - 1)(σ_k + q^2) = 0`` at construction.
    """

    def __init__(self, n, k, matrix_, q):
        if not 1 <= k < n:
            raise ValueError("need 1 <= k < n")
        self.n = n
        self.k = k
        self.matrix = matrix_
        self.q = q
        field = matrix_.domain
        one = identity(2 ** n, field)
        if not is_zero((matrix_ - one).matmul(matrix_ + scale(one, q ** 2))):
            raise InvariantViolation("σ_{} violates the quadratic relation".format(k))

    def __mul__(self, other):
        if isinstance(other, HeckeOp):
            return self.matrix.matmul(other.matrix)
        return self.matrix.matmul(other)

    def __repr__(self):
        return "HeckeOp(n={}, k={})".format(self.n, self.k)


def hecke_sigma(n, k, P):
    """
    The Hecke operator σ_k on (C^2)^{⊗n}.

    The quadratic relation, the braid relation with the neighbouring
    operators and the commutation with operators at distance two or more
    are verified.

    Raises
    ------
    InvariantViolation
        if one of the Hecke relations fails
    """
    sigma = _hecke_generator(P)
    op = HeckeOp(n, k, _padded(sigma, n, k, P.field), P.q)
    for other in range(1, n):
        if other == k:
            continue
        M = _padded(sigma, n, other, P.field)
        if abs(other - k) == 1:
            left = op.matrix.matmul(M).matmul(op.matrix)
            right = M.matmul(op.matrix).matmul(M)
            if not equal(left, right):
                raise InvariantViolation("braid relation fails for σ_{}, σ_{}".format(k, other))
        elif not equal(op.matrix.matmul(M), M.matmul(op.matrix)):
            raise InvariantViolation("σ_{} and σ_{} do not commute".format(k, other))
    return op


def _length(perm):
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def symmetrizer(n, P):
    """
    The q-symmetrizer ``S_n = Σ_π q^{-2 l(π)} σ_π``.

    σ_π is built along reduced words: ``σ_{π s_k} = σ_π σ_k`` whenever the
    length grows by one.
    """
    if n < 0:
        raise ValueError("n must be a non-negative integer")
    field = P.field
    size = 2 ** n
    if n < 2:
        return identity(size, field)
    sigmas = [_padded(_hecke_generator(P), n, k, field) for k in range(1, n)]
    start = tuple(range(n))
    seen = {start: identity(size, field)}
    queue = deque([start])
    while queue:
        perm = queue.popleft()
        for k in range(1, n):
            if perm[k - 1] > perm[k]:
                continue
            following = list(perm)
            following[k - 1], following[k] = following[k], following[k - 1]
            following = tuple(following)
            if following not in seen:
                seen[following] = seen[perm].matmul(sigmas[k - 1])
                queue.append(following)
    total = None
    for perm, M in seen.items():
        term = scale(M, power(P.q, -2 * _length(perm)))
        total = term if total is None else total + term
    return total.to_sparse()


def sym_subspace(n, P):
    """
    Basis of the q-symmetric tensors ``K^{n/2} = {x : σ_k x = x for all k}``.

    Returns
    -------
    A : DomainMatrix
        2^n x (n+1) matrix whose columns are the basis, one per free
        column of the echelon form

    Raises
    ------
    InvariantViolation
        if the dimension is not n + 1
    """
    if n < 0:
        raise ValueError("n must be a non-negative integer")

    def build():
        field = P.field
        size = 2 ** n
        if n == 0:
            return identity(1, field)
        sigma = _hecke_generator(P)
        one = identity(size, field)
        dod = {}
        for k in range(1, n):
            block = (_padded(sigma, n, k, field) - one).to_dod()
            for i, row in block.items():
                dod[len(dod)] = row
        system = DomainMatrix.from_dod(dod, (len(dod), size), field)
        basis = nullspace(system)
        if len(basis) != n + 1:
            raise InvariantViolation(
                "symmetric subspace of degree {} has dimension {}".format(n, len(basis))
            )
        return from_columns(basis, size, field)

    return P.cached(("sym-subspace", n), build)


def _as_spin(l):
    l = Fraction(l)
    if l < 0 or (2 * l).denominator != 1:
        raise ValueError("spin must be a non-negative half-integer")
    return l


def spin_corep(l, P, check=None):
    """
    The spin-l corepresentation v^l of dimension 2l+1.

    With A the basis matrix of `sym_subspace` (n = 2l) and G = A^T A,
    ``v = G^-1 A^T w^{⊗n} A`` is the unique solution of ``w^{⊗n} A = A v``.

    Parameters
    ----------
    l : half-integer (int, Fraction or str such as "3/2")
    P : Presentation
    check : bool, optional
        verify the corepresentation conditions and ``w^{⊗n} A = A v``;
        defaults to True up to `CHECKED_SPIN_LIMIT`

    Raises
    ------
    ValueError
        if l is not a non-negative half-integer
    CorepError
        if the verification fails
    """
    l = _as_spin(l)
    n = int(2 * l)
    if check is None:
        check = l <= CHECKED_SPIN_LIMIT

    def build():
        A = sym_subspace(n, P)
        if n == 0:
            return CorepMatrix([[1]], P, check=False), None
        A_rows = entries(A)
        W = tensor_power(P, n)
        WA = _product_scalar(W.entries, A_rows, P)
        At = A.transpose()
        projector = entries(inverse(At.matmul(A)).matmul(At))
        v = CorepMatrix(_scalar_product(projector, WA, P), P, check=False)
        logger.info("built spin %s corepresentation of dimension %d", l, n + 1)
        return v, (A_rows, WA)

    v, data = P.cached(("spin", l), build)
    if check and not P.recall(("spin-checked", l), False):
        if data is not None and _scalar_product(data[0], v.entries, P) != data[1]:
            raise CorepError("w^{{⊗{}}} A differs from A v".format(n))
        report = v.verify()
        if not report.passed:
            raise CorepError("spin {} is not a corepresentation: {}".format(l, report.failures[0].detail))
        P.remember(("spin-checked", l), True)
    return v


def multiplicity_table(a, b, P):
    """``dim Mor(v^c, v^a ⊗ v^b)`` for c = 0, 1/2, ..., a + b."""
    a, b = _as_spin(a), _as_spin(b)
    product_ = tensor_prod(spin_corep(a, P), spin_corep(b, P))
    table = {}
    c = Fraction(0)
    while c <= a + b:
        table[c] = len(mor_space(spin_corep(c, P), product_))
        c += Fraction(1, 2)
    return table


def _spin_text(x):
    return str(x.numerator) if x.denominator == 1 else "{}/{}".format(x.numerator, x.denominator)


def clebsch_gordan_check(a, b, P, cap=CLEBSCH_GORDAN_CAP):
    """
    Compare the multiplicities of ``v^a ⊗ v^b`` with the Clebsch-Gordan rule.

    ``v^c`` occurs exactly once for ``|a-b| <= c <= a+b`` with a+b-c an
    integer, and not at all otherwise.

    Raises
    ------
    ValueError
        if a or b exceeds `cap`
    """
    a, b = _as_spin(a), _as_spin(b)
    if a > cap or b > cap:
        raise ValueError("spins are limited to {}".format(_spin_text(Fraction(cap))))
    report = CheckReport("Clebsch-Gordan {} ⊗ {}".format(_spin_text(a), _spin_text(b)))
    for c, found in multiplicity_table(a, b, P).items():
        expected = 1 if abs(a - b) <= c <= a + b and (a + b - c).denominator == 1 else 0
        report.add(
            "c={}".format(_spin_text(c)), found == expected,
            "multiplicity {} (expected {})".format(found, expected),
        )
    return report


def check_lorentz_X(X, inv=Involution.IDENTITY, P=None):
    """
    Check the conditions on a 4x4 matrix X defining a quantum Lorentz group.

    Parameters
    ----------
    X : DomainMatrix
        4x4 scalar matrix
    inv : Involution, optional
        conjugation used for the entries of X
    P : Presentation, optional
        2x2 presentation with star data, defaults to SU_q(2)

    Returns
    -------
    report : CheckReport
        ``commutation``: X (w ⊗ w̄) = (w̄ ⊗ w) X with w̄_ij = (w_ij)*;
        ``invertibility``: det X != 0; ``reality``: τ X̄ τ = c X;
        ``proportionality``: (X ⊗ 1)(1 ⊗ X)(E ⊗ 1) = s (1 ⊗ E), s != 0
    """
    if P is None:
        from qgroups.hopf import builtin
        P = builtin("suq2")
    if X.shape != (4, 4):
        raise DimensionError("X must be a 4x4 matrix")
    if P.N != 2:
        raise PresentationError("the Lorentz conditions need a 2x2 presentation")
    inv = Involution(inv)
    field = P.field
    X = X.convert_to(field)
    X_rows = entries(X)
    report = CheckReport("quantum Lorentz conditions")

    w = P.generator_matrix()
    w_bar = [[star(w[i][j], P) for j in range(2)] for i in range(2)]

    def tensor(left, right):
        return [
            [P.reduce(left[i][k] * right[j][l]) for k in range(2) for l in range(2)]
            for i in range(2) for j in range(2)
        ]

    lhs = [[P.reduce(x) for x in row] for row in _scalar_product(X_rows, tensor(w, w_bar), P)]
    rhs = [[P.reduce(x) for x in row] for row in _product_scalar(tensor(w_bar, w), X_rows, P)]
    mismatch = next(((r, c) for r in range(4) for c in range(4) if lhs[r][c] != rhs[r][c]), None)
    if mismatch is None:
        report.add("commutation", True, "X(w⊗w̄) = (w̄⊗w)X")
    else:
        r, c = mismatch
        label = "({}{},{}{})".format(r // 2 + 1, r % 2 + 1, c // 2 + 1, c % 2 + 1)
        report.add("commutation", False, "entry {} differs".format(label),
                   format_element(lhs[r][c] - rhs[r][c]))

    determinant = X.to_dense().det()
    report.add("invertibility", bool(determinant), "det X = {}".format(format_scalar(determinant)))

    tau = entries(flip(field))
    X_bar = [[conjugate(x, inv) for x in row] for row in X_rows]
    conj = entries(matrix(tau, field).matmul(matrix(X_bar, field)).matmul(matrix(tau, field)))
    pivot = next(((r, c) for r in range(4) for c in range(4) if X_rows[r][c]), None)
    if pivot is None:
        report.add("reality", False, "X vanishes")
    else:
        c_value = conj[pivot[0]][pivot[1]] / X_rows[pivot[0]][pivot[1]]
        holds = all(conj[r][c] == c_value * X_rows[r][c] for r in range(4) for c in range(4))
        report.add("reality", holds and bool(c_value),
                   "c = {}".format(format_scalar(c_value)) if holds else "τX̄τ is not a multiple of X")

    E = _relation(P, 0, 2)
    if E is None:
        report.add("proportionality", False, "no relation E in Mor(1, w⊗w)")
        return report
    one = identity(2, field)
    left = kron(X, one).matmul(kron(one, X)).matmul(kron(E, one))
    right = kron(one, E)
    left_rows, right_rows = entries(left), entries(right)
    pivot = next(((r, c) for r in range(8) for c in range(2) if right_rows[r][c]), None)
    s_value = left_rows[pivot[0]][pivot[1]] / right_rows[pivot[0]][pivot[1]]
    holds = all(
        left_rows[r][c] == s_value * right_rows[r][c] for r in range(8) for c in range(2)
    )
    report.add("proportionality", holds and bool(s_value),
               "s = {}".format(format_scalar(s_value)) if holds else "not proportional to 1⊗E")
    return report
