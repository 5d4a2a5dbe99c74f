"""
Presentations of quantum matrix groups and their Hopf structure maps.

A presentation is given by the size N of the generator matrix
``w = (w_ij)`` and a list of intertwiner relations
``E w^{⊗s} = w^{⊗t} E``. The relations are oriented into a rewrite
system; comultiplication, counit, antipode and (optionally) the star
operation are then extended from their values on generators.

Classes
-------
 - `Relation` -- one intertwiner relation (name, E, s, t)
 - `StructureMaps` -- generator tables of the structure maps
 - `Presentation` -- generators, relations, rewrite system, star data
 - `Character` -- one-dimensional representation of SL_q(2)
"""

import logging
import threading
from collections import namedtuple
from itertools import permutations, product

from qgroups.exceptions import (AntipodeError, DimensionError,
                                PresentationError, RegimeError,
                                StarStructureError)
from qgroups.linalg import (entries, inverse, left_inverse, matrix, nullspace,
                            rank)
from qgroups.ncalg import (MonomialOrder, NCPoly, TensorPoly, basis_words,
                           extend_homomorphism, extend_tensor_homomorphism,
                           format_element, format_word, orient_relations,
                           tensor_reduce)
from qgroups.report import CheckReport
from qgroups.scalar import (FIELD, Involution, conjugate, evaluate_at,
                            format_scalar, generator, power, to_scalar)

__all__ = [
    'Relation', 'StructureMaps', 'Presentation', 'Character', 'BUILTINS',
    'builtin', 'make_antisym_E', 'make_sigma_N', 'delta', 'counit',
    'derive_antipode', 'antipode', 'star', 'check_hopf_axioms',
    'character', 'check_b_condition', 'DEFAULT_CHECK_DEGREE',
]

logger = logging.getLogger(__name__)

DEFAULT_CHECK_DEGREE = 2

BUILTINS = ("slq2", "sl_t1_2", "slqN", "suq2", "suq11", "slq2R", "sphere")

# weights and precedence giving the normal forms a^i b^j c^k and d^i b^j c^k
SLQ2_ORDER = MonomialOrder((1, 0, 0, 1), (0, 2, 3, 1))
SL_T1_ORDER = MonomialOrder((1, 2, 0, 1), (0, 1, 2, 3))

Relation = namedtuple("Relation", "name E s t")

StructureMaps = namedtuple("StructureMaps", "delta counit antipode star involution")


def _default_alphabet(N):
    if N == 2:
        return ("a", "b", "c", "d")
    return tuple("w{}{}".format(i + 1, j + 1) for i in range(N) for j in range(N))


def _digits(index, length, N):
    digits = []
    for _ in range(length):
        index, r = divmod(index, N)
        digits.append(r)
    return tuple(reversed(digits))


def _tensor_word(row, col, length, N):
    """Word of the entry (row, col) of w^{⊗length}."""
    rows, cols = _digits(row, length, N), _digits(col, length, N)
    return tuple(i * N + j for i, j in zip(rows, cols))


class Presentation:
    """
    Quantum matrix group given by intertwiner relations.

    Parameters
    ----------
    N : int
        size of the generator matrix
    relations : list of Relation or (name, E, s, t) tuples
        E is a DomainMatrix (or list of rows) with N**t rows and N**s
        columns
    star_Q : DomainMatrix or list of rows, optional
        N x N matrix defining ``w* = Q w Q^-1`` entrywise
    involution : Involution or str, optional
        action of conjugation on q, defaults to the identity
    name : str, optional
    order : MonomialOrder, optional
        defaults to the graded order by generator index
    alphabet : tuple of str, optional
        generator names, ``a b c d`` for N = 2
    field : sympy FractionField, optional
    q : scalar, optional
        value of the deformation parameter used by Hecke operators

    Raises
    ------
    DimensionError
        if an E matrix has the wrong shape
    StarStructureError
        if ``conj(Q) Q`` is not a nonzero multiple of the identity
    """

    def __init__(self, N, relations, star_Q=None, involution=Involution.IDENTITY,
                 name="", order=None, alphabet=None, field=FIELD, q=None):
        if N < 1:
            raise ValueError("N must be a positive integer")
        self.N = N
        self.field = field
        self.name = name
        self.alphabet = tuple(alphabet) if alphabet else _default_alphabet(N)
        if len(self.alphabet) != N * N:
            raise DimensionError("need {} generator names".format(N * N))
        self.order = order or MonomialOrder.graded_lex(N * N)
        self.q = generator("q", field) if q is None else to_scalar(q, field)
        self.involution = Involution(involution)

        self.relations = []
        for rel in relations:
            name_, E, s, t = rel
            if not hasattr(E, "to_dod"):
                E = matrix(E, field)
            if E.shape != (N ** t, N ** s):
                raise DimensionError(
                    "relation {} needs a {}x{} matrix, got {}x{}".format(
                        name_, N ** t, N ** s, *E.shape
                    )
                )
            self.relations.append(Relation(name_, E.convert_to(field), s, t))

        self.star_Q = None
        if star_Q is not None:
            Q = star_Q if hasattr(star_Q, "to_dod") else matrix(star_Q, field)
            if Q.shape != (N, N):
                raise DimensionError("star Q must be {}x{}".format(N, N))
            self.star_Q = Q.convert_to(field)
            self._check_star_Q()

        self._lock = threading.Lock()
        self._cache = {}
        self.rewrite = orient_relations(self.relation_polynomials(), self.alphabet, self.order, field)

        delta_table = []
        counit_table = []
        for i in range(N):
            for j in range(N):
                terms = {((i * N + k,), (k * N + j,)): 1 for k in range(N)}
                delta_table.append(TensorPoly(terms, (self.alphabet, self.alphabet), field))
                counit_table.append(field.one if i == j else field.zero)

        try:
            antipode_matrix = derive_antipode(self)
            antipode_table = [antipode_matrix[g // N][g % N] for g in range(N * N)]
        except AntipodeError as exc:
            logger.warning("no antipode for %s: %s", name or "presentation", exc)
            antipode_table = None
            self._antipode_error = exc

        star_table = self._star_table() if self.star_Q is not None else None
        self.maps = StructureMaps(delta_table, counit_table, antipode_table, star_table, self.involution)
        logger.info("built presentation %s with %d rewrite rules", name, len(self.rewrite.rules))

    def _check_star_Q(self):
        Q = entries(self.star_Q)
        conj_Q = matrix([[conjugate(x, self.involution) for x in row] for row in Q], self.field)
        product_ = entries(conj_Q.matmul(self.star_Q))
        d = product_[0][0]
        scalar = all(
            product_[i][j] == (d if i == j else self.field.zero)
            for i in range(self.N) for j in range(self.N)
        )
        if not d or not scalar:
            raise StarStructureError("conj(Q) Q is not a nonzero multiple of the identity")

    def _star_table(self):
        N = self.N
        Q = entries(self.star_Q)
        Q_inv = entries(inverse(self.star_Q))
        table = []
        for i in range(N):
            for j in range(N):
                terms = {}
                for k in range(N):
                    for l in range(N):
                        coeff = Q[i][k] * Q_inv[l][j]
                        if coeff:
                            terms[(k * N + l,)] = terms.get((k * N + l,), self.field.zero) + coeff
                table.append(NCPoly(terms, self.alphabet, self.field))
        return table

    @property
    def has_star(self):
        return self.star_Q is not None

    def gen(self, i, j):
        """Generator w_ij (0-based) as an NCPoly."""
        return NCPoly.generator(i * self.N + j, self.alphabet, self.field)

    def generator_matrix(self):
        return [[self.gen(i, j) for j in range(self.N)] for i in range(self.N)]

    def element(self, value):
        """Coerce a scalar, word or NCPoly into this algebra."""
        if isinstance(value, NCPoly):
            return value
        if isinstance(value, tuple):
            return NCPoly.word(value, self.alphabet, self.field)
        return NCPoly.scalar(value, self.alphabet, self.field)

    def reduce(self, x):
        return self.rewrite.reduce(x)

    def relation_polynomials(self):
        """Entrywise relations ``(E w^{⊗s} - w^{⊗t} E)_{IJ}`` as NCPolys."""
        N = self.N
        polys = []
        for rel in self.relations:
            E = entries(rel.E)
            for I in range(N ** rel.t):
                for J in range(N ** rel.s):
                    terms = {}
                    for K in range(N ** rel.s):
                        if E[I][K]:
                            word = _tensor_word(K, J, rel.s, N)
                            terms[word] = terms.get(word, self.field.zero) + E[I][K]
                    for K in range(N ** rel.t):
                        if E[K][J]:
                            word = _tensor_word(I, K, rel.t, N)
                            terms[word] = terms.get(word, self.field.zero) - E[K][J]
                    poly = NCPoly(terms, self.alphabet, self.field)
                    if poly:
                        polys.append(poly)
        return polys

    def cached(self, key, factory):
        """Memoize `factory()` under `key` for the lifetime of the presentation."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            return self._cache.setdefault(key, value)

    def recall(self, key, default=None):
        with self._lock:
            return self._cache.get(key, default)

    def remember(self, key, value):
        with self._lock:
            self._cache[key] = value

    def basis(self, max_degree):
        return basis_words(self.rewrite, max_degree)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented

        def _rels(P):
            return [(r.name, r.s, r.t, entries(r.E)) for r in P.relations]

        def _star(P):
            return None if P.star_Q is None else entries(P.star_Q)

        return (
            self.N == other.N
            and self.alphabet == other.alphabet
            and self.order == other.order
            and self.field == other.field
            and self.q == other.q
            and self.involution == other.involution
            and _rels(self) == _rels(other)
            and _star(self) == _star(other)
        )

    __hash__ = None

    def __repr__(self):
        return "Presentation(name={!r}, N={}, relations={}, star={})".format(
            self.name, self.N, [r.name for r in self.relations], self.has_star
        )


def _parameter(q, field):
    value = generator("q", field) if q is None else to_scalar(q, field)
    if not value:
        raise RegimeError("q must be nonzero")
    return value


def _is_constant(x):
    return x.numer.is_ground and x.denom.is_ground


def _field_for(q, field):
    if field is not None:
        return field
    return q.field.to_domain() if hasattr(q, "field") else FIELD


def make_antisym_E(N, q, field=None):
    """
    The q-antisymmetrizer vectors of SL_q(N).

    The entry of the basis vector ``e_π(1) ⊗ ... ⊗ e_π(N)`` is
    ``(-q)^l(π)``, l being the number of inversions.

    Returns
    -------
    E, E_prime : DomainMatrix
        column (N**N x 1) and row (1 x N**N)
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    field = _field_for(q, field)
    q = to_scalar(q, field)
    column = {}
    for perm in permutations(range(N)):
        length = sum(1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j])
        index = 0
        for p in perm:
            index = index * N + p
        column[index] = power(-q, length)
    E = matrix([[column.get(i, 0)] for i in range(N ** N)], field)
    return E, E.transpose()


def make_sigma_N(N, q, field=None):
    """
    Hecke operator on C^N ⊗ C^N.

    ``σ(e_i ⊗ e_j)`` is ``q e_j ⊗ e_i`` for i < j,
    ``q e_j ⊗ e_i + (1 - q^2) e_i ⊗ e_j`` for i > j and ``e_i ⊗ e_i``
    on the diagonal. For N = 2 this equals ``1 + q E E'`` of SL_q(2).
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    field = _field_for(q, field)
    q = to_scalar(q, field)
    rows = [[field.zero] * (N * N) for _ in range(N * N)]
    for i in range(N):
        for j in range(N):
            col = i * N + j
            if i == j:
                rows[col][col] = field.one
            else:
                rows[j * N + i][col] = q
                if i > j:
                    rows[col][col] = 1 - q ** 2
    return matrix(rows, field)


def _slq2_relations(q, field):
    E = [[0], [1], [-q], [0]]
    E_prime = [[0, -(field.one / q), 1, 0]]
    return [Relation("E", matrix(E, field), 0, 2), Relation("E'", matrix(E_prime, field), 2, 0)]


def builtin(name, q=None, N=None, field=FIELD, c=None):
    """
    Build one of the bundled presentations.

    Parameters
    ----------
    name : str
        one of ``slq2``, ``sl_t1_2``, ``slqN``, ``suq2``, ``suq11``,
        ``slq2R`` or ``sphere``
    q : scalar, optional
        value of the deformation parameter; symbolic when omitted,
        ``q=1`` gives the classical groups
    N : int, optional
        matrix size for ``slqN``
    field : sympy FractionField, optional
    c : optional
        sphere parameter, see `qgroups.sphere.sphere_presentation`

    Returns
    -------
    P : Presentation or SpherePresentation

    Raises
    ------
    RegimeError
        q = 0, or a real rational q with the q-inverse involution
    ValueError
        unknown name

    Examples
    --------
    >>> P = builtin("suq2")
    >>> format_element(star(P.gen(0, 1), P))
    '-q*c'
    """
    if name == "sphere":
        from qgroups.sphere import sphere_presentation
        return sphere_presentation(q, "symbolic" if c is None else c, field=field)

    if name == "sl_t1_2":
        E = matrix([[1], [1], [-1], [0]], field)
        E_prime = matrix([[0, -1, 1, 1]], field)
        return Presentation(
            2, [Relation("E", E, 0, 2), Relation("E'", E_prime, 2, 0)],
            name="sl_t1_2", order=SL_T1_ORDER, field=field, q=1,
        )

    qv = _parameter(q, field)
    if name == "slqN":
        if N is None:
            raise ValueError("slqN needs the matrix size N")
        if N < 2:
            raise ValueError("N must be at least 2")
        if N == 2:
            return Presentation(2, _slq2_relations(qv, field), name="slqN(2)",
                                order=SLQ2_ORDER, field=field, q=qv)
        E, E_prime = make_antisym_E(N, qv, field)
        weights = [(i + 1) * (j + 1) for i in range(N) for j in range(N)]
        relations = [
            Relation("sigma", make_sigma_N(N, qv, field), 2, 2),
            Relation("E_q", E, 0, N),
            Relation("E'_q", E_prime, N, 0),
        ]
        return Presentation(N, relations, name="slqN({})".format(N),
                            order=MonomialOrder(weights), field=field, q=qv)

    relations = _slq2_relations(qv, field)
    if name == "slq2":
        return Presentation(2, relations, name="slq2", order=SLQ2_ORDER, field=field, q=qv)
    if name == "suq2":
        Q = [[0, -qv], [1, 0]]
        return Presentation(2, relations, star_Q=Q, name="suq2",
                            order=SLQ2_ORDER, field=field, q=qv)
    if name == "suq11":
        Q = [[0, qv], [1, 0]]
        return Presentation(2, relations, star_Q=Q, name="suq11",
                            order=SLQ2_ORDER, field=field, q=qv)
    if name == "slq2R":
        if _is_constant(qv) and abs(evaluate_at(qv, 0)) != 1:
            raise RegimeError("slq2R needs |q| = 1; rational q must be 1 or -1")
        return Presentation(2, relations, star_Q=[[1, 0], [0, 1]],
                            involution=Involution.Q_INVERSE, name="slq2R",
                            order=SLQ2_ORDER, field=field, q=qv)
    raise ValueError(
        "Presentation not supported! Choose among: {}".format(", ".join(BUILTINS))
    )


def delta(x, P):
    """
    Comultiplication, the homomorphism with ``Δw_ij = Σ_k w_ik ⊗ w_kj``.

    Both legs of the result are in normal form.
    """
    x = P.element(x)
    cache = P.cached("delta", dict)
    return extend_tensor_homomorphism(x, P.maps.delta, (P.rewrite, P.rewrite), cache)


def counit(x, P):
    """Counit, the homomorphism with ``ε(w_ij) = δ_ij``."""
    x = P.element(x)
    total = P.field.zero
    for word, coeff in x.terms.items():
        value = coeff
        for g in word:
            value = value * P.maps.counit[g]
        total = total + value
    return total


def _word_matrix_product(A, B, P):
    size = len(A)
    return [
        [P.reduce(sum((A[i][k] * B[k][j] for k in range(len(B))), NCPoly.zero(P.alphabet, P.field)))
         for j in range(len(B[0]))]
        for i in range(size)
    ]


def _is_identity(M, P):
    one = NCPoly.one(P.alphabet, P.field)
    zero = NCPoly.zero(P.alphabet, P.field)
    return all(
        M[i][j] == (one if i == j else zero) for i in range(len(M)) for j in range(len(M))
    )


def derive_antipode(P, verify=True):
    """
    Antipode on generators from the relation ``E ∈ Mor(1, w^{⊗t})``.

    Writing ``E = Σ_k e_k ⊗ f_k`` and letting ``g'_j`` be the rows of a left
    inverse of the matrix with columns ``f_k``, the matrix
    ``G_kj = g'_j w^{⊗(t-1)} f_k`` is a right inverse of w.

    Parameters
    ----------
    P : Presentation
    verify : bool, optional
        also require G to be a left inverse, defaults to True

    Returns
    -------
    S : list of lists of NCPoly
        ``S(w)``, an N x N matrix in normal form

    Raises
    ------
    AntipodeError
        no suitable E, dependent legs f_k, or G not a two-sided inverse
    """
    N = P.N
    candidates = [r for r in P.relations if r.s == 0 and r.t >= 2]
    if not candidates:
        raise AntipodeError("no relation E in Mor(1, w^t) with t >= 2")
    rel = candidates[0]
    if not any(r.t == 0 and r.s >= 1 for r in P.relations):
        logger.info("no relation E' in Mor(w^s, 1); left inverse is not guaranteed")
    t = rel.t
    width = N ** (t - 1)
    E = entries(rel.E)
    F = matrix([[E[k * width + r][0] for k in range(N)] for r in range(width)], P.field)
    if rank(F) < N:
        dependent = set()
        for vector in nullspace(F):
            dependent.update(i for i, row in vector.to_dod().items() if row)
        raise AntipodeError(
            "legs f_k of {} are linearly dependent: {}".format(
                rel.name, ", ".join("f_{}".format(k + 1) for k in sorted(dependent))
            )
        )
    g_prime = entries(left_inverse(F))
    F_rows = entries(F)

    G = []
    for k in range(N):
        row = []
        for j in range(N):
            terms = {}
            for a in range(width):
                if not g_prime[j][a]:
                    continue
                for b in range(width):
                    if not F_rows[b][k]:
                        continue
                    word = _tensor_word(a, b, t - 1, N)
                    terms[word] = terms.get(word, P.field.zero) + g_prime[j][a] * F_rows[b][k]
            row.append(P.reduce(NCPoly(terms, P.alphabet, P.field)))
        G.append(row)

    if verify:
        w = P.generator_matrix()
        if not _is_identity(_word_matrix_product(w, G, P), P):
            raise AntipodeError("derived matrix is not a right inverse of w")
        if not _is_identity(_word_matrix_product(G, w, P), P):
            raise AntipodeError("derived matrix is not a left inverse of w")
    return G


def _antipode_table(P, verify=True):
    if P.maps.antipode is not None:
        return P.maps.antipode
    if verify:
        raise P._antipode_error
    matrix_ = P.cached("unverified-antipode", lambda: derive_antipode(P, verify=False))
    return [matrix_[g // P.N][g % P.N] for g in range(P.N * P.N)]


def antipode(x, P, verify=True):
    """
    Antipode, the unital antihomomorphism extending ``S(w)``.

    Words are reversed, generators replaced by the antipode table and the
    product reduced.
    """
    x = P.element(x)
    table = _antipode_table(P, verify)
    cache = P.cached(("antipode", verify), dict)
    result = NCPoly.zero(P.alphabet, P.field)
    for word, coeff in x.terms.items():
        image = extend_homomorphism(
            NCPoly.word(tuple(reversed(word)), P.alphabet, P.field), table, P.rewrite, cache
        )
        result = result + image * coeff
    return result


def star(x, P):
    """
    Star operation, ``w*_ij = (Q w Q^-1)_ij`` extended antilinearly and
    antimultiplicatively.

    Raises
    ------
    StarStructureError
        if P carries no star data
    """
    if not P.has_star:
        raise StarStructureError("presentation {} has no star structure".format(P.name))
    x = P.element(x)
    cache = P.cached("star", dict)
    result = NCPoly.zero(P.alphabet, P.field)
    for word, coeff in x.terms.items():
        image = extend_homomorphism(
            NCPoly.word(tuple(reversed(word)), P.alphabet, P.field), P.maps.star, P.rewrite, cache
        )
        result = result + image * conjugate(coeff, P.involution)
    return result


def _compose_delta(x, P, leg):
    """Apply Δ to one leg of a two-leg tensor, giving three legs."""
    systems = (P.rewrite,) * 3
    alphabets = (P.alphabet,) * 3
    terms = TensorPoly.zero(alphabets, P.field)
    for (u, v), coeff in x.terms.items():
        image = delta(NCPoly.word(u if leg == 0 else v, P.alphabet, P.field), P)
        pieces = {}
        for (a, b), c in image.terms.items():
            key = (a, b, v) if leg == 0 else (u, a, b)
            pieces[key] = pieces.get(key, P.field.zero) + c * coeff
        terms = terms + TensorPoly(pieces, alphabets, P.field)
    return tensor_reduce(terms, *systems)


def _apply_legs(x, P, left, right):
    """Sum of ``left(u) * right(v)`` over the terms ``u ⊗ v`` of x, reduced."""
    total = NCPoly.zero(P.alphabet, P.field)
    for (u, v), coeff in x.terms.items():
        total = total + (left(u) * right(v)) * coeff
    return P.reduce(total)


def check_hopf_axioms(P, max_degree=DEFAULT_CHECK_DEGREE):
    """
    Verify the Hopf (and Hopf-*) axioms on all basis words up to a degree.

    Checks coassociativity, the counit law, the antipode law and the
    well-definedness of Δ on every rule. With star data it also checks
    that * is an involution preserving the relations, that
    ``Δ(x*) = (*⊗*)Δ(x)``, ``ε(x*) = conj(ε(x))`` and ``S∘*∘S∘* = id``.

    Returns
    -------
    report : CheckReport
        one entry per axiom; a failing entry carries the first witness
    """
    report = CheckReport("Hopf axioms of {}".format(P.name or "presentation"))
    words = P.basis(max_degree)
    alphabet = P.alphabet

    def element(word):
        return NCPoly.word(word, alphabet, P.field)

    def run(name, test, items):
        for item in items:
            failure = test(item)
            if failure is not None:
                report.add(name, False, failure[0], failure[1])
                return
        report.add(name, True, "{} cases".format(len(items)))

    def coassociativity(word):
        d = delta(element(word), P)
        if _compose_delta(d, P, 0) != _compose_delta(d, P, 1):
            return "(Δ⊗id)Δ differs from (id⊗Δ)Δ", format_word(word, alphabet)

    def counit_law(word):
        d = delta(element(word), P)
        x = element(word)
        left = _apply_legs(d, P, lambda u: NCPoly.one(alphabet, P.field) * counit(element(u), P),
                           element)
        right = _apply_legs(d, P, element,
                            lambda v: NCPoly.one(alphabet, P.field) * counit(element(v), P))
        if left != P.reduce(x) or right != P.reduce(x):
            return "(ε⊗id)Δ(x) or (id⊗ε)Δ(x) differs from x", format_word(word, alphabet)

    def antipode_law(word):
        d = delta(element(word), P)
        expected = NCPoly.scalar(counit(element(word), P), alphabet, P.field)
        left = _apply_legs(d, P, lambda u: antipode(element(u), P, verify=False), element)
        right = _apply_legs(d, P, element, lambda v: antipode(element(v), P, verify=False))
        for side, value in (("μ(S⊗id)Δ", left), ("μ(id⊗S)Δ", right)):
            if value != expected:
                return "{}(x) - ε(x)1 = {}".format(side, format_element(value - expected)), \
                    format_word(word, alphabet)

    run("coassociativity", coassociativity, words)
    run("counit", counit_law, words)
    try:
        _antipode_table(P, verify=False)
        run("antipode", antipode_law, words)
    except AntipodeError as exc:
        report.add("antipode", False, str(exc), None)

    rule_polys = [element(lead) - NCPoly(rhs, alphabet, P.field) for lead, rhs in P.rewrite.rules]
    rule_polys += [NCPoly(rel, alphabet, P.field) for _, _, rel in P.rewrite.central_rules]

    def well_defined(relation):
        if delta(relation, P):
            return "Δ does not vanish on a relation", format_element(relation)

    run("delta-well-defined", well_defined, rule_polys)

    if P.has_star:
        _check_star_axioms(P, words, rule_polys, run, element)
    return report


def _star_tensor(x, P):
    terms = TensorPoly.zero(x.alphabets, P.field)
    for (u, v), coeff in x.terms.items():
        su = star(NCPoly.word(u, P.alphabet, P.field), P)
        sv = star(NCPoly.word(v, P.alphabet, P.field), P)
        terms = terms + TensorPoly.from_legs(su, sv).scale(conjugate(coeff, P.involution))
    return tensor_reduce(terms, P.rewrite, P.rewrite)


def _check_star_axioms(P, words, rule_polys, run, element):
    alphabet = P.alphabet

    def involutive(word):
        x = P.reduce(element(word))
        if star(star(x, P), P) != x:
            return "x** differs from x", format_word(word, alphabet)

    def preserves(relation):
        if star(relation, P):
            return "star of a relation is not in the ideal", format_element(relation)

    def hopf_star(word):
        x = element(word)
        if delta(star(x, P), P) != _star_tensor(delta(x, P), P):
            return "Δ(x*) differs from (*⊗*)Δ(x)", format_word(word, alphabet)

    def counit_star(word):
        x = element(word)
        if counit(star(x, P), P) != conjugate(counit(x, P), P.involution):
            return "ε(x*) differs from conj(ε(x))", format_word(word, alphabet)

    def antipode_star(word):
        x = P.reduce(element(word))
        value = star(antipode(star(antipode(x, P, verify=False), P), P, verify=False), P)
        if value != x:
            return "S∘*∘S∘*(x) differs from x", format_word(word, alphabet)

    run("star-involution", involutive, words)
    run("star-relations", preserves, rule_polys)
    run("hopf-star", hopf_star, words)
    run("counit-star", counit_star, words)
    try:
        _antipode_table(P, verify=False)
        run("antipode-star", antipode_star, words)
    except AntipodeError:
        pass


class Character:
    """
    One-dimensional representation ``χ_a(w) = diag(a, a^-1)`` of SL_q(2).

    Calling the character on an element returns a scalar.
    """

    def __init__(self, a, P):
        a = to_scalar(a, P.field)
        if not a:
            raise ValueError("a must be nonzero")
        if P.N != 2:
            raise PresentationError("characters are only defined for 2x2 presentations")
        self.a = a
        self.presentation = P
        self.values = [a, P.field.zero, P.field.zero, P.field.one / a]
        for relation in P.relation_polynomials():
            if self(relation):
                raise PresentationError(
                    "character does not annihilate the relation {}".format(format_element(relation))
                )

    def __call__(self, x):
        x = self.presentation.element(x)
        total = self.presentation.field.zero
        for word, coeff in x.terms.items():
            value = coeff
            for g in word:
                value = value * self.values[g]
            total = total + value
        return total

    def __repr__(self):
        return "Character(a={})".format(format_scalar(self.a))


def character(a, P=None):
    """
    The character χ_a of SL_q(2), verified on every relation of P.

    Raises
    ------
    PresentationError
        if a relation of P is not annihilated
    """
    return Character(a, builtin("slq2") if P is None else P)


def check_b_condition(P, B):
    """
    Check ``w* B w = w B w* = B`` with ``(w*)_ij = (w_ji)*``.

    Parameters
    ----------
    P : Presentation
        with star data
    B : DomainMatrix or list of rows
        N x N scalar matrix
    """
    B_rows = entries(B) if hasattr(B, "to_dod") else [[to_scalar(x, P.field) for x in r] for r in B]
    N = P.N
    w = P.generator_matrix()
    w_star = [[star(w[j][i], P) for j in range(N)] for i in range(N)]
    B_poly = [[P.element(B_rows[i][j]) for j in range(N)] for i in range(N)]
    report = CheckReport("B condition of {}".format(P.name))
    for name, left, right in (("w*Bw", w_star, w), ("wBw*", w, w_star)):
        value = _word_matrix_product(_word_matrix_product(left, B_poly, P), right, P)
        mismatch = next(
            ((i, j) for i in range(N) for j in range(N) if value[i][j] != B_poly[i][j]), None
        )
        if mismatch is None:
            report.add(name, True, "equals B")
        else:
            i, j = mismatch
            report.add(name, False, "entry ({}, {}) differs".format(i + 1, j + 1),
                       format_element(value[i][j]))
    return report


def tensor_power_words(P, n):
    """Entries of ``w^{⊗n}`` as reduced NCPolys, a dict (row, col) -> NCPoly."""
    N = P.N
    return {
        (I, J): P.reduce(NCPoly.word(_tensor_word(I, J, n, N), P.alphabet, P.field))
        for I, J in product(range(N ** n), repeat=2)
    }