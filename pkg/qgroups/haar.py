"""
The Haar functional of SU_q(2) through the Peter-Weyl expansion.

Matrix elements of the spin corepresentations v^α, α <= L, form a basis of
the elements of degree at most 2L. The Haar functional h takes the
coefficient of the trivial corepresentation in that basis. The module
also computes the F matrices implementing ``(v^α)^{cc} = F v^α F^-1``,
verifies the orthogonality relations and the modular property, and
certifies positivity of Gram matrices ``h(x_i* x_j)`` at rational q.
"""

import logging
from collections import namedtuple
from fractions import Fraction

import matplotlib.pyplot as plt
import numpy as np
from scipy.linalg import eigvalsh
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from qgroups.corep import contragredient, mor_space, spin_corep, sym_subspace
from qgroups.exceptions import CutoffError, InvariantViolation, StarStructureError
from qgroups.hopf import antipode, builtin, delta, star
from qgroups.linalg import entries, inverse, scale, to_fraction
from qgroups.ncalg import NCPoly, extend_homomorphism, format_word
from qgroups.report import CheckReport
from qgroups.scalar import evaluate_at, format_scalar, sqrt_exact

__all__ = [
    'PWBasis', 'FMatrix', 'GramReport', 'build_pw_basis', 'haar', 'expand',
    'f_matrix', 'check_pw_relations', 'modular_sigma', 'check_modular',
    'check_haar', 'gram_positivity', 'describe_expansion',
    'DEFAULT_SPIN_CUTOFF',
]

logger = logging.getLogger(__name__)

DEFAULT_SPIN_CUTOFF = 1

PWEntry = namedtuple("PWEntry", "alpha m n element")


def _as_cutoff(L):
    L = Fraction(L)
    if L < 0 or (2 * L).denominator != 1:
        raise ValueError("the spin cutoff must be a non-negative half-integer")
    return L


def _spins(L):
    return [Fraction(k, 2) for k in range(int(2 * L) + 1)]


def _generator_weight(g, N):
    i, j = divmod(g, N)
    row = tuple((1 if k == i else 0) - (1 if i == N - 1 else 0) for k in range(N - 1))
    col = tuple((1 if k == j else 0) - (1 if j == N - 1 else 0) for k in range(N - 1))
    return row + col


def _word_weight(word, N):
    total = [0] * (2 * (N - 1))
    for g in word:
        for k, x in enumerate(_generator_weight(g, N)):
            total[k] += x
    return tuple(total)


def _element_weight(x, N):
    weights = {_word_weight(w, N) for w in x.terms}
    return weights.pop() if len(weights) == 1 else None


def _is_homogeneous(R, N):
    for lead, rhs in R.rules:
        target = _word_weight(lead, N)
        if any(_word_weight(w, N) != target for w in rhs):
            return False
    for lead, _, relation in R.central_rules:
        target = _word_weight(lead, N)
        if any(_word_weight(w, N) != target for w in relation):
            return False
    return True


class PWBasis:
    """
    Peter-Weyl basis of the elements of degree at most 2L.

    Attributes
    ----------
    presentation : Presentation
    L : Fraction
        spin cutoff
    entries : list of PWEntry
        ``(alpha, m, n, element)`` for every matrix element of v^alpha
    words : list of tuple
        normal words of degree at most 2L

    The change of basis to the monomials is split into blocks of equal
    torus weight whenever the rewrite rules are weight homogeneous.
    """

    def __init__(self, presentation, L, entries_, words):
        self.presentation = presentation
        self.L = L
        self.entries = entries_
        self.words = words
        P = presentation
        graded = _is_homogeneous(P.rewrite, P.N)

        def weight_of(item):
            return _element_weight(item, P.N) if graded else None

        blocks = {}
        for index, word in enumerate(words):
            key = _word_weight(word, P.N) if graded else None
            blocks.setdefault(key, ([], []))[0].append(index)
        for index, entry in enumerate(entries_):
            key = weight_of(entry.element)
            if graded and key is None:
                graded = False
                break
            blocks.setdefault(key, ([], []))[1].append(index)
        if not graded:
            blocks = {None: (list(range(len(words))), list(range(len(entries_))))}
        self._graded = graded
        self._blocks = blocks
        self._inverses = {}
        self._eta = None

        for key, (rows, cols) in blocks.items():
            if len(rows) != len(cols):
                raise InvariantViolation(
                    "weight block {} has {} words but {} matrix elements".format(key, len(rows), len(cols))
                )

    def __len__(self):
        return len(self.entries)

    def _block_key(self, word):
        return _word_weight(word, self.presentation.N) if self._graded else None

    def _block_inverse(self, key):
        if key not in self._inverses:
            rows, cols = self._blocks[key]
            position = {self.words[r]: k for k, r in enumerate(rows)}
            dod = {}
            for k, c in enumerate(cols):
                for word, coeff in self.entries[c].element.terms.items():
                    dod.setdefault(position[word], {})[k] = coeff
            M = DomainMatrix.from_dod(dod, (len(rows), len(cols)), self.presentation.field)
            try:
                self._inverses[key] = inverse(M)
            except DMNonInvertibleMatrixError as exc:
                raise InvariantViolation("PW matrix elements are linearly dependent: {}".format(exc))
        return self._inverses[key]

    def eta(self):
        """Value of h on every normal word of the trivial-weight block."""
        if self._eta is None:
            trivial = next(k for k, e in enumerate(self.entries) if e.alpha == 0)
            key = self._block_key(())
            rows, cols = self._blocks[key]
            row = entries(self._block_inverse(key))[cols.index(trivial)]
            self._eta = {self.words[r]: row[k] for k, r in enumerate(rows) if row[k]}
        return self._eta

    def _check_cutoff(self, x):
        degree = x.degree()
        if degree > 2 * self.L:
            raise CutoffError(
                "element of degree {} needs spin cutoff {}".format(degree, Fraction(degree, 2)),
                required=Fraction(degree, 2),
            )

    def __repr__(self):
        return "PWBasis(L={}, elements={})".format(self.L, len(self.entries))


def build_pw_basis(P=None, L=DEFAULT_SPIN_CUTOFF):
    """
    Peter-Weyl basis from the spin corepresentations up to spin L.

    Parameters
    ----------
    P : Presentation, optional
        2x2 quantum group, defaults to SU_q(2)
    L : half-integer, optional
        spin cutoff, defaults to `DEFAULT_SPIN_CUTOFF`

    Raises
    ------
    InvariantViolation
        if the matrix elements do not form a basis of degree <= 2L

    Examples
    --------
    >>> len(build_pw_basis(L=1))
    14
    """
    L = _as_cutoff(L)
    P = builtin("suq2") if P is None else P

    def build():
        items = []
        for alpha in _spins(L):
            v = spin_corep(alpha, P)
            for m in range(v.dim):
                for n in range(v.dim):
                    items.append(PWEntry(alpha, m, n, v.entries[m][n]))
        words = P.basis(int(2 * L))
        if len(words) != len(items):
            raise InvariantViolation(
                "{} matrix elements for {} normal words of degree <= {}".format(
                    len(items), len(words), int(2 * L)
                )
            )
        logger.info("PW basis with cutoff %s: %d elements", L, len(items))
        return PWBasis(P, L, items, words)

    return P.cached(("pw-basis", L), build)


def haar(x, B):
    """
    Haar functional: coefficient of the trivial corepresentation in the
    PW expansion of x.

    Raises
    ------
    CutoffError
        if x has degree above 2L; ``required`` names the needed cutoff

    Examples
    --------
    >>> B = build_pw_basis(L=1)
    >>> P = B.presentation
    >>> format_scalar(haar(P.gen(0, 0) * star(P.gen(0, 0), P), B))
    '1/(1+q^2)'
    """
    P = B.presentation
    x = P.reduce(P.element(x))
    B._check_cutoff(x)
    eta = B.eta()
    total = P.field.zero
    for word, coeff in x.terms.items():
        value = eta.get(word)
        if value:
            total = total + coeff * value
    return total


def expand(x, B):
    """
    Peter-Weyl coefficients of x.

    Returns
    -------
    coefficients : dict
        ``(alpha, m, n) -> scalar``, zero coefficients omitted
    """
    P = B.presentation
    x = P.reduce(P.element(x))
    B._check_cutoff(x)
    by_block = {}
    for word, coeff in x.terms.items():
        by_block.setdefault(B._block_key(word), {})[word] = coeff
    result = {}
    for key, terms in by_block.items():
        rows, cols = B._blocks[key]
        inv = entries(B._block_inverse(key))
        vector = [terms.get(B.words[r], P.field.zero) for r in rows]
        for k, c in enumerate(cols):
            value = sum((inv[k][j] * vector[j] for j in range(len(rows))), P.field.zero)
            if value:
                entry = B.entries[c]
                result[(entry.alpha, entry.m, entry.n)] = value
    return result


class FMatrix(namedtuple("FMatrix", "alpha matrix normalized")):
    """Intertwiner F with ``(v^α)^{cc} = F v^α F^-1``."""

    __slots__ = ()

    @property
    def trace(self):
        rows = entries(self.matrix)
        return sum((rows[k][k] for k in range(len(rows))), self.matrix.domain.zero)

    @property
    def inverse_trace(self):
        rows = entries(inverse(self.matrix))
        return sum((rows[k][k] for k in range(len(rows))), self.matrix.domain.zero)


def f_matrix(alpha, P=None, normalize=True):
    """
    The F matrix of the spin-alpha corepresentation.

    F spans the one-dimensional space ``Mor(v, v^cc)``. It is scaled so
    that ``Tr F = Tr F^-1`` with ``Tr F > 0`` for 0 < q < 1.

    Raises
    ------
    InvariantViolation
        if the intertwiner space is not one-dimensional

    Examples
    --------
    >>> from qgroups.linalg import format_matrix
    >>> format_matrix(f_matrix("1/2").matrix)
    '[["q^-1", "0"], ["0", "q"]]'
    """
    alpha = Fraction(alpha)
    P = builtin("suq2") if P is None else P

    def build():
        v = spin_corep(alpha, P)
        space = mor_space(v, contragredient(contragredient(v)))
        if len(space) != 1:
            raise InvariantViolation(
                "Mor(v, v^cc) of spin {} has dimension {}".format(alpha, len(space))
            )
        F = space[0]
        if not normalize:
            return FMatrix(alpha, F, False)
        unscaled = FMatrix(alpha, F, False)
        c = sqrt_exact(unscaled.inverse_trace / unscaled.trace)
        F = scale(F, c)
        if evaluate_at(FMatrix(alpha, F, True).trace, Fraction(1, 2)) < 0:
            F = scale(F, -c.field.one)
        return FMatrix(alpha, F, True)

    return P.cached(("f-matrix", alpha, normalize), build)


def _gram(alpha, P):
    A = sym_subspace(int(2 * alpha), P)
    return A.transpose().matmul(A)


def check_pw_relations(alpha, beta, B):
    """
    Verify the orthogonality relations of the Haar functional.

    With G the Gram matrix of the symmetric-tensor basis defining v^α,

        h(v_mn (v'_jl)*) = δ (G^-1)_mj (G F)_ln / Tr F
        h((v'_jl)* v_mn) = δ (F^-1 G^-1)_mj G_ln / Tr F^-1

    where v = v^α, v' = v^β and δ = δ_αβ.
    """
    P = B.presentation
    if not P.has_star:
        raise StarStructureError("orthogonality relations need a star structure")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha + beta > B.L:
        raise CutoffError(
            "spins {} and {} need cutoff {}".format(alpha, beta, alpha + beta), required=alpha + beta
        )
    v, u = spin_corep(alpha, P), spin_corep(beta, P)
    report = CheckReport("Peter-Weyl relations for spins {} and {}".format(alpha, beta))
    zero = P.field.zero

    if alpha == beta:
        F = f_matrix(alpha, P)
        G = _gram(alpha, P)
        G_inv = inverse(G)
        F_inv = inverse(F.matrix)
        first_left = entries(G_inv)
        first_right = entries(G.matmul(F.matrix))
        second_left = entries(F_inv.matmul(G_inv))
        second_right = entries(G)
        trace, inverse_trace = F.trace, F.inverse_trace

    def expected(kind, m, n, j, l):
        if alpha != beta:
            return zero
        if kind == "a":
            return first_left[m][j] * first_right[l][n] / trace
        return second_left[m][j] * second_right[l][n] / inverse_trace

    for kind, name in (("a", "h(v v'*)"), ("b", "h(v'* v)")):
        failure = None
        count = 0
        for m in range(v.dim):
            for n in range(v.dim):
                for j in range(u.dim):
                    for l in range(u.dim):
                        other = star(u.entries[j][l], P)
                        product_ = v.entries[m][n] * other if kind == "a" else other * v.entries[m][n]
                        value = haar(product_, B)
                        count += 1
                        if value != expected(kind, m, n, j, l) and failure is None:
                            failure = "indices ({},{},{},{}): h = {}".format(
                                m + 1, n + 1, j + 1, l + 1, format_scalar(value)
                            )
        if failure is None:
            report.add(name, True, "{} products".format(count))
        else:
            report.add(name, False, failure)
    return report


def modular_sigma(x, P=None):
    """
    Modular automorphism, the homomorphism with ``σ(w) = F w F`` for
    ``F = F_{1/2}``.

    Examples
    --------
    >>> P = builtin("suq2")
    >>> format_element(modular_sigma(P.gen(0, 0), P))
    'q^-2*a'
    """
    P = builtin("suq2") if P is None else P

    def table():
        F = entries(f_matrix(Fraction(1, 2), P).matrix)
        w = P.generator_matrix()
        N = P.N
        images = []
        for m in range(N):
            for n in range(N):
                image = NCPoly.zero(P.alphabet, P.field)
                for k in range(N):
                    for l in range(N):
                        if F[m][k] and F[l][n]:
                            image = image + w[k][l] * (F[m][k] * F[l][n])
                images.append(image)
        return images

    images = P.cached("modular-table", table)
    cache = P.cached("modular-words", dict)
    return extend_homomorphism(P.element(x), images, P.rewrite, cache)


def check_modular(B, max_degree=None):
    """Check ``h(ab) = h(b σ(a))`` on pairs of normal words of total degree <= max_degree."""
    P = B.presentation
    limit = int(2 * B.L) if max_degree is None else max_degree
    words = P.basis(limit)
    report = CheckReport("modular property")
    count = 0
    for a in words:
        for b in words:
            if len(a) + len(b) > limit:
                continue
            x, y = P.element(a), P.element(b)
            count += 1
            if haar(x * y, B) != haar(y * modular_sigma(x, P), B):
                report.add("h(ab) = h(bσ(a))", False, "pair fails",
                           "{}, {}".format(format_word(a, P.alphabet), format_word(b, P.alphabet)))
                return report
    report.add("h(ab) = h(bσ(a))", True, "{} pairs".format(count))
    return report


def check_haar(B, max_degree=None):
    """
    Invariance of the Haar functional on normal words.

    Checks ``(h⊗id)Δ(x) = (id⊗h)Δ(x) = h(x)1`` and ``h(S(x)) = h(x)``.
    """
    P = B.presentation
    limit = int(2 * B.L) if max_degree is None else max_degree
    report = CheckReport("Haar invariance")
    failures = {}
    words = P.basis(limit)
    for word in words:
        x = P.element(word)
        value = haar(x, B)
        d = delta(x, P)
        left = NCPoly.zero(P.alphabet, P.field)
        right = NCPoly.zero(P.alphabet, P.field)
        for (u, v), coeff in d.terms.items():
            left = left + P.element(v) * (coeff * haar(P.element(u), B))
            right = right + P.element(u) * (coeff * haar(P.element(v), B))
        expected = NCPoly.scalar(value, P.alphabet, P.field)
        if left != expected:
            failures.setdefault("left invariance", format_word(word, P.alphabet))
        if right != expected:
            failures.setdefault("right invariance", format_word(word, P.alphabet))
        if haar(antipode(x, P), B) != value:
            failures.setdefault("antipode invariance", format_word(word, P.alphabet))
    for name in ("left invariance", "right invariance", "antipode invariance"):
        if name in failures:
            report.add(name, False, "fails", failures[name])
        else:
            report.add(name, True, "{} words".format(len(words)))
    return report


class GramReport:
    """
    Exact positivity certificate of a Gram matrix ``h(x_i* x_j)`` at q = q0.

    Attributes
    ----------
    degree : int
    q0 : Fraction
    words : list of str
    minors : list of Fraction
        leading principal minors
    symmetric : bool
    min_eigenvalue : float
        floating estimate, informational only
    """

    def __init__(self, degree, q0, words, gram, minors, symmetric, min_eigenvalue):
        self.degree = degree
        self.q0 = q0
        self.words = words
        self.gram = gram
        self.minors = minors
        self.symmetric = symmetric
        self.min_eigenvalue = min_eigenvalue

    @property
    def passed(self):
        return self.symmetric and all(m > 0 for m in self.minors)

    def report(self):
        report = CheckReport("Gram matrix of degree {} at q = {}".format(self.degree, self.q0))
        report.add("symmetric", self.symmetric, "{} words".format(len(self.words)))
        bad = next((k for k, m in enumerate(self.minors) if m <= 0), None)
        if bad is None:
            report.add("leading minors", True, "all {} positive".format(len(self.minors)))
        else:
            report.add("leading minors", False, "minor {} is {}".format(bad + 1, self.minors[bad]),
                       self.words[bad])
        report.add("min eigenvalue", self.min_eigenvalue > 0, "{:.6g}".format(self.min_eigenvalue))
        return report

    def plot(self, ax=None, *args, **kwargs):
        """
        Plot the logarithm of the leading principal minors

        Parameters
        ----------
        ax : matplotlib axes object, default None
        """
        if ax is None:
            fig, ax = plt.subplots(1, 1)
        else:
            fig = ax.figure

        values = [float(m) for m in self.minors]
        logs = [np.log10(v) if v > 0 else np.nan for v in values]
        ax.plot(range(1, len(values) + 1), logs, "o-k", *args, **kwargs)
        ax.set(xlabel="Size of the leading minor", ylabel="log10(minor)",
               title="Gram matrix, degree {}, q = {}".format(self.degree, self.q0))
        plt.show(block=False)

        return fig, ax

    def __repr__(self):
        return "GramReport(degree={}, q0={}, passed={})".format(self.degree, self.q0, self.passed)


def gram_positivity(degree, q0, B=None, P=None):
    """
    Certify that ``G_ij = h(x_i* x_j)`` is positive definite at q = q0.

    The x_i run over the normal words of degree at most `degree`. The
    matrix is evaluated exactly and its leading principal minors are
    computed over the rationals.

    Parameters
    ----------
    degree : int
    q0 : rational in (0, 1)
    B : PWBasis, optional
        must have cutoff at least `degree`; built when omitted
    P : Presentation, optional
        defaults to SU_q(2)

    Returns
    -------
    report : GramReport
    """
    if degree < 0:
        raise ValueError("degree must be a non-negative integer")
    q0 = Fraction(q0)
    if B is None:
        B = build_pw_basis(P, max(degree, 0))
    elif B.L < degree:
        raise CutoffError("Gram matrices of degree {} need cutoff {}".format(degree, degree),
                          required=Fraction(degree))
    P = B.presentation
    words = P.basis(degree)
    elements = [P.element(w) for w in words]
    stars = [star(x, P) for x in elements]
    size = len(words)
    dod = {}
    for i in range(size):
        for j in range(size):
            value = evaluate_at(haar(stars[i] * elements[j], B), q0)
            if value:
                dod.setdefault(i, {})[j] = QQ(value.numerator, value.denominator)
    gram = DomainMatrix.from_dod(dod, (size, size), QQ).to_dense()
    symmetric = gram.to_dod() == gram.transpose().to_dod()
    minors = [
        to_fraction(gram.extract(list(range(k)), list(range(k))).det()) for k in range(1, size + 1)
    ]
    values = np.array([[float(to_fraction(x)) for x in row] for row in entries(gram)])
    min_eigenvalue = float(eigvalsh(values).min()) if size else 0.0
    labels = [format_word(w, P.alphabet) for w in words]
    report = GramReport(degree, q0, labels, gram, minors, symmetric, min_eigenvalue)
    if not report.passed:
        logger.info("Gram matrix of degree %d is not positive definite at q = %s", degree, q0)
    return report


def describe_expansion(x, B):
    """Text of the PW expansion, for display."""
    terms = expand(x, B)
    return ", ".join(
        "v^{}_{}{}: {}".format(alpha, m + 1, n + 1, format_scalar(c))
        for (alpha, m, n), c in sorted(terms.items())
    ) or "0"