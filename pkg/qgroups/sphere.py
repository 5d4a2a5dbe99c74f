"""
Quantum spheres with their SU_q(2) coaction.

The sphere algebra is generated by e_{-1}, e_0, e_1 (named ``em1``, ``e0``,
``e1``) with ``e_i* = e_{-i}``. Its relations depend on the deformation
parameter q and a family parameter c, which may be a rational number, the
symbol c of Q(q, c), a special value ``c(n)`` or infinity. The coaction
``Γ(e_i) = Σ_j e_j ⊗ u_ji`` uses a fixed non-unitary form u of the spin-1
corepresentation.
"""

import logging
import math
import re
from itertools import product

from qgroups.corep import CorepMatrix, mor_space, spin_corep
from qgroups.exceptions import CorepError, RegimeError
from qgroups.hopf import builtin, counit, delta, star
from qgroups.ncalg import (MonomialOrder, NCPoly, TensorPoly, basis_words,
                           extend_tensor_homomorphism, format_element,
                           format_word, orient_relations, parse_element,
                           tensor_reduce)
from qgroups.report import CheckReport
from qgroups.scalar import (FIELD, SPHERE_FIELD, conjugate, format_scalar,
                            generator, power, to_scalar)

__all__ = [
    'SpherePresentation', 'sphere_presentation', 'c_special', 'coaction',
    'check_coaction', 'check_star_consistency', 'u1_matrix',
    'u1_equivalence', 'INFINITY',
]

logger = logging.getLogger(__name__)

INFINITY = "inf"

SPHERE_ALPHABET = ("em1", "e0", "e1")
# em1 < e0 < e1
SPHERE_ORDER = MonomialOrder((0, 0, 0), (0, 1, 2))

_SPECIAL = re.compile(r"^c\((\d+)\)$")


def c_special(n, q=None, field=FIELD):
    """Special parameter values ``c(n) = -q^{2n} / (1 + q^{2n})^2``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    q = generator("q", field) if q is None else to_scalar(q, field)
    q2n = power(q, 2 * n)
    return -q2n / (1 + q2n) ** 2


def _has_symbol(field, name):
    return name in [str(s) for s in field.symbols]


class SpherePresentation:
    """
    Quantum sphere algebra for given q and c.

    Attributes
    ----------
    q : scalar
    c : scalar or `INFINITY`
    lam, rho : scalar
        ``λ = 1 - q^2`` and ``ρ = (1+q^2)^2 q^-2 c + 1`` for finite c,
        ``λ = 0`` and ``ρ = (1+q^2)^2 q^-2`` for c = ∞
    relations : list of NCPoly
        the four defining relations ``lhs - rhs``
    rewrite : RewriteSystem
    group : Presentation
        SU_q(2) over the same field, acting on the sphere
    u1 : CorepMatrix
        the spin-1 corepresentation used by the coaction
    """

    def __init__(self, q, c, field, rho=None, rewrite=None):
        self.field = field
        self.q = q
        self.c = c
        self.alphabet = SPHERE_ALPHABET
        self.order = SPHERE_ORDER
        one = field.one
        if c == INFINITY:
            self.lam = field.zero
            default_rho = (1 + q ** 2) ** 2 / q ** 2
        else:
            self.lam = 1 - q ** 2
            default_rho = (1 + q ** 2) ** 2 / q ** 2 * c + one
        self.rho = default_rho if rho is None else to_scalar(rho, field)
        self.relations = self._relations()
        self.rewrite = rewrite or orient_relations(self.relations, self.alphabet, self.order, field)
        self.group = builtin("suq2", q=q, field=field)
        self.u1 = CorepMatrix(u1_matrix(self.group), self.group)
        self._cache = {}
        logger.info("built sphere with c = %s", self.c_text)

    def _relations(self):
        em1, e0, e1 = (NCPoly.generator(k, self.alphabet, self.field) for k in range(3))
        q, lam, rho = self.q, self.lam, self.rho
        q2 = q ** 2
        return [
            (em1 * e1 + e1 * em1 * (self.field.one / q2)) * (1 + q2) + e0 * e0 - rho,
            e0 * em1 - em1 * e0 * q2 - em1 * lam,
            (em1 * e1 - e1 * em1) * (1 + q2) + e0 * e0 * (1 - q2) - e0 * lam,
            e1 * e0 - e0 * e1 * q2 - e1 * lam,
        ]

    @property
    def c_text(self):
        return "inf" if self.c == INFINITY else format_scalar(self.c)

    def with_rho(self, rho):
        """The same sphere with the first relation restated for another ρ."""
        return SpherePresentation(self.q, self.c, self.field, rho=rho, rewrite=self.rewrite)

    def gen(self, i):
        """Generator e_i for i in {-1, 0, 1}."""
        return NCPoly.generator(i + 1, self.alphabet, self.field)

    def element(self, value):
        if isinstance(value, NCPoly):
            return value
        if isinstance(value, tuple):
            return NCPoly.word(value, self.alphabet, self.field)
        if isinstance(value, str):
            return parse_element(value, self.alphabet, self.field, star=lambda x: sphere_star(x, self))
        return NCPoly.scalar(value, self.alphabet, self.field)

    def reduce(self, x):
        return self.rewrite.reduce(self.element(x))

    def basis(self, max_degree):
        return basis_words(self.rewrite, max_degree)

    def __repr__(self):
        return "SpherePresentation(q={}, c={})".format(format_scalar(self.q), self.c_text)


def _parse_c(c):
    """Resolve the parameter c into (value, field)."""
    if c is None or (isinstance(c, str) and c.strip() in ("symbolic", "c")):
        return "symbolic", None
    if (isinstance(c, float) and math.isinf(c)) or (isinstance(c, str) and c.strip() in ("inf", "∞")):
        return INFINITY, None
    if isinstance(c, str):
        match = _SPECIAL.match(c.strip())
        if match:
            return "special", int(match.group(1))
    return "value", c


def sphere_presentation(q=None, c="symbolic", field=None):
    """
    Build the quantum sphere for parameters q and c.

    Parameters
    ----------
    q : scalar, optional
        symbolic when omitted
    c : scalar or str, optional
        ``"symbolic"`` (the symbol c of Q(q, c)), ``"inf"``, ``"c(n)"`` or
        a scalar value
    field : sympy FractionField, optional
        defaults to Q(q), or Q(q, c) for a symbolic c

    Raises
    ------
    RegimeError
        if q = 0
    PresentationError
        if the parameters make the relations degenerate

    Examples
    --------
    >>> S = sphere_presentation(c="inf")
    >>> format_element(S.reduce("e0*em1"))
    'q^2*em1*e0'
    """
    kind, value = _parse_c(c)
    if kind == "symbolic":
        if field is None or not _has_symbol(field, "c"):
            field = SPHERE_FIELD
    elif field is None:
        field = FIELD
    qv = generator("q", field) if q is None else to_scalar(q, field)
    if not qv:
        raise RegimeError("q must be nonzero")
    if kind == "symbolic":
        cv = generator("c", field)
    elif kind == "special":
        cv = c_special(value, qv, field)
    elif kind == INFINITY:
        cv = INFINITY
    else:
        cv = to_scalar(value, field)
    return SpherePresentation(qv, cv, field)


def u1_matrix(A):
    """
    Spin-1 corepresentation in the non-unitary form used by the coaction.

    Rows and columns are indexed by -1, 0, 1.
    """
    q = A.q
    one = A.field.one
    a, b, c, d = (A.gen(i, j) for i in range(2) for j in range(2))
    qq = q + one / q
    return [
        [d * d, d * c * -(q ** 2 + 1), c * c * -q],
        [b * d * -(one / q), 1 + b * c * qq, a * c],
        [b * b * -(one / q), b * a * qq, a * a],
    ]


def _images(S):
    alphabets = (S.alphabet, S.group.alphabet)
    images = []
    for i in range(3):
        image = TensorPoly.zero(alphabets, S.field)
        for j in range(3):
            image = image + TensorPoly.from_legs(
                NCPoly.generator(j, S.alphabet, S.field), S.u1.entries[j][i]
            )
        images.append(image)
    return images


def coaction(x, S):
    """
    The coaction Γ, the homomorphism with ``Γ(e_i) = Σ_j e_j ⊗ u_ji``.

    The sphere leg is reduced by the sphere rules, the group leg by the
    SU_q(2) rules.
    """
    x = S.element(x)
    if "images" not in S._cache:
        S._cache["images"] = _images(S)
        S._cache["words"] = {}
    return extend_tensor_homomorphism(
        x, S._cache["images"], (S.rewrite, S.group.rewrite), S._cache["words"]
    )


def sphere_star(x, S):
    """``e_i* = e_{-i}``, extended antilinearly and antimultiplicatively."""
    terms = {}
    for word, coeff in S.element(x).terms.items():
        image = tuple(2 - g for g in reversed(word))
        terms[image] = terms.get(image, S.field.zero) + conjugate(coeff, S.group.involution)
    return S.reduce(NCPoly(terms, S.alphabet, S.field))


def _star_tensor(x, S):
    alphabets = x.alphabets
    result = TensorPoly.zero(alphabets, S.field)
    for (u, v), coeff in x.terms.items():
        left = sphere_star(NCPoly.word(u, S.alphabet, S.field), S)
        right = star(NCPoly.word(v, S.group.alphabet, S.field), S.group)
        result = result + TensorPoly.from_legs(left, right).scale(conjugate(coeff, S.group.involution))
    return tensor_reduce(result, S.rewrite, S.group.rewrite)


def check_coaction(S):
    """
    Verify that Γ is a well-defined coaction compatible with the star.

    Checks that Γ annihilates every defining relation, coassociativity
    ``(Γ⊗id)Γ = (id⊗Δ)Γ`` and the counit law ``(id⊗ε)Γ(e_i) = e_i`` on
    generators, and ``Γ(e_i*) = (*⊗*)Γ(e_i)``.
    """
    report = CheckReport("coaction on the sphere c = {}".format(S.c_text))
    A = S.group
    systems3 = (S.rewrite, A.rewrite, A.rewrite)
    alphabets3 = (S.alphabet, A.alphabet, A.alphabet)

    failure = None
    for k, relation in enumerate(S.relations):
        image = coaction(relation, S)
        if image:
            failure = ("relation {} is not preserved".format(k + 1), format_element(image))
            break
    report.add("relations", failure is None, *(failure or ("{} relations".format(len(S.relations)),)))

    coassoc, unit, compat = None, None, None
    for i in range(3):
        e = NCPoly.generator(i, S.alphabet, S.field)
        gamma = coaction(e, S)
        left = TensorPoly.zero(alphabets3, S.field)
        right = TensorPoly.zero(alphabets3, S.field)
        counit_image = NCPoly.zero(S.alphabet, S.field)
        for (u, v), coeff in gamma.terms.items():
            for (u2, v2), c2 in coaction(NCPoly.word(u, S.alphabet, S.field), S).terms.items():
                left = left + TensorPoly({(u2, v2, v): coeff * c2}, alphabets3, S.field)
            for (v1, v2), c2 in delta(NCPoly.word(v, A.alphabet, S.field), A).terms.items():
                right = right + TensorPoly({(u, v1, v2): coeff * c2}, alphabets3, S.field)
            counit_image = counit_image + NCPoly.word(u, S.alphabet, S.field) * (
                coeff * counit(NCPoly.word(v, A.alphabet, S.field), A)
            )
        if coassoc is None and tensor_reduce(left, *systems3) != tensor_reduce(right, *systems3):
            coassoc = format_word((i,), S.alphabet)
        if unit is None and S.reduce(counit_image) != e:
            unit = format_word((i,), S.alphabet)
        if compat is None and coaction(sphere_star(e, S), S) != _star_tensor(gamma, S):
            compat = format_word((i,), S.alphabet)

    for name, witness in (("coassociativity", coassoc), ("counit", unit), ("star", compat)):
        if witness is None:
            report.add(name, True, "3 generators")
        else:
            report.add(name, False, "fails on a generator", witness)
    return report


def check_star_consistency(S, max_degree=3):
    """Starring commutes with reduction on all words up to `max_degree`."""
    report = CheckReport("star on the sphere")
    count = 0
    for length in range(max_degree + 1):
        for word in product(range(3), repeat=length):
            x = NCPoly.word(word, S.alphabet, S.field)
            count += 1
            if sphere_star(S.reduce(x), S) != sphere_star(x, S):
                report.add("star-reduction", False, "reduce and star do not commute",
                           format_word(word, S.alphabet))
                return report
            if sphere_star(sphere_star(x, S), S) != S.reduce(x):
                report.add("star-reduction", False, "star is not an involution",
                           format_word(word, S.alphabet))
                return report
    report.add("star-reduction", True, "{} words".format(count))
    return report


def u1_equivalence(S):
    """
    Invertible intertwiner T with ``T u = v T``, v the spin-1
    corepresentation built from symmetric tensors.

    Raises
    ------
    CorepError
        if Mor(u, v) has no invertible element
    """
    v = spin_corep(1, S.group)
    for T in mor_space(S.u1, v):
        if T.to_dense().det():
            return T
    raise CorepError("the spin-1 forms are not equivalent")
