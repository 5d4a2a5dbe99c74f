"""
Noncommutative polynomials and rewriting.

A word is a tuple of generator indices, the empty tuple being the unit
monomial. `NCPoly` is a finite linear combination of words with scalar
coefficients, `TensorPoly` an element of a tensor product of such algebras.
Products are plain concatenations; reduction to normal form is explicit
and goes through a `RewriteSystem`.

Classes
-------
 - `NCPoly` -- element of the free algebra
 - `TensorPoly` -- element of a tensor product of free algebras
 - `MonomialOrder` -- graded, weighted, then lexicographic order on words
 - `RewriteSystem` -- oriented rules defining normal forms
"""

import logging
import re
from collections import deque
from functools import lru_cache
from itertools import product

from sympy.polys.matrices import DomainMatrix

from qgroups.exceptions import ParseError, PresentationError, RewriteError
from qgroups.grammar import fold, parse_tree
from qgroups.scalar import FIELD, format_scalar, power, to_scalar

__all__ = [
    'NCPoly', 'TensorPoly', 'MonomialOrder', 'RewriteSystem', 'multiply',
    'reduce', 'critical_pairs', 'is_confluent', 'basis_words',
    'tensor_reduce', 'orient_relations', 'extend_homomorphism',
    'extend_tensor_homomorphism', 'parse_element', 'format_element',
    'format_word',
]

logger = logging.getLogger(__name__)

DEFAULT_CACHE_SIZE = 2 ** 16


def _add_into(store, key, value):
    total = store.get(key)
    total = value if total is None else total + value
    if total:
        store[key] = total
    else:
        store.pop(key, None)


class NCPoly:
    """
    Element of the free algebra over a scalar field.

    Parameters
    ----------
    terms : dict
        mapping word (tuple of generator indices) -> scalar
    alphabet : tuple of str
        generator names
    field : sympy FractionField, optional
        coefficient field, defaults to Q(q)
    """

    __slots__ = ("terms", "alphabet", "field")

    def __init__(self, terms=None, alphabet=(), field=FIELD):
        self.alphabet = tuple(alphabet)
        self.field = field
        self.terms = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if any(not 0 <= g < len(self.alphabet) for g in word):
                raise ValueError("word {} outside alphabet {}".format(word, self.alphabet))
            _add_into(self.terms, word, to_scalar(coeff, field))

    @classmethod
    def _raw(cls, terms, alphabet, field):
        poly = cls.__new__(cls)
        poly.terms = terms
        poly.alphabet = alphabet
        poly.field = field
        return poly

    @classmethod
    def scalar(cls, value, alphabet, field=FIELD):
        return cls({(): value}, alphabet, field)

    @classmethod
    def one(cls, alphabet, field=FIELD):
        return cls.scalar(1, alphabet, field)

    @classmethod
    def zero(cls, alphabet, field=FIELD):
        return cls({}, alphabet, field)

    @classmethod
    def word(cls, word, alphabet, field=FIELD, coeff=1):
        return cls({tuple(word): coeff}, alphabet, field)

    @classmethod
    def generator(cls, index, alphabet, field=FIELD):
        return cls.word((index,), alphabet, field)

    def degree(self):
        """Largest word length, -1 for the zero element."""
        return max((len(w) for w in self.terms), default=-1)

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.field.zero)

    def constant(self):
        return self.coefficient(())

    def words(self):
        return list(self.terms)

    def is_scalar(self):
        return all(not w for w in self.terms)

    def map_coefficients(self, fn):
        terms = {}
        for word, coeff in self.terms.items():
            _add_into(terms, word, fn(coeff))
        return NCPoly._raw(terms, self.alphabet, self.field)

    def _check(self, other):
        if other.alphabet != self.alphabet:
            raise PresentationError(
                "alphabet mismatch: {} and {}".format(self.alphabet, other.alphabet)
            )

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        return NCPoly.scalar(other, self.alphabet, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            _add_into(terms, word, coeff)
        return NCPoly._raw(terms, self.alphabet, self.field)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()}, self.alphabet, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            scale = to_scalar(other, self.field)
            return self.map_coefficients(lambda c: c * scale)
        self._check(other)
        terms = {}
        for (w1, c1), (w2, c2) in product(self.terms.items(), other.terms.items()):
            _add_into(terms, w1 + w2, c1 * c2)
        return NCPoly._raw(terms, self.alphabet, self.field)

    def __rmul__(self, other):
        scale = to_scalar(other, self.field)
        return self.map_coefficients(lambda c: scale * c)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of elements are not defined")
        result = NCPoly.one(self.alphabet, self.field)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alphabet == other.alphabet and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ParseError):
            return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "NCPoly({})".format(format_element(self))


class TensorPoly:
    """
    Element of a tensor product of free algebras.

    Terms are keyed by tuples of words, one word per leg. Multiplication is
    componentwise: ``(a ⊗ b)(c ⊗ d) = ac ⊗ bd``.
    """

    __slots__ = ("terms", "alphabets", "field")

    def __init__(self, terms=None, alphabets=(), field=FIELD):
        self.alphabets = tuple(tuple(a) for a in alphabets)
        self.field = field
        self.terms = {}
        for key, coeff in (terms or {}).items():
            key = tuple(tuple(w) for w in key)
            if len(key) != len(self.alphabets):
                raise ValueError("expected {} legs, got {}".format(len(self.alphabets), len(key)))
            _add_into(self.terms, key, to_scalar(coeff, field))

    @classmethod
    def _raw(cls, terms, alphabets, field):
        poly = cls.__new__(cls)
        poly.terms = terms
        poly.alphabets = alphabets
        poly.field = field
        return poly

    @classmethod
    def one(cls, alphabets, field=FIELD):
        return cls({tuple(() for _ in alphabets): 1}, alphabets, field)

    @classmethod
    def zero(cls, alphabets, field=FIELD):
        return cls({}, alphabets, field)

    @classmethod
    def from_legs(cls, *legs):
        """Elementary tensor of NCPolys ``legs[0] ⊗ legs[1] ⊗ ...``."""
        field = legs[0].field
        terms = {}
        for items in product(*(leg.terms.items() for leg in legs)):
            coeff = field.one
            for _, c in items:
                coeff = coeff * c
            _add_into(terms, tuple(w for w, _ in items), coeff)
        return cls._raw(terms, tuple(leg.alphabet for leg in legs), field)

    @property
    def legs(self):
        return len(self.alphabets)

    def _check(self, other):
        if other.alphabets != self.alphabets:
            raise PresentationError("tensor alphabets mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            _add_into(terms, key, coeff)
        return TensorPoly._raw(terms, self.alphabets, self.field)

    def __neg__(self):
        return TensorPoly._raw({k: -c for k, c in self.terms.items()}, self.alphabets, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        value = to_scalar(value, self.field)
        terms = {}
        for key, coeff in self.terms.items():
            _add_into(terms, key, coeff * value)
        return TensorPoly._raw(terms, self.alphabets, self.field)

    def __mul__(self, other):
        if not isinstance(other, TensorPoly):
            return self.scale(other)
        self._check(other)
        terms = {}
        for (k1, c1), (k2, c2) in product(self.terms.items(), other.terms.items()):
            key = tuple(a + b for a, b in zip(k1, k2))
            _add_into(terms, key, c1 * c2)
        return TensorPoly._raw(terms, self.alphabets, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.alphabets == other.alphabets and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "TensorPoly({})".format(format_element(self))


class MonomialOrder:
    """
    Monomial order on words: by length, then by total weight, then
    lexicographically by generator precedence.

    Parameters
    ----------
    weights : sequence of int
        weight of each generator, defaults to all zero
    precedence : sequence of int
        rank of each generator, lower rank meaning smaller; defaults to
        the generator index
    """

    def __init__(self, weights, precedence=None):
        self.weights = tuple(int(w) for w in weights)
        if precedence is None:
            precedence = range(len(self.weights))
        self.precedence = tuple(int(p) for p in precedence)
        if len(self.precedence) != len(self.weights):
            raise ValueError("weights and precedence must have the same length")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of 0..n-1")

    @classmethod
    def graded_lex(cls, n):
        return cls([0] * n)

    def key(self, word):
        return (
            len(word),
            sum(self.weights[g] for g in word),
            tuple(self.precedence[g] for g in word),
        )

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.weights == other.weights
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.weights, self.precedence))

    def __repr__(self):
        return "MonomialOrder(weights={}, precedence={})".format(self.weights, self.precedence)


class RewriteSystem:
    """
    Oriented rules ``lead -> rhs`` together with a monomial order.

    Every right-hand side must be strictly smaller than its leading word,
    so reduction terminates. Rules are applied at the rightmost position
    of a growing prefix, the first listed rule winning when several leads
    match. Central rules (a relation whose leading word may be removed from
    any word containing its letters) support relations of higher degree
    that are central in the algebra.

    Parameters
    ----------
    alphabet : tuple of str
    rules : list of (word, NCPoly or dict)
    order : MonomialOrder
    field : sympy FractionField, optional
    central_rules : list of NCPoly, optional
        relations ``r = 0`` whose leading word is central
    cache_size : int or None, optional
        bound on each memo of normal forms, least recently used entries
        go first; None keeps every entry for the life of the system.
        Defaults to DEFAULT_CACHE_SIZE
    """

    def __init__(self, alphabet, rules, order, field=FIELD, central_rules=(),
                 cache_size=DEFAULT_CACHE_SIZE):
        self.alphabet = tuple(alphabet)
        self.order = order
        self.field = field
        if len(order.weights) != len(self.alphabet):
            raise ValueError("order does not match the alphabet")

        self.rules = []
        for lead, rhs in rules:
            lead = tuple(lead)
            if isinstance(rhs, NCPoly):
                rhs = rhs.terms
            rhs = {tuple(w): to_scalar(c, field) for w, c in rhs.items() if c}
            lead_key = order.key(lead)
            for word in rhs:
                if order.key(word) >= lead_key:
                    raise RewriteError(
                        "rule {} -> {} does not decrease in the monomial order".format(
                            format_word(lead, self.alphabet), format_word(word, self.alphabet)
                        )
                    )
            self.rules.append((lead, rhs))

        self._by_last = {}
        for lead, rhs in self.rules:
            self._by_last.setdefault(lead[-1], []).append((lead, rhs))

        self.central_rules = []
        for relation in central_rules:
            terms = relation.terms if isinstance(relation, NCPoly) else relation
            lead = max(terms, key=order.key)
            self.central_rules.append((lead, _multiset(lead), dict(terms)))

        if cache_size is not None and cache_size < 1:
            raise ValueError("cache_size must be positive or None")
        self.cache_size = cache_size
        self._caches = {
            "normal_form": lru_cache(maxsize=cache_size)(self._word_normal_form),
            "append": lru_cache(maxsize=cache_size)(self._append_letter),
            "central": lru_cache(maxsize=cache_size)(self._central_reduce),
        }

    @property
    def leads(self):
        return [lead for lead, _ in self.rules]

    def key(self, word):
        return self.order.key(word)

    def _lead_suffix(self, word):
        for lead, rhs in self._by_last.get(word[-1], ()):
            if len(lead) <= len(word) and word[len(word) - len(lead):] == lead:
                return lead, rhs
        return None

    def _central_match(self, word):
        if not self.central_rules:
            return None
        counts = _multiset(word)
        for rule in self.central_rules:
            if all(counts.get(g, 0) >= k for g, k in rule[1].items()):
                return rule
        return None

    def is_normal(self, word):
        """True if no rule applies to `word`."""
        word = tuple(word)
        for end in range(1, len(word) + 1):
            if self._lead_suffix(word[:end]) is not None:
                return False
        return self._central_match(word) is None

    def normal_form(self, word):
        """
        Normal form of a single word as a dict word -> scalar.

        The returned dict is shared with the memo and must not be mutated.
        """
        return self._caches["normal_form"](tuple(word))

    def cache_info(self):
        """Hits, misses and current size of each memo, keyed by name."""
        return {name: cached.cache_info() for name, cached in self._caches.items()}

    def clear_cache(self):
        for cached in self._caches.values():
            cached.cache_clear()

    def _word_normal_form(self, word):
        if not word:
            return {(): self.field.one}
        result = {}
        for w, c in self.normal_form(word[:-1]).items():
            for w2, c2 in self._append(w, word[-1]).items():
                _add_into(result, w2, c * c2)
        return result

    def _append(self, word, letter):
        return self._caches["append"](word, letter)

    def _append_letter(self, word, letter):
        # `word` is in normal form, so only suffixes of word + letter can match
        candidate = word + (letter,)
        match = self._lead_suffix(candidate)
        if match is None:
            result = self._central(candidate)
        else:
            lead, rhs = match
            stem = candidate[:len(candidate) - len(lead)]
            result = {}
            for target, coeff in rhs.items():
                for w, c in self._concat(stem, target).items():
                    _add_into(result, w, coeff * c)
        return result

    def _concat(self, stem, tail):
        current = {stem: self.field.one}
        for letter in tail:
            following = {}
            for w, c in current.items():
                for w2, c2 in self._append(w, letter).items():
                    _add_into(following, w2, c * c2)
            current = following
        return current

    def _central(self, word):
        if self._central_match(word) is None:
            return {word: self.field.one}
        return self._caches["central"](word)

    def _central_reduce(self, word):
        lead, lead_counts, relation = self._central_match(word)
        quotient = _multiset_difference(word, lead_counts, self.order)
        expanded = {}
        for target, coeff in relation.items():
            for w, c in self._concat_subword(quotient + target).items():
                _add_into(expanded, w, coeff * c)
        pivot = expanded.pop(word, None)
        if not pivot:
            raise RewriteError(
                "central rule can not reduce {}".format(format_word(word, self.alphabet))
            )
        word_key = self.order.key(word)
        result = {}
        for w, c in expanded.items():
            if self.order.key(w) >= word_key:
                raise RewriteError(
                    "central rule does not decrease {}".format(format_word(word, self.alphabet))
                )
            for w2, c2 in self._central(w).items():
                _add_into(result, w2, -c * c2 / pivot)
        return result

    def _concat_subword(self, word):
        # subword rules only, used to expand multiples of a central relation
        current = {(): self.field.one}
        for letter in word:
            following = {}
            for w, c in current.items():
                for w2, c2 in self._append_subword(w + (letter,)).items():
                    _add_into(following, w2, c * c2)
            current = following
        return current

    def _append_subword(self, candidate):
        match = self._lead_suffix(candidate)
        if match is None:
            return {candidate: self.field.one}
        lead, rhs = match
        stem = candidate[:len(candidate) - len(lead)]
        result = {}
        for target, coeff in rhs.items():
            current = {stem: self.field.one}
            for letter in target:
                following = {}
                for w, c in current.items():
                    for w2, c2 in self._append_subword(w + (letter,)).items():
                        _add_into(following, w2, c * c2)
                current = following
            for w, c in current.items():
                _add_into(result, w, coeff * c)
        return result

    def reduce(self, x):
        """Normal form of an NCPoly."""
        if x.alphabet != self.alphabet:
            raise PresentationError(
                "alphabet mismatch: {} and {}".format(x.alphabet, self.alphabet)
            )
        terms = {}
        for word, coeff in x.terms.items():
            for w, c in self.normal_form(word).items():
                _add_into(terms, w, coeff * c)
        return NCPoly._raw(terms, self.alphabet, x.field)

    def __repr__(self):
        return "RewriteSystem({} rules, {} central, alphabet={})".format(
            len(self.rules), len(self.central_rules), self.alphabet
        )


def _multiset(word):
    counts = {}
    for g in word:
        counts[g] = counts.get(g, 0) + 1
    return counts


def _multiset_difference(word, counts, order):
    remaining = dict(counts)
    kept = []
    for g in word:
        if remaining.get(g, 0):
            remaining[g] -= 1
        else:
            kept.append(g)
    return tuple(sorted(kept, key=lambda g: order.precedence[g]))


def multiply(a, b):
    """Concatenation product, not reduced."""
    return a * b


def reduce(x, R):
    """
    Normal form of `x` in the rewrite system `R`.

    Examples
    --------
    >>> from qgroups.hopf import builtin
    >>> P = builtin("slq2")
    >>> format_element(reduce(parse_element("d*a", P.alphabet), P.rewrite))
    '1 + q^-1*b*c'
    """
    return R.reduce(x)


def critical_pairs(R):
    """
    Overlaps of leading words and the difference of their two reductions.

    Both inclusions (one lead inside another, equal leads included) and
    proper overlaps (a suffix of one lead equal to a prefix of another) are
    enumerated. Central rules are not part of the check.

    Returns
    -------
    pairs : list of (word, NCPoly)
        the overlap word and the reduced difference of the two one-step
        rewrites; the system is locally confluent iff every difference is 0
    """
    pairs = []
    for i, (lead_i, rhs_i) in enumerate(R.rules):
        for j, (lead_j, rhs_j) in enumerate(R.rules):
            if i != j and len(lead_j) <= len(lead_i):
                if lead_j == lead_i and j < i:
                    continue
                for start in range(len(lead_i) - len(lead_j) + 1):
                    if lead_i[start:start + len(lead_j)] != lead_j:
                        continue
                    prefix, suffix = lead_i[:start], lead_i[start + len(lead_j):]
                    left = _spread(rhs_i, (), (), R.alphabet, R.field)
                    right = _spread(rhs_j, prefix, suffix, R.alphabet, R.field)
                    pairs.append((lead_i, R.reduce(left - right)))
            for size in range(1, min(len(lead_i), len(lead_j))):
                if lead_i[len(lead_i) - size:] != lead_j[:size]:
                    continue
                overlap = lead_i + lead_j[size:]
                left = _spread(rhs_i, (), lead_j[size:], R.alphabet, R.field)
                right = _spread(rhs_j, lead_i[:len(lead_i) - size], (), R.alphabet, R.field)
                pairs.append((overlap, R.reduce(left - right)))
    return pairs


def _spread(rhs, prefix, suffix, alphabet, field):
    terms = {}
    for word, coeff in rhs.items():
        _add_into(terms, prefix + word + suffix, coeff)
    return NCPoly._raw(terms, alphabet, field)


def is_confluent(R):
    """True when every critical pair resolves to zero."""
    return all(not difference for _, difference in critical_pairs(R))


def basis_words(R, max_degree):
    """
    Normal-form words of degree at most `max_degree`, sorted by the order.

    Examples
    --------
    >>> from qgroups.hopf import builtin
    >>> len(basis_words(builtin("slq2").rewrite, 3))
    30
    """
    if max_degree < 0:
        raise ValueError("max_degree must be a non-negative integer")
    words = [()]
    frontier = deque([()])
    while frontier:
        word = frontier.popleft()
        if len(word) == max_degree:
            continue
        for letter in range(len(R.alphabet)):
            candidate = word + (letter,)
            if R._lead_suffix(candidate) is None and R._central_match(candidate) is None:
                words.append(candidate)
                frontier.append(candidate)
    return sorted(words, key=R.key)


def tensor_reduce(x, *systems):
    """Reduce every leg of the TensorPoly `x` by the matching system."""
    if len(systems) != x.legs:
        raise ValueError("need one rewrite system per leg")
    terms = {}
    for key, coeff in x.terms.items():
        forms = [R.normal_form(w).items() for R, w in zip(systems, key)]
        for items in product(*forms):
            value = coeff
            for _, c in items:
                value = value * c
            _add_into(terms, tuple(w for w, _ in items), value)
    return TensorPoly._raw(terms, x.alphabets, x.field)


def extend_homomorphism(x, images, R, cache=None):
    """
    Apply the unital algebra homomorphism defined on generators.

    Parameters
    ----------
    x : NCPoly
    images : sequence of NCPoly
        image of each generator, all in the target algebra
    R : RewriteSystem
        rewrite system of the target algebra
    cache : dict, optional
        word -> image memo, shared between calls
    """
    cache = {} if cache is None else cache
    target = images[0] if images else None
    result = NCPoly.zero(R.alphabet, x.field if target is None else target.field)
    for word, coeff in x.terms.items():
        result = result + _word_image(word, images, R, cache) * coeff
    return result


def _word_image(word, images, R, cache):
    if word in cache:
        return cache[word]
    if not word:
        value = NCPoly.one(R.alphabet, images[0].field if images else FIELD)
    else:
        value = R.reduce(_word_image(word[:-1], images, R, cache) * images[word[-1]])
    cache[word] = value
    return value


def extend_tensor_homomorphism(x, images, systems, cache=None):
    """Homomorphism into a tensor product, images given per generator."""
    cache = {} if cache is None else cache
    alphabets = tuple(R.alphabet for R in systems)
    field = images[0].field
    result = TensorPoly.zero(alphabets, field)
    for word, coeff in x.terms.items():
        result = result + _tensor_word_image(word, images, systems, cache).scale(coeff)
    return result


def _tensor_word_image(word, images, systems, cache):
    if word in cache:
        return cache[word]
    if not word:
        value = TensorPoly.one(tuple(R.alphabet for R in systems), images[0].field)
    else:
        head = _tensor_word_image(word[:-1], images, systems, cache)
        value = tensor_reduce(head * images[word[-1]], *systems)
    cache[word] = value
    return value


def orient_relations(relations, alphabet, order, field=FIELD):
    """
    Turn relations ``r = 0`` into a rewrite system.

    Relations of degree at most two are oriented together by exact row
    reduction, columns sorted from the largest word down, so that every
    pivot word becomes a leading word. Relations of higher degree are
    reduced by those rules; what survives must be central and becomes a
    central rule.

    Raises
    ------
    PresentationError
        if the relations force ``1 = 0``
    RewriteError
        if a surviving higher-degree relation is not central
    """
    alphabet = tuple(alphabet)
    low = [r for r in relations if r.degree() <= 2 and r]
    high = [r for r in relations if r.degree() > 2]

    rules = [(lead, rhs) for lead, rhs in _echelon_rules(low, order, field)]
    if any(not lead for lead, _ in rules):
        raise PresentationError("relations collapse the algebra (1 = 0)")
    quadratic = RewriteSystem(alphabet, rules, order, field)

    central = []
    if high:
        reduced = [quadratic.reduce(r) for r in high]
        reduced = [r for r in reduced if r]
        for lead, rhs in _echelon_rules(reduced, order, field):
            if not lead:
                raise PresentationError("relations collapse the algebra (1 = 0)")
            relation = NCPoly.word(lead, alphabet, field) - NCPoly(rhs, alphabet, field)
            for g in range(len(alphabet)):
                gen = NCPoly.generator(g, alphabet, field)
                if quadratic.reduce(gen * relation - relation * gen):
                    raise RewriteError(
                        "relation with leading word {} is not central".format(
                            format_word(lead, alphabet)
                        )
                    )
            central.append(relation)

    logger.info(
        "oriented %d relations into %d rules and %d central rules",
        len(relations), len(rules), len(central),
    )
    return RewriteSystem(alphabet, rules, order, field, central)


def _echelon_rules(relations, order, field):
    if not relations:
        return []
    columns = sorted({w for r in relations for w in r.terms}, key=order.key, reverse=True)
    index = {w: k for k, w in enumerate(columns)}
    dod = {}
    seen = set()
    for r in relations:
        row = {index[w]: c for w, c in r.terms.items()}
        signature = frozenset(row.items())
        if signature in seen:
            continue
        seen.add(signature)
        dod[len(dod)] = row
    matrix = DomainMatrix.from_dod(dod, (len(dod), len(columns)), field)
    echelon, pivots = matrix.rref(method="GJ")
    rows = echelon.to_dod()
    rules = []
    for row_index, pivot in enumerate(pivots):
        row = rows.get(row_index, {})
        rhs = {columns[k]: -c for k, c in row.items() if k != pivot}
        rules.append((columns[pivot], rhs))
    return rules


def format_word(word, alphabet):
    """Text of a word, ``1`` for the empty word."""
    if not word:
        return "1"
    return "*".join(alphabet[g] for g in word)


# a sum, a difference or a quotient; exponent signs do not count
_COMPOSITE = re.compile(r"(?<!\^)[+-]|/")


def _format_coefficient(coeff):
    text = format_scalar(coeff)
    body = text[1:] if text.startswith("-") else text
    if _COMPOSITE.search(body):
        return "(" + text + ")"
    return text


def _format_term(words, alphabets, coeff):
    tensor = " ⊗ ".join(format_word(w, a) for w, a in zip(words, alphabets))
    constant = all(not w for w in words)
    text = format_scalar(coeff)
    if constant and len(words) == 1:
        return text
    if text == "1":
        return tensor
    if text == "-1":
        return "-" + tensor
    return _format_coefficient(coeff) + "*" + tensor


def format_element(x):
    """
    Text of an NCPoly or TensorPoly.

    Terms are sorted by the graded order of their words and joined with
    `` + `` / `` - ``; composite coefficients are parenthesized and tensor
    legs are joined with `` ⊗ ``.
    """
    if isinstance(x, NCPoly):
        alphabets = (x.alphabet,)
        items = [((w,), c) for w, c in x.terms.items()]
    else:
        alphabets = x.alphabets
        items = list(x.terms.items())
    if not items:
        return "0"
    items.sort(key=lambda item: tuple((len(w), w) for w in item[0]))
    text = ""
    for words, coeff in items:
        piece = _format_term(words, alphabets, coeff)
        if not text:
            text = piece
        elif piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


_ALIASES = {
    "alpha": "a", "beta": "b", "gamma": "c", "g": "c", "delta": "d",
    "α": "a", "β": "b", "γ": "c", "δ": "d",
}


class _ElementSemantics:
    def __init__(self, alphabet, field, star):
        self.alphabet = tuple(alphabet)
        self.field = field
        self.star_map = star
        self.names = {name: k for k, name in enumerate(self.alphabet)}
        self.scalars = {str(s): g for s, g in zip(field.symbols, field.gens)}

    def number(self, n):
        return NCPoly.scalar(n, self.alphabet, self.field)

    def symbol(self, name):
        if name in self.names:
            return NCPoly.generator(self.names[name], self.alphabet, self.field)
        alias = _ALIASES.get(name)
        if alias in self.names:
            return NCPoly.generator(self.names[alias], self.alphabet, self.field)
        if name in self.scalars:
            return NCPoly.scalar(self.scalars[name], self.alphabet, self.field)
        raise ParseError("unknown generator {!r}".format(name))

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def div(self, x, y):
        if not y.is_scalar() or not y:
            raise ParseError("can only divide by a nonzero scalar")
        return x * (self.field.one / y.constant())

    def pow(self, x, n):
        if n < 0:
            if not x.is_scalar() or not x:
                raise ParseError("negative powers are only defined for scalars")
            return NCPoly.scalar(power(x.constant(), n), self.alphabet, self.field)
        return x ** n

    def star(self, x):
        if self.star_map is None:
            raise ParseError("no star structure available for ^*")
        return self.star_map(x)


def parse_element(text, alphabet, field=FIELD, star=None):
    """
    Parse element text such as ``1 + q^-1*b*c`` or ``a b c d``.

    Parameters
    ----------
    text : str
    alphabet : tuple of str
        generator names; Greek names and ``g`` alias a, b, c, d
    field : sympy FractionField, optional
    star : callable, optional
        star operation used for the postfix ``^*``

    Raises
    ------
    ParseError
    """
    return fold(parse_tree(text), _ElementSemantics(alphabet, field, star))
