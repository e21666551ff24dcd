"""Truncated arithmetic in the free associative algebra F_p<x, y>.

Everything here works in the quotient of F_p<x, y> by the two-sided ideal
spanned by words longer than a fixed degree cap, so every element has
finitely many terms and all arithmetic is exact.  Words are plain strings
over the alphabet "xy"; an element is stored as a mapping from words to
nonzero coefficients in [1, p).

On top of the ring operations the module provides the adjoint (circle)
operations

    r o s = r + s + r*s,

which turn the augmentation part A+ (elements with zero constant term)
into a group: truncation makes every such element nilpotent, so 1 + r is
invertible and r |-> 1 + r identifies (A+, o) with the group of units
with constant term 1.
"""

from __future__ import annotations

import math
from itertools import product

ALPHABET = "xy"
_LETTERS = frozenset(ALPHABET)

#: Valuation of the zero element; compares greater than every integer.
INFINITY = math.inf


class CapMismatchError(ValueError):
    """Raised when operands carry different primes or degree caps."""


class ConstantTermError(ValueError):
    """Raised when a circle operation is applied outside the augmentation part A+."""


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def words_of_degree(d):
    """Yield the 2^d words of degree d in lexicographic order (x < y)."""
    for letters in product(ALPHABET, repeat=d):
        yield "".join(letters)


def word_to_index(word):
    """Rank of a word among the words of its own degree (x=0, y=1, first letter highest bit)."""
    i = 0
    for ch in word:
        i = (i << 1) | (ch == "y")
    return i


def index_to_word(i, d):
    """Inverse of :func:`word_to_index` for degree d."""
    return "".join(ALPHABET[(i >> k) & 1] for k in range(d - 1, -1, -1))


def term_sort_key(word):
    """Canonical term order: ascending degree, then lexicographic."""
    return (len(word), word)


def _mul_terms(at, bt, p, cap):
    """Multiply two term dicts, discarding products beyond the cap."""
    if not at or not bt:
        return {}
    by_degree = {}
    for w, c in bt.items():
        by_degree.setdefault(len(w), []).append((w, c))
    out = {}
    for wa, ca in at.items():
        room = cap - len(wa)
        for db, terms in by_degree.items():
            if db > room:
                continue
            for wb, cb in terms:
                w = wa + wb
                out[w] = out.get(w, 0) + ca * cb
    return {w: c % p for w, c in out.items() if c % p}


class TruncatedPoly:
    """Immutable element of F_p<x, y> truncated at a fixed degree cap.

    Words longer than the cap are rejected at construction rather than
    silently dropped: truncation is supposed to happen inside arithmetic,
    and anything else reaching the constructor is a bug worth surfacing.
    Operations between elements with different p or cap raise
    :class:`CapMismatchError`.
    """

    __slots__ = ("p", "cap", "_terms", "_hash")

    def __init__(self, p, cap, terms=()):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if cap < 1:
            raise ValueError(f"degree cap must be at least 1, got {cap}")
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for word, coeff in items:
            if not _LETTERS.issuperset(word):
                raise ValueError(f"bad word {word!r}: letters must come from {ALPHABET!r}")
            if len(word) > cap:
                raise ValueError(f"word {word!r} has degree {len(word)}, beyond the cap {cap}")
            c = (clean.get(word, 0) + coeff) % p
            if c:
                clean[word] = c
            else:
                clean.pop(word, None)
        self.p = p
        self.cap = cap
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p, cap, terms):
        """Fast constructor for term dicts that are already normalized."""
        self = object.__new__(cls)
        self.p = p
        self.cap = cap
        self._terms = terms
        self._hash = None
        return self

    @property
    def terms(self):
        """Read-only view of the term dict (word -> coefficient)."""
        return dict(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def constant_term(self):
        return self._terms.get("", 0)

    @property
    def is_homogeneous(self):
        """True for 0 and for elements whose terms all share one degree."""
        return len({len(w) for w in self._terms}) <= 1

    def max_degree(self):
        """Largest degree with a nonzero term, or None for the zero element."""
        if not self._terms:
            return None
        return max(len(w) for w in self._terms)

    def _check_compatible(self, other):
        if self.p != other.p or self.cap != other.cap:
            raise CapMismatchError(
                f"mixed coefficient contexts: F_{self.p} cap {self.cap}"
                f" vs F_{other.p} cap {other.cap}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = (out.get(w, 0) + c) % self.p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return TruncatedPoly._raw(self.p, self.cap, out)

    def __neg__(self):
        return TruncatedPoly._raw(
            self.p, self.cap, {w: self.p - c for w, c in self._terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.p
            if c == 0:
                return TruncatedPoly._raw(self.p, self.cap, {})
            return TruncatedPoly._raw(
                self.p, self.cap, {w: (a * c) % self.p for w, a in self._terms.items()}
            )
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_compatible(other)
        return TruncatedPoly._raw(
            self.p, self.cap, _mul_terms(self._terms, other._terms, self.p, self.cap)
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k}")
        result = one(self.p, self.cap)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (
            self.p == other.p and self.cap == other.cap and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.cap, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from .text import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"<TruncatedPoly p={self.p} cap={self.cap}: {self}>"


def zero(p, cap):
    return TruncatedPoly(p, cap)


def one(p, cap):
    return TruncatedPoly(p, cap, {"": 1})


def variable(name, p, cap):
    """The generator x or y as an element of the cap-truncated algebra."""
    if name not in _LETTERS:
        raise ValueError(f"unknown generator {name!r}; expected one of {ALPHABET!r}")
    return TruncatedPoly(p, cap, {name: 1})


def monomial(word, p, cap, coeff=1):
    return TruncatedPoly(p, cap, {word: coeff})


def poly_mul(a, b):
    """Truncated product of two elements (same as ``a * b``)."""
    return a * b


def valuation(a):
    """Least degree carrying a nonzero term; INFINITY for the zero element."""
    if not a._terms:
        return INFINITY
    return min(len(w) for w in a._terms)


def homogeneous_part(a, d):
    """The degree-d slice of a, as an element of the same algebra."""
    return TruncatedPoly._raw(
        a.p, a.cap, {w: c for w, c in a._terms.items() if len(w) == d}
    )


def homogeneous_parts(a):
    """Nonzero homogeneous slices of a as (degree, part) pairs, ascending in degree."""
    buckets = {}
    for w, c in a._terms.items():
        buckets.setdefault(len(w), {})[w] = c
    return [
        (d, TruncatedPoly._raw(a.p, a.cap, terms))
        for d, terms in sorted(buckets.items())
    ]


def _require_augmentation(*elements):
    for r in elements:
        if r.constant_term:
            raise ConstantTermError(
                "circle operations are defined on elements with zero constant term"
            )


def circle_mul(r, s):
    """Adjoint product r o s = r + s + r*s on the augmentation part A+."""
    r._check_compatible(s)
    _require_augmentation(r, s)
    return r + s + r * s


def circle_inv(r):
    """Inverse of r in (A+, o): the truncated series -r + r^2 - r^3 + ...."""
    _require_augmentation(r)
    acc = zero(r.p, r.cap)
    power = r
    sign = -1
    for _ in range(r.cap):
        if power.is_zero:
            break
        acc = acc + power * sign
        power = power * r
        sign = -sign
    return acc


def circle_pow(r, k):
    """k-th circle power of r, i.e. (1 + r)^k - 1; negative k uses the circle inverse."""
    _require_augmentation(r)
    if k < 0:
        return circle_pow(circle_inv(r), -k)
    return (one(r.p, r.cap) + r) ** k - one(r.p, r.cap)
