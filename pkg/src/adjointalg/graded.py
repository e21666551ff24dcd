"""Degreewise linear algebra for homogeneous two-sided ideals of the truncated algebra.

A graded ideal is specified by finitely many homogeneous generators.  Its
degree-n component is spanned by u * g * w over all generators g and all
word pairs (u, w) with deg u + deg g + deg w = n; the spanning rows are fed
to an incremental echelon engine, one engine per degree, built lazily and
cached.  Coordinates at degree n are indexed by the 2^n words via
:func:`adjointalg.freealg.word_to_index`, so over F_2 a polynomial slice
is a single integer bitmask and the index of a concatenation is a shift-or.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .freealg import (
    TruncatedPoly,
    homogeneous_parts,
    index_to_word,
    word_to_index,
)
from .linalg import row_space
from .text import format_poly, parse_poly

log = logging.getLogger(__name__)

#: Returned by :func:`nilpotency_bound` when no power vanishes within the window.
NOT_CERTIFIED = None


def encode_part(part, degree):
    """Coefficient vector of a homogeneous slice, as a bitmask (p=2) or numpy-ready list."""
    if part.p == 2:
        row = 0
        for w, _ in part.terms.items():
            row |= 1 << word_to_index(w)
        return row
    vec = [0] * (1 << degree)
    for w, c in part.terms.items():
        vec[word_to_index(w)] = c
    return vec


def decode_vector(vec, degree, p, cap):
    """Inverse of :func:`encode_part` for either row representation."""
    terms = {}
    if p == 2:
        i = 0
        v = vec
        while v:
            if v & 1:
                terms[index_to_word(i, degree)] = 1
            v >>= 1
            i += 1
    else:
        for i, c in enumerate(vec):
            if c % p:
                terms[index_to_word(i, degree)] = int(c) % p
    return TruncatedPoly(p, cap, terms)


@dataclass(frozen=True)
class DegreeBasis:
    """Echelonized basis of one degree component of an ideal."""

    degree: int
    space: object

    @property
    def rank(self):
        return self.space.rank

    def row_vectors(self):
        return self.space.row_vectors()

    def row_polys(self, p, cap):
        return [decode_vector(r, self.degree, p, cap) for r in self.space.rows()]


class GradedIdeal:
    """Two-sided ideal generated by homogeneous elements, with cached degree bases."""

    def __init__(self, p, cap, generators):
        self.p = p
        self.cap = cap
        gens = []
        for g in generators:
            if g.p != p or g.cap != cap:
                raise ValueError(
                    f"generator context F_{g.p} cap {g.cap} does not match"
                    f" the ideal context F_{p} cap {cap}"
                )
            if g.is_zero:
                raise ValueError("ideal generators must be nonzero")
            if not g.is_homogeneous:
                raise ValueError(f"ideal generators must be homogeneous, got {g}")
            gens.append((g.max_degree(), g))
        self.generators = tuple(gens)
        self._spaces = {}

    def _space(self, n):
        """The echelon engine for the degree-n component, built on first use."""
        space = self._spaces.get(n)
        if space is not None:
            return space
        space = row_space(1 << n, self.p)
        gf2 = self.p == 2
        for d, g in self.generators:
            sandwich = n - d
            if sandwich < 0:
                continue
            gterms = [(word_to_index(w), c) for w, c in g.terms.items()]
            for i in range(sandwich + 1):
                j = sandwich - i
                shift = d + j
                for u in range(1 << i):
                    base = u << shift
                    for w in range(1 << j):
                        if gf2:
                            row = 0
                            for t, _ in gterms:
                                row |= 1 << (base | (t << j) | w)
                        else:
                            row = [0] * (1 << n)
                            for t, c in gterms:
                                row[base | (t << j) | w] = c
                        space.add(row)
        log.debug("degree %d component: rank %d of %d", n, space.rank, 1 << n)
        self._spaces[n] = space
        return space

    def component_basis(self, n):
        """Echelonized basis of the degree-n component (1 <= n <= cap)."""
        if not 1 <= n <= self.cap:
            raise ValueError(f"degree {n} outside 1..{self.cap}")
        return DegreeBasis(n, self._space(n))


def ideal_component_basis(ideal, n):
    return ideal.component_basis(n)


@dataclass(frozen=True)
class HilbertTable:
    """Dimensions of the quotient algebra, one per degree from 1 to cap."""

    p: int
    cap: int
    dims: tuple

    def dimension(self, n):
        if not 1 <= n <= self.cap:
            raise ValueError(f"degree {n} outside 1..{self.cap}")
        return self.dims[n - 1]

    def ideal_rank(self, n):
        return (1 << n) - self.dimension(n)

    def to_csv(self):
        lines = ["n,dim,ideal_rank"]
        lines += [f"{n},{self.dimension(n)},{self.ideal_rank(n)}" for n in range(1, self.cap + 1)]
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        return {
            "p": self.p,
            "cap": self.cap,
            "rows": [
                {"n": n, "dim": self.dimension(n), "ideal_rank": self.ideal_rank(n)}
                for n in range(1, self.cap + 1)
            ],
        }


def quotient_dimensions(ideal):
    """Hilbert table of the quotient by the ideal: dim at degree n is 2^n - rank."""
    dims = []
    for n in range(1, ideal.cap + 1):
        dims.append((1 << n) - ideal.component_basis(n).rank)
    return HilbertTable(ideal.p, ideal.cap, tuple(dims))


def normal_form(a, ideal):
    """Canonical representative of a modulo the ideal (constant term untouched)."""
    if a.p != ideal.p or a.cap != ideal.cap:
        raise ValueError("element and ideal live in different algebras")
    total = TruncatedPoly(a.p, a.cap, {"": a.constant_term})
    for d, part in homogeneous_parts(a):
        if d == 0:
            continue
        reduced = ideal._space(d).reduce(encode_part(part, d))
        total = total + decode_vector(reduced, d, a.p, a.cap)
    return total


def nilpotency_bound(a, ideal):
    """Smallest k <= cap + 1 with a^k in the ideal, or NOT_CERTIFIED."""
    power = a
    for k in range(1, a.cap + 2):
        if normal_form(power, ideal).is_zero:
            return k
        power = power * a
    return NOT_CERTIFIED


def generators_to_json(ideal):
    """Ideal generators as a JSON-ready list of [degree, polynomial-text] pairs."""
    return [[d, format_poly(g)] for d, g in ideal.generators]


def ideal_from_json(p, cap, data):
    return GradedIdeal(p, cap, [parse_poly(text, p, cap) for _, text in data])
