"""Incremental row-echelon engines over F_p.

Two implementations share one interface: :class:`Gf2RowSpace` packs each
row into a single Python integer, coordinate i living at bit i, so row
reduction is bignum XOR (this is the performance kernel for the large
degree components over F_2); :class:`ModpRowSpace` keeps dense numpy rows
for odd primes.  Both maintain a forward echelon basis keyed by pivot
(the highest nonzero coordinate of each row) and postpone full
back-substitution until the rows are actually exported, since ranks and
normal forms do not need it: reducing a vector greedily against distinct
pivots already yields the unique coset representative supported away
from the pivots.
"""

from __future__ import annotations

import numpy as np


class Gf2RowSpace:
    """Row space over F_2 with integers as rows (bit i = coordinate i)."""

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = {}
        self._desc = None
        self._is_reduced = True

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def add(self, row):
        """Insert one row; returns True if it enlarged the span."""
        rows = self._rows
        while row:
            b = row.bit_length() - 1
            other = rows.get(b)
            if other is None:
                rows[b] = row
                self._desc = None
                self._is_reduced = False
                return True
            row ^= other
        return False

    def reduce(self, v):
        """The unique representative of v modulo the span with no pivot coordinate set."""
        if self._desc is None:
            self._desc = sorted(self._rows, reverse=True)
        for b in self._desc:
            if (v >> b) & 1:
                v ^= self._rows[b]
        return v

    def contains(self, v):
        return self.reduce(v) == 0

    def _back_substitute(self):
        if self._is_reduced:
            return
        pivots = sorted(self._rows, reverse=True)
        for b in pivots:
            v = self._rows[b]
            for b2 in pivots:
                if b2 < b and (v >> b2) & 1:
                    v ^= self._rows[b2]
            self._rows[b] = v
        self._is_reduced = True

    def rows(self):
        """Fully reduced rows (as integers), ascending by pivot."""
        self._back_substitute()
        return [self._rows[b] for b in sorted(self._rows)]

    def row_vectors(self):
        """Fully reduced rows as 0/1 coefficient lists of length ncols."""
        return [[(r >> i) & 1 for i in range(self.ncols)] for r in self.rows()]


class ModpRowSpace:
    """Row space over F_p (p odd prime) with dense numpy rows, pivots normalized to 1."""

    def __init__(self, ncols, p):
        self.ncols = ncols
        self.p = p
        self._rows = {}
        self._desc = None
        self._is_reduced = True

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def add(self, row):
        row = np.asarray(row, dtype=np.int64) % self.p
        row = self.reduce(row)
        support = np.nonzero(row)[0]
        if support.size == 0:
            return False
        b = int(support[-1])
        inv = pow(int(row[b]), -1, self.p)
        self._rows[b] = (row * inv) % self.p
        self._desc = None
        self._is_reduced = False
        return True

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        if self._desc is None:
            self._desc = sorted(self._rows, reverse=True)
        for b in self._desc:
            c = int(v[b])
            if c:
                v = (v - c * self._rows[b]) % self.p
        return v

    def contains(self, v):
        return not np.any(self.reduce(v))

    def reduce_matrix(self, m):
        """Reduce every row of a matrix against the span at once."""
        m = np.asarray(m, dtype=np.int64) % self.p
        for b in sorted(self._rows, reverse=True):
            m = (m - np.outer(m[:, b], self._rows[b])) % self.p
        return m

    def _back_substitute(self):
        if self._is_reduced:
            return
        pivots = sorted(self._rows, reverse=True)
        for b in pivots:
            v = self._rows[b]
            for b2 in pivots:
                if b2 < b and v[b2]:
                    v = (v - int(v[b2]) * self._rows[b2]) % self.p
            self._rows[b] = v
        self._is_reduced = True

    def rows(self):
        """Fully reduced rows as numpy vectors, ascending by pivot."""
        self._back_substitute()
        return [self._rows[b] for b in sorted(self._rows)]

    def row_vectors(self):
        return [[int(c) for c in r] for r in self.rows()]


def row_space(ncols, p):
    """The appropriate echelon engine for F_p."""
    if p == 2:
        return Gf2RowSpace(ncols)
    return ModpRowSpace(ncols, p)
