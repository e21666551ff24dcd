"""Finite-dimensional nilpotent algebras over F_p and their adjoint groups.

An algebra is given by structure constants: table[i, j, t] is the
coefficient of basis element t in the product e_i * e_j.  Construction
validates associativity exhaustively on basis triples and computes the
chain of power ideals R = R^1 >= R^2 >= ... down to zero, failing loudly
if the chain stalls before vanishing.  Because R is nilpotent, the circle
operation u o v = u + v + uv makes the whole underlying set a finite
p-group of order p^dim (the adjoint group), and the congruence subgroups
G_n = (R^{n+1}, o) filter it.  The diagnostics here measure that
filtration: exponents of the quotients against the linear bound p(n+1),
subgroup indices against powers of the exponent, and the cyclic width
(the least m with G a product of m cyclic subgroups).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .linalg import ModpRowSpace
from .freealg import is_prime

#: Hard ceiling on group orders for the exhaustive element-level diagnostics.
MAX_GROUP_ORDER = 4096

#: Ceiling for population-style (all elements at once) exponent computations.
MAX_POPULATION = 16384


class NotNilpotentError(ValueError):
    """The power chain of the algebra stalls before reaching zero."""


class FiniteNilAlgebra:
    """Nilpotent associative algebra over F_p with an explicit basis."""

    def __init__(self, p, labels, table):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        labels = tuple(labels)
        k = len(labels)
        table = np.asarray(table, dtype=np.int64) % p
        if table.shape != (k, k, k):
            raise ValueError(
                f"structure constants must have shape ({k}, {k}, {k}), got {table.shape}"
            )
        self.p = p
        self.dim = k
        self.labels = labels
        self.table = table
        self._check_associative()
        self._chain = self._power_chain()

    def _check_associative(self):
        left = np.einsum("ijs,skt->ijkt", self.table, self.table) % self.p
        right = np.einsum("jks,ist->ijkt", self.table, self.table) % self.p
        if not np.array_equal(left, right):
            i, j, k, _ = np.argwhere(left != right)[0]
            raise ValueError(
                f"structure constants are not associative:"
                f" (e{i} e{j}) e{k} != e{i} (e{j} e{k})"
            )

    def _power_chain(self):
        """Echelon bases of R^1 >= R^2 >= ..., ending with the first zero power."""
        full = ModpRowSpace(self.dim, self.p)
        for i in range(self.dim):
            row = np.zeros(self.dim, dtype=np.int64)
            row[i] = 1
            full.add(row)
        chain = [full]
        while chain[-1].rank > 0:
            nxt = ModpRowSpace(self.dim, self.p)
            for row in chain[-1].rows():
                for j in range(self.dim):
                    nxt.add(np.einsum("i,it->t", row, self.table[:, j]) % self.p)
            if nxt.rank >= chain[-1].rank:
                raise NotNilpotentError(
                    f"power chain stalls at rank {nxt.rank}; the algebra is not nilpotent"
                )
            chain.append(nxt)
        return chain

    @property
    def nilpotency_class(self):
        """The least N with R^N = 0."""
        return len(self._chain)

    def power_space(self, n):
        """Echelonized basis of R^n (n >= 1); the zero space once n reaches the class."""
        if n < 1:
            raise ValueError(f"power index must be at least 1, got {n}")
        return self._chain[min(n, self.nilpotency_class) - 1]

    def multiply(self, u, v):
        out = np.einsum("i,j,ijt->t", np.asarray(u), np.asarray(v), self.table) % self.p
        return tuple(int(c) for c in out)

    def circle(self, u, v):
        prod = self.multiply(u, v)
        return tuple((a + b + c) % self.p for a, b, c in zip(u, v, prod))

    def circle_inv(self, u):
        """Circle inverse: the alternating geometric series -u + u^2 - u^3 + ...."""
        acc = self.zero()
        power = tuple(u)
        sign = -1
        for _ in range(self.nilpotency_class):
            acc = tuple((a + sign * b) % self.p for a, b in zip(acc, power))
            power = self.multiply(power, u)
            sign = -sign
        return acc

    def circle_pow(self, u, k):
        if k < 0:
            return self.circle_pow(self.circle_inv(u), -k)
        acc = self.zero()
        base = tuple(u)
        while k:
            if k & 1:
                acc = self.circle(acc, base)
            base = self.circle(base, base)
            k >>= 1
        return acc

    def zero(self):
        return (0,) * self.dim

    def elements(self):
        """All p^dim elements as coefficient tuples, in mixed-radix order."""
        return product(range(self.p), repeat=self.dim)

    def element_index(self, v):
        i = 0
        for c in v:
            i = i * self.p + c
        return i

    def element_at(self, index):
        digits = []
        for _ in range(self.dim):
            index, c = divmod(index, self.p)
            digits.append(c)
        return tuple(reversed(digits))

    def to_json_dict(self):
        return {
            "p": self.p,
            "dim": self.dim,
            "labels": list(self.labels),
            "mul": self.table.tolist(),
        }

    def __repr__(self):
        return (
            f"<FiniteNilAlgebra p={self.p} dim={self.dim}"
            f" class={self.nilpotency_class}>"
        )


def algebra_from_json(data):
    return FiniteNilAlgebra(data["p"], data["labels"], data["mul"])


def truncated_polynomial_algebra(p, n):
    """The algebra x*F_p[x] / (x^n): basis x, x^2, ..., x^(n-1)."""
    if n < 1:
        raise ValueError(f"modulus exponent must be at least 1, got {n}")
    k = n - 1
    table = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i + j + 1 < k:
                table[i, j, i + j + 1] = 1
    labels = ["x" if t == 0 else f"x^{t + 1}" for t in range(k)]
    return FiniteNilAlgebra(p, labels, table)


def strictly_upper_triangular_algebra(p, size):
    """Strictly upper-triangular size x size matrices over F_p."""
    if size < 2:
        raise ValueError(f"matrix size must be at least 2, got {size}")
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    index = {pair: t for t, pair in enumerate(pairs)}
    k = len(pairs)
    table = np.zeros((k, k, k), dtype=np.int64)
    for (a, b), s in index.items():
        for (c, d), t in index.items():
            if b == c:
                table[s, t, index[(a, d)]] = 1
    labels = [f"e{i + 1}{j + 1}" for i, j in pairs]
    return FiniteNilAlgebra(p, labels, table)


def direct_sum(a, b):
    """Direct sum of two algebras over the same prime; cross products vanish."""
    if a.p != b.p:
        raise ValueError(f"cannot sum algebras over F_{a.p} and F_{b.p}")
    k1, k2 = a.dim, b.dim
    table = np.zeros((k1 + k2, k1 + k2, k1 + k2), dtype=np.int64)
    table[:k1, :k1, :k1] = a.table
    table[k1:, k1:, k1:] = b.table
    labels = list(a.labels) + list(b.labels)
    if len(set(labels)) < len(labels):
        labels = [f"{l}_1" for l in a.labels] + [f"{l}_2" for l in b.labels]
    return FiniteNilAlgebra(a.p, labels, table)


@dataclass(frozen=True)
class AdjointGroup:
    """The set of algebra elements under u o v = u + v + uv."""

    algebra: FiniteNilAlgebra

    @property
    def order(self):
        return self.algebra.p**self.algebra.dim

    @property
    def identity(self):
        return self.algebra.zero()

    def elements(self):
        return self.algebra.elements()

    def element_index(self, v):
        return self.algebra.element_index(v)

    def element_order(self, g):
        """Order of g, always a power of p."""
        power = tuple(g)
        order = 1
        while any(power):
            power = self.algebra.circle_pow(power, self.algebra.p)
            order *= self.algebra.p
            if order > self.order:
                raise AssertionError("element order exceeded the group order")
        return order

    def exponent(self):
        if self.order > MAX_POPULATION:
            raise ValueError(
                f"group order {self.order} exceeds the population limit {MAX_POPULATION}"
            )
        return max(self.element_order(g) for g in self.elements())

    def multiplication_index_table(self):
        """T[i, j] = index of element_i o element_j; guarded to small groups."""
        n = self.order
        if n > MAX_GROUP_ORDER:
            raise ValueError(
                f"group order {n} exceeds the table limit {MAX_GROUP_ORDER}"
            )
        alg = self.algebra
        mat = np.array(list(alg.elements()), dtype=np.int64)
        weights = alg.p ** np.arange(alg.dim - 1, -1, -1, dtype=np.int64)
        out = np.empty((n, n), dtype=np.int64)
        for j in range(n):
            h = mat[j]
            prod = np.einsum("bi,j,ijt->bt", mat, h, alg.table) % alg.p
            circ = (mat + h + prod) % alg.p
            out[:, j] = circ @ weights
        return out


def _batch_circle(algebra, a, b):
    prod = np.einsum("bi,bj,ijt->bt", a, b, algebra.table) % algebra.p
    return (a + b + prod) % algebra.p


def _batch_circle_pow(algebra, mat, k):
    acc = np.zeros_like(mat)
    base = mat
    while k:
        if k & 1:
            acc = _batch_circle(algebra, acc, base)
        base = _batch_circle(algebra, base, base)
        k >>= 1
    return acc


def quotient_exponent(algebra, n):
    """Exponent of the quotient of the adjoint group by the congruence subgroup G_n.

    G_n is the subgroup on R^(n+1); the exponent is the least power of p
    killing every coset, found by repeatedly taking p-th circle powers of
    all elements at once and testing membership in R^(n+1).
    """
    if n < 1:
        raise ValueError(f"congruence index must be at least 1, got {n}")
    if algebra.p**algebra.dim > MAX_POPULATION:
        raise ValueError(
            f"population size {algebra.p**algebra.dim} exceeds {MAX_POPULATION}"
        )
    sub = algebra.power_space(n + 1)
    population = np.array(list(algebra.elements()), dtype=np.int64)
    exponent = 1
    while True:
        if not np.any(sub.reduce_matrix(population)):
            return exponent
        population = _batch_circle_pow(algebra, population, algebra.p)
        exponent *= algebra.p
        if exponent > algebra.p**algebra.dim:
            raise AssertionError("quotient exponent exceeded the group order")


def exp_bound_check(algebra):
    """Exponent of every congruence quotient against the linear bound p(n+1).

    A violation would falsify the construction this bound certifies, so it
    is flagged CRITICAL rather than tolerated.
    """
    rows = []
    sharpest = Fraction(0)
    for n in range(1, algebra.nilpotency_class):
        e = quotient_exponent(algebra, n)
        bound = algebra.p * (n + 1)
        sharpest = max(sharpest, Fraction(e, bound))
        rows.append(
            {
                "n": n,
                "quotient_dim": algebra.dim - algebra.power_space(n + 1).rank,
                "exponent": e,
                "bound": bound,
                "ok": e <= bound,
            }
        )
    ok = all(r["ok"] for r in rows)
    report = {
        "p": algebra.p,
        "dim": algebra.dim,
        "nilpotency_class": algebra.nilpotency_class,
        "rows": rows,
        "ok": ok,
        "sharpest_ratio": f"{sharpest.numerator}/{sharpest.denominator}",
    }
    if not ok:
        report["severity"] = "CRITICAL"
    return report


def index_exponent_check(algebra, width):
    """Subgroup indices [G : G_n] = p^dim(R/R^(n+1)) against exponent^width.

    For a group of cyclic width m, the index of any subgroup H is at most
    exp(G/H)^m; with the linear exponent bound this caps every congruence
    index by (p(n+1))^width.
    """
    rows = []
    for n in range(1, algebra.nilpotency_class):
        rank = algebra.power_space(n + 1).rank
        index = algebra.p ** (algebra.dim - rank)
        e = quotient_exponent(algebra, n)
        rows.append(
            {
                "n": n,
                "index": index,
                "exponent": e,
                "index_le_exp_pow_width": index <= e**width,
                "index_le_linear_bound_pow_width": index <= (algebra.p * (n + 1)) ** width,
            }
        )
    return {
        "width": width,
        "rows": rows,
        "ok": all(r["index_le_exp_pow_width"] for r in rows),
        "aggregate_ok": all(r["index_le_linear_bound_pow_width"] for r in rows),
    }


def cyclic_width(group, limit=8):
    """Least m with the whole group a product C_1 C_2 ... C_m of cyclic subgroups.

    Breadth-first over product sets, deduplicating both the cyclic
    subgroups and the intermediate sets, so the first level containing the
    full group is minimal.  Returns None when no product within the limit
    reaches the group (the trivial group has width 1, via its sole cyclic
    subgroup).  Guarded to orders at most MAX_GROUP_ORDER.
    """
    if limit < 1:
        raise ValueError(f"limit must be at least 1, got {limit}")
    n = group.order
    if n > MAX_GROUP_ORDER:
        raise ValueError(f"group order {n} exceeds the limit {MAX_GROUP_ORDER}")
    table = group.multiplication_index_table()
    cyclic = set()
    for g in range(n):
        members = {0}
        i = g
        while i != 0:
            members.add(i)
            i = int(table[i, g])
        cyclic.add(frozenset(members))
    subgroups = sorted(cyclic, key=lambda s: (len(s), sorted(s)))
    sub_indices = [np.fromiter(sorted(s), dtype=np.int64) for s in subgroups]

    seen = set()
    frontier = []
    for idx in sub_indices:
        mask = np.zeros(n, dtype=bool)
        mask[idx] = True
        if mask.all():
            return 1
        key = mask.tobytes()
        if key not in seen:
            seen.add(key)
            frontier.append(mask)
    for level in range(2, limit + 1):
        next_frontier = []
        for left in frontier:
            left_idx = np.nonzero(left)[0]
            for idx in sub_indices:
                mask = np.zeros(n, dtype=bool)
                mask[table[np.ix_(left_idx, idx)].ravel()] = True
                if mask.all():
                    return level
                key = mask.tobytes()
                if key not in seen:
                    seen.add(key)
                    next_frontier.append(mask)
        if not next_frontier:
            return None
        frontier = next_frontier
    return None


def quotient_algebra(algebra, n):
    """The quotient R / R^(n+1), on the basis vectors away from the pivot coordinates."""
    sub = algebra.power_space(n + 1)
    pivots = set(sub.pivots)
    keep = [i for i in range(algebra.dim) if i not in pivots]
    k = len(keep)
    table = np.zeros((k, k, k), dtype=np.int64)
    for a, ia in enumerate(keep):
        for b, ib in enumerate(keep):
            reduced = sub.reduce(algebra.table[ia, ib])
            table[a, b] = [int(reduced[i]) for i in keep]
    labels = [algebra.labels[i] for i in keep]
    return FiniteNilAlgebra(algebra.p, labels, table)
