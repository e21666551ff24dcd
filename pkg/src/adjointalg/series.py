"""Exact rational evaluation of relation-count generating functions.

A census records how many defining relations a presentation has in each
degree: finitely many explicit counts plus optional infinite tails with
closed-form sums.  The test function

    f(tau) = 1 - 2*tau + sum_n r_n tau^n

is evaluated exactly with :class:`fractions.Fraction`; a strictly negative
value at some tau in (0, 1) certifies that the algebra presented by two
generators and the censused relations is infinite-dimensional, and the
same counts drive the dimension recursion

    b_n >= 2*b_{n-1} - sum_{i>=2} r_i b_{n-i},   b_0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class DivergentTailError(ValueError):
    """A tail sum does not converge at the requested evaluation point."""


@dataclass(frozen=True)
class GeometricTail:
    """scale * growth^d relations at degree step*d, for every d >= 1.

    Sums to scale * g*tau^step / (1 - g*tau^step) wherever g*tau^step < 1.
    """

    growth: int
    step: int
    scale: int = 1

    def convergent_at(self, tau):
        return self.growth * tau**self.step < 1

    def value_at(self, tau):
        ratio = self.growth * tau**self.step
        if ratio >= 1:
            raise DivergentTailError(
                f"geometric tail (growth {self.growth}, step {self.step}) diverges at tau={tau}"
            )
        return self.scale * ratio / (1 - ratio)

    def counts_up_to(self, horizon):
        out = {}
        d = 1
        while d * self.step <= horizon:
            n = d * self.step
            out[n] = out.get(n, 0) + self.scale * self.growth**d
            d += 1
        return out

    def to_json_dict(self):
        return {
            "kind": "geometric",
            "growth": self.growth,
            "step": self.step,
            "scale": self.scale,
        }


@dataclass(frozen=True)
class OnePerDegreeTail:
    """Exactly one relation at every degree n >= start; sums to tau^start / (1 - tau)."""

    start: int

    def convergent_at(self, tau):
        return tau < 1

    def value_at(self, tau):
        if tau >= 1:
            raise DivergentTailError(f"one-per-degree tail diverges at tau={tau}")
        return tau**self.start / (1 - tau)

    def counts_up_to(self, horizon):
        return {n: 1 for n in range(self.start, horizon + 1)}

    def to_json_dict(self):
        return {"kind": "one_per_degree", "start": self.start}


def tail_from_json(data):
    kind = data["kind"]
    if kind == "geometric":
        return GeometricTail(data["growth"], data["step"], data.get("scale", 1))
    if kind == "one_per_degree":
        return OnePerDegreeTail(data["start"])
    raise ValueError(f"unknown tail kind {kind!r}")


@dataclass(frozen=True)
class GeneratorCensus:
    """Relation counts by degree: explicit finite counts plus closed-form tails.

    Degrees 0 and 1 never carry relations (the presentation has two
    generators and relations start in degree 2), so such entries are
    rejected.
    """

    counts: tuple
    tails: tuple = ()

    def __init__(self, counts=(), tails=()):
        items = counts.items() if hasattr(counts, "items") else counts
        clean = {}
        for n, r in sorted(items):
            if r < 0:
                raise ValueError(f"negative relation count {r} at degree {n}")
            if r == 0:
                continue
            if n < 2:
                raise ValueError(f"relation counts start at degree 2, got degree {n}")
            clean[n] = clean.get(n, 0) + r
        object.__setattr__(self, "counts", tuple(clean.items()))
        object.__setattr__(self, "tails", tuple(tails))

    def count_dict(self):
        return dict(self.counts)

    def with_tails_expanded(self, horizon):
        """A tail-free census whose counts include every tail contribution up to horizon."""
        merged = self.count_dict()
        for tail in self.tails:
            for n, r in tail.counts_up_to(horizon).items():
                merged[n] = merged.get(n, 0) + r
        return GeneratorCensus(merged)

    def to_json_dict(self):
        return {
            "counts": {str(n): r for n, r in self.counts},
            "tails": [t.to_json_dict() for t in self.tails],
        }


def census_from_json(data):
    counts = {int(n): r for n, r in data.get("counts", {}).items()}
    tails = tuple(tail_from_json(t) for t in data.get("tails", ()))
    return GeneratorCensus(counts, tails)


def tail_bound_census():
    """The census used to certify the generated presentations without running them.

    The torsion relations contribute at most 2^d in degree 7d (a geometric
    tail convergent while 2*tau^7 < 1) and the factorization relations at
    most one per degree from 14 on.
    """
    return GeneratorCensus(
        counts={}, tails=(GeometricTail(growth=2, step=7), OnePerDegreeTail(start=14))
    )


def f_eval(census, tau):
    """Exact value of f(tau) = 1 - 2*tau + sum r_n tau^n at a rational tau in (0, 1)."""
    tau = Fraction(tau)
    if not 0 < tau < 1:
        raise ValueError(f"tau must lie strictly between 0 and 1, got {tau}")
    total = 1 - 2 * tau
    for n, r in census.counts:
        total += r * tau**n
    for tail in census.tails:
        total += tail.value_at(tau)
    return total


def witness_search(census, denominator):
    """Smallest tau = k/denominator in (0, 1) with every tail convergent and f(tau) < 0."""
    if denominator < 2:
        raise ValueError(f"denominator must be at least 2, got {denominator}")
    for k in range(1, denominator):
        tau = Fraction(k, denominator)
        if not all(t.convergent_at(tau) for t in census.tails):
            continue
        if f_eval(census, tau) < 0:
            return tau
    return None


def gs_recursion_check(table, census):
    """Verify b_n >= 2*b_{n-1} - sum_{i=2}^{n} r_i b_{n-i} for 1 <= n <= cap.

    b_0 = 1 is the ground-field convention; b_n for n >= 1 comes from the
    Hilbert table.  Returns (True, None) or (False, first failing degree).
    """
    expanded = census.with_tails_expanded(table.cap).count_dict()
    if any(n > table.cap for n in expanded):
        raise ValueError("census has explicit counts beyond the table's cap")
    b = [1] + [table.dimension(n) for n in range(1, table.cap + 1)]
    for n in range(1, table.cap + 1):
        rhs = 2 * b[n - 1] - sum(
            expanded.get(i, 0) * b[n - i] for i in range(2, n + 1)
        )
        if b[n] < rhs:
            return False, n
    return True, None


def gs_report(census, tau):
    """JSON-ready report of an exact evaluation at tau."""
    value = f_eval(census, tau)
    return {
        "tau": str(Fraction(tau)),
        "f_value_exact": f"{value.numerator}/{value.denominator}",
        "f_value_decimal": float(value),
        "negative": value < 0,
    }
