"""Graded ideals: degree components, Hilbert tables, normal forms, nilpotency bounds."""

import random

import pytest

from adjointalg import (
    NOT_CERTIFIED,
    GradedIdeal,
    HilbertTable,
    ModpRowSpace,
    TruncatedPoly,
    generators_to_json,
    ideal_from_json,
    nilpotency_bound,
    normal_form,
    one,
    parse_poly,
    quotient_dimensions,
    variable,
    zero,
)

from oracle import component_span_vectors, seeded_poly, span_closure


def ideal_of(p, cap, *texts):
    return GradedIdeal(p, cap, [parse_poly(t, p, cap) for t in texts])


def test_generator_validation():
    with pytest.raises(ValueError, match="homogeneous"):
        ideal_of(2, 4, "x + x^2")
    with pytest.raises(ValueError, match="nonzero"):
        GradedIdeal(2, 4, [zero(2, 4)])
    with pytest.raises(ValueError, match="context"):
        GradedIdeal(2, 4, [variable("x", 2, 3)])
    with pytest.raises(ValueError, match="context"):
        GradedIdeal(2, 4, [variable("x", 3, 4)])


def test_component_degree_window():
    ideal = ideal_of(2, 4, "xy")
    with pytest.raises(ValueError):
        ideal.component_basis(0)
    with pytest.raises(ValueError):
        ideal.component_basis(5)
    assert ideal.component_basis(4).degree == 4


def test_empty_ideal_dimensions():
    table = quotient_dimensions(GradedIdeal(2, 4, []))
    assert table.dims == (2, 4, 8, 16)
    assert all(table.ideal_rank(n) == 0 for n in range(1, 5))


def test_frozen_commutator_ideal_dimensions():
    """dims (2, 3, 4) for the ideal generated by xy + yx over F_2 with cap 3."""
    table = quotient_dimensions(ideal_of(2, 3, "xy + yx"))
    assert table.dims == (2, 3, 4)


@pytest.mark.parametrize(
    "p,cap,gens",
    [
        (2, 3, [{"xy": 1, "yx": 1}]),
        (2, 4, [{"xx": 1}]),
        (3, 3, [{"xx": 1}, {"xy": 1, "yx": 2}]),
        (5, 2, [{"x": 1, "y": 4}]),
    ],
)
def test_component_ranks_match_exhaustive_closure(p, cap, gens):
    """Library echelon ranks equal log_p of the brute-force span closure size."""
    polys = [TruncatedPoly(p, cap, g) for g in gens]
    ideal = GradedIdeal(p, cap, polys)
    for n in range(1, cap + 1):
        vectors = component_span_vectors(gens, p, n)
        basis = ideal.component_basis(n)
        if not vectors:
            assert basis.rank == 0
            continue
        closure = span_closure(vectors, p)
        assert len(closure) == p ** basis.rank
        # every echelon row is a combination the oracle also reaches
        for row in basis.row_vectors():
            assert tuple(c % p for c in row) in closure


@pytest.mark.parametrize("gens", [[{"xy": 1, "yx": 1}], [{"xx": 1}, {"xyy": 1}]])
def test_gf2_engine_agrees_with_dense_engine_on_ideal_rows(gens):
    """Both echelon engines assign the same rank to the same spanning rows."""
    polys = [TruncatedPoly(2, 5, g) for g in gens]
    ideal = GradedIdeal(2, 5, polys)
    for n in range(1, 6):
        dense = ModpRowSpace(1 << n, 2)
        for vec in component_span_vectors(gens, 2, n):
            dense.add(vec)
        assert ideal.component_basis(n).rank == dense.rank


def test_row_polys_are_homogeneous_members():
    ideal = ideal_of(2, 4, "xy + yx")
    for n in (2, 3, 4):
        for q in ideal.component_basis(n).row_polys(2, 4):
            assert q.is_homogeneous
            assert q.max_degree() == n
            assert normal_form(q, ideal).is_zero


def test_normal_form_properties():
    rng = random.Random(42)
    ideal = ideal_of(2, 5, "xy + yx", "x^3")
    gx = parse_poly("xy + yx", 2, 5)
    for _ in range(25):
        a = seeded_poly(rng, 2, 5, max_degree=5)
        b = seeded_poly(rng, 2, 5, max_degree=5)
        nf = normal_form(a, ideal)
        # idempotent, linear, and invariant under shifting by ideal elements
        assert normal_form(nf, ideal) == nf
        assert normal_form(a + b, ideal) == nf + normal_form(b, ideal)
        u = seeded_poly(rng, 2, 5, max_degree=2)
        assert normal_form(a + u * gx, ideal) == nf
        assert normal_form(a + gx * u, ideal) == nf


def test_normal_form_fixes_constant_and_kills_generators():
    ideal = ideal_of(3, 4, "x^2")
    a = parse_poly("2 + x + x^2", 3, 4)
    assert normal_form(a, ideal) == parse_poly("2 + x", 3, 4)
    assert normal_form(parse_poly("x^2", 3, 4), ideal).is_zero
    assert normal_form(parse_poly("2x^2y", 3, 4), ideal).is_zero


def test_normal_form_requires_matching_context():
    ideal = ideal_of(2, 4, "xy")
    with pytest.raises(ValueError):
        normal_form(variable("x", 2, 5), ideal)
    with pytest.raises(ValueError):
        normal_form(variable("x", 3, 4), ideal)


def test_nilpotency_bounds():
    x = variable("x", 2, 5)
    y = variable("y", 2, 5)
    empty = GradedIdeal(2, 5, [])
    assert nilpotency_bound(x, empty) == 6  # x^6 = 0 only past the cap
    square = ideal_of(2, 5, "x^2")
    assert nilpotency_bound(x, square) == 2
    assert nilpotency_bound(y, square) == 6
    assert nilpotency_bound(zero(2, 5), empty) == 1
    # a unit never becomes nilpotent: the window reports no certificate
    assert nilpotency_bound(one(2, 5) + x, empty) is NOT_CERTIFIED


def test_hilbert_table_accessors_and_csv():
    table = quotient_dimensions(ideal_of(2, 3, "xy + yx"))
    assert table.dimension(2) == 3
    assert table.ideal_rank(3) == 4
    with pytest.raises(ValueError):
        table.dimension(0)
    with pytest.raises(ValueError):
        table.dimension(4)
    assert table.to_csv() == "n,dim,ideal_rank\n1,2,0\n2,3,1\n3,4,4\n"
    payload = table.to_json_dict()
    assert payload["p"] == 2 and payload["cap"] == 3
    assert payload["rows"][1] == {"n": 2, "dim": 3, "ideal_rank": 1}


def test_hilbert_table_is_plain_data():
    table = HilbertTable(2, 2, (2, 3))
    assert table.ideal_rank(2) == 1


def test_generators_json_round_trip():
    ideal = ideal_of(3, 4, "x^2", "xy + 2yx")
    data = generators_to_json(ideal)
    assert data == [[2, "x^2"], [2, "xy + 2yx"]]
    back = ideal_from_json(3, 4, data)
    assert generators_to_json(back) == data
    assert quotient_dimensions(back).dims == quotient_dimensions(ideal).dims
