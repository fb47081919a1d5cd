"""Algebra construction, identity checking, and nilpotency invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizalg import catalog
from leibnizalg.core import (
    LeibnizError,
    NotNilpotentError,
    Subspace,
    abelian_algebra,
    algebra_from_products,
    bracket,
    center,
    characteristic_sequence,
    check_leibniz,
    classify_shape,
    direct_sum,
    jordan_type_nilpotent,
    left_annihilator,
    lower_central_series,
    natural_gradation,
    nilindex,
    right_annihilator,
    right_mult_operator,
    series_dims,
    squares_subspace,
)
from leibnizalg.linalg import Matrix, unit_vector, vec


def chain(n):
    # single bracket chain [e_i, e_1] = e_{i+1}
    return catalog.make("NF", n)


def test_products_round_trip():
    a = algebra_from_products(3, {(1, 1): {2: 1}, (2, 1): {3: 1}})
    assert sorted(a.products()) == [(1, 1, 2, Fraction(1)), (2, 1, 3, Fraction(1))]


def test_bad_product_raises_leibniz_error():
    # [e2,e2] = e1 on top of the chain breaks the identity
    with pytest.raises(LeibnizError) as exc:
        algebra_from_products(3, {(1, 1): {2: 1}, (2, 1): {3: 1}, (2, 2): {1: 1}})
    v = exc.value.violation
    assert (v.i, v.j, v.k) == (1, 1, 2)
    assert exc.value.total == 7


def test_check_leibniz_lists_every_violation():
    a = algebra_from_products(3, {(1, 1): {2: 1}, (2, 1): {3: 1}, (2, 2): {1: 1}},
                              check=False)
    violations = check_leibniz(a)
    assert len(violations) == 7
    assert all(v.defect != (0,) * 3 for v in violations)


def test_bracket_is_bilinear_on_chain():
    a = chain(4)
    x = vec([1, 2, 0, 0])
    y = vec([3, 0, 1, 0])
    left = bracket(a, x, y)
    parts = [bracket(a, unit_vector(4, 0), y), bracket(a, unit_vector(4, 1), y)]
    expect = tuple(p0 + 2 * p1 for p0, p1 in zip(*parts))
    assert left == expect


def test_chain_series_and_shape():
    a = chain(4)
    assert series_dims(a) == (4, 3, 2, 1, 0)
    assert nilindex(a) == 5
    assert classify_shape(a) == "null-filiform"
    assert center(a).dim == 1
    assert center(a).contains(unit_vector(4, 3))


def test_filiform_series_frozen():
    a = catalog.make("F1", 6)
    assert series_dims(a) == (6, 4, 3, 2, 1, 0)
    assert nilindex(a) == 6
    assert classify_shape(a) == "filiform"


def test_annihilators_on_filiform():
    a = catalog.make("F1", 6)
    assert left_annihilator(a).dim == 2
    assert right_annihilator(a).dim == 5
    assert squares_subspace(a).dim == 4


def test_abelian_and_direct_sum():
    a = direct_sum(chain(3), abelian_algebra(2))
    assert a.dim == 5
    assert series_dims(a) == (5, 2, 1, 0)
    assert center(a).dim == 3


def test_non_nilpotent_has_no_nilindex():
    # [e1,e2] = e1 keeps L^k = span(e1) forever
    a = algebra_from_products(2, {(1, 2): {1: 1}})
    assert nilindex(a) is None
    with pytest.raises(NotNilpotentError):
        classify_shape(a)
    with pytest.raises(NotNilpotentError):
        natural_gradation(a)


def test_right_mult_jordan_type():
    # R_{e1} on the dim-5 type-1 filiform: e1->e3->e4->e5, e2->e3
    a = catalog.make("F1", 5)
    op = right_mult_operator(a, unit_vector(5, 0))
    assert tuple(jordan_type_nilpotent(op).parts) == (4, 1)


def test_charseq_chain_is_exact():
    w = characteristic_sequence(chain(5))
    assert tuple(w.seq.parts) == (5,)
    assert w.exact


def test_charseq_filiform_frozen():
    w = characteristic_sequence(catalog.make("F1", 6))
    assert tuple(w.seq.parts) == (5, 1)
    assert w.exact
    # witness must realize the claimed sequence
    a = catalog.make("F1", 6)
    op = right_mult_operator(a, w.witness)
    assert tuple(jordan_type_nilpotent(op).parts) == (5, 1)


def test_gradation_of_filiform():
    g = natural_gradation(catalog.make("F1", 6))
    assert g.layer_dims == (2, 1, 1, 1, 1)
    assert not check_leibniz(g.algebra)
    assert series_dims(g.algebra) == (6, 4, 3, 2, 1, 0)
    # adapted basis columns must stay inside their own layer's term
    series = lower_central_series(catalog.make("F1", 6))
    for t in range(6):
        layer = g.layer_of(t)
        assert series[layer - 1].contains(g.adapted_basis.column(t))


def test_subspace_sum_and_reduce():
    s = Subspace.span(3, [vec([1, 0, 0])])
    t = Subspace.span(3, [vec([0, 1, 0])])
    u = s.sum(t)
    assert u.dim == 2
    assert u.reduce(vec([2, 3, 5])) == vec([0, 0, 5])
    assert u.contains_subspace(s)


small_coeff = st.integers(min_value=-2, max_value=2)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=6),
       st.lists(small_coeff, min_size=2, max_size=6),
       st.lists(small_coeff, min_size=2, max_size=6))
def test_chain_bracket_lands_in_derived(n, xs, ys):
    a = chain(n)
    x = vec((xs * n)[:n])
    y = vec((ys * n)[:n])
    sq = squares_subspace(a)
    assert sq.contains(bracket(a, x, y))


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2, max_value=7))
def test_chain_invariant_profile(n):
    a = chain(n)
    assert series_dims(a) == tuple(range(n, -1, -1))
    assert center(a).dim == 1
    assert nilindex(a) == n + 1
