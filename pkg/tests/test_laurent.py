"""Laurent coefficients: polynomials, cofinite ideals, finite quotients,
evaluation grids, loop algebras, and the evaluation map."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superloop.laurent import (
    CofiniteIdeal,
    EvaluationGrid,
    LaurentPoly,
    QuotientAlgebra,
    check_lemma22,
    loop_algebra,
    loop_index,
    reduce,
)
from superloop.linalg import Mat
from superloop.scalars import QQ, qq
from superloop.superalgebra import from_matrices


def ideal_1var(*pairs):
    return CofiniteIdeal([list(pairs)])


# -- Laurent polynomials -------------------------------------------------------


def test_poly_arithmetic_frozen():
    t = LaurentPoly.variable(1, 0)
    p = (t + LaurentPoly.one(1)) * (t - LaurentPoly.one(1))
    assert p == t * t - LaurentPoly.one(1)
    assert p.evaluate((3,)) == 8


def test_poly_negative_exponents():
    tinv = LaurentPoly.variable(1, 0, power=-1)
    t = LaurentPoly.variable(1, 0)
    assert (t * tinv) == LaurentPoly.one(1)
    assert tinv.evaluate((QQ(2),)) == qq("1/2")


coef = st.integers(min_value=-4, max_value=4)
expo = st.integers(min_value=-3, max_value=3)


@st.composite
def polys(draw, d=1):
    n = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n):
        e = tuple(draw(expo) for _ in range(d))
        terms[e] = terms.get(e, 0) + draw(coef)
    return LaurentPoly(d, {e: c for e, c in terms.items() if c})


@settings(max_examples=50, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)


@settings(max_examples=50, deadline=None)
@given(polys(), polys())
def test_evaluation_is_homomorphism(p, q):
    point = (QQ(3) / QQ(2),)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


# -- cofinite ideals -----------------------------------------------------------


def test_ideal_basic_data():
    ideal = CofiniteIdeal([[(1, 2), (2, 1)], [(-1, 1)]])
    assert ideal.d == 2
    assert ideal.degree(0) == 3 and ideal.degree(1) == 1
    assert ideal.quotient_dim == 3
    sf = ideal.squarefree()
    assert sf.degree(0) == 2 and sf.quotient_dim == 2
    assert sf.squarefree() == sf
    bigger = ideal.enlarged()
    assert bigger.degree(0) == 5 and bigger.degree(1) == 2


def test_ideal_validation():
    with pytest.raises(ValueError):
        CofiniteIdeal([[(0, 1)]])  # zero root
    with pytest.raises(ValueError):
        CofiniteIdeal([[(1, 0)]])  # nonpositive multiplicity
    with pytest.raises(ValueError):
        CofiniteIdeal([[(1, 1), (1, 2)]])  # repeated root
    with pytest.raises(ValueError):
        CofiniteIdeal([[]])  # no roots: not cofinite


def test_generator_vanishes_at_roots():
    ideal = CofiniteIdeal([[(1, 2), (3, 1)]])
    gen = ideal.generator_poly(0)
    for root in (1, 3):
        assert gen.evaluate((QQ(root),)) == 0
    assert gen.evaluate((QQ(2),)) != 0
    sf = ideal.squarefree_poly(0)
    assert sf.evaluate((QQ(1),)) == 0 and sf.evaluate((QQ(3),)) == 0


def test_is_squarefree_flag():
    assert ideal_1var((1, 1), (2, 1)).is_squarefree
    assert not ideal_1var((1, 2)).is_squarefree


# -- quotient algebras -----------------------------------------------------------


@pytest.mark.parametrize(
    "ideal",
    [
        ideal_1var((1, 2)),
        ideal_1var((1, 1), (2, 1), (-1, 1)),
        CofiniteIdeal([[(1, 2)], [(2, 1), (-1, 1)]]),
    ],
)
def test_quotient_ring_axioms(ideal):
    q = QuotientAlgebra(ideal)
    assert q.dim == ideal.quotient_dim
    assert q.check_ring_axioms()


def test_normal_form_frozen_double_root():
    q = QuotientAlgebra(ideal_1var((1, 2)))  # basis {1, t}
    # t^2 = 2t - 1, t^3 = 3t - 2, t^{-1} = 2 - t  modulo (t-1)^2
    assert q.nf_exponent((2,)) == {0: -1, 1: 2}
    assert q.nf_exponent((3,)) == {0: -2, 1: 3}
    assert q.nf_exponent((-1,)) == {0: 2, 1: -1}
    assert q.t_inverse(0) == {0: 2, 1: -1}


def test_inverse_monomial_is_unit():
    q = QuotientAlgebra(ideal_1var((1, 2), (3, 1)))
    t = q.nf_exponent((1,))
    assert q.multiply(t, q.t_inverse(0)) == q.unit


@settings(max_examples=40, deadline=None)
@given(polys())
def test_reduction_preserves_values_at_simple_roots(p):
    ideal = ideal_1var((1, 1), (2, 1))
    q = QuotientAlgebra(ideal)
    image = reduce(p, q)
    for root in (QQ(1), QQ(2)):
        assert q.evaluate_vector(image, (root,)) == p.evaluate((root,))


def test_reduction_of_generator_is_zero():
    ideal = ideal_1var((1, 2), (2, 1))
    q = QuotientAlgebra(ideal)
    assert not q.reduce_poly(ideal.generator_poly(0))
    assert q.reduce_poly(ideal.squarefree_poly(0))  # squarefree part is not in the ideal


# -- evaluation grids ------------------------------------------------------------


def test_grid_points_and_values():
    ideal = CofiniteIdeal([[(1, 1), (2, 1)], [(-1, 1)]])
    grid = EvaluationGrid(ideal)
    assert grid.size == 2
    assert list(grid.points) == [(1, -1), (2, -1)]
    # value of t1^a t2^b at the second point, including negative powers
    assert grid.eval_monomial((1, 1), 1) == -2
    assert grid.eval_monomial((-1, 2), 1) == qq("1/2")


# -- loop algebras ---------------------------------------------------------------


@pytest.fixture(scope="module")
def sl2():
    e = Mat.from_rows([[0, 1], [0, 0]])
    h = Mat.from_rows([[1, 0], [0, -1]])
    f = Mat.from_rows([[0, 0], [1, 0]])
    return from_matrices(
        [e, h, f], parity=(0, 0, 0), cartan=(1,), pos=(0,), neg=(2,),
        meta={"name": "sl(2)"},
    )


def test_loop_algebra_layout(sl2):
    q = QuotientAlgebra(ideal_1var((1, 2)))
    loop = loop_algebra(sl2, q)
    assert loop.dim == sl2.dim * q.dim
    assert loop.meta["base_dim"] == sl2.dim
    # parity and grading lift monomial-wise
    for k in range(q.dim):
        for i in range(sl2.dim):
            a = loop_index(sl2, k, i)
            assert a == k * sl2.dim + i
            assert loop.parity[a] == sl2.parity[i]
    assert len(loop.cartan) == q.dim * len(sl2.cartan)


def test_loop_bracket_multiplies_coefficients(sl2):
    q = QuotientAlgebra(ideal_1var((1, 2)))  # t^2 = 2t - 1
    loop = loop_algebra(sl2, q)
    e_t = loop_index(sl2, 1, 0)
    f_t = loop_index(sl2, 1, 2)
    # [e (x) t, f (x) t] = h (x) t^2 = h (x) (2t - 1)
    h0 = loop_index(sl2, 0, 1)
    h1 = loop_index(sl2, 1, 1)
    assert loop.bracket_basis(e_t, f_t) == {h0: -1, h1: 2}
    assert loop.check_axioms().ok


def test_evaluation_map_properties(sl2):
    ideal = ideal_1var((1, 1), (2, 1))
    report = check_lemma22(sl2, EvaluationGrid(ideal))
    assert report.ok
    assert report.rank == report.expected_rank == 2 * sl2.dim
    assert report.kernel_dim == report.expected_kernel_dim
    assert report.bracket_compatible


def test_evaluation_map_two_variables(sl2):
    ideal = CofiniteIdeal([[(1, 1), (2, 1)], [(-1, 1)]])
    report = check_lemma22(sl2, EvaluationGrid(ideal))
    assert report.ok
    assert report.rank == 2 * sl2.dim
