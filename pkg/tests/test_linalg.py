"""Sparse exact linear algebra, checked against sympy and internal identities."""

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from superloop.linalg import (
    Echelon,
    Mat,
    Subspace,
    algebra_span,
    closure_under,
    closure_with_paths,
    invert,
    kernel_basis,
    rank,
    restrict_to_subspace,
    rref,
    stack_rows,
)
from superloop.scalars import QQ, qq


def dense(m: Mat):
    return [[m[i, j] for j in range(m.ncols)] for i in range(m.nrows)]


# -- strategies --------------------------------------------------------------

dim = st.integers(min_value=1, max_value=5)
entry = st.integers(min_value=-5, max_value=5)


@st.composite
def matrices(draw, square=False):
    n = draw(dim)
    m = n if square else draw(dim)
    rows = draw(
        st.lists(st.lists(entry, min_size=m, max_size=m), min_size=n, max_size=n)
    )
    return Mat(n, m, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})


# -- frozen examples ---------------------------------------------------------


def test_matmul_frozen():
    a = Mat(2, 2, {(0, 0): 1, (0, 1): 2, (1, 0): 3, (1, 1): 4})
    b = Mat(2, 2, {(0, 0): 5, (0, 1): 6, (1, 0): 7, (1, 1): 8})
    assert dense(a @ b) == [[19, 22], [43, 50]]


def test_rref_frozen():
    m = Mat.from_rows([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    reduced, rk = rref(m)
    assert rk == 2 and rank(m) == 2
    assert dense(reduced)[:2] == [[1, 0, -1], [0, 1, 2]]


def test_kernel_frozen():
    m = Mat.from_rows([[1, 1, 1]])
    k = kernel_basis(m)
    assert k.dim == 2
    for v in k.basis:
        assert not m.apply(v)


def test_invert_frozen():
    m = Mat.from_rows([[2, 1], [1, 1]])
    inv = invert(m)
    assert dense(inv) == [[1, -1], [-1, 2]]
    assert invert(Mat.from_rows([[1, 2], [2, 4]])) is None


def test_flatten_round_trip():
    m = Mat(3, 4, {(0, 1): qq("3/2"), (2, 3): -5})
    assert Mat.unflatten(m.flatten(), 3, 4) == m


def test_echelon_insert_and_coords():
    e = Echelon(3)
    assert e.insert({0: QQ(1), 1: QQ(2)})
    assert e.insert({1: QQ(1)})
    assert not e.insert({0: QQ(2), 1: QQ(1)})  # dependent on the first two
    c = e.coords({0: QQ(3), 1: QQ(4)})
    assert c is not None


def test_stack_rows():
    a = Mat.from_rows([[1, 2]])
    b = Mat.from_rows([[3, 4], [5, 6]])
    s = stack_rows([a, b])
    assert dense(s) == [[1, 2], [3, 4], [5, 6]]


def test_restrict_to_subspace_raises_on_non_invariance():
    rot = Mat.from_rows([[0, -1], [1, 0]])
    line = Subspace.span(2, [{0: QQ(1)}])
    with pytest.raises(ValueError):
        restrict_to_subspace(rot, line)


def test_restrict_to_subspace_value():
    scale2 = Mat.from_rows([[2, 0], [0, 3]])
    line = Subspace.span(2, [{1: QQ(1)}])
    r = restrict_to_subspace(scale2, line)
    assert dense(r) == [[3]]


# -- properties against sympy ------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    sm = sympy.Matrix([[sympy.Rational(int(x.numerator), int(x.denominator)) for x in row] for row in dense(m)])
    assert rank(m) == sm.rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_kernel(m):
    k = kernel_basis(m)
    assert k.dim == m.ncols - rank(m)
    for v in k.basis:
        assert not m.apply(v)


@settings(max_examples=40, deadline=None)
@given(matrices(square=True))
def test_invert_behavior(m):
    inv = invert(m)
    if inv is None:
        assert rank(m) < m.nrows
    else:
        assert m @ inv == Mat.identity(m.nrows)
        assert inv @ m == Mat.identity(m.nrows)


@settings(max_examples=40, deadline=None)
@given(matrices(square=True), matrices(square=True))
def test_trace_product_is_trace_of_product(a, b):
    n = max(a.nrows, b.nrows)
    a = Mat(n, n, {(i, j): x for i, j, x in a.entries()})
    b = Mat(n, n, {(i, j): x for i, j, x in b.entries()})
    prod = a @ b
    assert a.trace_product(b) == sum((prod[i, i] for i in range(n)), QQ(0))


@settings(max_examples=40, deadline=None)
@given(matrices(square=True), matrices(square=True), matrices(square=True))
def test_matmul_associative(a, b, c):
    n = max(a.nrows, b.nrows, c.nrows)
    a, b, c = (
        Mat(n, n, {(i, j): x for i, j, x in m.entries()}) for m in (a, b, c)
    )
    assert (a @ b) @ c == a @ (b @ c)


# -- subspace lattice --------------------------------------------------------

vec_list = st.lists(st.lists(entry, min_size=4, max_size=4), min_size=0, max_size=4)


@settings(max_examples=60, deadline=None)
@given(vec_list, vec_list)
def test_subspace_dimension_formula(rows_u, rows_v):
    mk = lambda rows: Subspace.span(
        4, [{j: x for j, x in enumerate(r) if x} for r in rows]
    )
    u, v = mk(rows_u), mk(rows_v)
    s = u.sum(v)
    i = u.intersect(v)
    assert s.dim + i.dim == u.dim + v.dim
    assert s.contains_subspace(u) and s.contains_subspace(v)
    assert u.contains_subspace(i) and v.contains_subspace(i)


@settings(max_examples=40, deadline=None)
@given(vec_list)
def test_subspace_reduce_and_coords(rows):
    sub = Subspace.span(4, [{j: x for j, x in enumerate(r) if x} for r in rows])
    for r in rows:
        v = {j: qq(x) for j, x in enumerate(r) if x}
        assert sub.contains(v)
        assert not sub.reduce(v)
        coords = sub.coords(v)
        assert coords is not None
        rebuilt = sub.from_coords(coords)
        assert rebuilt == v


# -- spans and closures --------------------------------------------------------


def test_algebra_span_contains_identity_and_products():
    a = Mat.from_rows([[0, 1], [0, 0]])
    span = algebra_span([a])
    assert span.dim == 2  # identity and the nilpotent
    assert span.contains(Mat.identity(2).flatten())
    assert span.contains(a.flatten())


def test_algebra_span_full_for_irreducible_pair():
    e = Mat.from_rows([[0, 1], [0, 0]])
    f = Mat.from_rows([[0, 0], [1, 0]])
    assert algebra_span([e, f]).dim == 4


def test_closure_under_is_invariant():
    e = Mat.from_rows([[0, 1], [0, 0]])
    cl = closure_under([e], [{1: QQ(1)}])
    assert cl.dim == 2
    cl2 = closure_under([e], [{0: QQ(1)}])
    assert cl2.dim == 1


def test_closure_with_paths_replays():
    e = Mat.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    paths = closure_with_paths([e], [{2: QQ(1)}], 3)
    assert paths.subspace.dim == 3
    maps = [e]
    for idx in range(1, len(paths.raw_basis)):
        parent, mi = paths.parents[idx]
        assert paths.raw_basis[idx] == maps[mi].apply(paths.raw_basis[parent])
    assert paths.parents[0] is None
