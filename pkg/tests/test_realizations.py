"""Matrix constructions of the two families: faithfulness of the
structure constants to the matrices, supertrace, center, triangular
decomposition, short grading, and the invariant form."""

import pytest

from superloop.linalg import Mat, rank
from superloop.realizations import (
    build_C,
    build_sl,
    center_split,
    killing_form,
    odd_bracket_center_witness,
    supertrace,
    triangular,
)
from superloop.scalars import QQ
from superloop.superalgebra import from_matrices

SL_CASES = [(m, n) for m in range(1, 6) for n in range(1, 6) if 3 <= m + n <= 6]
C_CASES = [3, 4]


def test_c_range_validation():
    with pytest.raises(ValueError):
        build_C(2)


def supercommutator(a, b, par_a, par_b):
    if par_a and par_b:
        return a @ b + b @ a
    return a @ b - b @ a


@pytest.mark.parametrize("m,n", SL_CASES)
def test_sl_family_structure(m, n):
    g, real = build_sl(m, n)
    assert g.dim == (m + n) ** 2 - 1
    assert real.split == (m, n)
    assert len(g.odd_indices) == 2 * m * n
    # every basis matrix is supertraceless
    for mat in real.matrices:
        assert supertrace(mat, real.split) == 0
    # the stored table is exactly the matrix supercommutator, re-expanded
    for i in range(g.dim):
        for j in range(g.dim):
            got = supercommutator(
                real.matrices[i], real.matrices[j], g.parity[i], g.parity[j]
            )
            want = Mat.zero(real.size, real.size)
            for k, c in g.bracket_basis(i, j).items():
                want = want + real.matrices[k].scale(c)
            assert got == want


@pytest.mark.parametrize("m", C_CASES)
def test_c_family_structure(m):
    g, real = build_C(m)
    even_dim = (2 * m - 2) * (2 * m - 1) // 2 + 1  # sp(2m-2) plus the center
    assert g.dim == even_dim + 4 * (m - 1)
    assert len(g.odd_indices) == 4 * (m - 1)
    assert g.check_axioms().ok
    for i in range(g.dim):
        for j in range(g.dim):
            got = supercommutator(
                real.matrices[i], real.matrices[j], g.parity[i], g.parity[j]
            )
            want = Mat.zero(real.size, real.size)
            for k, c in g.bracket_basis(i, j).items():
                want = want + real.matrices[k].scale(c)
            assert got == want


def test_supertrace_frozen():
    d = Mat.diagonal([1, 2, 3])
    assert supertrace(d, (1, 2)) == 1 - 5
    assert supertrace(d, (2, 1)) == 3 - 3
    with pytest.raises(ValueError):
        supertrace(d, (2, 2))


@pytest.mark.parametrize("builder,args", [(build_sl, (2, 1)), (build_sl, (3, 1)), (build_C, (3,))])
def test_center_split(builder, args):
    g, real = builder(*args)
    cs = center_split(g)
    # z commutes with everything even and is a genuine basis direction
    assert cs.z_index is not None
    for j in range(g.dim):
        bracket = g.bracket(cs.z, {j: QQ(1)})
        if g.parity[j] == 0:
            assert not bracket
    assert set(cs.ss_indices) | {cs.z_index} == set(g.even_indices)
    assert set(cs.h_ss) | {cs.z_index} == set(g.cartan)
    # the derived part is a subalgebra
    g.restricted(cs.ss_indices)


def test_z_acts_by_scalar_on_odd_layers(sl21, c3):
    for g, _ in (sl21, c3):
        cs = center_split(g)
        for j in g.odd_indices:
            bracket = g.bracket(cs.z, {j: QQ(1)})
            # [z, x] is proportional to x: same single index
            assert set(bracket) <= {j}


def test_triangular_partition(sl21):
    g, _ = sl21
    tri = triangular(g)
    pos, neg, cartan = tri if isinstance(tri, tuple) else (g.pos, g.neg, g.cartan)
    assert sorted(list(pos) + list(neg) + list(cartan)) == list(range(g.dim))


def test_short_grading_layers(sl21, c3):
    for (g, _), sizes in ((sl21, (2, 4, 2)), (c3, (4, 11, 4))):
        layers = {
            d: [i for i in range(g.dim) if g.zdeg[i] == d] for d in (-1, 0, 1)
        }
        assert tuple(len(layers[d]) for d in (-1, 0, 1)) == sizes
        assert all(g.parity[i] == 1 for i in layers[-1] + layers[1])
        assert g.check_z_grading().ok


def test_odd_bracket_center_witness(sl21, c3):
    for g, _ in (sl21, c3):
        i, j, v = odd_bracket_center_witness(g)
        assert g.parity[i] == 1 and g.parity[j] == 1
        assert v == g.bracket_basis(i, j)
        assert v[g.dim - 1] != 0


def test_witness_absent_without_central_component():
    e = Mat.from_rows([[0, 1], [0, 0]])
    h = Mat.from_rows([[1, 0], [0, -1]])
    f = Mat.from_rows([[0, 0], [1, 0]])
    g = from_matrices([e, h, f], parity=(0, 0, 0))
    with pytest.raises(ValueError):
        odd_bracket_center_witness(g)


def test_invariant_form_nondegenerate(sl21, c3):
    for g, _ in (sl21, c3):
        form = killing_form(g)
        assert rank(form) == g.dim
