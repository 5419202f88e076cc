"""Structure-constant core: bracket tables, axiom checking, gradings, roots.

Includes negative tests that corrupt a known-good table and assert the
checkers actually flag the corruption, so a vacuously-green checker
cannot pass.
"""

import pytest

from superloop.linalg import Mat
from superloop.scalars import QQ
from superloop.superalgebra import (
    LieSuperalgebra,
    NotDiagonalizableError,
    Root,
    from_matrices,
)

E = Mat.from_rows([[0, 1], [0, 0]])
H = Mat.from_rows([[1, 0], [0, -1]])
F = Mat.from_rows([[0, 0], [1, 0]])


@pytest.fixture(scope="module")
def sl2():
    return from_matrices([E, H, F], parity=(0, 0, 0), cartan=(1,), pos=(0,), neg=(2,))


def test_sl2_table_frozen(sl2):
    assert sl2.bracket_basis(1, 0) == {0: 2}
    assert sl2.bracket_basis(1, 2) == {2: -2}
    assert sl2.bracket_basis(0, 2) == {1: 1}
    assert sl2.bracket_basis(0, 0) == {}


def test_sl2_axioms(sl2):
    rep = sl2.check_axioms()
    assert rep.ok
    assert rep.triples_checked == 27


def test_bracket_extends_linearly(sl2):
    v = sl2.bracket({0: QQ(2)}, {2: QQ(3)})
    assert v == {1: 6}


def test_ad_matrix_frozen(sl2):
    ad_h = sl2.ad_matrix(1)
    assert ad_h == Mat.diagonal([2, 0, -2])


def test_root_decomposition_sl2(sl2):
    dec = sl2.root_decomposition()
    assert dec.root_multiset(parity=0) == [(-2,), (2,)]
    assert dec.root_multiset(parity=1) == []
    assert dec.zero_root_space.dim == 1


def test_restricted_subalgebra(sl2):
    borel = sl2.restricted((0, 1))
    assert borel.dim == 2
    assert borel.bracket_basis(1, 0) == {0: 2}  # [h, e] = 2e survives the remap
    with pytest.raises(ValueError):
        sl2.restricted((0, 2))  # {e, f} is not closed: [e,f] = h


def test_from_matrices_rejects_non_closed_span():
    with pytest.raises(ValueError):
        from_matrices([H, E + F], parity=(0, 0))


def test_corrupted_jacobi_is_detected(sl2):
    table = {k: dict(v) for k, v in sl2.bracket_table.items()}
    table[(1, 0)] = {0: QQ(1)}  # break [h,e] = 2e, keeping skew-symmetry
    table[(0, 1)] = {0: QQ(-1)}
    bad = LieSuperalgebra(dim=3, parity=(0, 0, 0), bracket_table=table)
    rep = bad.check_axioms()
    assert not rep.ok
    assert rep.jacobi_violations


def test_corrupted_skew_is_detected(sl2):
    table = {k: dict(v) for k, v in sl2.bracket_table.items()}
    table[(2, 0)] = {1: QQ(1)}  # should be -[e,f]
    bad = LieSuperalgebra(dim=3, parity=(0, 0, 0), bracket_table=table)
    rep = bad.check_axioms()
    assert not rep.ok
    assert rep.skew_violations


def test_grading_violation_is_detected():
    # mislabeling f as degree +1 makes [e, f] = h a degree-2 bracket
    g = from_matrices([E, H, F], parity=(0, 0, 0), zdeg=(1, 0, 1))
    rep = g.check_z_grading()
    assert not rep.ok
    assert not rep.plus_plus_zero
    assert rep.violations


def test_correct_grading_passes():
    g = from_matrices([E, H, F], parity=(0, 0, 0), zdeg=(1, 0, -1))
    rep = g.check_z_grading()
    assert rep.ok
    assert rep.pairs_checked == 9


def test_non_diagonalizable_cartan_raises():
    g = from_matrices([E, H, F], parity=(0, 0, 0), cartan=(0,))
    with pytest.raises(NotDiagonalizableError):
        g.root_decomposition()


def test_gl11_style_odd_brackets():
    e11 = Mat.from_rows([[1, 0], [0, 0]])
    e22 = Mat.from_rows([[0, 0], [0, 1]])
    g = from_matrices(
        [e11, e22, E, F], parity=(0, 0, 1, 1), cartan=(0, 1), pos=(2,), neg=(3,)
    )
    assert g.check_axioms().ok
    # anticommutator of the two odd elements is the full diagonal
    assert g.bracket_basis(2, 3) == {0: 1, 1: 1}
    assert g.bracket_basis(3, 2) == {0: 1, 1: 1}  # symmetric: both odd
    dec = g.root_decomposition()
    assert dec.root_multiset(parity=1) == [(-1, 1), (1, -1)]
    assert dec.zero_root_space.dim == 2


def test_root_arithmetic():
    a = Root((1, -1))
    assert (-a).values == (-1, 1)
    assert (a + a).values == (2, -2)
    assert not a.is_zero and Root((0, 0)).is_zero
