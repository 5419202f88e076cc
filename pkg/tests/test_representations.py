"""Modules: tensor products, highest-weight theory for the semisimple
part, evaluation modules over the loop algebra, and weight functionals."""

import pytest

from superloop.laurent import CofiniteIdeal, EvaluationGrid, QuotientAlgebra
from superloop.representations import (
    PsiFunctional,
    Representation,
    defining_rep,
    evaluation_module,
    highest_weight_vectors,
    irreducible_hw_module,
    is_irreducible,
    psi_of,
    tensor,
    tensor_many,
    trivial_module,
)
from superloop.scalars import qq

from oracles import weyl_dim_type_a, weyl_dim_type_c


def grid_1var(*roots):
    return EvaluationGrid(CofiniteIdeal([[(r, 1) for r in roots]]))


# -- basic constructions ---------------------------------------------------------


def test_defining_rep_axioms(sl21):
    g, real = sl21
    rep = defining_rep(real)
    assert rep.dim == 3
    assert rep.check_axiom() == []
    assert rep.parity == (0, 0, 1)  # two even rows, one odd row


def test_trivial_module(sl21_ss):
    rep = trivial_module(sl21_ss.algebra)
    assert rep.dim == 1
    assert rep.check_axiom() == []
    assert all(not list(m.entries()) for m in rep.action)


def test_tensor_axioms_and_dim(sl21_ss):
    d = sl21_ss.factor_defining(0)
    t = tensor(d, d)
    assert t.dim == 4
    assert t.check_axiom() == []
    t3 = tensor_many([d, d, d])
    assert t3.dim == 8
    assert t3.check_axiom() == []


def test_check_axiom_detects_corruption(sl21_ss):
    d = sl21_ss.factor_defining(0)
    bad = Representation(
        d.algebra,
        [d.action[0].scale(qq(2))] + list(d.action[1:]),
        parity=d.parity,
        weights=d.weights,
    )
    assert bad.check_axiom() != []


def test_highest_weight_vectors_of_tensor_square(sl21_ss):
    d = sl21_ss.factor_defining(0)
    hw = highest_weight_vectors(tensor(d, d))
    # 2 (x) 2 = 3 (+) 1: one maximal vector per summand
    assert sorted(w for w, _ in hw) == [(0,), (2,)]


def test_highest_weight_vectors_needs_weights(sl21_ss):
    d = sl21_ss.factor_defining(0)
    stripped = Representation(d.algebra, d.action, parity=d.parity)
    with pytest.raises(ValueError):
        highest_weight_vectors(stripped)


# -- the semisimple part ---------------------------------------------------------


def test_factor_shapes(sl21_ss, sl31_ss, c3_ss):
    # the size-1 diagonal block survives as a rank-0 factor
    assert [(f.kind, f.size) for f in sl21_ss.factors] == [("A", 2), ("A", 1)]
    assert sl21_ss.rank == 1
    assert [(f.kind, f.size) for f in sl31_ss.factors] == [("A", 3), ("A", 1)]
    assert sl31_ss.rank == 2
    assert [(f.kind, f.size) for f in c3_ss.factors] == [("C", 2)]
    assert c3_ss.rank == 2


def test_fundamental_module_dims(sl21_ss, sl31_ss, c3_ss):
    assert sl21_ss.fundamental_module(0, 1).dim == 2
    assert sl31_ss.fundamental_module(0, 1).dim == 3
    assert sl31_ss.fundamental_module(0, 2).dim == 3
    assert c3_ss.fundamental_module(0, 1).dim == 4
    assert c3_ss.fundamental_module(0, 2).dim == 5


def test_fundamental_module_range(c3_ss):
    with pytest.raises(ValueError):
        c3_ss.fundamental_module(0, 3)


@pytest.mark.parametrize("k", range(5))
def test_hw_modules_rank_one(sl21_ss, k):
    rep = irreducible_hw_module(sl21_ss, (k,))
    assert rep.dim == k + 1
    assert rep.check_axiom() == []
    assert is_irreducible(rep)


def test_hw_module_adjoint_a2(sl31_ss):
    rep = irreducible_hw_module(sl31_ss, (1, 1))
    assert rep.dim == 8 == weyl_dim_type_a((1, 1))
    assert is_irreducible(rep)


def test_hw_module_c2(c3_ss):
    assert irreducible_hw_module(c3_ss, (1, 0)).dim == 4
    assert irreducible_hw_module(c3_ss, (0, 1)).dim == 5
    assert irreducible_hw_module(c3_ss, (2, 0)).dim == 10 == weyl_dim_type_c((2, 0))
    rep = irreducible_hw_module(c3_ss, (1, 1))
    assert rep.dim == 16 == weyl_dim_type_c((1, 1))
    assert is_irreducible(rep)


def test_hw_module_rejects_bad_weights(sl21_ss):
    with pytest.raises(ValueError):
        irreducible_hw_module(sl21_ss, (-1,))
    with pytest.raises(ValueError):
        irreducible_hw_module(sl21_ss, (1, 0))
    with pytest.raises(ValueError):
        irreducible_hw_module(sl21_ss, (100,))  # above the supported degree cap


def test_dominance_check(c3_ss):
    assert c3_ss.is_dominant_integral((1, 0))
    assert not c3_ss.is_dominant_integral((-1, 0))
    assert not c3_ss.is_dominant_integral((1,))
    assert not c3_ss.is_dominant_integral(("x", 0))


def test_tensor_square_is_reducible(sl21_ss):
    d = sl21_ss.factor_defining(0)
    assert is_irreducible(d)
    assert not is_irreducible(tensor(d, d))


def test_weight_coordinate_conversion(sl31_ss, c3_ss):
    # type A: fundamental coords equal Cartan values
    assert sl31_ss.fundamental_to_values((1, 2)) == (1, 2)
    assert sl31_ss.values_to_fundamental((1, 2)) == (1, 2)
    # type C: values are tail sums of fundamental coords
    assert c3_ss.fundamental_to_values((2, 1)) == (3, 1)
    assert c3_ss.values_to_fundamental((3, 1)) == (2, 1)
    for lam in [(0, 0), (1, 0), (0, 1), (2, 1), (1, 3)]:
        assert c3_ss.values_to_fundamental(c3_ss.fundamental_to_values(lam)) == lam


# -- evaluation modules ----------------------------------------------------------


def test_evaluation_module_dims_and_axioms(sl21_ss):
    rep = evaluation_module(sl21_ss, [(1,), (2,)], grid_1var(1, 2))
    assert rep.dim == 2 * 3
    assert rep.check_axiom() == []
    assert rep.meta["name"] == "evaluation"


def test_evaluation_module_single_point_matches_base(sl21_ss):
    """Over one point {1}, the constant monomial acts exactly as the
    slot module does."""
    rep = evaluation_module(sl21_ss, [(1,)], grid_1var(1))
    slot = rep.meta["slots"][0]
    assert rep.dim == 2
    assert len(rep.action) == sl21_ss.algebra.dim  # quotient basis is {1}
    for i in range(sl21_ss.algebra.dim):
        assert rep.action[i] == slot.action[i]


def test_evaluation_module_input_validation(sl21_ss):
    with pytest.raises(ValueError):
        evaluation_module(sl21_ss, [(1,)], grid_1var(1, 2))  # wrong slot count
    with pytest.raises(ValueError):
        evaluation_module(
            sl21_ss, [(1,)], EvaluationGrid(CofiniteIdeal([[(1, 2)]]))
        )  # non-squarefree ideal
    d = sl21_ss.factor_defining(0)
    with pytest.raises(ValueError):
        evaluation_module(sl21_ss.algebra, [(1,)], grid_1var(1))  # weight needs ss data
    rep = evaluation_module(sl21_ss.algebra, [d], grid_1var(1))
    assert rep.dim == 2  # explicit module over the plain algebra is fine


def test_evaluation_module_two_variables(sl21_ss):
    ideal = CofiniteIdeal([[(1, 1), (2, 1)], [(-1, 1)]])
    rep = evaluation_module(sl21_ss, [(1,), (1,)], EvaluationGrid(ideal))
    assert rep.dim == 4
    assert rep.check_axiom() == []


def test_evaluation_module_highest_weight_count(sl21_ss):
    """Distinct-point evaluation of irreducibles is irreducible, so the
    joint kernel of the raising operators is one-dimensional."""
    rep = evaluation_module(sl21_ss, [(1,), (2,)], grid_1var(1, 2))
    assert len(highest_weight_vectors(rep)) == 1
    assert is_irreducible(rep)


# -- weight functionals ----------------------------------------------------------


def test_psi_values_frozen(sl21_ss):
    psi = psi_of(sl21_ss, [(1,), (2,)], grid_1var(1, 2))
    # on h (x) 1: 1 + 2; on h (x) t: 1*1 + 2*2
    assert psi.value(0, (0,)) == 3
    assert psi.value(0, (1,)) == 5
    assert psi.value_on_element({0: qq(2)}, (0,)) == 6


def test_psi_table(sl21_ss):
    grid = grid_1var(1, 2)
    psi = psi_of(sl21_ss, [(1,), (2,)], grid)
    q = QuotientAlgebra(grid.ideal)
    tbl = psi.table(q)
    assert tbl == {(0, (0,)): 3, (0, (1,)): 5}


def test_psi_validation(sl21_ss):
    with pytest.raises(ValueError):
        psi_of(sl21_ss, [(1,)], grid_1var(1, 2))  # arity mismatch
    with pytest.raises(ValueError):
        psi_of(sl21_ss, [(-1,), (0,)], grid_1var(1, 2))  # not dominant


def test_psi_zero_and_normalization(sl21_ss):
    assert psi_of(sl21_ss, [(0,), (0,)], grid_1var(1, 2)).is_zero()
    padded = psi_of(sl21_ss, [(1,), (0,)], grid_1var(1, 2))
    tight = psi_of(sl21_ss, [(1,)], grid_1var(1))
    assert not padded.is_zero()
    assert padded.normalized() == tight.normalized()
    assert padded == tight


def test_psi_normalization_sorts_points(sl21_ss):
    psi = psi_of(sl21_ss, [(2,), (1,)], grid_1var(1, 2))
    pts = [p for p, _ in psi.normalized()]
    assert pts == sorted(pts)
