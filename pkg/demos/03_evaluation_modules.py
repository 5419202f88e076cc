"""Finite-dimensional modules and evaluation at grid points.

The reductive even part of each superalgebra splits as a semisimple
part plus a one-dimensional center.  This demo builds irreducible
highest-weight modules of the semisimple part (checking dimensions
against the classical Weyl dimension formula), then pulls an outer
tensor product of such modules back along the evaluation map to get an
irreducible module of the loop algebra supported at several points.
"""

from superloop import (
    CofiniteIdeal,
    EvaluationGrid,
    build_C,
    build_sl,
    evaluation_module,
    highest_weight_vectors,
    irreducible_hw_module,
    is_irreducible,
    psi_of,
    semisimple_part,
    tensor,
)


def show_hw_modules():
    ss = semisimple_part(*build_C(3))
    print("== irreducible modules of sp(4), the semisimple part of the even part of C(3) ==")
    for lam in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
        rep = irreducible_hw_module(ss, lam)
        print(f"highest weight {lam}: dim {rep.dim}, module law holds: {rep.check_axiom() == []}")

    d = ss.fundamental_module(0, 1)
    square = tensor(d, d)
    hw = highest_weight_vectors(square)
    labels = ["(" + ",".join(str(v) for v in w) + ")" for w, _ in hw]
    print(
        f"\n4 (x) 4 = {square.dim}-dimensional, decomposes into "
        f"{len(hw)} irreducibles with highest weights {', '.join(labels)}"
    )
    print(f"the tensor square itself is irreducible: {is_irreducible(square)}\n")


def show_evaluation_modules():
    ss = semisimple_part(*build_sl(2, 1))
    ideal = CofiniteIdeal([[(1, 1), (2, 1)]])
    grid = EvaluationGrid(ideal)
    rep = evaluation_module(ss, [(1,), (2,)], grid)
    points = ", ".join("(" + ",".join(str(v) for v in p) + ")" for p in grid.points)
    print(f"== evaluation module over sl(2) at points {points} ==")
    print(f"slot weights (1,) and (2,): dim {rep.dim} = 2 x 3")
    print(f"module law over the loop algebra: {rep.check_axiom() == []}")
    print(f"irreducible: {is_irreducible(rep)}")
    print(f"highest-weight lines: {len(highest_weight_vectors(rep))}")

    psi = psi_of(ss, [(1,), (2,)], grid)
    print(f"\nthe induced Cartan functional, on h (x) 1: {psi.value(0, (0,))}")
    print(f"                              on h (x) t: {psi.value(0, (1,))}")
    padded = psi_of(ss, [(1,), (0,)], grid)
    tight = psi_of(ss, [(1,)], EvaluationGrid(CofiniteIdeal([[(1, 1)]])))
    print(f"zero weight slots drop out under normalization: {padded == tight}")


if __name__ == "__main__":
    show_hw_modules()
    show_evaluation_modules()
