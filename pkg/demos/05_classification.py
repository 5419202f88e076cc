"""The evaluation criterion and round-trip classification.

Whether an irreducible induced module factors through evaluation at the
root grid is decided exactly by one linear condition: the central
scalar functional must kill the image of the squarefree ideal.  When it
does not, a concrete witness (an algebra element tensored with an ideal
element acting by a nonzero matrix) is produced.  Either way, classify
recovers the full defining data -- one dominant weight per point plus
the scalar functional -- from the bare action matrices, and certifies
the answer with an explicit invertible intertwiner.
"""

from superloop import (
    CofiniteIdeal,
    LambdaFunctional,
    QuotientAlgebra,
    build_V,
    build_sl,
    classify,
    evaluation_obstruction,
    is_evaluation,
)

IDEAL = CofiniteIdeal([[(1, 2)]])  # (t - 1)^2
SUB = IDEAL.squarefree()  # (t - 1)


def branch(lam_values):
    _, real = build_sl(2, 1)
    q = QuotientAlgebra(IDEAL)
    lam = LambdaFunctional(q, lam_values)
    V = build_V(real, IDEAL, [(1,)], lam=lam)
    on_ideal = lam.value_on_poly(SUB.generator_poly(0))
    print(f"== central scalars {lam_values} on the box basis (1, t) ==")
    print(f"value on z (x) (t-1): {on_ideal}")
    print(f"irreducible quotient dim {V.dim}")
    print(f"factors through evaluation at t = 1: {is_evaluation(V, SUB)}")
    witness = evaluation_obstruction(V, SUB)
    if witness is not None:
        print(f"obstruction witness: basis element {witness['algebra_index']} "
              f"(x) (t-1) * t^{witness['monomial'][0]} acts by a nonzero matrix")

    result = classify(V)
    psi, lam_back, iso = result
    support = ", ".join(
        f"weight {w} at point ({','.join(str(v) for v in p)})" for p, w in psi.normalized()
    )
    print(f"classify recovers {support}; scalars {[str(v) for v in lam_back.values]}")
    ok = all(
        iso @ V.action[a] == result.rebuilt.action[a] @ iso
        for a in range(V.algebra.dim)
    )
    print(f"intertwiner to the rebuilt module commutes with all "
          f"{V.algebra.dim} action matrices: {ok}\n")


if __name__ == "__main__":
    branch([0, 1])  # does not kill the ideal: honest non-evaluation module
    branch([1, 1])  # kills the ideal: evaluation module in disguise
