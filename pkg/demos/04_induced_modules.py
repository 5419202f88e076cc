"""Induced highest-weight modules over the loop superalgebra.

The loop superalgebra inherits the short grading.  A seed module for
the nonnegative half -- semisimple part acting through evaluation,
center acting by a scalar functional on the box basis, positive half
acting by zero -- induces up to the whole loop superalgebra on the
exterior algebra of the odd lowering half.  The dimension obeys the
exact product formula dim M = 2^(dim g(-1) * dim A/I) * dim W, and the
irreducible quotient is computed two independent ways.
"""

from superloop import (
    CofiniteIdeal,
    EvaluationGrid,
    build_M,
    build_W,
    build_sl,
    irreducible_quotient,
    maximal_submodule,
)
from superloop.linalg import algebra_span_dim


def induce(label, ideal, weights, lam):
    _, real = build_sl(2, 1)
    W = build_W(real, EvaluationGrid(ideal.squarefree()), weights, lam, ideal)
    M = build_M(W)
    print(f"== {label} ==")
    print(f"seed dim {W.dim}; odd lowering directions r = {M.r}; "
          f"induced dim {M.dim} = 2^{M.r} * {W.dim}")
    print(f"highest-weight vector at basis index 0: {M.hw_vector == {0: 1}}")

    V = irreducible_quotient(M)
    oracle = maximal_submodule(M)
    print(f"irreducible quotient dim {V.dim} "
          f"(radical of the action algebra: dim {V.meta['radical_dim']})")
    print(f"trace-form radical quotient == largest-proper-submodule oracle: "
          f"{V.meta['annihilated_submodule'] == oracle}")
    span = algebra_span_dim(V.action)
    print(f"action algebra of the quotient spans {span} = {V.dim}^2 matrices: "
          f"{span == V.dim ** 2}\n")
    return M, V


if __name__ == "__main__":
    # one simple root: the quotient is a proper piece of the induced module
    induce(
        "one root t = 1, weight (1,), central scalar 1",
        CofiniteIdeal([[(1, 1)]]), [(1,)], [1],
    )
    # a double root with a scalar functional that does not kill the
    # squarefree ideal: the induced module is already irreducible
    induce(
        "double root t = 1, weight (0,), central scalars (0, 1)",
        CofiniteIdeal([[(1, 2)]]), [(0,)], [0, 1],
    )
    # two variables
    induce(
        "two variables, roots (1, -1), weight (1,), central scalar 1",
        CofiniteIdeal([[(1, 1)], [(-1, 1)]]), [(1,)], [1],
    )
