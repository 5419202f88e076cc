"""Parabolically induced highest-weight modules over loop superalgebras.

The short grading g = g(-1) + g(0) + g(+1) of the base superalgebra
lifts to the loop algebra g (x) A/I.  Starting from one dominant weight
per evaluation point (acting through the semisimple part of g(0)) and a
scalar functional on the central line of g(0) tensored with A/I, this
module builds:

* ``build_W`` -- the seed module for the nonnegative half: the
  semisimple part acts by evaluation at the distinct roots, the central
  direction acts by the scalar functional, the raising odd half by zero;
* ``build_M`` -- the induced module on the exterior algebra of the
  lowering odd half tensored with the seed, with the action computed by
  straightening words past the wedge factors;
* ``irreducible_quotient`` -- the quotient by the trace-form radical of
  the action algebra, certified irreducible;
* ``maximal_submodule`` -- an independent oracle for the same quotient:
  the largest invariant subspace avoiding the highest-weight coordinate
  (exactly the set of vectors whose cyclic closure misses the
  highest-weight line);
* ``is_evaluation`` -- whether a module is killed by the image of a
  smaller cofinite ideal, the criterion separating evaluation modules
  from the rest;
* ``classify`` -- recovery of the weight data and the scalar functional
  from an abstract irreducible module, with an explicit intertwiner to
  the rebuilt standard module.

Everything is exact over the rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import CofiniteIdeal, EvaluationGrid, QuotientAlgebra, loop_algebra
from .linalg import (
    Mat,
    Subspace,
    algebra_span,
    closure_under,
    closure_with_paths,
    invert,
    kernel_basis,
    restrict_to_subspace,
    stack_rows,
)
from .modp import certify_burnside_full
from .realizations import MatrixRealization
from .representations import (
    PsiFunctional,
    Representation,
    SemisimplePart,
    evaluation_module,
    irreducible_hw_module,
    semisimple_part,
)
from .scalars import QQ, ZERO, qq
from .superalgebra import ODD, LieSuperalgebra

__all__ = [
    "LambdaFunctional",
    "InducedModule",
    "Classification",
    "ClassificationError",
    "VerificationError",
    "build_W",
    "build_M",
    "build_V",
    "irreducible_quotient",
    "maximal_submodule",
    "is_evaluation",
    "evaluation_obstruction",
    "classify",
]

ONE = QQ(1)


class VerificationError(RuntimeError):
    """A structural property that should hold by construction failed."""


class ClassificationError(ValueError):
    """The input module violates a precondition of classification."""


# ---------------------------------------------------------------------------
# the scalar functional on the central line


class LambdaFunctional:
    """Linear functional on (central direction) (x) A/I, stored by its
    values on the monomial box basis of the quotient.

    Modeling the functional directly on A/I makes it kill the central
    line tensored with the ideal automatically; its values on the box
    basis are otherwise unconstrained.
    """

    def __init__(self, quotient: QuotientAlgebra, values):
        self.quotient = quotient
        values = [qq(v) for v in values]
        if len(values) != quotient.dim:
            raise ValueError(
                f"need {quotient.dim} values (one per box monomial), got {len(values)}"
            )
        self.values = tuple(values)

    @classmethod
    def zero(cls, quotient: QuotientAlgebra) -> "LambdaFunctional":
        return cls(quotient, [ZERO] * quotient.dim)

    def value_on_vector(self, v: dict):
        total = ZERO
        for k, c in v.items():
            total += c * self.values[k]
        return total

    def value_on_exponent(self, e):
        return self.value_on_vector(self.quotient.nf_exponent(e))

    def value_on_poly(self, p):
        return self.value_on_vector(self.quotient.reduce_poly(p))

    def is_zero(self) -> bool:
        return all(not v for v in self.values)

    def annihilates(self, sub_ideal: CofiniteIdeal) -> bool:
        """Whether the functional kills the image of the ideal in A/I."""
        return all(
            not self.value_on_vector(vec)
            for _, vec in _ideal_image_spanners(self.quotient, sub_ideal)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LambdaFunctional)
            and self.quotient.ideal == other.quotient.ideal
            and self.values == other.values
        )

    def __repr__(self):
        return f"LambdaFunctional({self.values})"


def _ideal_image_spanners(quotient: QuotientAlgebra, sub_ideal: CofiniteIdeal):
    """Spanning vectors of the image of an ideal inside A/I: every box
    monomial times every generator, labeled ((variable, monomial), vec)."""
    if sub_ideal.d != quotient.d:
        raise ValueError("variable count mismatch between the ideal and the quotient")
    out = []
    for j in range(quotient.d):
        gen = quotient.reduce_poly(sub_ideal.generator_poly(j))
        for k in range(quotient.dim):
            vec = quotient.multiply({k: ONE}, gen)
            if vec:
                out.append(((j, k), vec))
    return out


# ---------------------------------------------------------------------------
# small helpers


def _as_ss(g) -> SemisimplePart:
    if isinstance(g, SemisimplePart):
        return g
    if isinstance(g, MatrixRealization):
        cached = getattr(g, "_semisimple_part", None)
        if cached is None:
            cached = semisimple_part(g.algebra, g)
            g._semisimple_part = cached
        return cached
    raise TypeError("expected a MatrixRealization or a SemisimplePart")


def _acc(out: dict, key, val):
    s = out.get(key, ZERO) + val
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _burnside_full(mats, dim: int) -> bool:
    """Exact answer to 'do these matrices generate the full matrix
    algebra' -- modular certificate first, exact span on failure."""
    if dim == 0:
        return False
    if certify_burnside_full(mats):
        return True
    return algebra_span(mats).dim == dim * dim


# ---------------------------------------------------------------------------
# the seed module of the nonnegative half


def build_W(g, grid_prime: EvaluationGrid, weights, lam, ideal: CofiniteIdeal,
            check: bool = True) -> Representation:
    """Seed module for the nonnegative half of the loop superalgebra.

    ``g`` is a MatrixRealization (or its SemisimplePart); ``grid_prime``
    must be the evaluation grid of the squarefree companion of
    ``ideal``; ``weights`` is one dominant fundamental weight per grid
    point (or a PsiFunctional); ``lam`` gives the scalars for the
    central direction on the box basis of A/I (a LambdaFunctional, a
    list of values, or None for zero).

    The result is a module over the subalgebra of the loop spanned by
    the degree-0 and degree-(+1) parts: the semisimple part acts through
    evaluation at the grid (the action factors through the squarefree
    quotient), the central direction z (x) t^e acts by the scalar
    functional, and the degree-(+1) part acts by zero.  The module law
    is checked exhaustively on all basis pairs.
    """
    ss = _as_ss(g)
    galg = ss.parent
    if galg.zdeg is None:
        raise ValueError("the base superalgebra carries no short grading")
    if grid_prime.ideal != ideal.squarefree():
        raise ValueError("the grid must come from the squarefree companion of the ideal")
    zi = ss.split.z_index
    if zi is None:
        raise ValueError("the center of the even part is not a basis direction")
    if set(galg.even_indices) != set(ss.indices) | {zi}:
        raise ValueError("even part does not split into the derived part plus the central line")

    quotient = QuotientAlgebra(ideal)
    if lam is None:
        lam = LambdaFunctional.zero(quotient)
    elif isinstance(lam, LambdaFunctional):
        if lam.quotient.ideal != ideal:
            raise ValueError("scalar functional is modeled on a different quotient")
        lam = LambdaFunctional(quotient, lam.values)
    else:
        lam = LambdaFunctional(quotient, list(lam))
    if isinstance(weights, PsiFunctional):
        if list(weights.grid.points) != list(grid_prime.points):
            raise ValueError("weight functional lives on a different grid")
        weight_list = list(weights.weight_list)
    else:
        weight_list = [tuple(int(x) for x in w) for w in weights]
    psi = PsiFunctional(ss, weight_list, grid_prime)

    slots = [irreducible_hw_module(ss, w) for w in psi.weight_list]
    dims = [r.dim for r in slots]
    dim_w = 1
    for dd in dims:
        dim_w *= dd
    strides = [1] * len(dims)
    for j in range(len(dims) - 2, -1, -1):
        strides[j] = strides[j + 1] * dims[j + 1]

    # evaluation action of the semisimple loop over the squarefree model
    ev = evaluation_module(ss, slots, grid_prime)
    q_prime = ev.meta["quotient"]
    dss = ss.algebra.dim
    ss_pos = {orig: a for a, orig in enumerate(ss.indices)}

    loop = loop_algebra(galg, quotient)
    dg = galg.dim
    nonneg = tuple(a for a in range(loop.dim) if loop.zdeg[a] >= 0)
    algebra = loop.restricted(
        nonneg,
        cartan=loop.cartan,
        pos=tuple(a for a in loop.pos if loop.zdeg[a] >= 0),
        neg=tuple(a for a in loop.neg if loop.zdeg[a] >= 0),
        meta={"name": f"{galg.meta.get('name', 'g')}(x)A/I, degrees >= 0"},
    )

    action = []
    for alpha in nonneg:
        k, i = divmod(alpha, dg)
        if galg.zdeg[i] > 0:
            action.append(Mat.zero(dim_w, dim_w))
        elif i == zi:
            c = lam.values[k]
            action.append(Mat(dim_w, dim_w, {(b, b): c for b in range(dim_w)} if c else None))
        else:
            red = q_prime.nf_exponent(quotient.basis[k])
            ent: dict = {}
            for kk, c in red.items():
                for r_, c_, x in ev.action[kk * dss + ss_pos[i]].entries():
                    _acc(ent, (r_, c_), c * x)
            action.append(Mat(dim_w, dim_w, ent))

    # diagonal data: weights along the loop Cartan, parity from the slots
    evals = [
        [grid_prime.eval_monomial(e, j) for j in range(grid_prime.size)]
        for e in quotient.basis
    ]
    h_pos = {gi: l for l, gi in enumerate(ss.split.h_ss)}
    basis = list(itertools.product(*(range(dd) for dd in dims)))
    weights_out = []
    for b in basis:
        row = []
        for k in range(quotient.dim):
            for gi in galg.cartan:
                if gi == zi:
                    row.append(lam.values[k])
                else:
                    l = h_pos[gi]
                    row.append(
                        sum(
                            (evals[k][j] * slots[j].weights[b[j]][l]
                             for j in range(grid_prime.size)),
                            ZERO,
                        )
                    )
        weights_out.append(tuple(row))
    parity = tuple(
        sum(slots[j].parity[b[j]] for j in range(len(dims))) % 2 for b in basis
    )

    # the product of the slot highest-weight vectors
    slot_hw = []
    for rep in slots:
        hc = rep.meta.get("hw_coord")
        if hc is None:
            slot_hw.append({0: ONE})
        else:
            slot_hw.append({i: c for i, c in enumerate(hc) if c})
    hw: dict = {}
    for combo in itertools.product(*(list(s.items()) for s in slot_hw)):
        idx = sum(strides[j] * bi for j, (bi, _) in enumerate(combo))
        cval = ONE
        for _, c in combo:
            cval = cval * c
        hw[idx] = cval

    out = Representation(
        algebra,
        action,
        parity=parity,
        weights=tuple(weights_out),
        meta={
            "name": "W",
            "loop": loop,
            "loop_indices": nonneg,
            "psi": psi,
            "lam": lam,
            "ideal": ideal,
            "quotient": quotient,
            "grid_prime": grid_prime,
            "ss": ss,
            "real": ss.parent_real,
            "hw_coord": hw,
            "slots": slots,
        },
    )
    if check:
        failures = out.check_axiom()
        if failures:
            raise VerificationError(
                f"seed module law fails on the nonnegative half: {failures[:5]}"
            )
    return out


# ---------------------------------------------------------------------------
# the induced module


@dataclass
class InducedModule:
    """The induced module on (exterior algebra of the lowering odd half)
    tensored with the seed module.

    Basis index layout: wedge bitmask (over ``dminus_basis`` order)
    times the seed dimension plus the seed index.  ``rep`` is the module
    over the full loop algebra; ``hw_vector`` is the vacuum wedge
    tensored with the seed's highest-weight vector.
    """

    W: Representation
    rep: Representation
    loop: LieSuperalgebra
    dminus_basis: tuple
    hw_vector: dict
    psi: PsiFunctional
    lam: LambdaFunctional
    ideal: CofiniteIdeal
    quotient: QuotientAlgebra
    grid_prime: EvaluationGrid
    ss: SemisimplePart
    real: MatrixRealization

    @property
    def r(self) -> int:
        return len(self.dminus_basis)

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def action(self):
        return self.rep.action

    def basis_label(self, idx: int):
        """(tuple of wedge positions, seed index) of a basis vector."""
        mask, w = divmod(idx, self.W.dim)
        bits = tuple(p for p in range(self.r) if mask >> p & 1)
        return bits, w

    @property
    def M_basis(self):
        return tuple(self.basis_label(i) for i in range(self.dim))

    def __repr__(self):
        return f"InducedModule(dim={self.dim}, r={self.r}, seed_dim={self.W.dim})"


def build_M(W: Representation, g=None, ideal: CofiniteIdeal = None,
            check: bool = True, max_dim: int = 8192) -> InducedModule:
    """Induce the seed module to the whole loop superalgebra.

    The module lives on the exterior algebra of the lowering odd half
    tensored with the seed.  The action of a loop basis element on a
    wedge monomial is computed by straightening: commuting the element
    past the leading wedge factor contributes the bracket (re-expressed
    through the grading split, with nonnegative parts absorbed into the
    seed action) plus the signed term where the element passes by.

    Verifies (when ``check``): the super module law on all basis pairs,
    annihilation of the highest-weight vector by the raising half,
    Cartan scalars on it matching the weight data, and its cyclicity.
    """
    meta = W.meta
    for key in ("loop", "quotient", "ss", "ideal"):
        if key not in meta:
            raise ValueError("seed module was not produced by build_W")
    loop, quotient, ss = meta["loop"], meta["quotient"], meta["ss"]
    if g is not None:
        galg = g.algebra if isinstance(g, MatrixRealization) else (
            g.parent if isinstance(g, SemisimplePart) else g)
        if galg is not ss.parent:
            raise ValueError("seed module was built from a different algebra")
    if ideal is not None and ideal != meta["ideal"]:
        raise ValueError("seed module was built from a different ideal")
    galg = ss.parent
    dg = galg.dim

    dminus = tuple(a for a in range(loop.dim) if loop.zdeg[a] < 0)
    r = len(dminus)
    dim_w = W.dim
    dim_m = (1 << r) * dim_w
    if dim_m > max_dim:
        raise ValueError(f"induced module dimension {dim_m} exceeds the cap {max_dim}")
    posn = {a: p for p, a in enumerate(dminus)}
    w_index = {a: t for t, a in enumerate(meta["loop_indices"])}

    cache: dict = {}

    def act_basis(alpha: int, mask: int, w: int) -> dict:
        key = (alpha, mask, w)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if mask == 0:
            if loop.zdeg[alpha] < 0:
                out = {(1 << posn[alpha]) * dim_w + w: ONE}
            else:
                out = dict(W.action[w_index[alpha]].col(w))
        else:
            low = (mask & -mask).bit_length() - 1
            rest = mask ^ (1 << low)
            out = {}
            # the element brackets with the leading wedge factor ...
            for beta, c in loop.bracket_basis(alpha, dminus[low]).items():
                if loop.zdeg[beta] < 0:
                    pb = posn[beta]
                    if not rest >> pb & 1:
                        below = bin(rest & ((1 << pb) - 1)).count("1")
                        _acc(out, ((rest | (1 << pb)) * dim_w + w), -c if below & 1 else c)
                else:
                    for key2, cc in act_basis(beta, rest, w).items():
                        _acc(out, key2, c * cc)
            # ... and passes it with a sign if odd
            flip = 1 if loop.parity[alpha] == ODD else 0
            for key2, cc in act_basis(alpha, rest, w).items():
                m2, w2 = divmod(key2, dim_w)
                if m2 >> low & 1:
                    continue
                below = bin(m2 & ((1 << low) - 1)).count("1")
                _acc(out, ((m2 | (1 << low)) * dim_w + w2), -cc if (below & 1) ^ flip else cc)
        cache[key] = out
        return out

    action = []
    for alpha in range(loop.dim):
        ent = {}
        for col in range(dim_m):
            mask, w = divmod(col, dim_w)
            for row, c in act_basis(alpha, mask, w).items():
                ent[(row, col)] = c
        action.append(Mat(dim_m, dim_m, ent))

    parity = tuple(
        (bin(col // dim_w).count("1") + W.parity[col % dim_w]) & 1
        for col in range(dim_m)
    )
    rep = Representation(
        loop,
        action,
        parity=parity,
        meta={"name": "M", "seed": W, "quotient": quotient, "ideal": meta["ideal"],
              "ss": ss, "real": meta["real"], "base": galg},
    )
    out = InducedModule(
        W=W,
        rep=rep,
        loop=loop,
        dminus_basis=dminus,
        hw_vector=dict(meta["hw_coord"]),
        psi=meta["psi"],
        lam=meta["lam"],
        ideal=meta["ideal"],
        quotient=quotient,
        grid_prime=meta["grid_prime"],
        ss=ss,
        real=meta["real"],
    )
    assert out.dim == (1 << r) * dim_w
    if check:
        failures = rep.check_axiom()
        if failures:
            raise VerificationError(
                f"induced module law fails on basis pairs: {failures[:5]}"
            )
        _verify_highest_weight(out)
        if closure_under(rep.action, [out.hw_vector]).dim != dim_m:
            raise VerificationError(
                "the highest-weight vector does not generate the induced module"
            )
    return out


def _verify_highest_weight(M: InducedModule):
    """The defining properties of the highest-weight vector: killed by
    the raising half, Cartan scalars given by the weight data."""
    galg = M.ss.parent
    dg = galg.dim
    v = M.hw_vector
    if not v:
        raise VerificationError("highest-weight vector is zero")
    for k in range(M.quotient.dim):
        for i in galg.pos:
            if M.rep.act(k * dg + i, v):
                raise VerificationError(
                    f"raising element (monomial {k}, basis {i}) does not kill the "
                    "highest-weight vector"
                )
    h_pos = {gi: l for l, gi in enumerate(M.ss.split.h_ss)}
    zi = M.ss.split.z_index
    for k, e in enumerate(M.quotient.basis):
        for gi in galg.cartan:
            got = M.rep.act(k * dg + gi, v)
            scalar = M.lam.values[k] if gi == zi else M.psi.value(h_pos[gi], e)
            want = {j: scalar * c for j, c in v.items()} if scalar else {}
            if got != want:
                raise VerificationError(
                    f"Cartan element (monomial {k}, basis {gi}) acts with the wrong "
                    "scalar on the highest-weight vector"
                )


# ---------------------------------------------------------------------------
# quotients


def _quotient_rep(rep: Representation, sub: Subspace, meta=None) -> Representation:
    """Quotient module on the coordinates complementary to the pivots of
    an invariant, parity-homogeneous subspace."""
    n = rep.dim
    for m in rep.action:
        for row in sub.basis:
            if not sub.contains(m.apply(row)):
                raise VerificationError("subspace is not invariant under the action")
    for row in sub.basis:
        if len({rep.parity[j] for j in row}) > 1:
            raise VerificationError("invariant subspace mixes parities")
    pivset = set(sub.pivot_cols)
    free = [j for j in range(n) if j not in pivset]
    fpos = {j: a for a, j in enumerate(free)}
    action = []
    for m in rep.action:
        ent = {}
        for a, j in enumerate(free):
            for i, c in sub.reduce(m.col(j)).items():
                ent[(fpos[i], a)] = c
        action.append(Mat(len(free), len(free), ent))
    out = Representation(
        rep.algebra,
        action,
        parity=tuple(rep.parity[j] for j in free),
        meta=meta,
    )
    out.meta["free_cols"] = tuple(free)
    return out


def _project_to_quotient(sub: Subspace, free_cols, v: dict) -> dict:
    fpos = {j: a for a, j in enumerate(free_cols)}
    return {fpos[i]: c for i, c in sub.reduce(v).items()}


def irreducible_quotient(M: InducedModule) -> Representation:
    """The quotient of the induced module by the radical of its action
    algebra -- its unique irreducible quotient.

    The radical is the kernel of the trace form (a, b) -> trace(ab) on
    the span of all words in the action matrices (exact, characteristic
    zero).  A modular certificate short-circuits the common case where
    the module is already irreducible.  The result is verified to pass
    the full-matrix-algebra test and to be generated by the image of the
    highest-weight vector.
    """
    rep = M.rep
    base_meta = {
        "name": "V",
        "psi": M.psi,
        "lam": M.lam,
        "ideal": M.ideal,
        "quotient": M.quotient,
        "grid_prime": M.grid_prime,
        "ss": M.ss,
        "real": M.real,
        "base": M.ss.parent,
        "induced_dim": M.dim,
    }
    if certify_burnside_full(rep.action):
        out = Representation(rep.algebra, rep.action, parity=rep.parity, meta=base_meta)
        out.meta["radical_dim"] = 0
        out.meta["annihilated_submodule"] = Subspace.zero(M.dim)
        out.meta["hw_vector"] = dict(M.hw_vector)
        return out

    span = algebra_span(rep.action)
    n = M.dim
    mats = [Mat.unflatten(row, n, n) for row in span.basis]
    b = len(mats)
    gram = {}
    for a in range(b):
        for c in range(a, b):
            x = mats[a].trace_product(mats[c])
            if x:
                gram[(a, c)] = x
                if a != c:
                    gram[(c, a)] = x
    radical_coeffs = kernel_basis(Mat(b, b, gram))
    cols = []
    for coeff in radical_coeffs.basis:
        colmap: dict = {}
        for a, c in coeff.items():
            for i, j, x in mats[a].entries():
                _acc(colmap.setdefault(j, {}), i, c * x)
        cols.extend(v for v in colmap.values() if v)
    killed = Subspace.span(n, cols)
    if killed.contains(M.hw_vector):
        raise VerificationError("radical submodule swallows the highest-weight vector")

    out = _quotient_rep(rep, killed, meta=base_meta)
    out.meta["radical_dim"] = radical_coeffs.dim
    out.meta["annihilated_submodule"] = killed
    hw = _project_to_quotient(killed, out.meta["free_cols"], M.hw_vector)
    out.meta["hw_vector"] = hw
    if not _burnside_full(out.action, out.dim):
        raise VerificationError("irreducible quotient failed the full-matrix-algebra test")
    if closure_under(out.action, [hw]).dim != out.dim:
        raise VerificationError("highest-weight image is not cyclic in the quotient")
    return out


def _membership_rows(sub: Subspace, n: int) -> Mat:
    """Rows whose kernel is exactly the subspace (one per free column)."""
    pivset = set(sub.pivot_cols)
    ent = {}
    rr = 0
    for j in range(n):
        if j in pivset:
            continue
        ent[(rr, j)] = ONE
        for p, row in zip(sub.pivot_cols, sub.basis):
            x = row.get(j)
            if x:
                ent[(rr, p)] = -x
        rr += 1
    return Mat(rr, n, ent)


def maximal_submodule(M: InducedModule) -> Subspace:
    """Independent oracle for the maximal proper submodule: the largest
    action-invariant subspace of the hyperplane complementary to the
    highest-weight coordinate.

    Because the constant-monomial Cartan operators act diagonally on the
    module basis and the highest-weight joint eigenvalue is multiplicity
    free (both verified here), a cyclic closure misses the
    highest-weight line exactly when it stays inside that hyperplane; so
    this subspace is precisely the set of vectors whose closure does not
    reach the highest-weight vector, and hence the unique maximal
    submodule.
    """
    rep = M.rep
    galg = M.ss.parent
    dg = galg.dim
    n = M.dim
    k0 = M.quotient.index[(0,) * M.quotient.d]
    diag_ops = [rep.action[k0 * dg + i] for i in galg.cartan]
    for m in diag_ops:
        for i, j, _ in m.entries():
            if i != j:
                raise ValueError(
                    "constant-monomial Cartan operators are not diagonal on this basis"
                )
    joint = [tuple(m[b, b] for m in diag_ops) for b in range(n)]
    support = list(M.hw_vector)
    if len(support) != 1:
        raise ValueError("highest-weight vector is not a single basis coordinate")
    bstar = support[0]
    if sum(1 for b in range(n) if joint[b] == joint[bstar]) != 1:
        raise ValueError("highest-weight joint eigenvalue is not multiplicity free")
    sub = kernel_basis(Mat(1, n, {(0, bstar): ONE}))
    while True:
        cons = _membership_rows(sub, n)
        stacked = stack_rows([cons] + [cons @ a for a in rep.action])
        new = kernel_basis(stacked)
        if new == sub:
            return sub
        sub = new


# ---------------------------------------------------------------------------
# the evaluation criterion


def evaluation_obstruction(V: Representation, sub_ideal: CofiniteIdeal,
                           quotient: QuotientAlgebra = None):
    """A witness that the image of the ideal acts nonzero, or None.

    The witness names the algebra basis element and the box monomial
    whose product with the ideal generator acts by a nonzero matrix.
    """
    if quotient is None:
        quotient = V.meta.get("quotient")
        if quotient is None:
            raise ValueError("pass the quotient explicitly; the module does not carry one")
    dg = V.algebra.meta.get("base_dim")
    if dg is None or V.algebra.dim != dg * quotient.dim:
        raise ValueError("module is not over the matching loop algebra")
    for (j, k), vec in _ideal_image_spanners(quotient, sub_ideal):
        for i in range(dg):
            m = None
            for kk, c in vec.items():
                part = V.action[kk * dg + i].scale(c)
                m = part if m is None else m + part
            if m is not None and not m.is_zero():
                return {"algebra_index": i, "variable": j, "monomial": quotient.basis[k]}
    return None


def is_evaluation(V: Representation, sub_ideal: CofiniteIdeal,
                  quotient: QuotientAlgebra = None) -> bool:
    """Whether the module is killed by the image of the given ideal --
    the exact criterion for factoring through evaluation at its roots."""
    return evaluation_obstruction(V, sub_ideal, quotient) is None


# ---------------------------------------------------------------------------
# classification


@dataclass
class Classification:
    """Recovered weight data, scalar functional, and an explicit
    invertible intertwiner from the input module to the rebuilt one."""

    psi: PsiFunctional
    lam: LambdaFunctional
    intertwiner: Mat
    rebuilt: Representation

    def __iter__(self):
        return iter((self.psi, self.lam, self.intertwiner))


def classify(V: Representation, real: MatrixRealization = None) -> Classification:
    """Recognize an irreducible loop module as a standard induced one.

    Finds the unique line killed by the raising half, reads the Cartan
    scalars on it, factors the semisimple scalars through evaluation at
    the root grid (recovering one dominant weight per point), reads the
    central scalars as the functional on the box basis, verifies that
    the closure of the line under the semisimple loop is irreducible,
    rebuilds the standard module from the recovered data, and returns an
    intertwiner fixed by matching highest-weight vectors and extended
    along the cyclic closure (verified to commute with every action
    matrix exactly).
    """
    if real is None:
        real = V.meta.get("real")
    if real is None:
        raise ValueError("pass the matrix realization; the module does not carry one")
    ss = _as_ss(real)
    galg = ss.parent
    quotient = V.meta.get("quotient")
    if quotient is None:
        raise ValueError("the module does not carry its coefficient quotient")
    ideal = quotient.ideal
    dg = galg.dim
    dq = quotient.dim
    if V.algebra.dim != dg * dq:
        raise ValueError("module algebra does not match the loop of the given realization")

    if not _burnside_full(V.action, V.dim):
        raise ClassificationError("input module is not irreducible")

    raising = [V.action[k * dg + i] for k in range(dq) for i in galg.pos]
    ker = kernel_basis(stack_rows(raising))
    if ker.dim == 0:
        raise ClassificationError("no highest-weight line: nothing is killed by the raising half")
    if ker.dim > 1:
        raise ClassificationError(
            f"highest-weight space has dimension {ker.dim}, expected a line"
        )
    v = dict(ker.basis[0])
    anchor = min(v)

    def scalar_of(mat: Mat):
        got = mat.apply(v)
        c = got.get(anchor, ZERO) / v[anchor]
        want = {i: c * x for i, x in v.items()} if c else {}
        if got != want:
            raise ClassificationError(
                "a Cartan loop element does not act by a scalar on the highest-weight line"
            )
        return c

    zi = ss.split.z_index
    lam = LambdaFunctional(quotient, [scalar_of(V.action[k * dg + zi]) for k in range(dq)])
    hss = ss.split.h_ss
    table = [[scalar_of(V.action[k * dg + gi]) for k in range(dq)] for gi in hss]

    # factor the semisimple scalars through evaluation at the root grid
    sf = ideal.squarefree()
    grid_p = EvaluationGrid(sf)
    q_sf = QuotientAlgebra(sf)
    npts = grid_p.size
    vand = Mat(
        npts,
        npts,
        {
            (row, j): grid_p.eval_monomial(e, j)
            for row, e in enumerate(q_sf.basis)
            for j in range(npts)
        },
    )
    vinv = invert(vand)
    if vinv is None:
        raise ClassificationError("evaluation grid is degenerate")
    mu = [[ZERO] * len(hss) for _ in range(npts)]
    for l in range(len(hss)):
        y = {
            row: table[l][quotient.index[e]]
            for row, e in enumerate(q_sf.basis)
            if table[l][quotient.index[e]]
        }
        for j, c in vinv.apply(y).items():
            mu[j][l] = c
    for l in range(len(hss)):
        for k, e in enumerate(quotient.basis):
            expect = sum((grid_p.eval_monomial(e, j) * mu[j][l] for j in range(npts)), ZERO)
            if expect != table[l][k]:
                raise ClassificationError(
                    "the Cartan functional does not factor through evaluation at the root grid"
                )
    weight_list = []
    for j in range(npts):
        coords = ss.values_to_fundamental(mu[j])
        ints = []
        for x in coords:
            if x < 0 or x.denominator != 1:
                raise ClassificationError(
                    f"recovered weight {tuple(coords)} at point {grid_p.points[j]} "
                    "is not dominant integral"
                )
            ints.append(int(x))
        weight_list.append(tuple(ints))
    psi = PsiFunctional(ss, weight_list, grid_p)

    # the closure of the line under the semisimple loop must be irreducible
    ss_mats = [V.action[k * dg + i] for k in range(dq) for i in ss.indices]
    closure = closure_under(ss_mats, [v])
    restricted = [restrict_to_subspace(m, closure) for m in ss_mats]
    if not _burnside_full(restricted, closure.dim):
        raise ClassificationError(
            "the semisimple-loop closure of the highest-weight vector is not irreducible"
        )

    rebuilt = build_V(ss, ideal, weight_list, lam)
    if rebuilt.dim != V.dim:
        raise ClassificationError(
            f"rebuilt module has dimension {rebuilt.dim}, input has {V.dim}"
        )

    # intertwiner: replay the cyclic closure of the line inside the rebuilt module
    paths = closure_with_paths(V.action, [v], V.dim)
    if paths.subspace.dim != V.dim:
        raise ClassificationError("highest-weight vector is not cyclic in the input module")
    images = [None] * len(paths.raw_basis)
    images[0] = dict(rebuilt.meta["hw_vector"])
    for idx in range(1, len(paths.raw_basis)):
        parent, mi = paths.parents[idx]
        images[idx] = rebuilt.action[mi].apply(images[parent])
    craw = Mat(V.dim, V.dim,
               {(i, k): c for k, vec in enumerate(paths.raw_basis) for i, c in vec.items()})
    cimg = Mat(V.dim, V.dim,
               {(i, k): c for k, vec in enumerate(images) for i, c in vec.items()})
    craw_inv = invert(craw)
    if craw_inv is None:
        raise ClassificationError("closure vectors of the input module are degenerate")
    iso = cimg @ craw_inv
    if invert(iso) is None:
        raise ClassificationError("intertwiner is singular")
    for a in range(V.algebra.dim):
        if iso @ V.action[a] != rebuilt.action[a] @ iso:
            raise ClassificationError("intertwiner fails to commute with the loop action")
    return Classification(psi=psi, lam=lam, intertwiner=iso, rebuilt=rebuilt)


# ---------------------------------------------------------------------------
# one-call construction


def build_V(g, ideal: CofiniteIdeal, weights, lam=None, check: bool = True,
            max_dim: int = 8192) -> Representation:
    """Build the irreducible induced module in one call: seed module,
    induction, irreducible quotient."""
    ss = _as_ss(g)
    grid_p = EvaluationGrid(ideal.squarefree())
    seed = build_W(ss, grid_p, weights, lam, ideal, check=check)
    produced = build_M(seed, check=check, max_dim=max_dim)
    return irreducible_quotient(produced)
