"""Finite-dimensional modules: defining representations, super tensor
products, highest-weight extraction, cyclic irreducible modules over
the semisimple part, Burnside irreducibility, and evaluation modules
over loop algebras.

Weight conventions: a module's ``weights`` entry for a basis vector is
the tuple of eigenvalues of the acting algebra's Cartan basis, in that
algebra's Cartan order.  Dominant weights of the semisimple part are
given as tuples of non-negative integers in the fundamental-weight
basis, concatenated across factors; ``SemisimplePart`` owns the
conversion between the two descriptions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import EvaluationGrid, QuotientAlgebra, loop_algebra
from .linalg import (
    Mat,
    Subspace,
    algebra_span,
    closure_under,
    kernel_basis,
    restrict_to_subspace,
    stack_rows,
)
from .modp import certify_burnside_full
from .realizations import MatrixRealization, center_split
from .scalars import QQ, ZERO, qq
from .superalgebra import EVEN, ODD, LieSuperalgebra

__all__ = [
    "Representation",
    "SemisimplePart",
    "PsiFunctional",
    "defining_rep",
    "tensor",
    "highest_weight_vectors",
    "semisimple_part",
    "irreducible_hw_module",
    "trivial_module",
    "is_irreducible",
    "evaluation_module",
    "psi_of",
]

HW_DEGREE_CAP = 6


# ---------------------------------------------------------------------------
# representations


class Representation:
    """A module given by one action matrix per algebra basis element."""

    def __init__(self, algebra: LieSuperalgebra, action, parity=None, weights=None, meta=None):
        self.algebra = algebra
        self.action = list(action)
        if len(self.action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        self.dim = self.action[0].nrows if self.action else 0
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValueError("action matrices must be square of equal size")
        self.parity = tuple(parity) if parity is not None else (EVEN,) * self.dim
        self.weights = tuple(tuple(w) for w in weights) if weights is not None else None
        self.meta = dict(meta) if meta else {}

    def act(self, i: int, v: dict) -> dict:
        return self.action[i].apply(v)

    def act_element(self, x: dict, v: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            w = self.action[i].apply(v)
            for k, cc in w.items():
                s = out.get(k, ZERO) + c * cc
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def check_axiom(self):
        """Exhaustive super-commutator check over algebra basis pairs.

        Returns a list of failing pairs (empty = the representation law
        holds).  Also checks that odd operators flip module parity and
        that the Cartan basis acts diagonally with the stored weights.
        """
        g = self.algebra
        failures = []
        for i in range(g.dim):
            for j in range(g.dim):
                lhs = self.action[i] @ self.action[j]
                if g.parity[i] and g.parity[j]:
                    lhs = lhs + self.action[j] @ self.action[i]
                else:
                    lhs = lhs - self.action[j] @ self.action[i]
                rhs = Mat.zero(self.dim, self.dim)
                br = g.bracket_table.get((i, j))
                if br:
                    for k, c in br.items():
                        rhs = rhs + self.action[k].scale(c)
                if lhs != rhs:
                    failures.append((i, j))
        for i in range(g.dim):
            if not g.parity[i]:
                continue
            for r, c, _ in self.action[i].entries():
                if self.parity[r] == self.parity[c]:
                    failures.append(("parity", i))
                    break
        if self.weights is not None:
            for pos, h in enumerate(g.cartan):
                m = self.action[h]
                for r, c, x in m.entries():
                    if r != c or x != self.weights[r][pos]:
                        failures.append(("cartan", h))
                        break
        return failures

    def weight_of(self, b: int):
        return self.weights[b] if self.weights is not None else None

    def __repr__(self):
        return f"Representation(dim={self.dim}, algebra={self.algebra!r})"


def trivial_module(algebra: LieSuperalgebra) -> Representation:
    rank = len(algebra.cartan)
    return Representation(
        algebra,
        [Mat.zero(1, 1) for _ in range(algebra.dim)],
        parity=(EVEN,),
        weights=((ZERO,) * rank,),
        meta={"name": "trivial"},
    )


def defining_rep(real: MatrixRealization) -> Representation:
    """The realization matrices acting on the ambient column space."""
    g = real.algebra
    size = real.size
    p, _ = real.split
    parity = tuple(EVEN if i < p else ODD for i in range(size))
    weights = tuple(
        tuple(real.matrices[c][i, i] for c in g.cartan) for i in range(size)
    )
    return Representation(g, list(real.matrices), parity=parity, weights=weights,
                          meta={"name": "defining"})


# ---------------------------------------------------------------------------
# super tensor product


def tensor(r1: Representation, r2: Representation) -> Representation:
    """Graded tensor product: x(v (x) w) = xv (x) w + (-1)^{|x||v|} v (x) xw."""
    if r1.algebra is not r2.algebra:
        raise ValueError("tensor factors must be modules over the same algebra object")
    g = r1.algebra
    d1, d2 = r1.dim, r2.dim
    dim = d1 * d2
    action = []
    for i in range(g.dim):
        ent: dict = {}
        m1, m2 = r1.action[i], r2.action[i]
        for a2 in range(d2):
            for (ra, ca, x) in m1.entries():
                ent[(ra * d2 + a2, ca * d2 + a2)] = ent.get((ra * d2 + a2, ca * d2 + a2), ZERO) + x
        odd_x = g.parity[i] == ODD
        for a1 in range(d1):
            sign = QQ(-1) if (odd_x and r1.parity[a1] == ODD) else QQ(1)
            base = a1 * d2
            for (rb, cb, x) in m2.entries():
                key = (base + rb, base + cb)
                s = ent.get(key, ZERO) + sign * x
                if s:
                    ent[key] = s
                else:
                    ent.pop(key, None)
        action.append(Mat(dim, dim, {k: v for k, v in ent.items() if v}))
    parity = tuple(
        (r1.parity[a1] + r2.parity[a2]) % 2 for a1 in range(d1) for a2 in range(d2)
    )
    weights = None
    if r1.weights is not None and r2.weights is not None:
        weights = tuple(
            tuple(x + y for x, y in zip(r1.weights[a1], r2.weights[a2]))
            for a1 in range(d1)
            for a2 in range(d2)
        )
    return Representation(g, action, parity=parity, weights=weights)


def tensor_many(reps) -> Representation:
    reps = list(reps)
    out = reps[0]
    for r in reps[1:]:
        out = tensor(out, r)
    return out


# ---------------------------------------------------------------------------
# highest-weight vectors


def highest_weight_vectors(rep: Representation, pos=None):
    """Basis of the joint kernel of the positive action matrices,
    organized as (weight, vector) pairs sorted by weight.

    Requires stored weights (Cartan acting diagonally on the module
    basis), so the joint kernel splits along weight blocks.
    """
    g = rep.algebra
    if pos is None:
        pos = g.pos
    mats = [rep.action[i] for i in pos]
    if not mats:
        ker = Subspace.full(rep.dim)
    else:
        ker = kernel_basis(stack_rows(mats))
    if rep.weights is None:
        raise ValueError("module has no stored weights")
    blocks: dict = {}
    for b in range(rep.dim):
        blocks.setdefault(rep.weights[b], []).append(b)
    out = []
    covered = 0
    for w in sorted(blocks):
        block = Subspace.span(rep.dim, [{b: QQ(1)} for b in blocks[w]])
        inter = ker.intersect(block)
        covered += inter.dim
        for v in inter.basis:
            out.append((w, dict(v)))
    if covered != ker.dim:
        raise ValueError("joint kernel is not spanned by weight-homogeneous vectors")
    return out


# ---------------------------------------------------------------------------
# the semisimple part and its irreducible modules


@dataclass
class Factor:
    """One simple factor of the semisimple part.

    ``kind`` is "A" (special linear, rank size-1) or "C" (symplectic,
    rank k); ``rows`` is the slice of ambient rows the factor acts on in
    the defining realization; ``cartan_slice`` locates its Cartan inside
    the semisimple Cartan order.
    """

    kind: str
    size: int
    rows: tuple
    cartan_slice: tuple

    @property
    def rank(self) -> int:
        return self.size - 1 if self.kind == "A" else self.size

    def fundamental_to_values(self, coeffs):
        """Weight values on this factor's Cartan from fundamental coords."""
        coeffs = list(coeffs)
        if self.kind == "A":
            return tuple(qq(c) for c in coeffs)
        # C_k: value on d_i is the sum of fundamental coords from i on
        k = self.rank
        return tuple(sum((qq(c) for c in coeffs[i:]), ZERO) for i in range(k))

    def values_to_fundamental(self, values):
        values = list(values)
        if self.kind == "A":
            return tuple(values)
        k = self.rank
        out = []
        for i in range(k - 1):
            out.append(values[i] - values[i + 1])
        out.append(values[k - 1])
        return tuple(out)


class SemisimplePart:
    """The derived subalgebra of the even part, with factor metadata.

    ``algebra`` is the restricted LieSuperalgebra (all even); factor
    defining modules are sliced out of the ambient realization.
    """

    def __init__(self, g: LieSuperalgebra, real: MatrixRealization):
        cs = center_split(g)
        ss = set(cs.ss_indices)
        self.parent = g
        self.parent_real = real
        self.split = cs
        self.indices = tuple(cs.ss_indices)
        self.algebra = g.restricted(
            self.indices,
            cartan=cs.h_ss,
            pos=tuple(i for i in g.pos if i in ss),
            neg=tuple(i for i in g.neg if i in ss),
            meta={"name": g.meta.get("name", "g") + "_ss"},
        )
        if real.family == "sl":
            m, n = real.params
            factors = []
            offset = 0
            for size, lo in ((m, 0), (n, m)):
                rk = size - 1
                factors.append(
                    Factor(
                        kind="A",
                        size=size,
                        rows=tuple(range(lo, lo + size)),
                        cartan_slice=tuple(range(offset, offset + rk)),
                    )
                )
                offset += rk
            self.factors = [f for f in factors]
        elif real.family == "C":
            k = real.params[0] - 1
            self.factors = [
                Factor(kind="C", size=k, rows=tuple(range(2, 2 + 2 * k)), cartan_slice=tuple(range(k)))
            ]
        else:
            raise ValueError(f"unknown realization family {real.family!r}")
        self.rank = len(cs.h_ss)
        assert self.rank == sum(f.rank for f in self.factors)
        self._fundamental_cache: dict = {}

    # -- weight conversions ----------------------------------------------------

    def fundamental_to_values(self, lam) -> tuple:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise ValueError(f"weight arity {len(lam)} != rank {self.rank}")
        out = [ZERO] * self.rank
        for f in self.factors:
            vals = f.fundamental_to_values([lam[i] for i in f.cartan_slice])
            for pos, v in zip(f.cartan_slice, vals):
                out[pos] = v
        return tuple(out)

    def values_to_fundamental(self, values) -> tuple:
        values = tuple(values)
        out = [None] * self.rank
        for f in self.factors:
            coords = f.values_to_fundamental([values[i] for i in f.cartan_slice])
            for pos, v in zip(f.cartan_slice, coords):
                out[pos] = v
        return tuple(out)

    def is_dominant_integral(self, lam) -> bool:
        try:
            lam = tuple(int(x) for x in lam)
        except (TypeError, ValueError):
            return False
        return len(lam) == self.rank and all(x >= 0 for x in lam)

    # -- factor defining modules -------------------------------------------------

    def factor_defining(self, fi: int) -> Representation:
        """Defining module of one factor, as a module over the whole
        semisimple part (the other factors act as zero)."""
        f = self.factors[fi]
        rows = f.rows
        rmap = {r: a for a, r in enumerate(rows)}
        action = []
        for orig in self.indices:
            m = self.parent_real.matrices[orig]
            ent = {}
            for r, c, x in m.entries():
                if r in rmap and c in rmap:
                    ent[(rmap[r], rmap[c])] = x
            action.append(Mat(len(rows), len(rows), ent))
        hss = self.split.h_ss
        weights = tuple(
            tuple(self.parent_real.matrices[h][r, r] for h in hss) for r in rows
        )
        return Representation(self.algebra, action, parity=(EVEN,) * len(rows), weights=weights,
                              meta={"name": f"defining factor {fi}"})

    def fundamental_module(self, fi: int, i: int) -> Representation:
        """V(omega_i) of factor fi (i = 1..rank), by cyclic closure of a
        maximal vector inside the i-th tensor power of the defining
        module."""
        key = (fi, i)
        cached = self._fundamental_cache.get(key)
        if cached is not None:
            return cached
        f = self.factors[fi]
        if not 1 <= i <= f.rank:
            raise ValueError(f"factor {fi} has no fundamental weight {i}")
        power = tensor_many([self.factor_defining(fi)] * i)
        coeffs = [0] * self.rank
        coeffs[f.cartan_slice[i - 1]] = 1
        target = self.fundamental_to_values(coeffs)
        rep = self._cyclic_closure_of_weight(power, target)
        self._fundamental_cache[key] = rep
        return rep

    # -- cyclic closure ------------------------------------------------------------

    def _maximal_vector(self, rep: Representation, target_values) -> dict:
        for w, v in highest_weight_vectors(rep, pos=self.algebra.pos):
            if tuple(w) == tuple(target_values):
                return v
        raise ValueError(f"no maximal vector of weight values {target_values} found")

    def _cyclic_closure_of_weight(self, rep: Representation, target_values) -> Representation:
        v = self._maximal_vector(rep, target_values)
        lowering = [rep.action[i] for i in self.algebra.neg]
        sub = closure_under(lowering, [v])
        action = [restrict_to_subspace(m, sub) for m in rep.action]
        # pivot coordinates of an invariant subspace under the diagonal
        # Cartan action carry the weights of the new basis
        weights = tuple(rep.weights[p] for p in sub.pivot_cols)
        out = Representation(self.algebra, action, parity=(EVEN,) * sub.dim, weights=weights)
        out.meta["ambient"] = rep
        out.meta["subspace"] = sub
        out.meta["hw_coord"] = sub.coords(v)
        return out


def semisimple_part(g: LieSuperalgebra, real: MatrixRealization) -> SemisimplePart:
    return SemisimplePart(g, real)


def irreducible_hw_module(ss: SemisimplePart, lam) -> Representation:
    """The irreducible module of the semisimple part with the given
    dominant integral highest weight (fundamental-weight coordinates).

    Built as the cyclic closure of a maximal vector of the right weight
    inside a tensor product of fundamental modules; a maximal vector
    generates an irreducible module, so no quotient step is needed.
    """
    if not ss.is_dominant_integral(lam):
        raise ValueError(f"weight {lam!r} is not dominant integral for rank {ss.rank}")
    lam = tuple(int(x) for x in lam)
    if sum(lam) > HW_DEGREE_CAP:
        raise ValueError(f"weight {lam} exceeds the supported total degree {HW_DEGREE_CAP}")
    if all(x == 0 for x in lam):
        rep = trivial_module(ss.algebra)
        rep.meta["highest_weight"] = lam
        return rep
    pieces = []
    for fi, f in enumerate(ss.factors):
        for slot, pos in enumerate(f.cartan_slice):
            for _ in range(lam[pos]):
                pieces.append(ss.fundamental_module(fi, slot + 1))
    big = tensor_many(pieces)
    target = ss.fundamental_to_values(lam)
    rep = ss._cyclic_closure_of_weight(big, target)
    rep.meta["highest_weight"] = lam
    return rep


# ---------------------------------------------------------------------------
# irreducibility


def is_irreducible(rep: Representation) -> bool:
    """Burnside test: the action matrices generate the full matrix
    algebra of the module.  A modular certificate handles the common
    case fast; on certificate failure the exact span is computed."""
    if rep.dim == 0:
        return False
    if certify_burnside_full(rep.action):
        return True
    return algebra_span(rep.action).dim == rep.dim * rep.dim


# ---------------------------------------------------------------------------
# evaluation modules


def evaluation_module(g_or_ss, modules_or_weights, grid: EvaluationGrid,
                      quotient: QuotientAlgebra = None) -> Representation:
    """Pullback of an outer tensor product along the evaluation map.

    ``modules_or_weights`` has one entry per grid point: either a
    Representation of the base algebra or a dominant weight (the latter
    requires the first argument to be a SemisimplePart).  The result is
    a module over the loop algebra of the base with the squarefree
    quotient: x (x) t^e acts as the sum over grid points of the slot
    action scaled by the value of t^e at that point (with the graded
    sign when odd operators pass odd slot vectors).
    """
    if isinstance(g_or_ss, SemisimplePart):
        base = g_or_ss.algebra
        slot_reps = []
        for lam in modules_or_weights:
            if isinstance(lam, Representation):
                slot_reps.append(lam)
            else:
                slot_reps.append(irreducible_hw_module(g_or_ss, lam))
    else:
        base = g_or_ss
        slot_reps = list(modules_or_weights)
        for r in slot_reps:
            if not isinstance(r, Representation) or r.algebra is not base:
                raise ValueError("expected modules over the base algebra, one per grid point")
    if len(slot_reps) != grid.size:
        raise ValueError(f"need {grid.size} modules/weights, got {len(slot_reps)}")
    if quotient is None:
        if not grid.ideal.is_squarefree:
            raise ValueError("evaluation modules live over the squarefree quotient")
        quotient = QuotientAlgebra(grid.ideal)
    loop = loop_algebra(base, quotient)

    dims = [r.dim for r in slot_reps]
    total = 1
    for dd in dims:
        total *= dd
    # enumerate the product basis; precompute parity prefixes per slot
    basis = list(itertools.product(*(range(dd) for dd in dims)))
    index = {b: k for k, b in enumerate(basis)}
    parities = [tuple(r.parity[b] for b in range(r.dim)) for r in slot_reps]
    parity = tuple(sum(parities[j][b[j]] for j in range(len(dims))) % 2 for b in basis)

    _slot_cache: dict = {}

    def slot_matrix(i: int, j: int):
        """Action of base element i in slot j on the product basis."""
        hit = _slot_cache.get((i, j))
        if hit is not None:
            return hit
        ent: dict = {}
        m = slot_reps[j].action[i]
        odd_x = base.parity[i] == ODD
        for k, b in enumerate(basis):
            col = m.col(b[j])
            if not col:
                continue
            if odd_x:
                pref = sum(parities[jj][b[jj]] for jj in range(j)) % 2
                sgn = QQ(-1) if pref else QQ(1)
            else:
                sgn = QQ(1)
            for r, x in col.items():
                nb = b[:j] + (r,) + b[j + 1:]
                ent[(index[nb], k)] = sgn * x
        _slot_cache[(i, j)] = ent
        return ent

    action = []
    for k, e in enumerate(quotient.basis):
        scalars = [grid.eval_monomial(e, j) for j in range(grid.size)]
        for i in range(base.dim):
            ent: dict = {}
            for j, s in enumerate(scalars):
                if not s:
                    continue
                for key, x in slot_matrix(i, j).items():
                    v = ent.get(key, ZERO) + s * x
                    if v:
                        ent[key] = v
                    else:
                        ent.pop(key, None)
            action.append(Mat(total, total, ent))

    weights = None
    if all(r.weights is not None for r in slot_reps):
        rankc = len(base.cartan)
        weights = []
        for b in basis:
            wrow = []
            for k, e in enumerate(quotient.basis):
                scalars = [grid.eval_monomial(e, j) for j in range(grid.size)]
                for pos in range(rankc):
                    wrow.append(sum((scalars[j] * slot_reps[j].weights[b[j]][pos]
                                     for j in range(grid.size)), ZERO))
            weights.append(tuple(wrow))
        weights = tuple(weights)
    rep = Representation(loop, action, parity=parity, weights=weights,
                         meta={"name": "evaluation", "slots": slot_reps, "grid": grid,
                               "quotient": quotient, "base": base})
    return rep


# ---------------------------------------------------------------------------
# the induced functional psi


class PsiFunctional:
    """The functional on h_ss tensor A/I' determined by one dominant
    weight per grid point: its value on h (x) t^e is the sum over grid
    points of the weight value scaled by the monomial value there."""

    def __init__(self, ss: SemisimplePart, weights, grid: EvaluationGrid):
        self.ss = ss
        self.grid = grid
        self.weight_list = [tuple(int(x) for x in w) for w in weights]
        if len(self.weight_list) != grid.size:
            raise ValueError(f"need one weight per grid point ({grid.size})")
        for w in self.weight_list:
            if not ss.is_dominant_integral(w):
                raise ValueError(f"weight {w} is not dominant integral")
        self.values_list = [ss.fundamental_to_values(w) for w in self.weight_list]

    def value(self, h_pos: int, exponent) -> "QQ":
        """Value on h (x) t^e, h the h_pos-th semisimple Cartan element."""
        total = ZERO
        for j in range(self.grid.size):
            total += self.grid.eval_monomial(exponent, j) * self.values_list[j][h_pos]
        return total

    def value_on_element(self, h_vec: dict, exponent):
        """Value on (combination of semisimple Cartan elements) (x) t^e."""
        total = ZERO
        for pos, c in h_vec.items():
            total += c * self.value(pos, exponent)
        return total

    def table(self, quotient: QuotientAlgebra):
        """Values on the basis h_i (x) (monomial) of h_ss (x) A/I'."""
        return {
            (pos, e): self.value(pos, e)
            for pos in range(len(self.ss.split.h_ss))
            for e in quotient.basis
        }

    def is_zero(self) -> bool:
        return all(all(v == 0 for v in vals) for vals in self.values_list)

    def normalized(self):
        """Support-sorted canonical form: (point, weight) pairs with
        zero weights dropped, sorted by point."""
        pairs = []
        for j, w in enumerate(self.weight_list):
            if any(x for x in w):
                pairs.append((self.grid.points[j], w))
        return tuple(sorted(pairs))

    def __eq__(self, other):
        return isinstance(other, PsiFunctional) and self.normalized() == other.normalized()

    def __repr__(self):
        return f"PsiFunctional({self.normalized()})"


def psi_of(ss: SemisimplePart, weights, grid: EvaluationGrid) -> PsiFunctional:
    return PsiFunctional(ss, weights, grid)
