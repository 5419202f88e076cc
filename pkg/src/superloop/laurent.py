"""Laurent polynomial coefficients and their finite quotients.

The coefficient ring is A = Q[t_1^{±1}, ..., t_d^{±1}].  A cofinite
ideal is generated by one monic univariate polynomial per variable,
specified by its (nonzero, distinct) rational roots with positive
multiplicities.  The quotient A/I is finite dimensional with monomial
basis {t^e : 0 <= e_j < deg P_j}; since every root is nonzero, each
t_j stays invertible in the quotient, so arbitrary integer exponents
normalize into the box.

The evaluation map sends x tensor t^e to the tuple of copies of x
scaled by the value of t^e at each grid point; this module builds that
map as an exact matrix and verifies its structural properties
(surjectivity, the identification of its kernel inside a strictly
larger quotient, and bracket compatibility).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import Mat, Subspace, kernel_basis, vadd_scaled
from .scalars import QQ, ZERO, qq
from .superalgebra import LieSuperalgebra

__all__ = [
    "LaurentPoly",
    "CofiniteIdeal",
    "QuotientAlgebra",
    "EvaluationGrid",
    "Lemma22Report",
    "reduce",
    "build_phi",
    "check_lemma22",
    "loop_algebra",
]


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse Laurent polynomial: map from integer exponent tuples to
    nonzero scalars."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = qq(c)
                if c:
                    e = tuple(int(x) for x in e)
                    if len(e) != d:
                        raise ValueError("exponent arity mismatch")
                    self.terms[e] = c

    @classmethod
    def zero(cls, d: int) -> "LaurentPoly":
        return cls(d)

    @classmethod
    def one(cls, d: int) -> "LaurentPoly":
        return cls(d, {(0,) * d: QQ(1)})

    @classmethod
    def monomial(cls, d: int, e, c=1) -> "LaurentPoly":
        return cls(d, {tuple(e): qq(c)})

    @classmethod
    def variable(cls, d: int, j: int, power: int = 1) -> "LaurentPoly":
        e = [0] * d
        e[j] = power
        return cls.monomial(d, e)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, ZERO) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(self.d, terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(QQ(-1))

    def scale(self, c) -> "LaurentPoly":
        c = qq(c)
        return LaurentPoly(self.d, {e: c * x for e, x in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, ZERO) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return LaurentPoly(self.d, terms)

    def evaluate(self, point):
        """Value at a point with all coordinates nonzero."""
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for a, p in zip(point, e):
                v *= qq(a) ** p
            total += v
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.d == other.d and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            mono = "*".join(f"t{j + 1}^{p}" for j, p in enumerate(e) if p) or "1"
            bits.append(f"({self.terms[e]})*{mono}")
        return " + ".join(bits)


def _poly_mul_uni(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_from_roots(roots, mults):
    """Monic univariate polynomial prod (t - a)^b, ascending coefficients."""
    out = [QQ(1)]
    for a, b in zip(roots, mults):
        for _ in range(b):
            out = _poly_mul_uni(out, [-qq(a), QQ(1)])
    return out


# ---------------------------------------------------------------------------
# cofinite ideals


class CofiniteIdeal:
    """Ideal (P_1(t_1), ..., P_d(t_d)) with P_j monic, all roots nonzero
    rationals, distinct within each variable, with positive multiplicities."""

    def __init__(self, per_variable):
        """``per_variable``: list (one entry per variable) of lists of
        (root, multiplicity) pairs."""
        self.roots = []
        self.mults = []
        for j, pairs in enumerate(per_variable):
            if not pairs:
                raise ValueError(f"variable {j + 1} has no roots; the ideal would not be cofinite")
            rts, ms = [], []
            for a, b in pairs:
                a = qq(a)
                b = int(b)
                if not a:
                    raise ValueError("roots must be nonzero (they are evaluation points of units)")
                if b < 1:
                    raise ValueError("multiplicities must be positive")
                rts.append(a)
                ms.append(b)
            if len(set(rts)) != len(rts):
                raise ValueError(f"variable {j + 1} has repeated roots")
            self.roots.append(rts)
            self.mults.append(ms)
        self.d = len(self.roots)
        if self.d < 1:
            raise ValueError("need at least one variable")

    @property
    def is_squarefree(self) -> bool:
        return all(b == 1 for ms in self.mults for b in ms)

    def degree(self, j: int) -> int:
        return sum(self.mults[j])

    @property
    def quotient_dim(self) -> int:
        out = 1
        for j in range(self.d):
            out *= self.degree(j)
        return out

    def generator_coeffs(self, j: int):
        """Ascending coefficients of P_j."""
        return _poly_from_roots(self.roots[j], self.mults[j])

    def squarefree_coeffs(self, j: int):
        """Ascending coefficients of the squarefree companion of P_j."""
        return _poly_from_roots(self.roots[j], [1] * len(self.roots[j]))

    def generator_poly(self, j: int) -> LaurentPoly:
        return _embed_univariate(self.generator_coeffs(j), self.d, j)

    def squarefree_poly(self, j: int) -> LaurentPoly:
        return _embed_univariate(self.squarefree_coeffs(j), self.d, j)

    def squarefree(self) -> "CofiniteIdeal":
        return CofiniteIdeal([[(a, 1) for a in rts] for rts in self.roots])

    def enlarged(self) -> "CofiniteIdeal":
        """Same roots, every multiplicity increased by one (a strictly
        smaller ideal, hence a strictly larger quotient)."""
        return CofiniteIdeal(
            [list(zip(rts, (b + 1 for b in ms))) for rts, ms in zip(self.roots, self.mults)]
        )

    def grid(self) -> "EvaluationGrid":
        return EvaluationGrid(self)

    def key(self):
        return tuple(tuple(zip(rts, ms)) for rts, ms in zip(self.roots, self.mults))

    def __eq__(self, other) -> bool:
        return isinstance(other, CofiniteIdeal) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        bits = []
        for rts, ms in zip(self.roots, self.mults):
            bits.append("".join(f"(t-{a})^{b}" if b > 1 else f"(t-{a})" for a, b in zip(rts, ms)))
        return "CofiniteIdeal<" + "; ".join(bits) + ">"


def _embed_univariate(coeffs, d: int, j: int) -> LaurentPoly:
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * d
            e[j] = i
            terms[tuple(e)] = c
    return LaurentPoly(d, terms)


# ---------------------------------------------------------------------------
# the quotient algebra A/I


class QuotientAlgebra:
    """A/I with its monomial box basis, in lexicographic order.

    Normal forms of out-of-box powers (including negative powers) are
    derived from the relation P_j(t_j) = 0 per variable; the constant
    coefficient of each P_j is nonzero, so each variable is invertible.
    """

    def __init__(self, ideal: CofiniteIdeal):
        self.ideal = ideal
        self.d = ideal.d
        self.degrees = [ideal.degree(j) for j in range(self.d)]
        self.basis = list(itertools.product(*(range(D) for D in self.degrees)))
        self.index = {e: k for k, e in enumerate(self.basis)}
        self.dim = len(self.basis)
        # per-variable dense normal forms of t_j^e, memoized
        self._uni_nf: list = [dict() for _ in range(self.d)]
        for j, D in enumerate(self.degrees):
            for e in range(D):
                row = [ZERO] * D
                row[e] = QQ(1)
                self._uni_nf[j][e] = row
        self._mult_table: dict = {}

    # -- univariate normal forms ------------------------------------------------

    def _uni(self, j: int, e: int):
        memo = self._uni_nf[j]
        row = memo.get(e)
        if row is not None:
            return row
        D = self.degrees[j]
        p = self.ideal.generator_coeffs(j)
        if e > 0:
            prev = self._uni(j, e - 1)
            row = [ZERO] + list(prev[: D - 1])
            top = prev[D - 1]
            if top:
                for i in range(D):
                    row[i] -= top * p[i]
        else:
            prev = self._uni(j, e + 1)
            # t^{-1} * t^i = t^{i-1}; and t^{-1} = -(1/p_0) * sum_{i>=1} p_i t^{i-1}
            inv = [-p[i + 1] / p[0] for i in range(D)]
            row = [ZERO] * D
            for i, c in enumerate(prev):
                if not c:
                    continue
                if i >= 1:
                    row[i - 1] += c
                else:
                    for ii in range(D):
                        row[ii] += c * inv[ii]
        memo[e] = row
        return row

    # -- normal forms and reduction ----------------------------------------------

    def nf_exponent(self, e) -> dict:
        """Normal form of the monomial t^e as a sparse vector over the basis."""
        e = tuple(int(x) for x in e)
        if len(e) != self.d:
            raise ValueError("exponent arity mismatch")
        if e in self.index:
            return {self.index[e]: QQ(1)}
        factors = [self._uni(j, e[j]) for j in range(self.d)]
        out: dict = {}
        for combo in itertools.product(*(range(D) for D in self.degrees)):
            c = QQ(1)
            for j, i in enumerate(combo):
                c *= factors[j][i]
                if not c:
                    break
            if c:
                out[self.index[combo]] = c
        return out

    def reduce_poly(self, p: LaurentPoly) -> dict:
        if p.d != self.d:
            raise ValueError("variable count mismatch")
        out: dict = {}
        for e, c in p.terms.items():
            vadd_scaled(out, self.nf_exponent(e), c)
        return out

    def t_inverse(self, j: int) -> dict:
        e = [0] * self.d
        e[j] = -1
        return self.nf_exponent(e)

    @property
    def unit(self) -> dict:
        return {self.index[(0,) * self.d]: QQ(1)}

    # -- multiplication -----------------------------------------------------------

    def basis_product(self, k1: int, k2: int) -> dict:
        if k1 > k2:
            k1, k2 = k2, k1
        v = self._mult_table.get((k1, k2))
        if v is None:
            e = tuple(a + b for a, b in zip(self.basis[k1], self.basis[k2]))
            v = self.nf_exponent(e)
            self._mult_table[(k1, k2)] = v
        return dict(v)

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for k1, c1 in u.items():
            for k2, c2 in v.items():
                vadd_scaled(out, self.basis_product(k1, k2), c1 * c2)
        return out

    def power(self, u: dict, n: int) -> dict:
        out = self.unit
        for _ in range(n):
            out = self.multiply(out, u)
        return out

    def evaluate_vector(self, v: dict, point):
        """Value of a basis combination at a point (all coords nonzero)."""
        total = ZERO
        for k, c in v.items():
            x = c
            for a, p in zip(point, self.basis[k]):
                x *= qq(a) ** p
            total += x
        return total

    def monomial_poly(self, k: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.d, self.basis[k])

    def check_ring_axioms(self) -> bool:
        """Exhaustive commutativity and associativity of the table."""
        for a in range(self.dim):
            for b in range(a, self.dim):
                if self.basis_product(a, b) != self.basis_product(b, a):
                    return False
        for a in range(self.dim):
            for b in range(self.dim):
                ab = self.basis_product(a, b)
                for c in range(self.dim):
                    left = self.multiply(ab, {c: QQ(1)})
                    right = self.multiply({a: QQ(1)}, self.basis_product(b, c))
                    if left != right:
                        return False
        return True

    def __repr__(self):
        return f"QuotientAlgebra(dim={self.dim}, ideal={self.ideal!r})"


def reduce(p: LaurentPoly, q: QuotientAlgebra) -> dict:
    """Image of a Laurent polynomial in A/I, over the monomial basis."""
    return q.reduce_poly(p)


# ---------------------------------------------------------------------------
# evaluation grids


class EvaluationGrid:
    """The grid of evaluation points of an ideal's root data, enumerated
    in lexicographic order of the per-variable root lists."""

    def __init__(self, ideal: CofiniteIdeal):
        self.ideal = ideal
        self.d = ideal.d
        self.points = list(itertools.product(*ideal.roots))
        self.size = len(self.points)

    def eval_monomial(self, e, k: int):
        """Value of t^e at the k-th grid point."""
        x = QQ(1)
        for a, p in zip(self.points[k], e):
            x *= a ** int(p)
        return x

    def __repr__(self):
        return f"EvaluationGrid({self.size} points: {self.points})"


# ---------------------------------------------------------------------------
# loop algebras g (x) A/I


def loop_algebra(g: LieSuperalgebra, q: QuotientAlgebra) -> LieSuperalgebra:
    """The superalgebra g (x) A/I on the basis x_i (x) t^e.

    Index layout: monomial-major, (monomial k, algebra i) -> k*dim(g)+i.
    Parity comes from g; Z-degree tags, positive/negative/Cartan index
    sets are those of g crossed with every monomial.
    """
    dg, dq = g.dim, q.dim
    table = {}
    for (i, j), v in g.bracket_table.items():
        for k1 in range(dq):
            for k2 in range(dq):
                prod = q.basis_product(k1, k2)
                entry = {}
                for kk, cq in prod.items():
                    for out_i, cg in v.items():
                        entry[kk * dg + out_i] = cq * cg
                if entry:
                    table[(k1 * dg + i, k2 * dg + j)] = entry
    parity = [g.parity[i] for _ in range(dq) for i in range(dg)]
    zdeg = [g.zdeg[i] for _ in range(dq) for i in range(dg)] if g.zdeg is not None else None
    cartan = tuple(k * dg + i for k in range(dq) for i in g.cartan)
    pos = tuple(k * dg + i for k in range(dq) for i in g.pos)
    neg = tuple(k * dg + i for k in range(dq) for i in g.neg)
    names = [f"{g.basis_names[i]}(x)m{k}" for k in range(dq) for i in range(dg)]
    return LieSuperalgebra(
        dim=dg * dq,
        parity=parity,
        bracket_table=table,
        cartan=cartan,
        pos=pos,
        neg=neg,
        zdeg=zdeg,
        basis_names=names,
        meta={
            "name": f"{g.meta.get('name', 'g')}(x)A/I",
            "loop": True,
            "base_dim": dg,
            "quotient_dim": dq,
        },
    )


def loop_index(g: LieSuperalgebra, k: int, i: int) -> int:
    """Basis index of x_i (x) (k-th monomial) in the loop layout."""
    return k * g.dim + i


# ---------------------------------------------------------------------------
# the evaluation map and its verification


def build_phi(g: LieSuperalgebra, grid: EvaluationGrid, quotient: QuotientAlgebra = None) -> Mat:
    """Matrix of the evaluation map g (x) A/I -> g^N.

    Domain index: (monomial k, algebra i) -> k*dim(g)+i (loop layout).
    Target index: (grid point p, algebra i) -> p*dim(g)+i.
    With the default quotient, the domain is the squarefree model.
    """
    if quotient is None:
        if not grid.ideal.is_squarefree:
            raise ValueError("evaluation map wants the squarefree model; pass the quotient explicitly otherwise")
        quotient = QuotientAlgebra(grid.ideal)
    dg = g.dim
    ent = {}
    for k, e in enumerate(quotient.basis):
        for p in range(grid.size):
            s = grid.eval_monomial(e, p)
            if s:
                for i in range(dg):
                    ent[(p * dg + i, k * dg + i)] = s
    return Mat(grid.size * dg, quotient.dim * dg, ent)


@dataclass
class Lemma22Report:
    surjective: bool
    rank: int
    expected_rank: int
    kernel_matches: bool
    kernel_dim: int
    expected_kernel_dim: int
    bracket_compatible: bool
    bracket_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.surjective and self.kernel_matches and self.bracket_compatible


def check_lemma22(g: LieSuperalgebra, grid: EvaluationGrid) -> Lemma22Report:
    """Verify the three structural properties of the evaluation map.

    (a) On the squarefree model the map is onto g^N (full rank).
    (b) In the strictly larger quotient obtained by raising every root
        multiplicity by one, the kernel of the evaluation map equals
        g tensored with the image of the squarefree generators — the
        finite-model form of "the kernel is everything vanishing on the
        grid".
    (c) The map intertwines brackets: componentwise brackets in g^N
        match the loop bracket, checked on all basis pairs.
    """
    from .linalg import rank as mat_rank

    ideal = grid.ideal.squarefree()
    sf_grid = EvaluationGrid(ideal)
    q1 = QuotientAlgebra(ideal)
    dg, n_pts = g.dim, sf_grid.size

    phi = build_phi(g, sf_grid, q1)
    r = mat_rank(phi)
    expected = n_pts * dg
    surjective = r == expected

    # (b) kernel in the enlarged model
    big = ideal.enlarged()
    q2 = QuotientAlgebra(big)
    phi2 = build_phi(g, sf_grid, q2)
    ker = kernel_basis(phi2)
    target_scalar = []
    for j in range(q2.d):
        gen = q2.reduce_poly(ideal.squarefree_poly(j))
        for k in range(q2.dim):
            target_scalar.append(q2.multiply({k: QQ(1)}, gen))
    target_vecs = []
    for w in target_scalar:
        for i in range(dg):
            target_vecs.append({k * dg + i: c for k, c in w.items()})
    target = Subspace.span(q2.dim * dg, target_vecs)
    kernel_matches = ker == target
    expected_kernel_dim = (q2.dim - n_pts) * dg

    # (c) bracket compatibility on all basis pairs of the squarefree loop model
    loop = loop_algebra(g, q1)
    failures = []
    cols = [phi.col(c) for c in range(loop.dim)]
    for (u, v), w in loop.bracket_table.items():
        lhs = phi.apply(w)
        rhs: dict = {}
        xu, xv = cols[u], cols[v]
        # componentwise bracket in g^N of the images
        by_block_u: dict = {}
        for r_, c in xu.items():
            by_block_u.setdefault(r_ // dg, {})[r_ % dg] = c
        for r_, c in xv.items():
            blk = r_ // dg
            bu = by_block_u.get(blk)
            if not bu:
                continue
            br = g.bracket(bu, {r_ % dg: c})
            for i, cc in br.items():
                key = blk * dg + i
                s = rhs.get(key, ZERO) + cc
                if s:
                    rhs[key] = s
                else:
                    rhs.pop(key, None)
        if lhs != rhs:
            failures.append((u, v))
    # zero brackets in the loop model must also map to zero brackets
    if not failures:
        for u in range(loop.dim):
            for v in range(loop.dim):
                if (u, v) in loop.bracket_table:
                    continue
                xu, xv = cols[u], cols[v]
                bad = False
                by_block_u = {}
                for r_, c in xu.items():
                    by_block_u.setdefault(r_ // dg, {})[r_ % dg] = c
                for r_, c in xv.items():
                    blk = r_ // dg
                    bu = by_block_u.get(blk)
                    if bu and g.bracket(bu, {r_ % dg: c}):
                        bad = True
                        break
                if bad:
                    failures.append((u, v))
    return Lemma22Report(
        surjective=surjective,
        rank=r,
        expected_rank=expected,
        kernel_matches=kernel_matches,
        kernel_dim=ker.dim,
        expected_kernel_dim=expected_kernel_dim,
        bracket_compatible=not failures,
        bracket_failures=failures,
    )
