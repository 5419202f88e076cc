"""Representation-free Lie superalgebra core.

A ``LieSuperalgebra`` is a finite-dimensional superalgebra presented by
a parity-tagged basis and sparse structure constants, together with
optional extras: a distinguished Cartan index set, positive/negative
index sets, per-basis Z-degree tags in {-1, 0, +1}, and the index of a
central element of the even part.

The checks in this module are exhaustive over basis tuples and exact:
axiom failures are *report content*, never exceptions, so corrupted
tables can be inspected.  Root decompositions are computed by iterated
simultaneous-eigenspace splitting of the adjoint action of the Cartan
basis; an adjoint action that is not diagonalizable over the rationals
raises an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import (
    Echelon,
    Mat,
    Subspace,
    kernel_basis,
    restrict_to_subspace,
    vadd_scaled,
    vec_to_dense,
)
from .scalars import QQ, ZERO, qq

EVEN, ODD = 0, 1


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class Root:
    """A functional on the Cartan subalgebra, stored by its values on
    the ordered Cartan basis."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(qq(v) for v in self.values))

    @property
    def is_zero(self) -> bool:
        return all(not v for v in self.values)

    def __neg__(self) -> "Root":
        return Root(tuple(-v for v in self.values))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.values, other.values)))

    def sort_key(self):
        return self.values

    def __repr__(self):
        return "Root(" + ", ".join(str(v) for v in self.values) + ")"


# ---------------------------------------------------------------------------
# reports


@dataclass
class AxiomReport:
    dim: int
    triples_checked: int
    parity_violations: list = field(default_factory=list)
    skew_violations: list = field(default_factory=list)
    jacobi_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.parity_violations or self.skew_violations or self.jacobi_violations)

    def summary(self) -> str:
        if self.ok:
            return f"axioms hold on all {self.triples_checked} basis triples"
        return (
            f"violations: parity {len(self.parity_violations)}, "
            f"skew {len(self.skew_violations)}, jacobi {len(self.jacobi_violations)}"
        )


@dataclass
class GradingReport:
    pairs_checked: int
    violations: list = field(default_factory=list)
    plus_plus_zero: bool = True
    minus_minus_zero: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations and self.plus_plus_zero and self.minus_minus_zero


class NotDiagonalizableError(ValueError):
    """Adjoint action of the Cartan is not diagonalizable over Q."""


# ---------------------------------------------------------------------------
# the algebra


class LieSuperalgebra:
    """Finite-dimensional Lie superalgebra given by structure constants.

    ``bracket_table[(i, j)]`` is the sparse coefficient vector of
    ``[x_i, x_j]``; rows absent from the table are zero brackets.  The
    table stores both orders (i, j) and (j, i).
    """

    def __init__(
        self,
        dim: int,
        parity,
        bracket_table,
        cartan=(),
        pos=(),
        neg=(),
        zdeg=None,
        center_index=None,
        basis_names=None,
        meta=None,
    ):
        self.dim = dim
        self.parity = tuple(parity)
        if len(self.parity) != dim:
            raise ValueError("parity tags must cover the basis")
        table = {}
        for (i, j), v in bracket_table.items():
            vv = {k: qq(c) for k, c in v.items() if qq(c)}
            if vv:
                table[(i, j)] = vv
        self.bracket_table = table
        self.cartan = tuple(cartan)
        self.pos = tuple(pos)
        self.neg = tuple(neg)
        self.zdeg = tuple(zdeg) if zdeg is not None else None
        self.center_index = center_index
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"x{i}" for i in range(dim))
        self.meta = dict(meta) if meta else {}
        self._ad_cache: dict = {}
        self._root_decomposition = None

    # -- basics --------------------------------------------------------------

    @property
    def even_indices(self):
        return tuple(i for i in range(self.dim) if self.parity[i] == EVEN)

    @property
    def odd_indices(self):
        return tuple(i for i in range(self.dim) if self.parity[i] == ODD)

    def bracket_basis(self, i: int, j: int) -> dict:
        return dict(self.bracket_table.get((i, j), {}))

    def bracket(self, x: dict, y: dict) -> dict:
        """Bilinear extension of the structure-constant table."""
        for v in (x, y):
            for k in v:
                if not 0 <= k < self.dim:
                    raise ValueError(f"coordinate {k} outside algebra of dimension {self.dim}")
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                t = self.bracket_table.get((i, j))
                if t:
                    vadd_scaled(out, t, a * b)
        return out

    def ad_matrix(self, i: int) -> Mat:
        """Matrix of ad(x_i) acting on the algebra (columns are [x_i, x_j])."""
        m = self._ad_cache.get(i)
        if m is None:
            ent = {}
            for j in range(self.dim):
                for k, c in self.bracket_table.get((i, j), {}).items():
                    ent[(k, j)] = c
            m = Mat(self.dim, self.dim, ent)
            self._ad_cache[i] = m
        return m

    def parity_of_vec(self, v: dict):
        """Parity of a homogeneous vector, or None for mixed/zero."""
        seen = {self.parity[i] for i in v}
        return seen.pop() if len(seen) == 1 else None

    # -- axiom checks ----------------------------------------------------------

    def check_axioms(self) -> AxiomReport:
        """Exhaustive parity / super skew-symmetry / super Jacobi check."""
        n = self.dim
        par = self.parity
        report = AxiomReport(dim=n, triples_checked=n * n * n)
        for (i, j), v in sorted(self.bracket_table.items()):
            want = (par[i] + par[j]) % 2
            if any(par[k] != want for k in v):
                report.parity_violations.append((i, j))
        for i in range(n):
            for j in range(i, n):
                sign = QQ(-1) if (par[i] and par[j]) else QQ(1)
                lhs = self.bracket_table.get((j, i), {})
                rhs = {k: -sign * c for k, c in self.bracket_table.get((i, j), {}).items()}
                if lhs != rhs:
                    report.skew_violations.append((i, j))
        unit = [{k: QQ(1)} for k in range(n)]
        for i in range(n):
            for j in range(n):
                bij = self.bracket_table.get((i, j))
                sign = QQ(-1) if (par[i] and par[j]) else QQ(1)
                for k in range(n):
                    lhs = self.bracket(bij, unit[k]) if bij else {}
                    rhs = self.bracket(unit[i], self.bracket(unit[j], unit[k]))
                    vadd_scaled(rhs, self.bracket(unit[j], self.bracket(unit[i], unit[k])), -sign)
                    if lhs != rhs:
                        report.jacobi_violations.append((i, j, k))
        return report

    def check_z_grading(self) -> GradingReport:
        """Verify [g_a, g_b] lies in g_{a+b} for the Z-degree tags."""
        if self.zdeg is None:
            raise ValueError("algebra has no zdeg tags")
        report = GradingReport(pairs_checked=self.dim * self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.bracket_table.get((i, j))
                if not v:
                    continue
                d = self.zdeg[i] + self.zdeg[j]
                bad = [k for k in v if self.zdeg[k] != d] if -1 <= d <= 1 else list(v)
                if bad:
                    report.violations.append((i, j, sorted(bad)))
                    if d == 2:
                        report.plus_plus_zero = False
                    if d == -2:
                        report.minus_minus_zero = False
        return report

    # -- roots -----------------------------------------------------------------

    def root_decomposition(self) -> "RootDecomposition":
        if self._root_decomposition is None:
            self._root_decomposition = _root_decomposition(self)
        return self._root_decomposition

    # -- derived algebras --------------------------------------------------------

    def restricted(self, indices, cartan=(), pos=(), neg=(), basis_names=None, meta=None) -> "LieSuperalgebra":
        """Subalgebra spanned by the given basis indices (must be closed)."""
        indices = list(indices)
        pos_map = {old: new for new, old in enumerate(indices)}
        table = {}
        for a, i in enumerate(indices):
            for b, j in enumerate(indices):
                v = self.bracket_table.get((i, j))
                if v:
                    if any(k not in pos_map for k in v):
                        raise ValueError("index set does not span a subalgebra")
                    table[(a, b)] = {pos_map[k]: c for k, c in v.items()}
        return LieSuperalgebra(
            dim=len(indices),
            parity=[self.parity[i] for i in indices],
            bracket_table=table,
            cartan=tuple(pos_map[i] for i in cartan),
            pos=tuple(pos_map[i] for i in pos),
            neg=tuple(pos_map[i] for i in neg),
            zdeg=[self.zdeg[i] for i in indices] if self.zdeg is not None else None,
            basis_names=basis_names or [self.basis_names[i] for i in indices],
            meta=meta,
        )

    def __repr__(self):
        name = self.meta.get("name", "LieSuperalgebra")
        return f"{name}(dim={self.dim})"


# ---------------------------------------------------------------------------
# expressing vectors in a chosen (non-echelon) basis


class BasisExpander:
    """Expresses vectors in the span of a fixed list of vectors, in the
    coordinates of that original list (not the echelon's pivots)."""

    def __init__(self, vectors, ambient: int):
        self.n = len(vectors)
        self.ech = Echelon(ambient + self.n)
        for idx, v in enumerate(vectors):
            tagged = dict(v)
            tagged[ambient + idx] = QQ(1)
            if self.ech.insert(tagged) is None:
                raise ValueError("vectors are linearly dependent")
        self.ambient = ambient

    def coords(self, v: dict):
        """Coefficient dict {basis index: coeff}, or None if outside."""
        res = self.ech.reduce(dict(v))
        coeff = {}
        for k, c in res.items():
            if k < self.ambient:
                return None
            coeff[k - self.ambient] = -c
        return coeff


def from_matrices(
    matrices,
    parity,
    cartan=(),
    pos=(),
    neg=(),
    zdeg=None,
    center_index=None,
    basis_names=None,
    meta=None,
) -> LieSuperalgebra:
    """Build the abstract algebra from a faithful matrix realization.

    The super bracket of every basis pair is computed from the matrices
    and re-expressed in the basis; a bracket value outside the span of
    the basis raises, so the stored table is faithful to the realization
    by construction.
    """
    matrices = list(matrices)
    n = len(matrices)
    parity = tuple(parity)
    size = matrices[0].nrows
    expander = BasisExpander([m.flatten() for m in matrices], size * size)
    table = {}
    for i, a in enumerate(matrices):
        for j, b in enumerate(matrices):
            ab = a @ b
            ba = b @ a
            br = ab + ba if (parity[i] and parity[j]) else ab - ba
            if br.is_zero():
                continue
            v = expander.coords(br.flatten())
            if v is None:
                raise ValueError(f"bracket of basis pair ({i}, {j}) leaves the span of the basis")
            table[(i, j)] = v
    return LieSuperalgebra(
        dim=n,
        parity=parity,
        bracket_table=table,
        cartan=cartan,
        pos=pos,
        neg=neg,
        zdeg=zdeg,
        center_index=center_index,
        basis_names=basis_names,
        meta=meta,
    )


# ---------------------------------------------------------------------------
# root decomposition


@dataclass
class RootDecomposition:
    """Simultaneous eigenspace decomposition for the adjoint Cartan action.

    ``spaces`` maps each ``Root`` to a ``(Subspace, parity)`` pair; the
    zero root carries the centralizer of the Cartan (which contains it).
    """

    algebra: LieSuperalgebra
    spaces: dict

    def roots(self, parity=None, nonzero=True):
        out = []
        for r, (_, par) in self.spaces.items():
            if nonzero and r.is_zero:
                continue
            if parity is not None and par != parity:
                continue
            out.append(r)
        return sorted(out, key=Root.sort_key)

    def root_multiset(self, parity=None, nonzero=True):
        """Roots with multiplicity = dim of their space, sorted."""
        out = []
        for r in self.roots(parity=parity, nonzero=nonzero):
            out.extend([r.values] * self.spaces[r][0].dim)
        return sorted(out)

    def space(self, root: Root) -> Subspace:
        return self.spaces[root][0]

    @property
    def zero_root_space(self) -> Subspace:
        return self.spaces[Root((ZERO,) * len(self.algebra.cartan))][0]


def _charpoly_exact(m: Mat):
    """Characteristic polynomial det(xI - m), ascending coefficients.

    Uses the Faddeev-LeVerrier recurrence, which is division-free apart
    from exact divisions by integers.
    """
    n = m.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = QQ(1)
    mk = Mat.identity(n)
    for k in range(1, n + 1):
        if k > 1:
            mk = (m @ mk) + Mat.diagonal([coeffs[n - k + 1]] * n)
        coeffs[n - k] = -(m.trace_product(mk)) / k
    return coeffs


def _rational_roots(coeffs):
    """All rational roots of the polynomial, via exact factorization."""
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.S.Zero
    for i, c in enumerate(coeffs):
        if c:
            num, den = int(c.numerator), int(c.denominator)
            expr += sympy.Rational(num, den) * x**i
    roots = []
    for fac, _mult in sympy.factor_list(sympy.Poly(expr, x))[1]:
        if fac.degree() == 1:
            r = sympy.Rational(-fac.nth(0), fac.nth(1))
            roots.append(QQ(int(r.p), int(r.q)))
    return sorted(set(roots))


def _eigen_split(m: Mat):
    """Split the full space into rational eigenspaces of m.

    Returns a list of (eigenvalue, kernel-basis Subspace) pairs; raises
    NotDiagonalizableError unless the eigenspaces fill the whole space.
    """
    n = m.nrows
    if n == 0:
        return []
    out = []
    total = 0
    for theta in _rational_roots(_charpoly_exact(m)):
        shifted = m + Mat.diagonal([-theta] * n)
        ker = kernel_basis(shifted)
        if ker.dim:
            out.append((theta, ker))
            total += ker.dim
    if total != n:
        raise NotDiagonalizableError(
            f"adjoint action is not diagonalizable over Q ({total} of {n} dimensions split)"
        )
    return out


def _lift_coordinate_subspace(parent: Subspace, coord_sub: Subspace, ambient: int) -> Subspace:
    rows = []
    for r in coord_sub.echelon().basis_rows():
        rows.append(parent.from_coords(vec_to_dense(r, parent.dim)))
    return Subspace.span(ambient, rows)


def _root_decomposition(g: LieSuperalgebra) -> RootDecomposition:
    if not g.cartan:
        raise ValueError("algebra has no Cartan basis attached")
    pieces = []
    for par, idxs in ((EVEN, g.even_indices), (ODD, g.odd_indices)):
        if idxs:
            sub = Subspace.span(g.dim, [{i: QQ(1)} for i in idxs])
            pieces.append((sub, par, ()))
    for h in g.cartan:
        ad = g.ad_matrix(h)
        refined = []
        for sub, par, vals in pieces:
            b = restrict_to_subspace(ad, sub)
            for theta, ker in _eigen_split(b):
                refined.append((_lift_coordinate_subspace(sub, ker, g.dim), par, vals + (theta,)))
        pieces = refined
    spaces = {}
    for sub, par, vals in pieces:
        root = Root(vals)
        if root in spaces:
            if root.is_zero:
                raise ValueError("Cartan has a nonzero odd centralizer; not supported")
            raise ValueError(f"root {root} occurs in both parities")
        spaces[root] = (sub, par)
    assert sum(s.dim for s, _ in spaces.values()) == g.dim
    return RootDecomposition(algebra=g, spaces=spaces)
