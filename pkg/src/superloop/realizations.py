"""Concrete matrix families: the special linear superalgebras sl(m|n)
and the orthosymplectic family C(m) = osp(2|2m-2).

Both constructors return the abstract structure-constant algebra
together with a ``MatrixRealization`` that remembers the ambient block
shapes, the basis matrices, and the diagonal coordinate functionals
(the ``eps``/``delta`` labels used to name roots).

Basis layout (both families): root vectors first, Cartan basis last,
with the even-central-direction generator ``z`` as the very last basis
element.  This makes ``dim - 1`` the canonical index of z.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .linalg import Mat, Subspace, kernel_basis
from .scalars import QQ, ZERO, qq
from .superalgebra import EVEN, ODD, LieSuperalgebra, from_matrices

__all__ = [
    "MatrixRealization",
    "CenterSplit",
    "build_sl",
    "build_C",
    "supertrace",
    "center_split",
    "triangular",
    "odd_bracket_center_witness",
    "killing_form",
]


@dataclass
class MatrixRealization:
    """Ambient matrix data for a constructed superalgebra.

    ``eps`` and ``delta`` hold the values of the diagonal coordinate
    functionals on the Cartan basis (in the algebra's Cartan order), so
    roots computed abstractly can be matched against their classical
    names.  ``unit_index`` maps an off-diagonal matrix position to the
    basis index realized by that matrix unit (sl family only).
    """

    family: str
    params: tuple
    split: tuple
    matrices: list
    eps: list
    delta: list
    unit_index: dict
    algebra: object = None

    @property
    def size(self) -> int:
        return self.split[0] + self.split[1]

    def functional(self, kind: str, i: int) -> tuple:
        return (self.eps if kind == "eps" else self.delta)[i]


@dataclass
class CenterSplit:
    """Decomposition g_even = [g_even, g_even] + (center of g_even).

    ``z`` is the canonical generator of the (one-dimensional) center of
    the even part; ``ss_indices`` are the basis indices spanning the
    derived subalgebra of the even part; ``h_ss`` is the part of the
    Cartan basis lying in it.
    """

    z: dict
    z_index: int
    ss_indices: tuple
    h_ss: tuple


def _unit(size: int, i: int, j: int, c=1) -> Mat:
    return Mat(size, size, {(i, j): qq(c)})


# ---------------------------------------------------------------------------
# sl(m|n)


def build_sl(m: int, n: int):
    """Supertraceless (m+n) x (m+n) matrices, with parity by block.

    Basis: off-diagonal matrix units row-major, then the Cartan basis
    (consecutive diagonal differences within each block, then z =
    diag(n,...,n, m,...,m) scaled primitive).  For m = n the element z
    is the identity and is flagged as a central direction.
    """
    if m < 1 or n < 1:
        raise ValueError("block sizes must be at least 1")
    if m + n < 3:
        raise ValueError(f"sl({m},{n}) is out of range: need m + n >= 3")
    size = m + n
    mats, parity, zdeg, names = [], [], [], []
    pos, neg = [], []
    unit_index = {}
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            idx = len(mats)
            unit_index[(i, j)] = idx
            mats.append(_unit(size, i, j))
            parity.append(EVEN if (i < m) == (j < m) else ODD)
            zdeg.append(1 if (i < m <= j) else (-1 if (j < m <= i) else 0))
            names.append(f"E({i + 1},{j + 1})")
            (pos if i < j else neg).append(idx)
    cartan = []
    for i in range(m - 1):
        cartan.append(len(mats))
        mats.append(_unit(size, i, i) - _unit(size, i + 1, i + 1))
        parity.append(EVEN)
        zdeg.append(0)
        names.append(f"H({i + 1})")
    for j in range(n - 1):
        cartan.append(len(mats))
        mats.append(_unit(size, m + j, m + j) - _unit(size, m + j + 1, m + j + 1))
        parity.append(EVEN)
        zdeg.append(0)
        names.append(f"K({j + 1})")
    g0 = gcd(m, n)
    cartan.append(len(mats))
    mats.append(Mat.diagonal([QQ(n // g0)] * m + [QQ(m // g0)] * n))
    parity.append(EVEN)
    zdeg.append(0)
    names.append("z")
    dim = len(mats)
    assert dim == size * size - 1
    g = from_matrices(
        mats,
        parity,
        cartan=tuple(cartan),
        pos=tuple(pos),
        neg=tuple(neg),
        zdeg=zdeg,
        center_index=dim - 1 if m == n else None,
        basis_names=names,
        meta={
            "name": f"sl({m},{n})",
            "family": "sl",
            "m": m,
            "n": n,
            "has_center": m == n,
        },
    )
    eps = [tuple(mats[c][i, i] for c in cartan) for i in range(m)]
    delta = [tuple(mats[c][m + j, m + j] for c in cartan) for j in range(n)]
    real = MatrixRealization(
        family="sl",
        params=(m, n),
        split=(m, n),
        matrices=mats,
        eps=eps,
        delta=delta,
        unit_index=unit_index,
        algebra=g,
    )
    return g, real


# ---------------------------------------------------------------------------
# C(m) = osp(2|2k), k = m - 1, inside sl(2|2k)


def build_C(m: int):
    """The orthosymplectic family with even part C ⊕ sp(2m-2).

    Realized inside the supertraceless matrices of block split (2, 2k),
    k = m - 1.  The even part is spanned by z = E11 - E22 plus the
    symplectic algebra acting on the lower block; the odd part consists
    of paired first-row/second-column (degree +1) and second-row/first-
    column (degree -1) families.
    """
    if m < 3:
        raise ValueError(f"C({m}) is out of range: need m >= 3")
    k = m - 1
    size = 2 + 2 * k
    up = lambda a: 2 + a           # rows of the "upper" symplectic half
    dn = lambda a: 2 + k + a       # rows of the "lower" symplectic half
    mats, parity, zdeg, names = [], [], [], []
    pos, neg = [], []

    def push(mat, par, deg, name, sign=0):
        idx = len(mats)
        mats.append(mat)
        parity.append(par)
        zdeg.append(deg)
        names.append(name)
        if sign > 0:
            pos.append(idx)
        elif sign < 0:
            neg.append(idx)
        return idx

    # even: gl(k) embedded as A -> diag-block [[A, 0], [0, -A^T]]
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            mat = _unit(size, up(a), up(b)) - _unit(size, dn(b), dn(a))
            push(mat, EVEN, 0, f"A({a + 1},{b + 1})", sign=1 if a < b else -1)
    # even: symmetric B family (upper-right of the symplectic block)
    for a in range(k):
        for b in range(a, k):
            mat = _unit(size, up(a), dn(b))
            if a != b:
                mat = mat + _unit(size, up(b), dn(a))
            push(mat, EVEN, 0, f"B({a + 1},{b + 1})", sign=1)
    # even: symmetric C family (lower-left of the symplectic block)
    for a in range(k):
        for b in range(a, k):
            mat = _unit(size, dn(a), up(b))
            if a != b:
                mat = mat + _unit(size, dn(b), up(a))
            push(mat, EVEN, 0, f"C({a + 1},{b + 1})", sign=-1)
    # odd, degree +1: first row (A|B), second column (-B|A)^T
    for i in range(k):
        push(_unit(size, 0, up(i)) + _unit(size, dn(i), 1), ODD, 1, f"u+({i + 1})", sign=1)
    for i in range(k):
        push(_unit(size, 0, dn(i)) - _unit(size, up(i), 1), ODD, 1, f"v+({i + 1})", sign=1)
    # odd, degree -1: second row (A|B), first column (-B|A)^T
    for i in range(k):
        push(_unit(size, 1, up(i)) + _unit(size, dn(i), 0), ODD, -1, f"u-({i + 1})", sign=-1)
    for i in range(k):
        push(_unit(size, 1, dn(i)) - _unit(size, up(i), 0), ODD, -1, f"v-({i + 1})", sign=-1)
    # Cartan: d_a = E_{up(a),up(a)} - E_{dn(a),dn(a)}, then z = E11 - E22
    cartan = []
    for a in range(k):
        cartan.append(push(_unit(size, up(a), up(a)) - _unit(size, dn(a), dn(a)), EVEN, 0, f"d({a + 1})"))
    cartan.append(push(_unit(size, 0, 0) - _unit(size, 1, 1), EVEN, 0, "z"))
    dim = len(mats)
    assert dim == 1 + k * (2 * k + 1) + 4 * k
    g = from_matrices(
        mats,
        parity,
        cartan=tuple(cartan),
        pos=tuple(pos),
        neg=tuple(neg),
        zdeg=zdeg,
        center_index=None,
        basis_names=names,
        meta={
            "name": f"C({m})",
            "family": "C",
            "m": m,
            "k": k,
            "has_center": False,
        },
    )
    eps = [tuple(mats[c][0, 0] for c in cartan)]
    delta = [tuple(mats[c][up(a), up(a)] for c in cartan) for a in range(k)]
    real = MatrixRealization(
        family="C",
        params=(m,),
        split=(2, 2 * k),
        matrices=mats,
        eps=eps,
        delta=delta,
        unit_index={},
        algebra=g,
    )
    return g, real


# ---------------------------------------------------------------------------
# supertrace


def supertrace(x: Mat, split):
    """Trace of the upper-left block minus trace of the lower-right one."""
    p, q = split
    if x.nrows != p + q or x.ncols != p + q:
        raise ValueError(f"matrix size {x.nrows}x{x.ncols} does not match split {split}")
    s = ZERO
    for i in range(p):
        s += x[i, i]
    for i in range(p, p + q):
        s -= x[i, i]
    return s


# ---------------------------------------------------------------------------
# center of the even part / semisimple part


def center_split(g: LieSuperalgebra) -> CenterSplit:
    """Split the even part into its derived subalgebra and its center.

    The center of the even part is computed as the joint kernel of the
    even adjoint action and must be one-dimensional; the derived
    subalgebra of the even part must be spanned by basis elements.
    """
    even = g.even_indices
    ne = len(even)
    # columns: coefficients over the even basis; rows: all bracket outputs
    ent = {}
    for a, i in enumerate(even):
        for b, j in enumerate(even):
            for kk, c in g.bracket_table.get((i, j), {}).items():
                ent[(b * g.dim + kk, a)] = c
    ker = kernel_basis(Mat(ne * g.dim, ne, ent))
    if ker.dim != 1:
        raise ValueError(f"center of the even part has dimension {ker.dim}, expected 1")
    coeffs = ker.basis[0]
    z = {even[a]: c for a, c in coeffs.items()}
    # primitive integer normalization, lowest-index coefficient positive
    den = 1
    for c in z.values():
        den = den * int(c.denominator) // gcd(den, int(c.denominator))
    z = {i: c * den for i, c in z.items()}
    num = 0
    for c in z.values():
        num = gcd(num, abs(int(c.numerator)))
    z = {i: c / num for i, c in z.items()}
    if z[min(z)] < 0:
        z = {i: -c for i, c in z.items()}
    z_index = min(z) if len(z) == 1 and z[min(z)] == 1 else None
    # derived subalgebra of the even part
    vecs = [g.bracket_table[(i, j)] for i in even for j in even if (i, j) in g.bracket_table]
    der = Subspace.span(g.dim, vecs)
    ss = []
    for row in der.basis:
        if len(row) != 1:
            raise ValueError("derived subalgebra of the even part is not spanned by basis elements")
        ((idx, c),) = row.items()
        assert c == 1
        ss.append(idx)
    ss = tuple(sorted(ss))
    if len(ss) + 1 != ne or any(i in ss for i in z):
        raise ValueError("even part does not split as derived subalgebra plus center")
    h_ss = tuple(i for i in g.cartan if i in set(ss))
    return CenterSplit(z=z, z_index=z_index, ss_indices=ss, h_ss=h_ss)


# ---------------------------------------------------------------------------
# triangular decomposition


def triangular(g: LieSuperalgebra):
    """Partition of the basis into negative / Cartan / positive parts.

    Uses the positive system attached by the constructors and verifies
    it against the computed root decomposition: the Cartan spans the
    zero-root space, every root vector is a basis element, and the
    positive and negative root sets are exact negatives of each other.
    """
    rd = g.root_decomposition()
    cartan_span = Subspace.span(g.dim, [{i: QQ(1)} for i in g.cartan])
    if rd.zero_root_space != cartan_span:
        raise ValueError("Cartan basis does not span the zero-root space")
    if g.pos and g.neg:
        pos, neg = set(g.pos), set(g.neg)
    else:
        # fallback order for hand-built algebras: first nonzero value decides
        pos, neg = set(), set()
        for root in rd.roots():
            lead = next(v for v in root.values if v)
            target = pos if lead > 0 else neg
            for row in rd.space(root).basis:
                target.update(row.keys())
    index_root = {}
    for root in rd.roots():
        for row in rd.space(root).basis:
            if len(row) != 1:
                raise ValueError("a root space is not spanned by basis elements")
            ((idx, _),) = row.items()
            index_root[idx] = root
    if set(index_root) != pos | neg:
        raise ValueError("positive/negative sets do not cover the root vectors")
    pos_roots = {index_root[i] for i in pos}
    neg_roots = {index_root[i] for i in neg}
    if {(-r) for r in pos_roots} != neg_roots:
        raise ValueError("positive system is not closed under negation")
    return tuple(sorted(neg)), tuple(g.cartan), tuple(sorted(pos))


# ---------------------------------------------------------------------------
# structural witnesses


def odd_bracket_center_witness(g: LieSuperalgebra, z_index=None):
    """A pair of odd basis elements whose bracket has a nonzero
    z-component, witnessing that brackets of odd pairs escape the
    derived subalgebra of the even part.
    """
    if z_index is None:
        z_index = g.dim - 1
    for i in g.odd_indices:
        for j in g.odd_indices:
            v = g.bracket_table.get((i, j))
            if v and v.get(z_index):
                return i, j, dict(v)
    raise ValueError("no odd pair brackets onto the center direction")


def killing_form(g: LieSuperalgebra, indices=None) -> Mat:
    """Gram matrix of the supertrace form of the adjoint action on the
    span of the given basis indices (default: the whole algebra).

    The supertrace weights each diagonal contribution by the parity sign
    of the basis direction it runs over; with a plain trace the form
    would not be invariant for the super bracket.
    """
    if indices is None:
        indices = tuple(range(g.dim))
    sub = g.restricted(indices)
    ads = [sub.ad_matrix(i) for i in range(sub.dim)]
    par = sub.parity
    ent = {}
    for a in range(sub.dim):
        for b in range(sub.dim):
            # the form is supersymmetric (antisymmetric on odd pairs),
            # so both triangles are computed rather than mirrored
            x = ZERO
            for k, l, v in ads[a].entries():
                w = ads[b][l, k]
                if w:
                    x += -v * w if par[k] else v * w
            if x:
                ent[(a, b)] = x
    return Mat(sub.dim, sub.dim, ent)
