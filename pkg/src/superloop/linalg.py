"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``{index: scalar}`` with no stored zeros.  Matrices
keep both a row-major and a column-major sparse view so that products
and applications are cheap in either orientation.  Subspaces are stored
in canonical reduced row echelon form, which makes subspace equality a
plain representation equality.

Everything here is treated as immutable after construction; operations
return fresh objects.
"""

from __future__ import annotations

from .scalars import QQ, ZERO, qq

Vec = dict  # {index: scalar}


# ---------------------------------------------------------------------------
# sparse vector helpers


def vec(entries=None) -> Vec:
    """Build a sparse vector from a dict or iterable of (index, value)."""
    out = {}
    if entries:
        items = entries.items() if isinstance(entries, dict) else entries
        for i, x in items:
            x = qq(x)
            if x:
                out[i] = x
    return out


def vec_from_dense(values) -> Vec:
    return {i: qq(x) for i, x in enumerate(values) if qq(x)}


def vec_to_dense(v: Vec, n: int) -> list:
    out = [ZERO] * n
    for i, x in v.items():
        out[i] = x
    return out


def vadd_scaled(target: Vec, src: Vec, c) -> Vec:
    """In-place target += c * src (helper for elimination loops)."""
    if not c:
        return target
    for i, x in src.items():
        y = target.get(i, ZERO) + c * x
        if y:
            target[i] = y
        else:
            target.pop(i, None)
    return target


def vscale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def vsub(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    return vadd_scaled(out, v, QQ(-1))


def vdot(u: Vec, v: Vec):
    if len(v) < len(u):
        u, v = v, u
    s = ZERO
    for i, x in u.items():
        y = v.get(i)
        if y is not None:
            s += x * y
    return s


def vkey(v: Vec) -> tuple:
    """Canonical hashable form of a sparse vector."""
    return tuple(sorted(v.items()))


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Immutable sparse matrix with exact rational entries."""

    __slots__ = ("nrows", "ncols", "rows", "cols")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        rows: dict = {}
        cols: dict = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (i, j), x in items:
                x = qq(x)
                if not x:
                    continue
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise IndexError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                rows.setdefault(i, {})[j] = x
                cols.setdefault(j, {})[i] = x
        self.rows = rows
        self.cols = cols

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, dense_rows, ncols=None) -> "Mat":
        dense_rows = list(dense_rows)
        nrows = len(dense_rows)
        if ncols is None:
            ncols = len(dense_rows[0]) if dense_rows else 0
        ent = {}
        for i, row in enumerate(dense_rows):
            for j, x in enumerate(row):
                if qq(x):
                    ent[(i, j)] = qq(x)
        return cls(nrows, ncols, ent)

    @classmethod
    def from_row_vecs(cls, row_vecs, ncols) -> "Mat":
        row_vecs = list(row_vecs)
        ent = {}
        for i, rv in enumerate(row_vecs):
            for j, x in rv.items():
                ent[(i, j)] = x
        return cls(len(row_vecs), ncols, ent)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Mat":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, values) -> "Mat":
        values = list(values)
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)})

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, ZERO)

    def row(self, i: int) -> Vec:
        return dict(self.rows.get(i, {}))

    def col(self, j: int) -> Vec:
        return dict(self.cols.get(j, {}))

    def entries(self):
        for i, row in self.rows.items():
            for j, x in row.items():
                yield i, j, x

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for i, j, x in self.entries():
            out[i][j] = x
        return out

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        ent = {(i, j): x for i, j, x in self.entries()}
        for i, j, x in other.entries():
            ent[(i, j)] = ent.get((i, j), ZERO) + x
        return Mat(self.nrows, self.ncols, ent)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(QQ(-1))

    def __neg__(self) -> "Mat":
        return self.scale(QQ(-1))

    def scale(self, c) -> "Mat":
        c = qq(c)
        if not c:
            return Mat(self.nrows, self.ncols)
        return Mat(self.nrows, self.ncols, {(i, j): c * x for i, j, x in self.entries()})

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        ent: dict = {}
        for i, arow in self.rows.items():
            acc: dict = {}
            for k, a in arow.items():
                brow = other.rows.get(k)
                if brow:
                    vadd_scaled(acc, brow, a)
            for j, x in acc.items():
                ent[(i, j)] = x
        return Mat(self.nrows, other.ncols, ent)

    def apply(self, v: Vec) -> Vec:
        """Matrix times sparse column vector."""
        out: dict = {}
        for j, x in v.items():
            colj = self.cols.get(j)
            if colj:
                vadd_scaled(out, colj, x)
        return out

    def apply_row(self, v: Vec) -> Vec:
        """Sparse row vector times matrix."""
        out: dict = {}
        for i, x in v.items():
            rowi = self.rows.get(i)
            if rowi:
                vadd_scaled(out, rowi, x)
        return out

    def transpose(self) -> "Mat":
        return Mat(self.ncols, self.nrows, {(j, i): x for i, j, x in self.entries()})

    def trace(self):
        s = ZERO
        for i, row in self.rows.items():
            x = row.get(i)
            if x is not None:
                s += x
        return s

    def trace_product(self, other: "Mat"):
        """trace(self @ other) without forming the product."""
        if self.ncols != other.nrows or self.nrows != other.ncols:
            raise ValueError("shape mismatch for trace product")
        s = ZERO
        for i, row in self.rows.items():
            for j, x in row.items():
                y = other.rows.get(j, {}).get(i)
                if y is not None:
                    s += x * y
        return s

    # -- reshaping ----------------------------------------------------------

    def flatten(self) -> Vec:
        """Row-major flattening of a matrix into a sparse vector."""
        return {i * self.ncols + j: x for i, j, x in self.entries()}

    @classmethod
    def unflatten(cls, v: Vec, nrows: int, ncols: int) -> "Mat":
        return cls(nrows, ncols, {(i // ncols, i % ncols): x for i, x in v.items()})

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted(((i, j), x) for i, j, x in self.entries()))))

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def _check_shape(self, other: "Mat"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")


# ---------------------------------------------------------------------------
# incremental reduced row echelon form


class Echelon:
    """Incremental reduced row echelon basis of a growing span.

    Rows are kept fully reduced at all times: each stored row has
    leading coefficient 1 at its pivot column, and every other stored
    row has a zero in that column.  Consequently the stored rows are
    exactly the canonical reduced-echelon basis of the span, and the
    coordinates of a member vector can be read off at the pivots.
    """

    __slots__ = ("ambient", "pivot_rows")

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.pivot_rows: dict = {}  # pivot column -> row vec

    @property
    def dim(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, v: Vec) -> Vec:
        """Residual of v after eliminating all known pivots (fresh dict)."""
        out = dict(v)
        for c, row in self.pivot_rows.items():
            x = out.get(c)
            if x:
                vadd_scaled(out, row, -x)
        return out

    def coords(self, v: Vec):
        """(residual, {pivot_col: coeff}) with v = residual + sum coeff*row."""
        coeffs = {}
        out = dict(v)
        for c, row in self.pivot_rows.items():
            x = out.get(c)
            if x:
                coeffs[c] = x
                vadd_scaled(out, row, -x)
        return out, coeffs

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def insert(self, v: Vec):
        """Add v to the span.  Returns the normalized new row, or None."""
        res = self.reduce(v)
        if not res:
            return None
        p = min(res.keys())
        inv = 1 / qq(res[p])  # qq: exact for int input, rejects floats
        row = {i: x * inv for i, x in res.items()}
        # back-eliminate the new pivot from all existing rows
        for c, old in self.pivot_rows.items():
            x = old.get(p)
            if x:
                vadd_scaled(old, row, -x)
        self.pivot_rows[p] = row
        return dict(row)

    def basis_rows(self) -> list:
        """Canonical basis rows sorted by pivot column."""
        return [dict(self.pivot_rows[c]) for c in sorted(self.pivot_rows)]

    def pivots(self) -> list:
        return sorted(self.pivot_rows)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of QQ^n in canonical reduced-row-echelon form.

    Equality of Subspace objects is equality of subspaces.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_cols", "_pivot_index")

    def __init__(self, ambient_dim: int, canonical_rows=(), pivot_cols=None, _trusted=False):
        if not _trusted:
            raise TypeError("use Subspace.span / Subspace.zero / Subspace.full")
        self.ambient_dim = ambient_dim
        self.basis = tuple(canonical_rows)
        self.pivot_cols = tuple(pivot_cols or ())
        self._pivot_index = {c: k for k, c in enumerate(self.pivot_cols)}

    @classmethod
    def _from_echelon(cls, ech: Echelon) -> "Subspace":
        return cls(ech.ambient, ech.basis_rows(), ech.pivots(), _trusted=True)

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.insert(v)
        return cls._from_echelon(ech)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), (), _trusted=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        rows = [{i: QQ(1)} for i in range(ambient_dim)]
        return cls(ambient_dim, rows, tuple(range(ambient_dim)), _trusted=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for c, row in zip(self.pivot_cols, self.basis):
            ech.pivot_rows[c] = dict(row)
        return ech

    def reduce(self, v: Vec) -> Vec:
        out = dict(v)
        for c, row in zip(self.pivot_cols, self.basis):
            x = out.get(c)
            if x:
                vadd_scaled(out, row, -x)
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def coords(self, v: Vec):
        """Coordinates of v in the canonical basis; None if v is outside."""
        out = dict(v)
        coeffs = [ZERO] * self.dim
        for k, (c, row) in enumerate(zip(self.pivot_cols, self.basis)):
            x = out.get(c)
            if x:
                coeffs[k] = x
                vadd_scaled(out, row, -x)
        if out:
            return None
        return coeffs

    def from_coords(self, coeffs) -> Vec:
        out: dict = {}
        for c, row in zip(coeffs, self.basis):
            vadd_scaled(out, row, c)
        return out

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def sum(self, other: "Subspace") -> "Subspace":
        ech = self.echelon()
        for r in other.basis:
            ech.insert(r)
        return Subspace._from_echelon(ech)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x in self with x also in other: write x = sum c_k b_k (self basis),
        # require reduction by other to vanish; solve for the c_k.
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")
        residuals = [other.reduce(r) for r in self.basis]
        # coefficient vectors c with sum c_k residual_k = 0
        m = Mat(self.ambient_dim, max(self.dim, 1),
                {(i, k): x for k, r in enumerate(residuals) for i, x in r.items()})
        ker = kernel_basis(m)
        vecs = []
        for coeff_row in ker.basis:
            out: dict = {}
            for k, c in coeff_row.items():
                if k < self.dim:
                    vadd_scaled(out, self.basis[k], c)
            vecs.append(out)
        return Subspace.span(self.ambient_dim, vecs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivot_cols == other.pivot_cols
            and all(a == b for a, b in zip(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple(vkey(r) for r in self.basis)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


# ---------------------------------------------------------------------------
# spec operations


def rref(m: Mat):
    """Reduced row echelon form and rank of a matrix (exact)."""
    ech = Echelon(m.ncols)
    for i in range(m.nrows):
        row = m.rows.get(i)
        if row:
            ech.insert(row)
    rows = ech.basis_rows()
    ent = {}
    for i, r in enumerate(rows):
        for j, x in r.items():
            ent[(i, j)] = x
    return Mat(m.nrows, m.ncols, ent), len(rows)


def rank(m: Mat) -> int:
    return rref(m)[1]


def kernel_basis(m: Mat) -> Subspace:
    """Canonical basis of the right null space {x : m x = 0}."""
    ech = Echelon(m.ncols)
    for i in range(m.nrows):
        row = m.rows.get(i)
        if row:
            ech.insert(row)
    pivots = set(ech.pivot_rows)
    free = [j for j in range(m.ncols) if j not in pivots]
    vecs = []
    for f in free:
        v = {f: QQ(1)}
        for p, row in ech.pivot_rows.items():
            x = row.get(f)
            if x:
                v[p] = -x
        vecs.append(v)
    return Subspace.span(m.ncols, vecs)


class SpannedClosure:
    """Result of a closure computation that remembers how it was built.

    ``raw_basis`` is a list of actual vectors whose span is the closure,
    and ``parents[k] = (parent_index, map_index)`` records that
    ``raw_basis[k] = maps[map_index] @ raw_basis[parent_index]``
    (``None`` for seed vectors).  This provenance is what lets callers
    replay the same construction inside another module when building
    intertwiners.
    """

    __slots__ = ("subspace", "raw_basis", "parents")

    def __init__(self, subspace: Subspace, raw_basis, parents):
        self.subspace = subspace
        self.raw_basis = raw_basis
        self.parents = parents


def closure_with_paths(maps, seed_vectors, ambient_dim: int) -> SpannedClosure:
    ech = Echelon(ambient_dim)
    raw, parents, queue = [], [], []
    for v in seed_vectors:
        if ech.insert(v) is not None:
            raw.append(dict(v))
            parents.append(None)
            queue.append((len(raw) - 1, dict(v)))
    qi = 0
    while qi < len(queue):
        idx, v = queue[qi]
        qi += 1
        for mi, m in enumerate(maps):
            w = m.apply(v)
            if w and ech.insert(w) is not None:
                raw.append(w)
                parents.append((idx, mi))
                queue.append((len(raw) - 1, w))
    return SpannedClosure(Subspace._from_echelon(ech), raw, parents)


def closure_under(maps, seed) -> Subspace:
    """Smallest subspace containing the seed and invariant under each map.

    ``seed`` may be a Subspace or an iterable of sparse vectors (the
    latter requires at least one map, to fix the ambient dimension).
    """
    maps = list(maps)
    if isinstance(seed, Subspace):
        vectors, ambient = list(seed.basis), seed.ambient_dim
    else:
        vectors = [dict(v) for v in seed]
        if not maps:
            raise ValueError("seed vectors need at least one map to fix the dimension")
        ambient = maps[0].nrows
    for m in maps:
        if m.nrows != ambient or m.ncols != ambient:
            raise ValueError("maps must be square of the ambient dimension")
    return closure_with_paths(maps, vectors, ambient).subspace


def algebra_span(gens) -> Subspace:
    """Span of all words in the generators (including the empty word).

    Lives in the n*n-dimensional space of matrices, flattened row-major.
    The result is closed under matrix products.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("algebra_span needs at least one matrix to fix the dimension")
    n = gens[0].nrows
    for g in gens:
        if g.nrows != n or g.ncols != n:
            raise ValueError("generators must be square and of equal size")
    ech = Echelon(n * n)
    ident = Mat.identity(n)
    words = [ident]
    ech.insert(ident.flatten())
    qi = 0
    while qi < len(words):
        w = words[qi]
        qi += 1
        for g in gens:
            prod = g @ w
            if ech.insert(prod.flatten()) is not None:
                words.append(prod)
    return Subspace._from_echelon(ech)


def algebra_span_dim(gens) -> int:
    return algebra_span(gens).dim


def invert(m: Mat):
    """Exact inverse of a square matrix, or None if singular."""
    if m.nrows != m.ncols:
        raise ValueError("only square matrices can be inverted")
    n = m.nrows
    ech = Echelon(2 * n)
    for i in range(n):
        row = dict(m.rows.get(i, {}))
        row[n + i] = QQ(1)
        ech.insert(row)
    pivs = ech.pivots()
    if [p for p in pivs if p < n] != list(range(n)):
        return None
    ent = {}
    for p in pivs:
        if p < n:
            for j, x in ech.pivot_rows[p].items():
                if j >= n:
                    ent[(p, j - n)] = x
    return Mat(n, n, ent)


def restrict_to_subspace(m: Mat, sub: Subspace) -> Mat:
    """Matrix of m restricted to an m-invariant subspace, in its basis.

    Raises ValueError if the subspace is not actually invariant.
    """
    ent = {}
    for k, row in enumerate(sub.basis):
        image = m.apply(row)
        coeffs = sub.coords(image)
        if coeffs is None:
            raise ValueError("subspace is not invariant under the map")
        for i, c in enumerate(coeffs):
            if c:
                ent[(i, k)] = c
    return Mat(sub.dim, sub.dim, ent)


def stack_rows(mats) -> Mat:
    """Vertically stack matrices with equal column counts."""
    mats = list(mats)
    ncols = mats[0].ncols
    ent = {}
    off = 0
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("column mismatch in stack")
        for i, j, x in m.entries():
            ent[(off + i, j)] = x
        off += m.nrows
    return Mat(off, ncols, ent)
