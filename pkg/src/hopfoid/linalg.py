"""Sparse exact linear algebra over a cyclotomic field.

Vectors are dicts {index: scalar} with no explicit zeros.  Matrices are
column-major (column j = image of basis vector j), which matches how
linear maps are assembled everywhere else in the package.  Echelon forms
use the first nonzero in column order as pivot, so every derived object
(kernel, quotient section, rank) is deterministic and canonical.

Tensor index convention, used globally: the flattened index of
e_i (x) e_j in a product of spaces of dimensions (n1, n2) is i*n2 + j,
i.e. the leftmost factor is the most significant digit.
"""

from __future__ import annotations


def vadd(dst, src, c=None):
    """dst += c*src (in place), dropping entries that cancel to zero."""
    if c is None:
        for k, v in src.items():
            w = dst.get(k)
            if w is None:
                dst[k] = v
            else:
                w = w + v
                if w:
                    dst[k] = w
                else:
                    del dst[k]
    else:
        if not c:
            return dst
        for k, v in src.items():
            v = c * v
            w = dst.get(k)
            if w is None:
                dst[k] = v
            else:
                w = w + v
                if w:
                    dst[k] = w
                else:
                    del dst[k]
    return dst


def vscale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vneg(v):
    return {k: -x for k, x in v.items()}


def vsub(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = -v
        else:
            w = w - v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def vtensor(v1, v2, n2):
    """Tensor of sparse vectors; second-factor dimension n2."""
    out = {}
    for i, a in v1.items():
        base = i * n2
        for j, b in v2.items():
            out[base + j] = a * b
    return out


def vcanon(v):
    """Key-sorted copy, for reproducible serialization."""
    return {k: v[k] for k in sorted(v)}


class Mat:
    """Sparse exact matrix, column-major."""

    def __init__(self, field, nrows, ncols, cols=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [dict() for _ in range(ncols)] if cols is None else cols

    @staticmethod
    def identity(field, n):
        return Mat(field, n, n, [{i: field.one} for i in range(n)])

    @staticmethod
    def from_cols(field, nrows, cols):
        return Mat(field, nrows, len(cols), [dict(c) for c in cols])

    @staticmethod
    def from_rows(field, ncols, rows):
        cols = [dict() for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, v in row.items():
                if v:
                    cols[j][i] = v
        return Mat(field, len(rows), ncols, cols)

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def apply(self, vec):
        out = {}
        for j, c in vec.items():
            vadd(out, self.cols[j], c)
        return out

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            return Mat(self.field, self.nrows, other.ncols,
                       [self.apply(c) for c in other.cols])
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.cols == other.cols)

    def tensor(self, other):
        n1, n2 = self.nrows, other.nrows
        cols = []
        for c1 in self.cols:
            for c2 in other.cols:
                cols.append(vtensor(c1, c2, n2))
        return Mat(self.field, n1 * n2, self.ncols * other.ncols, cols)

    def transpose(self):
        return Mat.from_rows(self.field, self.nrows,
                             [dict(c) for c in self.cols])

    def rank(self):
        piv, _ = rref(self.rows())
        return len(piv)

    def kernel(self):
        """Null space {v : M v = 0} as a canonical Subspace."""
        pivots, rows = rref(self.rows())
        pivset = set(pivots)
        basis = []
        pivot_rows = dict(zip(pivots, rows))
        for j in range(self.ncols):
            if j in pivset:
                continue
            vec = {j: self.field.one}
            for p in pivots:
                c = pivot_rows[p].get(j)
                if c:
                    vec[p] = -c
            basis.append(vec)
        return Subspace.from_spanning(self.field, self.ncols, basis)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        n = self.nrows
        rows = self.rows()
        aug = [dict(rows[i]) for i in range(n)]
        for i in range(n):
            aug[i][n + i] = self.field.one
        pivots, red = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        inv_rows = [{j - n: v for j, v in red[i].items() if j >= n}
                    for i in range(n)]
        return Mat.from_rows(self.field, n, inv_rows)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def to_json(self):
        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "cols": [[[i, v.to_json()] for i, v in sorted(c.items())]
                     for c in self.cols],
        }


def rref(rows):
    """Reduced row echelon form of sparse rows.

    Returns (pivot columns, rows), pivots strictly increasing, each pivot
    entry 1 and the only nonzero in its column.  Rows are consumed in the
    given order; the pivot of each new row is its leading (smallest)
    column after reduction, which makes the result independent of the
    original row order once fully reduced.
    """
    pivot_rows = {}  # pivot col -> row dict
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            prow = pivot_rows.get(lead)
            if prow is None:
                c = row[lead]
                if c != 1:
                    inv = c.inverse()
                    row = {k: inv * v for k, v in row.items()}
                pivot_rows[lead] = row
                break
            vadd(row, prow, -row[lead])
    pivots = sorted(pivot_rows)
    # back-substitute to clear pivot columns above and below
    for p in reversed(pivots):
        prow = pivot_rows[p]
        for p2 in pivots:
            if p2 == p:
                continue
            r2 = pivot_rows[p2]
            c = r2.get(p)
            if c:
                vadd(r2, prow, -c)
    return pivots, [pivot_rows[p] for p in pivots]


class Subspace:
    """Subspace of k^ambient with a canonical reduced-echelon basis."""

    def __init__(self, field, ambient, pivots, rows):
        self.field = field
        self.ambient = ambient
        self.pivots = pivots
        self.rows = rows
        self._pivot_rows = dict(zip(pivots, rows))

    @staticmethod
    def from_spanning(field, ambient, vectors):
        pivots, rows = rref(vectors)
        return Subspace(field, ambient, pivots, rows)

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Residual of vec modulo the subspace (kills all pivot coords)."""
        vec = dict(vec)
        pr = self._pivot_rows
        hits = sorted(k for k in vec if k in pr)
        while hits:
            for p in hits:
                c = vec.get(p)
                if c:
                    vadd(vec, pr[p], -c)
            hits = sorted(k for k in vec if k in pr)
        return vec

    def contains(self, vec):
        return not self.reduce(vec)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self.rows == other.rows)

    def intersect_is_zero(self, other):
        both = [dict(r) for r in self.rows] + [dict(r) for r in other.rows]
        pivots, _ = rref(both)
        return len(pivots) == self.dim + other.dim


class Quotient:
    """Quotient of k^ambient by a subspace, with a deterministic section.

    Coordinates on the quotient are the non-pivot columns of the subspace
    echelon basis, in increasing order; the section embeds them back as
    the corresponding unit vectors, so project(lift(x)) == x exactly.
    """

    def __init__(self, field, ambient, sub):
        self.field = field
        self.ambient = ambient
        self.sub = sub
        free = [j for j in range(ambient) if j not in set(sub.pivots)]
        self.free = free
        self._free_pos = {j: k for k, j in enumerate(free)}
        self.dim = len(free)

    def project(self, vec):
        res = self.sub.reduce(vec)
        pos = self._free_pos
        return {pos[j]: v for j, v in res.items()}

    def lift(self, qvec):
        free = self.free
        return {free[k]: v for k, v in qvec.items()}


def quotient(field, ambient, sub):
    return Quotient(field, ambient, sub)


def left_mult_matrix(alg, x):
    """Matrix of left multiplication by element x in a StructAlgebra."""
    cols = [alg.mul(x, {j: alg.field.one}) for j in range(alg.dim)]
    return Mat(alg.field, alg.dim, alg.dim, cols)


def is_left_ideal(mul, sub, generators):
    """Whether a subspace is closed under left multiplication.

    mul(g, v) must multiply sparse vectors in the ambient algebra.  Checks
    g * b for every generator g and echelon basis vector b; returns
    (True, None) or (False, (gen_index, basis_index)) with the first
    failing pair in scan order.
    """
    for gi, g in enumerate(generators):
        for bi, b in enumerate(sub.rows):
            if not sub.contains(mul(g, b)):
                return False, (gi, bi)
    return True, None
