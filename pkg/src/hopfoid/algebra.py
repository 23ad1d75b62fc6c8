"""Finite-dimensional associative unital algebras from structure constants.

An algebra is a multiplication table on a fixed basis: table[(i, j)] is
the sparse expansion of e_i * e_j.  Tables may be filled lazily from a
closure, which keeps large constructed algebras (doubles, smash
products) cheap until their entries are actually needed.
"""

from __future__ import annotations

import random

from .linalg import Mat, vadd, vtensor, is_left_ideal
from .cyclotomic import Cyclo


class AlgebraError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class StructAlgebra:
    """Associative unital algebra given by sparse structure constants."""

    def __init__(self, field, dim, table=None, mul_fn=None, unit=None,
                 labels=None):
        if table is None and mul_fn is None:
            raise AlgebraError("need structure constants or a product rule")
        self.field = field
        self.dim = dim
        self._table = dict(table) if table else {}
        self._mul_fn = mul_fn
        if unit is None:
            raise AlgebraError("algebras here are unital; provide the unit")
        self.unit = {k: v for k, v in unit.items() if v}
        self.labels = list(labels) if labels else [
            "e%d" % i for i in range(dim)]

    # -- products ------------------------------------------------------

    def mul_basis(self, i, j):
        t = self._table.get((i, j))
        if t is None:
            t = self._mul_fn(i, j)
            self._table[(i, j)] = t
        return t

    def mul(self, v, w):
        out = {}
        mul_basis = self.mul_basis
        for i, a in v.items():
            for j, b in w.items():
                vadd(out, mul_basis(i, j), a * b)
        return out

    def mul_many(self, vecs):
        out = self.unit
        for v in vecs:
            out = self.mul(out, v)
        return out

    def power(self, v, k):
        out = self.unit
        for _ in range(k):
            out = self.mul(out, v)
        return out

    def basis_vec(self, i):
        return {i: self.field.one}

    def left_mult(self, x):
        return Mat(self.field, self.dim, self.dim,
                   [self.mul(x, {j: self.field.one}) for j in range(self.dim)])

    def right_mult(self, x):
        return Mat(self.field, self.dim, self.dim,
                   [self.mul({j: self.field.one}, x) for j in range(self.dim)])

    # -- validation ------------------------------------------------------

    def check_unit(self):
        one = self.unit
        for i in range(self.dim):
            e = self.basis_vec(i)
            if self.mul(one, e) != e:
                return False, {"side": "left", "basis": i,
                               "label": self.labels[i]}
            if self.mul(e, one) != e:
                return False, {"side": "right", "basis": i,
                               "label": self.labels[i]}
        return True, None

    def check_associativity(self, sample=None, seed=0):
        """(e_i e_j) e_k == e_i (e_j e_k), exhaustive or seeded sample."""
        n = self.dim
        mul_basis = self.mul_basis
        if sample is None:
            triples = ((i, j, k) for i in range(n) for j in range(n)
                       for k in range(n))
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(sample))
        for i, j, k in triples:
            lhs = {}
            for u, cu in mul_basis(i, j).items():
                vadd(lhs, mul_basis(u, k), cu)
            for v, cv in mul_basis(j, k).items():
                vadd(lhs, mul_basis(i, v), -cv)
            if lhs:
                return False, {"triple": [i, j, k],
                               "labels": [self.labels[i], self.labels[j],
                                          self.labels[k]]}
        return True, None

    def validate(self, sample=None, seed=0):
        ok, w = self.check_unit()
        if not ok:
            raise AlgebraError("unit law fails", w)
        ok, w = self.check_associativity(sample, seed)
        if not ok:
            raise AlgebraError("associativity fails at basis triple %s"
                               % (w["triple"],), w)
        return self

    # -- formatting / serialization ---------------------------------------

    def format_element(self, v):
        parts = []
        for k in sorted(v):
            c = v[k]
            parts.append("(%s)*%s" % (c, self.labels[k]))
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        mult = []
        for i in range(self.dim):
            for j in range(self.dim):
                t = self.mul_basis(i, j)
                if t:
                    mult.append([i, j, [[k, t[k].to_json()]
                                        for k in sorted(t)]])
        return {
            "cyclotomic_order": self.field.d,
            "dim": self.dim,
            "labels": self.labels,
            "unit": [[k, v.to_json()] for k, v in sorted(self.unit.items())],
            "mult": mult,
        }

    @staticmethod
    def from_json(field, data):
        if data["cyclotomic_order"] != field.d:
            raise AlgebraError("field order mismatch")
        table = {}
        for i, j, entries in data["mult"]:
            table[(i, j)] = {k: Cyclo.from_json(field, s) for k, s in entries}
        dim = data["dim"]
        for i in range(dim):
            for j in range(dim):
                table.setdefault((i, j), {})
        unit = {k: Cyclo.from_json(field, s) for k, s in data["unit"]}
        return StructAlgebra(field, dim, table=table, unit=unit,
                             labels=data.get("labels"))


def make_algebra(field, dim, constants, unit, labels=None, check=True):
    """Validated algebra from explicit constants {(i,j): {k: scalar}}."""
    table = {(i, j): dict(constants.get((i, j), {}))
             for i in range(dim) for j in range(dim)}
    alg = StructAlgebra(field, dim, table=table, unit=unit, labels=labels)
    if check:
        alg.validate()
    return alg


def opposite(alg):
    """Same space, reversed product."""
    table = {(i, j): dict(alg.mul_basis(j, i))
             for i in range(alg.dim) for j in range(alg.dim)}
    return StructAlgebra(alg.field, alg.dim, table=table, unit=alg.unit,
                         labels=[l + "~" for l in alg.labels])


def tensor_alg(a, b):
    """Componentwise product algebra on the tensor product space."""
    nb = b.dim
    def mul_fn(i, j):
        i1, i2 = divmod(i, nb)
        j1, j2 = divmod(j, nb)
        return vtensor(a.mul_basis(i1, j1), b.mul_basis(i2, j2), nb)
    labels = ["%s(x)%s" % (la, lb) for la in a.labels for lb in b.labels]
    return StructAlgebra(a.field, a.dim * b.dim, mul_fn=mul_fn,
                         unit=vtensor(a.unit, b.unit, nb), labels=labels)


def endo_algebra(a):
    """End_k(A) with composition; basis unit E_rc at index r*dim + c."""
    n = a.dim
    one = a.field.one
    def mul_fn(i, j):
        r1, c1 = divmod(i, n)
        r2, c2 = divmod(j, n)
        if c1 != r2:
            return {}
        return {r1 * n + c2: one}
    unit = {r * n + r: one for r in range(n)}
    labels = ["E[%d,%d]" % divmod(i, n) for i in range(n * n)]
    return StructAlgebra(a.field, n * n, mul_fn=mul_fn, unit=unit,
                         labels=labels)


def endo_from_mat(m):
    """Coordinates of a linear map A -> A inside endo_algebra(A)."""
    out = {}
    n = m.ncols
    for c, col in enumerate(m.cols):
        for r, v in col.items():
            out[r * n + c] = v
    return out


def mat_from_endo(field, n, vec):
    cols = [dict() for _ in range(n)]
    for idx, v in vec.items():
        r, c = divmod(idx, n)
        cols[c][r] = v
    return Mat(field, n, n, cols)


class AlgMorphism:
    """Linear map between algebras, claimed (anti-)multiplicative."""

    def __init__(self, source, target, mat, anti=False):
        self.source = source
        self.target = target
        self.mat = mat
        self.anti = anti

    def apply(self, v):
        return self.mat.apply(v)

    def verify(self):
        """f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) (reversed if anti)."""
        src, tgt = self.source, self.target
        if self.mat.apply(src.unit) != tgt.unit:
            return False, {"law": "unit"}
        cols = self.mat.cols
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = self.mat.apply(src.mul_basis(i, j))
                if self.anti:
                    rhs = tgt.mul(cols[j], cols[i])
                else:
                    rhs = tgt.mul(cols[i], cols[j])
                if lhs != rhs:
                    return False, {"law": "product", "pair": [i, j],
                                   "labels": [src.labels[i], src.labels[j]]}
        return True, None

    def is_bijective(self):
        return self.mat.is_invertible()

    def compose(self, other):
        """self after other (source of self = target of other)."""
        return AlgMorphism(other.source, self.target, self.mat * other.mat,
                           anti=self.anti != other.anti)


def identity_morphism(alg):
    return AlgMorphism(alg, alg, Mat.identity(alg.field, alg.dim))


def hom_kernel_ideal_check(a, b, fmat):
    """Left-ideal criterion for a unital linear map f: A -> B.

    Builds F: A (x) B -> B, a (x) b -> f(a)b, and reports whether ker F
    is a left ideal of A (x) B^op (closure checked against every basis
    element).  For unital f this holds exactly when f is an algebra
    homomorphism; callers compare the two routes.
    """
    field = a.field
    nb = b.dim
    cols = []
    for i in range(a.dim):
        fi = fmat.cols[i]
        for j in range(nb):
            cols.append(b.mul(fi, {j: field.one}))
    fbig = Mat(field, nb, a.dim * nb, cols)
    ker = fbig.kernel()
    abop = tensor_alg(a, opposite(b))
    gens = [{g: field.one} for g in range(abop.dim)]
    ok, _ = is_left_ideal(abop.mul, ker, gens)
    return ok
