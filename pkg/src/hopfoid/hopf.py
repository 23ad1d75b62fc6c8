"""Hopf algebra structure on a StructAlgebra, duals, and actions.

Pairing conventions, fixed once and used everywhere: for x, y in the
dual and a, b in the algebra,

    <x*y, a>      = <x, a_(1)> <y, a_(2)>
    <Delta(x), a (x) b> = <x, a*b>   (first leg pairs the first factor)
    <S*(x), a>    = <x, S(a)>

The left/right regular actions are

    a -> x = x_(1) <x_(2), a>        x <- a = x_(2) <x_(1), a>
    x -> a = a_(1) <x, a_(2)>        a <- x = a_(2) <x, a_(1)>

and the co-adjoint actions combine them through S^{-1}:

    a |> x = (a_(1) -> x) <- S^{-1}(a_(2))      (lands in the dual)
    a <| x = (S^{-1}(x_(1)) -> a) <- x_(2)      (lands in the algebra)
"""

from __future__ import annotations

import random

from .linalg import Mat, vadd, vtensor
from .algebra import StructAlgebra, make_algebra
from .report import VerificationReport


class HopfAlgebra:
    """StructAlgebra with coproduct, counit, and antipode matrices."""

    def __init__(self, alg, coproduct, counit, antipode, antipode_inv=None,
                 name="H"):
        self.alg = alg
        self.field = alg.field
        self.dim = alg.dim
        self.coproduct = coproduct
        self.counit = dict(counit)
        self.antipode = antipode
        self.antipode_inv = antipode_inv or antipode.inverse()
        self.name = name
        self._sweedler = [None] * alg.dim

    def sweedler(self, i):
        """Coproduct of e_i as a tuple of (left, right, coefficient)."""
        t = self._sweedler[i]
        if t is None:
            n = self.dim
            t = tuple((idx // n, idx % n, c)
                      for idx, c in sorted(self.coproduct.cols[i].items()))
            self._sweedler[i] = t
        return t

    def delta(self, v):
        return self.coproduct.apply(v)

    def counit_of(self, v):
        eps = self.counit
        out = self.field.zero
        for i, c in v.items():
            e = eps.get(i)
            if e:
                out = out + c * e
        return out

    def s(self, v):
        return self.antipode.apply(v)

    def s_inv(self, v):
        return self.antipode_inv.apply(v)

    def mul(self, v, w):
        return self.alg.mul(v, w)

    def mul_tensor2(self, x, y):
        """Product in H (x) H of sparse vectors on dim^2 coordinates."""
        n = self.dim
        mul_basis = self.alg.mul_basis
        out = {}
        for i1, c1 in x.items():
            u1, v1 = divmod(i1, n)
            for i2, c2 in y.items():
                u2, v2 = divmod(i2, n)
                c = c1 * c2
                left = mul_basis(u1, u2)
                right = mul_basis(v1, v2)
                for a, ca in left.items():
                    base = a * n
                    cca = c * ca
                    for b, cb in right.items():
                        k = base + b
                        w = out.get(k)
                        if w is None:
                            out[k] = cca * cb
                        else:
                            w = w + cca * cb
                            if w:
                                out[k] = w
                            else:
                                del out[k]
        return out

    def labels(self):
        return self.alg.labels


def _tuples(ranges, sample, seed, salt):
    """All index tuples, or a seeded random sample of that many."""
    if sample is None:
        def gen(prefix, rest):
            if not rest:
                yield prefix
                return
            for i in range(rest[0]):
                yield from gen(prefix + (i,), rest[1:])
        return gen((), tuple(ranges))
    rng = random.Random(seed * 1000003 + salt)
    return (tuple(rng.randrange(r) for r in ranges) for _ in range(sample))


def verify_hopf(h, jobs=1, sample=None, seed=0):
    """Check every Hopf axiom on basis tuples; failures carry witnesses."""
    rep = VerificationReport("hopf axioms: %s" % h.name,
                             {"object": h.name, "dim": h.dim})
    n = h.dim
    alg = h.alg
    labels = alg.labels

    rep.add("hopf-unit-laws", "1*e_i = e_i*1 = e_i",
            "unit law", lambda: alg.check_unit())
    rep.add("hopf-associativity", "(e_i e_j) e_k = e_i (e_j e_k)",
            "associativity of the product",
            lambda: alg.check_associativity(sample, seed))

    def coassoc():
        for (i,) in _tuples([n], sample, seed, 1):
            lhs = {}
            for j, k, c in h.sweedler(i):
                for a, b, c2 in h.sweedler(j):
                    vadd(lhs, {(a * n + b) * n + k: c * c2})
            for j, k, c in h.sweedler(i):
                for a, b, c2 in h.sweedler(k):
                    vadd(lhs, {(j * n + a) * n + b: -c * c2})
            if lhs:
                return False, {"basis": i, "label": labels[i]}
        return True, None
    rep.add("hopf-coassociativity",
            "(Delta (x) id) Delta = (id (x) Delta) Delta",
            "coassociativity", coassoc)

    def counit_law():
        for (i,) in _tuples([n], sample, seed, 2):
            lhs, rhs = {}, {}
            for j, k, c in h.sweedler(i):
                e = h.counit.get(j)
                if e:
                    vadd(lhs, {k: c * e})
                e = h.counit.get(k)
                if e:
                    vadd(rhs, {j: c * e})
            want = {i: h.field.one}
            if lhs != want or rhs != want:
                return False, {"basis": i, "label": labels[i]}
        return True, None
    rep.add("hopf-counit-law", "(eps (x) id) Delta = id = (id (x) eps) Delta",
            "counit law", counit_law)

    def delta_unit():
        ok = h.delta(alg.unit) == vtensor(alg.unit, alg.unit, n)
        return ok, None
    rep.add("hopf-coproduct-unit", "Delta(1) = 1 (x) 1",
            "coproduct preserves the unit", delta_unit)

    def delta_mult():
        for i, j in _tuples([n, n], sample, seed, 3):
            lhs = h.delta(alg.mul_basis(i, j))
            rhs = h.mul_tensor2(h.coproduct.cols[i], h.coproduct.cols[j])
            if lhs != rhs:
                return False, {"pair": [i, j],
                               "labels": [labels[i], labels[j]]}
        return True, None
    rep.add("hopf-coproduct-multiplicative",
            "Delta(xy) = Delta(x) Delta(y)",
            "coproduct is an algebra map", delta_mult)

    def eps_mult():
        if h.counit_of(alg.unit) != h.field.one:
            return False, {"law": "eps(1)=1"}
        for i, j in _tuples([n, n], sample, seed, 4):
            lhs = h.counit_of(alg.mul_basis(i, j))
            rhs = h.counit_of({i: h.field.one}) * h.counit_of(
                {j: h.field.one})
            if lhs != rhs:
                return False, {"pair": [i, j]}
        return True, None
    rep.add("hopf-counit-multiplicative", "eps(xy) = eps(x) eps(y)",
            "counit is an algebra map", eps_mult)

    def antipode_axiom():
        for (i,) in _tuples([n], sample, seed, 5):
            want = {}
            e = h.counit.get(i)
            if e:
                want = {k: e * v for k, v in alg.unit.items()}
            lhs, rhs = {}, {}
            for j, k, c in h.sweedler(i):
                vadd(lhs, alg.mul(h.antipode.cols[j], {k: c}))
                vadd(rhs, alg.mul({j: c}, h.antipode.cols[k]))
            if lhs != want or rhs != want:
                return False, {"basis": i, "label": labels[i]}
        return True, None
    rep.add("hopf-antipode-axiom",
            "m(S (x) id) Delta = unit.eps = m(id (x) S) Delta",
            "antipode axiom", antipode_axiom)

    def antipode_anti():
        if h.s(alg.unit) != alg.unit:
            return False, {"law": "S(1)=1"}
        for i, j in _tuples([n, n], sample, seed, 6):
            lhs = h.s(alg.mul_basis(i, j))
            rhs = alg.mul(h.antipode.cols[j], h.antipode.cols[i])
            if lhs != rhs:
                return False, {"pair": [i, j]}
        return True, None
    rep.add("hopf-antipode-antihomomorphism", "S(xy) = S(y) S(x)",
            "antipode reverses products", antipode_anti)

    def antipode_bijective():
        prod = h.antipode * h.antipode_inv
        ok = prod == Mat.identity(h.field, n)
        return ok, None
    rep.add("hopf-antipode-bijective", "S S^{-1} = id",
            "antipode invertibility", antipode_bijective)

    return rep.execute(jobs)


class DualPairing:
    """Bilinear pairing <f_i, e_j> between a Hopf algebra and its dual."""

    def __init__(self, a, astar, pmat):
        self.a = a
        self.astar = astar
        self.p = pmat  # p.cols[j][i] = <f_i, e_j>
        self._rows = None
        self._dual_basis = None

    def pair(self, xv, av):
        out = self.a.field.zero
        cols = self.p.cols
        for j, cj in av.items():
            col = cols[j]
            for i, ci in xv.items():
                v = col.get(i)
                if v:
                    out = out + ci * cj * v
        return out

    def pair_basis(self, i, j):
        return self.p.cols[j].get(i, self.a.field.zero)

    def dual_basis(self):
        """A*-vectors x^t with <x^t, e_s> = delta_ts."""
        if self._dual_basis is None:
            self._dual_basis = self.p.inverse().rows()
        return self._dual_basis

    def verify(self, jobs=1, sample=None, seed=0):
        rep = VerificationReport("dual pairing: %s / %s" %
                                 (self.a.name, self.astar.name))
        a, astar = self.a, self.astar
        n = a.dim

        rep.add("pairing-nondegenerate", "pairing matrix invertible",
                "nondegeneracy",
                lambda: (self.p.is_invertible(), None))

        def prod_vs_coprod():
            for i, j, k in _tuples([n, n, n], sample, seed, 11):
                lhs = self.pair(astar.alg.mul_basis(i, j),
                                {k: a.field.one})
                rhs = a.field.zero
                for k1, k2, c in a.sweedler(k):
                    rhs = rhs + c * self.pair_basis(i, k1) * \
                        self.pair_basis(j, k2)
                if lhs != rhs:
                    return False, {"triple": [i, j, k]}
            return True, None
        rep.add("pairing-product-coproduct",
                "<xy, a> = <x, a_(1)><y, a_(2)>",
                "dual product against coproduct", prod_vs_coprod)

        def coprod_vs_prod():
            for k, i, j in _tuples([n, n, n], sample, seed, 12):
                lhs = a.field.zero
                for x1, x2, c in astar.sweedler(k):
                    lhs = lhs + c * self.pair_basis(x1, i) * \
                        self.pair_basis(x2, j)
                rhs = self.pair({k: a.field.one}, a.alg.mul_basis(i, j))
                if lhs != rhs:
                    return False, {"triple": [k, i, j]}
            return True, None
        rep.add("pairing-coproduct-product",
                "<Delta(x), a (x) b> = <x, ab>",
                "dual coproduct against product", coprod_vs_prod)

        def units():
            for j in range(n):
                if self.pair(astar.alg.unit, {j: a.field.one}) != \
                        a.counit.get(j, a.field.zero):
                    return False, {"law": "<1, a> = eps(a)", "basis": j}
            for i in range(n):
                if self.pair({i: a.field.one}, a.alg.unit) != \
                        astar.counit.get(i, a.field.zero):
                    return False, {"law": "<x, 1> = eps*(x)", "basis": i}
            return True, None
        rep.add("pairing-units", "<1,a> = eps(a), <x,1> = eps*(x)",
                "units against counits", units)

        def antipodes():
            for i, j in _tuples([n, n], sample, seed, 13):
                lhs = self.pair(astar.antipode.cols[i], {j: a.field.one})
                rhs = self.pair({i: a.field.one}, a.antipode.cols[j])
                if lhs != rhs:
                    return False, {"pair": [i, j]}
            return True, None
        rep.add("pairing-antipodes", "<S*(x), a> = <x, S(a)>",
                "antipodes are adjoint", antipodes)

        return rep.execute(jobs)


def dual_hopf(a):
    """Canonical dual Hopf algebra on the dual basis, pairing = identity."""
    n = a.dim
    field = a.field
    table = {}
    for (i, j) in ((i, j) for i in range(n) for j in range(n)):
        table[(i, j)] = {}
    for k in range(n):
        for i, j, c in a.sweedler(k):
            table[(i, j)][k] = c
    unit = {k: v for k, v in a.counit.items() if v}
    alg = StructAlgebra(field, n, table=table, unit=unit,
                        labels=[l + "*" for l in a.alg.labels])
    cop_cols = []
    for k in range(n):
        col = {}
        for i in range(n):
            for j in range(n):
                c = a.alg.mul_basis(i, j).get(k)
                if c:
                    col[i * n + j] = c
        cop_cols.append(col)
    coproduct = Mat(field, n * n, n, cop_cols)
    counit = {k: v for k, v in a.alg.unit.items()}
    antipode = a.antipode.transpose()
    antipode_inv = a.antipode_inv.transpose()
    astar = HopfAlgebra(alg, coproduct, counit, antipode, antipode_inv,
                        name=a.name + "*")
    pairing = DualPairing(a, astar, Mat.identity(field, n))
    return astar, pairing


def coop(h):
    """Same algebra with flipped coproduct; antipode becomes S^{-1}."""
    n = h.dim
    cols = []
    for i in range(n):
        col = {}
        for j, k, c in h.sweedler(i):
            col[k * n + j] = c
        cols.append(col)
    return HopfAlgebra(h.alg, Mat(h.field, n * n, n, cols), h.counit,
                       h.antipode_inv, h.antipode, name=h.name + "^coop")


# -- regular and co-adjoint actions ------------------------------------

def rharpoon(pr, av, xv):
    """a -> x = x_(1) <x_(2), a>, an element of the dual."""
    out = {}
    astar = pr.astar
    for i, ci in xv.items():
        for j, k, c in astar.sweedler(i):
            val = pr.pair({k: c}, av)
            if val:
                vadd(out, {j: ci * val})
    return out


def lharpoon(pr, xv, av):
    """x <- a = x_(2) <x_(1), a>, an element of the dual."""
    out = {}
    astar = pr.astar
    for i, ci in xv.items():
        for j, k, c in astar.sweedler(i):
            val = pr.pair({j: c}, av)
            if val:
                vadd(out, {k: ci * val})
    return out


def rharpoon_dual(pr, xv, av):
    """x -> a = a_(1) <x, a_(2)>, an element of the algebra."""
    out = {}
    a = pr.a
    for i, ci in av.items():
        for j, k, c in a.sweedler(i):
            val = pr.pair(xv, {k: c})
            if val:
                vadd(out, {j: ci * val})
    return out


def lharpoon_dual(pr, av, xv):
    """a <- x = a_(2) <x, a_(1)>, an element of the algebra."""
    out = {}
    a = pr.a
    for i, ci in av.items():
        for j, k, c in a.sweedler(i):
            val = pr.pair(xv, {j: c})
            if val:
                vadd(out, {k: ci * val})
    return out


def coadjoint_left(pr, av, xv):
    """a |> x = (a_(1) -> x) <- S^{-1}(a_(2)), in the dual."""
    out = {}
    a = pr.a
    for i, ci in av.items():
        for j, k, c in a.sweedler(i):
            step = rharpoon(pr, {j: ci * c}, xv)
            if step:
                vadd(out, lharpoon(pr, step, a.antipode_inv.cols[k]))
    return out


def coadjoint_right(pr, av, xv):
    """a <| x = (S^{-1}(x_(1)) -> a) <- x_(2), in the algebra."""
    out = {}
    astar = pr.astar
    for i, ci in xv.items():
        for j, k, c in astar.sweedler(i):
            step = rharpoon_dual(pr, astar.antipode_inv.cols[j],
                                 vscale_or(av, ci * c))
            if step:
                vadd(out, lharpoon_dual(pr, step, {k: pr.a.field.one}))
    return out


def vscale_or(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def adjoint_action(astar, xv, yv):
    """ad_x y = x_(2) y S^{-1}(x_(1)), products in the dual."""
    out = {}
    alg = astar.alg
    for i, ci in xv.items():
        for j, k, c in astar.sweedler(i):
            term = alg.mul({k: ci * c}, alg.mul(yv, astar.antipode_inv.cols[j]))
            vadd(out, term)
    return out


def group_algebra_cyclic(field, n):
    """k[Z/n]: group-like basis g^0..g^{n-1}; the standard toy example."""
    one = field.one
    constants = {(i, j): {(i + j) % n: one} for i in range(n)
                 for j in range(n)}
    alg = make_algebra(field, n, constants, {0: one},
                       labels=["g^%d" % i for i in range(n)])
    cop = Mat(field, n * n, n, [{i * n + i: one} for i in range(n)])
    counit = {i: one for i in range(n)}
    s = Mat(field, n, n, [{(-i) % n: one} for i in range(n)])
    return HopfAlgebra(alg, cop, counit, s, s.transpose(), name="k[Z/%d]" % n)
