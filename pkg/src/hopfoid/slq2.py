"""The quantum sl(2) Borel tower at an odd root of unity.

A has generators E, K with KE = q^2 EK, K^d = 1, E^d = 0; its dual A*
has generators eta, kappa with kappa eta = q^{-2} eta kappa, kappa^d = 1,
eta^d = 0.  Structure constants come from a word rewriter (move the
invertible generator right past the nilpotent one, collecting powers of
q), coproducts of monomials are computed by multiplying generator
coproducts in the tensor square, and the pairing is grown from its four
generator values by the Hopf pairing laws.  Nothing downstream is
transcribed from closed-form displays; those are compared afterwards
and logged in the discrepancy ledger.
"""

from __future__ import annotations

from .cyclotomic import cyclo_field
from .linalg import Mat, vadd, vtensor
from .algebra import StructAlgebra, tensor_alg, AlgebraError
from .hopf import HopfAlgebra, DualPairing
from .report import VerificationReport


def rewrite_word(field, word, d, twist_exp):
    """Normal form of a word over {0: nilpotent gen, 1: invertible gen}.

    Applies '(1,0) -> q^twist_exp * (0,1)' until sorted, then truncates
    gen0^d = 0 and reduces gen1^d = 1.  Returns (coefficient, m, n) or
    None when the word rewrites to zero.
    """
    word = list(word)
    power = 0
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            if word[p] == 1 and word[p + 1] == 0:
                word[p], word[p + 1] = 0, 1
                power += twist_exp
                changed = True
    m = word.count(0)
    n = word.count(1)
    if m >= d:
        return None
    return field.q_pow(power), m, n % d


def monomial_algebra(field, d, twist_exp, gen_labels):
    """Algebra on basis gen0^m gen1^n (index m*d + n) via the rewriter."""
    g0, g1 = gen_labels

    def mul_fn(i, j):
        m1, n1 = divmod(i, d)
        m2, n2 = divmod(j, d)
        word = (0,) * m1 + (1,) * n1 + (0,) * m2 + (1,) * n2
        nf = rewrite_word(field, word, d, twist_exp)
        if nf is None:
            return {}
        c, m, n = nf
        return {m * d + n: c}

    labels = []
    for m in range(d):
        for n in range(d):
            part = []
            if m:
                part.append(g0 if m == 1 else "%s^%d" % (g0, m))
            if n:
                part.append(g1 if n == 1 else "%s^%d" % (g1, n))
            labels.append(".".join(part) if part else "1")
    unit = {0: field.one}
    return StructAlgebra(field, d * d, mul_fn=mul_fn, unit=unit,
                         labels=labels)


def _hopf_from_generators(alg, d, delta0, delta1, eps0, eps1, s0, s1, name):
    """Hopf maps on all monomials from their values on the generators.

    delta0/delta1 are elements of the tensor square, s0/s1 elements of
    the algebra; monomial values are products (reversed for the
    antipode), so any typo in a closed-form display cannot leak in.
    """
    field = alg.field
    n2 = alg.dim
    square = tensor_alg(alg, alg)

    d0_pow = [square.unit]
    d1_pow = [square.unit]
    s0_pow = [alg.unit]
    s1_pow = [alg.unit]
    for _ in range(d - 1):
        d0_pow.append(square.mul(d0_pow[-1], delta0))
        d1_pow.append(square.mul(d1_pow[-1], delta1))
        s0_pow.append(alg.mul(s0_pow[-1], s0))
        s1_pow.append(alg.mul(s1_pow[-1], s1))

    cop_cols = []
    counit = {}
    s_cols = []
    for m in range(d):
        for n in range(d):
            cop_cols.append(square.mul(d0_pow[m], d1_pow[n]))
            e = (eps0 ** m) * (eps1 ** n)
            if e:
                counit[m * d + n] = e
            s_cols.append(alg.mul(s1_pow[n], s0_pow[m]))
    coproduct = Mat(field, n2 * n2, n2, cop_cols)
    antipode = Mat(field, n2, n2, s_cols)
    return HopfAlgebra(alg, coproduct, counit, antipode, name=name)


def borel_hopf(field, d):
    """A: generators E (index d) and K (index 1) on basis E^m K^n."""
    alg = monomial_algebra(field, d, 2, ("E", "K"))
    one = field.one
    n2 = alg.dim
    iE, iK = 1 * d + 0, 0 * d + 1
    i1 = 0
    deltaK = {iK * n2 + iK: one}
    deltaE = {i1 * n2 + iE: one, iE * n2 + iK: one}
    sK = {0 * d + (d - 1): one}                      # K^{-1}
    sE = {1 * d + (d - 1): -one}                     # -E K^{-1}
    return _hopf_from_generators(alg, d, deltaE, deltaK, field.zero,
                                 field.one, sE, sK, name="A")


def borel_dual_hopf(field, d):
    """A*: generators eta (index d) and kappa (index 1) on eta^i kappa^j."""
    alg = monomial_algebra(field, d, -2, ("y", "k"))
    one = field.one
    n2 = alg.dim
    ieta, ikap = 1 * d + 0, 0 * d + 1
    i1 = 0
    deltakap = {ikap * n2 + ikap: one}
    deltaeta = {ieta * n2 + i1: one, ikap * n2 + ieta: one}
    skap = {0 * d + (d - 1): one}                    # kappa^{-1}
    # -kappa^{-1} eta = -q^2 eta kappa^{-1}
    seta = {1 * d + (d - 1): -field.q_pow(2)}
    return _hopf_from_generators(alg, d, deltaeta, deltakap, field.zero,
                                 field.one, seta, skap, name="A*")


def derived_pairing(a, astar, d):
    """Pairing grown from its generator seeds by the Hopf pairing laws.

    Seeds: <eta, E> = 1, <kappa, K> = q^2, cross values 0.  Longer
    monomials split one generator at a time through
    <xy, a> = <x, a_(1)><y, a_(2)> and <x, ab> = <x_(1), a><x_(2), b>.
    """
    field = a.field
    iE, iK = 1 * d + 0, 0 * d + 1
    ieta, ikap = 1 * d + 0, 0 * d + 1
    seeds = {
        (ieta, iE): field.one,
        (ieta, iK): field.zero,
        (ikap, iE): field.zero,
        (ikap, iK): field.q_pow(2),
    }
    memo = {}

    def split_a(j):
        m, n = divmod(j, d)
        if m > 0:
            return iE, (m - 1) * d + n
        return iK, (n - 1)

    def split_x(i):
        p, r = divmod(i, d)
        if p > 0:
            return ieta, (p - 1) * d + r
        return ikap, (r - 1)

    def pair(i, j):
        key = (i, j)
        val = memo.get(key)
        if val is not None:
            return val
        if j == 0:
            val = astar.counit.get(i, field.zero)
        elif i == 0:
            val = a.counit.get(j, field.zero)
        elif key in seeds:
            val = seeds[key]
        elif j not in (iE, iK):
            g, rest = split_a(j)
            val = field.zero
            for x1, x2, c in astar.sweedler(i):
                val = val + c * pair(x1, g) * pair(x2, rest)
        else:
            g, rest = split_x(i)
            val = field.zero
            for a1, a2, c in a.sweedler(j):
                val = val + c * pair(g, a1) * pair(rest, a2)
        memo[key] = val
        return val

    n2 = a.dim
    cols = []
    for j in range(n2):
        col = {}
        for i in range(n2):
            v = pair(i, j)
            if v:
                col[i] = v
        cols.append(col)
    return DualPairing(a, astar, Mat(field, n2, n2, cols))


def pairing_closed_form(field, d, i, j, m, n):
    """delta_{mi} (i)_{q^2}! q^{2j(i+n)}, the printed grid."""
    if m != i:
        return field.zero
    return field.q_factorial(i) * field.q_pow(2 * j * (i + n))
