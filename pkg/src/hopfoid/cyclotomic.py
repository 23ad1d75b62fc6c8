"""Exact arithmetic in the cyclotomic field Q(zeta_d), d odd.

Elements are stored in the power basis {zeta^0, ..., zeta^(phi(d)-1)}
reduced modulo the d-th cyclotomic polynomial, as an integer coefficient
vector over a single positive denominator, always in lowest terms.  All
arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class CycloError(ValueError):
    pass


def _divisors(d):
    out = [e for e in range(1, d + 1) if d % e == 0]
    return out


def _poly_div_exact(num, den):
    """Quotient of integer polynomials (low-degree-first lists), exact."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        q[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return q


def cyclotomic_polynomial(d):
    """Monic integer coefficients of Phi_d, low degree first."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in _divisors(d)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(e))
    return poly


_FIELD_CACHE = {}


def cyclo_field(d, q_power=1):
    """Field context for Q(zeta_d).  Rejects even d and d <= 1.

    q_power selects q = zeta^q_power (any exponent coprime to d); the
    default q = zeta is a primitive d-th root of unity either way.
    """
    if d <= 1 or d % 2 == 0:
        raise CycloError("order must be an odd integer > 1, got %r" % (d,))
    if gcd(q_power, d) != 1:
        raise CycloError("q exponent %r is not coprime to %r" % (q_power, d))
    key = (d, q_power % d)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = CycloField(d, q_power % d)
        _FIELD_CACHE[key] = f
    return f


class CycloField:
    """Reduction data for Q(zeta_d): Phi_d and power-basis rewrite rows."""

    def __init__(self, d, q_power=1):
        self.d = d
        poly = cyclotomic_polynomial(d)
        self.poly = poly
        self.phi = len(poly) - 1
        # x^(phi+k) mod Phi_d for k = 0 .. phi-2, as integer rows.
        rows = []
        base = [-c for c in poly[:-1]]
        rows.append(tuple(base))
        for _ in range(self.phi - 2):
            prev = rows[-1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                shifted = [s + top * b for s, b in zip(shifted, base)]
            rows.append(tuple(shifted))
        self._red = rows
        self.zero = Cyclo(self, (0,) * self.phi, 1)
        self.one = Cyclo(self, (1,) + (0,) * (self.phi - 1), 1)
        self.q_power = q_power
        self.zeta = self.zeta_pow(1)
        self.q = self.zeta_pow(q_power)

    def __repr__(self):
        return "CycloField(d=%d)" % self.d

    def scalar(self, value):
        """Embed an int or Fraction as a field element."""
        if isinstance(value, Cyclo):
            if value.field is not self:
                raise CycloError("mixed fields")
            return value
        fr = Fraction(value)
        num = [0] * self.phi
        num[0] = fr.numerator
        return Cyclo(self, tuple(num), fr.denominator)

    def from_fractions(self, coeffs):
        """Element with the given power-basis rational coordinates."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.phi:
            raise CycloError("expected %d coordinates" % self.phi)
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(int(c * den) for c in coeffs)
        return _make(self, num, den)

    def zeta_pow(self, k):
        """zeta^k as a field element (k may be negative)."""
        k %= self.d
        num = [0] * (self.d)
        num[k] = 1
        return _reduce_long(self, num, 1)

    def q_pow(self, k):
        return self.zeta_pow(self.q_power * k)

    def q_int(self, i):
        """(i)_{q^2} = (q^{2i} - 1)/(q^2 - 1), with (0)_{q^2} = 0."""
        if i < 0:
            raise CycloError("q-integer index must be >= 0")
        # geometric sum 1 + q^2 + ... + q^(2(i-1)); exact and division-free
        num = [0] * self.d
        for j in range(i):
            num[(2 * j * self.q_power) % self.d] += 1
        return _reduce_long(self, num, 1)

    def q_factorial(self, i):
        """(i)_{q^2}! = (i)(i-1)...(1), empty product 1."""
        if i < 0:
            raise CycloError("q-factorial index must be >= 0")
        out = self.one
        for j in range(2, i + 1):
            out = out * self.q_int(j)
        return out * self.q_int(1) if i >= 1 else out

    def q_binomial(self, m, r):
        """Gaussian binomial in q^2 via the Pascal recursion.

        Requires 0 <= r <= m < d; beyond that the truncation E^d = 0 makes
        the coefficient meaningless for the intended coproduct expansions.
        """
        if not (0 <= r <= m):
            raise CycloError("need 0 <= r <= m, got r=%r m=%r" % (r, m))
        if m >= self.d:
            raise CycloError("row index m=%r must be < d=%d" % (m, self.d))
        row = [self.one]
        for k in range(1, m + 1):
            nxt = [self.one]
            for j in range(1, k):
                nxt.append(row[j - 1] + self.q_pow(2 * j) * row[j])
            nxt.append(self.one)
            row = nxt
        return row[r]


def _make(field, num, den):
    if den < 0:
        num = tuple(-x for x in num)
        den = -den
    g = den
    for x in num:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = tuple(x // g for x in num)
        den //= g
    return Cyclo(field, num, den)


def _reduce_long(field, num, den):
    """Reduce a raw coefficient list of length >= phi modulo Phi_d."""
    phi = field.phi
    if len(num) > phi:
        red = field._red
        out = list(num[:phi])
        for k in range(phi, len(num)):
            c = num[k]
            if c:
                row = red[k - phi]
                for i in range(phi):
                    ri = row[i]
                    if ri:
                        out[i] += c * ri
        num = out
    return _make(field, tuple(num), den)


class Cyclo:
    """Immutable element of Q(zeta_d); equality is coordinate-wise."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return (
                self.field is other.field
                and self.den == other.den
                and self.num == other.num
            )
        if isinstance(other, (int, Fraction)):
            return self == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.d, self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = self.field.scalar(other)
        d1, d2 = self.den, other.den
        if d1 == d2:
            num = tuple(a + b for a, b in zip(self.num, other.num))
            return _make(self.field, num, d1)
        g = gcd(d1, d2)
        m1 = d2 // g
        m2 = d1 // g
        num = tuple(a * m1 + b * m2 for a, b in zip(self.num, other.num))
        return _make(self.field, num, d1 * m1)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            other = self.field.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.field.scalar(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            other = self.field.scalar(other)
        a, b = self.num, other.num
        n = len(a)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return _reduce_long(self.field, conv, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        f = self.field
        # work over Q[x]: r0 = Phi_d, r1 = self
        r0 = [Fraction(c) for c in f.poly]
        r1 = [Fraction(x, self.den) for x in self.num]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while True:
            # divide r0 by r1
            q = [Fraction(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            inv_lead = 1 / r1[-1]
            for k in range(len(q) - 1, -1, -1):
                c = rem[k + len(r1) - 1] * inv_lead
                q[k] = c
                if c:
                    for i, dc in enumerate(r1):
                        rem[k + i] -= c * dc
            while rem and rem[-1] == 0:
                rem.pop()
            s = _poly_sub(s0, _poly_mul(q, s1))
            if not rem:
                # r1 is the gcd; it must be a nonzero constant
                if len(r1) != 1:
                    raise ArithmeticError("element not invertible mod Phi_d")
                c = r1[0]
                coeffs = [x / c for x in s1] + [Fraction(0)] * f.phi
                return f.from_fractions(coeffs[: f.phi])
            r0, r1 = r1, rem
            s0, s1 = s1, s

    def __truediv__(self, other):
        if not isinstance(other, Cyclo):
            other = self.field.scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def coefficients(self):
        """Power-basis coordinates as Fractions."""
        return [Fraction(x, self.den) for x in self.num]

    def to_json(self):
        """Canonical form: list of "p/q" strings, lowest terms."""
        return ["%d/%d" % (Fraction(x, self.den).numerator,
                           Fraction(x, self.den).denominator)
                for x in self.num]

    @staticmethod
    def from_json(field, data):
        return field.from_fractions([Fraction(s) for s in data])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "z" if i == 1 else "z^%d" % i
                terms.append(mon if c == 1 else "%s*%s" % (c, mon))
        return " + ".join(terms) if terms else "0"


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and out[-1] == 0:
        out.pop()
    return out
