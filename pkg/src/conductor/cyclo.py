"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Numbers are vectors of Fractions on the power basis 1, z, ..., z^(phi(m)-1)
with z = exp(2*pi*i/m), reduced modulo the m-th cyclotomic polynomial.  No
floating point anywhere; equality is decided exactly after moving both sides
to a common conductor.  Conductors are normalized to m != 2 (mod 4), using
zeta_{2u} = -zeta_u^((u+1)/2) for odd u.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidAutomorphismError

ZERO = Fraction(0)
ONE = Fraction(1)


def totient(m: int) -> int:
    out, rest, q = 1, m, 2
    while q * q <= rest:
        if rest % q == 0:
            out *= q - 1
            rest //= q
            while rest % q == 0:
                out *= q
                rest //= q
        q += 1
    if rest > 1:
        out *= rest - 1
    return out


def divisors(m: int) -> list[int]:
    small, large = [], []
    q = 1
    while q * q <= m:
        if m % q == 0:
            small.append(q)
            if q != m // q:
                large.append(m // q)
        q += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def _poly_divmod(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (remainder must vanish)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficient tuple (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    poly = [0] * m + [1]
    poly[0] = -1  # x^m - 1
    for d in divisors(m)[:-1]:
        poly = _poly_divmod(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_context(m: int):
    """Power basis data for Q(zeta_m): (phi, table of zeta^e for 0 <= e < max(m, 2*phi-1))."""
    phi = totient(m)
    mod = cyclotomic_poly(m)
    top = [-c for c in mod[:-1]]  # z^phi in lower powers
    powers: list[tuple[int, ...]] = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(m, 2 * phi - 1)):
        powers.append(tuple(cur))
        nxt = [0] + cur[:-1]
        lead = cur[-1]
        if lead:
            for i in range(phi):
                nxt[i] += lead * top[i]
        cur = nxt
    return phi, powers


def _reduce_poly(m: int, coeffs) -> tuple[Fraction, ...]:
    """Reduce a coefficient list of any length modulo Phi_m."""
    phi, powers = _reduction_context(m)
    out = [ZERO] * phi
    for e, c in enumerate(coeffs):
        if c:
            pw = powers[e % m] if e >= len(powers) else powers[e]
            # e >= len(powers) only happens for exponents folded mod m upstream
            for i, t in enumerate(pw):
                if t:
                    out[i] += c * t
    return tuple(out)


class CycloNumber:
    """An element of Q(zeta_m), exact and canonical at its stored conductor."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        if m <= 0:
            raise InvalidAutomorphismError("conductor must be positive")
        if m % 4 == 2:
            # zeta_{2u} = -zeta_u^((u+1)/2): rewrite at the odd conductor
            u = m // 2
            phi_u, powers = _reduction_context(u)
            acc = [ZERO] * phi_u
            s = (u + 1) // 2
            for e, c in enumerate(coeffs):
                c = Fraction(c)
                if not c:
                    continue
                if e % 2:
                    c = -c
                pw = powers[(e * s) % u]
                for i, t in enumerate(pw):
                    if t:
                        acc[i] += c * t
            m, coeffs = u, acc
        phi, _ = _reduction_context(m)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) < phi:
            cs += [ZERO] * (phi - len(cs))
        elif len(cs) > phi:
            cs = list(_reduce_poly(m, cs))
        self.m = m
        self.coeffs = tuple(cs)

    @staticmethod
    def root(m: int, e: int = 1) -> "CycloNumber":
        """zeta_m^e."""
        if m % 4 == 2:
            return CycloNumber(m, _unit_vector(m, e % m))
        _, powers = _reduction_context(m)
        return CycloNumber(m, powers[e % m])

    @staticmethod
    def rational(q) -> "CycloNumber":
        return CycloNumber(1, [Fraction(q)])

    def lift(self, big: int) -> "CycloNumber":
        """Rewrite at a conductor multiple (big % self.m == 0)."""
        if big == self.m:
            return self
        assert big % self.m == 0 and big % 4 != 2
        step = big // self.m
        phi, powers = _reduction_context(big)
        acc = [ZERO] * phi
        for e, c in enumerate(self.coeffs):
            if c:
                pw = powers[(e * step) % big]
                for i, t in enumerate(pw):
                    if t:
                        acc[i] += c * t
        return CycloNumber(big, acc)

    def _pair(self, other):
        other = other if isinstance(other, CycloNumber) else CycloNumber.rational(other)
        if self.m == other.m:
            return self, other
        m = _common_conductor(self.m, other.m)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._pair(other)
        return CycloNumber(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        return CycloNumber(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.m, [c * other for c in self.coeffs])
        a, b = self._pair(other)
        n = len(a.coeffs)
        prod = [ZERO] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber(a.m, _reduce_poly(a.m, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        mod = [Fraction(c) for c in cyclotomic_poly(self.m)]
        g, _, inv = _poly_xgcd(mod, list(self.coeffs))
        assert len(g) == 1  # Phi_m is squarefree, element nonzero
        scale = ONE / g[0]
        return CycloNumber(self.m, [scale * c for c in inv])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNumber(self.m, [c / q for c in self.coeffs])
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycloNumber":
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNumber(self.m, [ONE] + [ZERO] * (len(self.coeffs) - 1))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        red = self.minimal_conductor()
        return hash((red.m, red.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number: %r" % (self,))
        return self.coeffs[0]

    def galois(self, k: int) -> "CycloNumber":
        """Apply zeta_m -> zeta_m^k; k must be a unit mod m."""
        if gcd(k, self.m) != 1:
            raise InvalidAutomorphismError(
                "exponent %d is not coprime to conductor %d" % (k, self.m)
            )
        _, powers = _reduction_context(self.m)
        acc = [ZERO] * len(self.coeffs)
        for e, c in enumerate(self.coeffs):
            if c:
                pw = powers[(e * k) % self.m]
                for i, t in enumerate(pw):
                    if t:
                        acc[i] += c * t
        return CycloNumber(self.m, acc)

    def conjugate(self) -> "CycloNumber":
        return self.galois(self.m - 1) if self.m > 1 else self

    def trace_to_q(self) -> Fraction:
        """Trace to Q, via Tr(zeta_m^e) = mu(m/g) * phi(m)/phi(m/g), g = gcd(e, m)."""
        tot = ZERO
        phi_m = totient(self.m)
        for e, c in enumerate(self.coeffs):
            if c:
                g = gcd(e, self.m)
                tot += c * (_mu(self.m // g) * phi_m // totient(self.m // g))
        return tot

    def stabilizer(self) -> list[int]:
        """All k in (Z/m)* with galois(k) fixing the number."""
        return [k for k in range(1, self.m + 1) if gcd(k, self.m) == 1 and self.galois(k) == self]

    def minimal_conductor(self) -> "CycloNumber":
        """Rewrite at the smallest conductor (never 2 mod 4); idempotent."""
        for d in divisors(self.m):
            if d % 4 == 2:
                continue
            # fixed by the kernel of (Z/m)* -> (Z/d)* means the value is in Q(zeta_d)
            if all(
                self.galois(k) == self
                for k in range(1, self.m + 1)
                if gcd(k, self.m) == 1 and k % d == 1 % d
            ):
                return self._rebase(d)
        return self

    def _rebase(self, d: int) -> "CycloNumber":
        if d == self.m:
            return self
        step = self.m // d
        _, powers = _reduction_context(self.m)
        cols = [powers[(j * step) % self.m] for j in range(totient(d))]
        sol = _solve_exact(cols, list(self.coeffs))
        if sol is None:
            raise AssertionError("rebase target does not contain the value")
        return CycloNumber(d, sol)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "CycloNumber":
        coeffs = [Fraction(int(n), int(d)) for n, d in obj["coeffs"]]
        return CycloNumber(int(obj["m"]), coeffs)

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                if e == 0:
                    terms.append(str(c))
                else:
                    mono = "z%d" % self.m if e == 1 else "z%d^%d" % (self.m, e)
                    terms.append(mono if c == 1 else "%s*%s" % (c, mono))
        return " + ".join(terms).replace("+ -", "- ")


def _unit_vector(m, e):
    v = [0] * m
    v[e] = 1
    return v


@lru_cache(maxsize=None)
def _mu(n: int) -> int:
    out, rest, q = 1, n, 2
    while q * q <= rest:
        if rest % q == 0:
            rest //= q
            if rest % q == 0:
                return 0
            out = -out
        q += 1
    if rest > 1:
        out = -out
    return out


def _common_conductor(a: int, b: int) -> int:
    m = a * b // gcd(a, b)
    while m % 4 == 2:
        m //= 2
    return m


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_xgcd(a, b):
    """Extended gcd over Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [ONE], [ZERO]
    t0, t1 = [ZERO], [ONE]
    while r1 != [ZERO]:
        q, r = _poly_divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    return r0, s0, t0


def _poly_divmod_q(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [ZERO] * max(len(num) - dd, 1)
    inv = ONE / den[-1]
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd] * inv
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return _poly_trim(out), _poly_trim(num)


def _poly_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [ZERO] * (n - len(a))
    b = list(b) + [ZERO] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _solve_exact(cols, target):
    """Solve sum x_j * cols[j] = target over Q; None if inconsistent."""
    rows = len(target)
    ncols = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(target[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = ONE / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols]:
            return None
    sol = [ZERO] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][ncols]
    return sol
