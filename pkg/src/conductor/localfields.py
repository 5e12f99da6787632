"""Abelian extensions of Q_p presented inside cyclotomic fields.

A field is a triple (p, m, stab_gens): the fixed field of the subgroup S
generated by stab_gens inside the decomposition group

    U = Gal(Q_p(zeta_m)/Q_p) <= (Z/m)*,

which is generated by the inertia part (residues = 1 mod m', arbitrary
mod p^k, where m = p^k m' with p not dividing m') and the Frobenius lift
(= p mod m', = 1 mod p^k).  Ramification data comes from the
conductor-discriminant formula evaluated on the higher unit filtration
I_i = {a in I : a = 1 mod p^i}, so everything stays integer arithmetic.

Only odd p is supported.
"""

from __future__ import annotations

from math import gcd, lcm

from .cyclo import is_prime
from .errors import ContainmentError, InputError


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    """x = a1 mod m1, x = a2 mod m2 for coprime moduli."""
    if m1 == 1:
        return a2 % m2
    if m2 == 1:
        return a1 % m1
    inv = pow(m1, -1, m2)
    return (a1 + m1 * ((a2 - a1) * inv % m2)) % (m1 * m2)


def _mult_closure(gens, m: int) -> tuple:
    """Multiplicative closure of residues mod m (a subgroup of (Z/m)*)."""
    one = 1 % m
    out = {one}
    frontier = [one]
    gens = [g % m for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x * g) % m
            if y not in out:
                out.add(y)
                frontier.append(y)
    return tuple(sorted(out))


def _split_conductor(p: int, m: int) -> tuple[int, int]:
    """m = p^k * m' with p not dividing m'; returns (p^k, m')."""
    pk = 1
    rest = m
    while rest % p == 0:
        pk *= p
        rest //= p
    return pk, rest


def _primitive_root_mod_pk(p: int, pk: int) -> int:
    """Generator of the cyclic group (Z/p^k)*, p odd."""
    for g in range(2, p + 2):
        ok = True
        for q in _prime_factors(p - 1):
            if pow(g, (p - 1) // q, p) == 1:
                ok = False
                break
        if ok:
            # a primitive root mod p generates mod p^k unless g^(p-1) = 1 mod p^2
            if pk > p and pow(g, p - 1, p * p) == 1:
                g += p
            return g % pk
    raise AssertionError("no primitive root mod %d" % p)


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def decomposition_group(p: int, m: int) -> tuple:
    """Gal(Q_p(zeta_m)/Q_p) as a sorted tuple of residues mod m."""
    pk, rest = _split_conductor(p, m)
    gens = []
    if pk > 1:
        g = _primitive_root_mod_pk(p, pk)
        gens.append(_crt(1, rest, g, pk))
    if rest > 1:
        gens.append(_crt(p % rest, rest, 1, pk))
    return _mult_closure(gens, m)


class AbelianLocalField:
    """Fixed field of <stab_gens> inside Q_p(zeta_m), p an odd prime."""

    __slots__ = ("p", "m", "stab", "galois_group", "_ram")

    def __init__(self, p: int, m: int, stab_gens=()):
        if p < 3 or not is_prime(p):
            raise InputError("p must be an odd prime (got %r)" % (p,))
        if m < 1:
            raise InputError("conductor must be positive (got %r)" % (m,))
        if m % 4 == 2:
            # zeta_{2u} and zeta_u generate the same field for odd u
            m //= 2
            stab_gens = [g % m for g in stab_gens]
        self.p = p
        self.m = m
        self.galois_group = decomposition_group(p, m)
        uset = set(self.galois_group)
        for g in stab_gens:
            if gcd(g, m) != 1:
                raise InputError("stabilizer residue %d is not a unit mod %d" % (g, m))
            if g % m not in uset:
                raise InputError(
                    "residue %d is outside the decomposition group mod %d" % (g, m)
                )
        self.stab = _mult_closure(stab_gens, m)
        self._ram = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def qp(p: int) -> "AbelianLocalField":
        return AbelianLocalField(p, 1)

    @staticmethod
    def cyclotomic(p: int, k: int) -> "AbelianLocalField":
        """Q_p(zeta_{p^k})."""
        return AbelianLocalField(p, p**k)

    @staticmethod
    def unramified(p: int, f: int) -> "AbelianLocalField":
        """The unramified extension of Q_p of degree f."""
        if f == 1:
            return AbelianLocalField.qp(p)
        l = 2
        while True:
            if l != p and is_prime(l):
                order = 1
                x = p % l
                while x != 1:
                    x = (x * p) % l
                    order += 1
                if order % f == 0:
                    return AbelianLocalField(p, l, [pow(p, f, l)])
            l += 1

    @staticmethod
    def from_json(obj: dict) -> "AbelianLocalField":
        return AbelianLocalField(
            int(obj["p"]), int(obj["m"]), [int(g) for g in obj.get("stab_gens", [])]
        )

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "stab_gens": list(self.generating_set())}

    def generating_set(self) -> tuple:
        """A short generating set of the stabilizer subgroup."""
        gens = []
        cur = {1 % self.m}
        for a in self.stab:
            if a not in cur:
                gens.append(a)
                cur = set(_mult_closure(gens, self.m))
        return tuple(gens)

    # -- invariants ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.galois_group) // len(self.stab)

    def _ramification(self):
        if self._ram is None:
            pk, rest = _split_conductor(self.p, self.m)
            u_size = len(self.galois_group)
            s = set(self.stab)
            inertia = [a for a in self.galois_group if a % rest == 1 % rest]
            e = len(inertia) // len([a for a in inertia if a in s])
            f = self.degree // e
            # conductor-discriminant: v_p(disc) counts characters of U/S
            # still nontrivial on each higher unit group I_i
            disc = 0
            i = 0
            while True:
                pi = self.p**i
                level = [a for a in inertia if a % pi == 1 % pi]
                prod_size = len(s) * len(level) // len([a for a in level if a in s])
                nontrivial = self.degree - u_size // prod_size
                if nontrivial == 0:
                    break
                disc += nontrivial
                i += 1
            assert disc % f == 0, "discriminant valuation must be divisible by f"
            self._ram = (e, f, disc, disc // f)
        return self._ram

    @property
    def ramification_index(self) -> int:
        return self._ramification()[0]

    @property
    def residue_degree(self) -> int:
        return self._ramification()[1]

    @property
    def discriminant_valuation(self) -> int:
        """v_p of the discriminant over Q_p."""
        return self._ramification()[2]

    @property
    def different_exponent(self) -> int:
        """Valuation of the different over Q_p in the normalized (pi-adic) sense."""
        return self._ramification()[3]

    def is_tame(self) -> bool:
        return self.ramification_index % self.p != 0

    def absolute_valuation_of_p(self) -> int:
        return self.ramification_index

    # -- comparisons ---------------------------------------------------------

    def _stab_preimage(self, big_m: int, big_group) -> set:
        return {a for a in big_group if a % self.m in set(self.stab)}

    def contains(self, other: "AbelianLocalField") -> bool:
        """Whether other is a subfield of self."""
        if self.p != other.p:
            return False
        big = lcm(self.m, other.m)
        group = decomposition_group(self.p, big)
        return self._stab_preimage(big, group) <= other._stab_preimage(big, group)

    def equals(self, other: "AbelianLocalField") -> bool:
        return self.contains(other) and other.contains(self)

    def __repr__(self):
        return "AbelianLocalField(p=%d, m=%d, stab=%r)" % (self.p, self.m, self.generating_set())


def field_of_values(base: AbelianLocalField, values) -> AbelianLocalField:
    """The compositum of base with Q_p(all the given cyclotomic values).

    The stabilizer is cut out inside the decomposition group at the joint
    conductor by fixing the base pointwise and fixing every value.
    """
    big = base.m
    values = list(values)
    for v in values:
        big = lcm(big, v.m)
    group = decomposition_group(base.p, big)
    base_stab = set(base.stab)
    stab = [
        a
        for a in group
        if a % base.m in base_stab
        and all(v.galois(a % v.m if v.m > 1 else 1) == v for v in values)
    ]
    return AbelianLocalField(base.p, big, stab)


def relative_data(base: AbelianLocalField, ext: AbelianLocalField) -> tuple[int, int, int]:
    """(e, f, d) of ext/base: ramification, residue degree, different exponent.

    Raises ContainmentError unless base is a subfield of ext.
    """
    if not ext.contains(base):
        raise ContainmentError(
            "base field (m=%d) is not contained in the extension (m=%d)"
            % (base.m, ext.m)
        )
    e = ext.ramification_index // base.ramification_index
    f = ext.residue_degree // base.residue_degree
    assert e * base.ramification_index == ext.ramification_index
    assert f * base.residue_degree == ext.residue_degree
    # transitivity of the different along Q_p - base - ext
    d = ext.different_exponent - e * base.different_exponent
    assert d >= 0
    return e, f, d


def relative_inverse_different_valuation(
    base: AbelianLocalField, ext: AbelianLocalField
) -> int:
    """Valuation (in ext) of the inverse different of ext/base; always <= 0."""
    return -relative_data(base, ext)[2]
