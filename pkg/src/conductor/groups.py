"""Finite groups, automorphisms, and semidirect data H x| Z_p.

Elements of a FiniteGroup are integers 0..order-1 with 0 the identity.
Groups of order <= 512 carry a full multiplication table; larger groups
multiply through a callable (permutation images or the semidirect
decomposition), so quotients H x| Z/p^m stay usable past the table bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import GroupTooLargeError, InputError, InvalidQuotientError

TABLE_BOUND = 512


class FiniteGroup:
    def __init__(self, order, mult_func, generators, name="G", table=None):
        self.order = order
        self.name = name
        self.generators = list(generators)
        if table is None and order <= TABLE_BOUND:
            table = [[mult_func(a, b) for b in range(order)] for a in range(order)]
        self.table = table
        self._mult_func = mult_func
        self._inv = None
        self._orders = None

    # -- construction -------------------------------------------------

    @staticmethod
    def from_table(table, generators=None, name="G"):
        n = len(table)
        for row in table:
            if len(row) != n or sorted(row) != list(range(n)):
                raise InputError("multiplication table rows must be permutations of 0..n-1")
        if any(table[0][b] != b for b in range(n)) or any(table[a][0] != a for a in range(n)):
            raise InputError("element 0 must be the identity")
        # full associativity check up to order 64, spot-check above that
        third = range(n) if n <= 64 else (0, 1 % n, n - 1)
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in third:
                    if table[ab][c] != table[a][table[b][c]]:
                        raise InputError("table is not associative")
        g = FiniteGroup(n, lambda a, b: table[a][b], generators or [], name=name, table=table)
        if not g.generators:
            g.generators = g._greedy_generators()
        return g

    @staticmethod
    def from_permutations(gens, degree, name="G"):
        """Group generated by permutations (tuples of images on 0..degree-1)."""
        gens = [tuple(p) for p in gens]
        for p in gens:
            if sorted(p) != list(range(degree)):
                raise InputError("generator is not a permutation of 0..degree-1")
        ident = tuple(range(degree))
        elems = [ident]
        index = {ident: 0}
        words = {0: ()}
        cursor = 0
        while cursor < len(elems):
            cur = elems[cursor]
            for j, p in enumerate(gens):
                nxt = tuple(p[cur[i]] for i in range(degree))
                if nxt not in index:
                    index[nxt] = len(elems)
                    words[index[nxt]] = words[cursor] + (j,)
                    elems.append(nxt)
                    if len(elems) > 100000:
                        raise GroupTooLargeError("permutation closure exceeded 100000 elements")
            cursor += 1
        n = len(elems)

        def mult(a, b):
            pa, pb = elems[a], elems[b]
            return index[tuple(pb[pa[i]] for i in range(degree))]

        g = FiniteGroup(n, mult, [index[p] for p in gens], name=name)
        g._perms = elems
        g._words = words  # generator words, for evaluating representations
        return g

    def _greedy_generators(self):
        got = {0}
        gens = []
        for x in range(1, self.order):
            if x not in got:
                gens.append(x)
                got = _closure(self, got | {x})
                if len(got) == self.order:
                    break
        return gens

    # -- arithmetic ---------------------------------------------------

    def mult(self, a, b):
        if self.table is not None:
            return self.table[a][b]
        return self._mult_func(a, b)

    def inv(self, a):
        if self._inv is None:
            inv = [0] * self.order
            if self.table is not None:
                for x in range(self.order):
                    inv[x] = self.table[x].index(0)
            else:
                for x in range(self.order):
                    y = x
                    while self.mult(y, x) != 0:
                        y = self.mult(y, x)
                    inv[x] = y  # x^(order(x)-1)
            self._inv = inv
        return self._inv[a]

    def conj(self, a, x):
        """a x a^-1."""
        return self.mult(self.mult(a, x), self.inv(a))

    def element_order(self, a):
        o, y = 1, a
        while y != 0:
            y = self.mult(y, a)
            o += 1
        return o

    def exponent(self):
        e = 1
        for x in range(self.order):
            o = self.element_order(x)
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self):
        return all(
            self.mult(a, b) == self.mult(b, a) for a in self.generators for b in self.generators
        )

    def word(self, x):
        """Generator word for x (only for permutation-built groups)."""
        return self._words[x]

    def __repr__(self):
        return "%s(order=%d)" % (self.name, self.order)


def _closure(g, seed):
    got = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        for s in list(got):
            for y in (g.mult(x, s), g.mult(s, x)):
                if y not in got:
                    got.add(y)
                    frontier.append(y)
    return got


def subgroup_closure(g, elements):
    """Sorted list of the subgroup generated by the given elements."""
    return sorted(_closure(g, set(elements) | {0}))


@dataclass
class ClassData:
    classes: list  # list of sorted element lists, identity class first
    class_of: list  # element -> class index

    @property
    def sizes(self):
        return [len(c) for c in self.classes]

    def representatives(self):
        return [c[0] for c in self.classes]


def conjugacy_classes(g: FiniteGroup) -> ClassData:
    """Classes ordered by their smallest element, so the identity class is first."""
    class_of = [-1] * g.order
    classes = []
    for x in range(g.order):
        if class_of[x] >= 0:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for a in g.generators:
                z = g.conj(a, y)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        idx = len(classes)
        classes.append(sorted(orbit))
        for y in orbit:
            class_of[y] = idx
    return ClassData(classes, class_of)


def commutator_subgroup(g: FiniteGroup) -> list:
    """Sorted elements of [G, G] (all commutators, then subgroup closure)."""
    if g.order > TABLE_BOUND:
        raise GroupTooLargeError("commutator subgroup needs the table bound %d" % TABLE_BOUND)
    comms = set()
    for a in range(g.order):
        ia = g.inv(a)
        for b in range(g.order):
            comms.add(g.mult(g.mult(a, b), g.mult(ia, g.inv(b))))
    return sorted(_closure(g, comms | {0}))


class GroupAutomorphism:
    """Automorphism of a FiniteGroup given by the full image list."""

    def __init__(self, group: FiniteGroup, images):
        if len(images) != group.order or sorted(images) != list(range(group.order)):
            raise InputError("automorphism images must be a permutation of the elements")
        if images[0] != 0:
            raise InputError("automorphism must fix the identity")
        for a in range(group.order):
            for b in range(group.order):
                if images[group.mult(a, b)] != group.mult(images[a], images[b]):
                    raise InputError("images do not define a homomorphism")
        self.group = group
        self.images = list(images)

    def __call__(self, x):
        return self.images[x]

    def order(self):
        ident = list(range(self.group.order))
        cur, o = self.images, 1
        while cur != ident:
            cur = [self.images[x] for x in cur]
            o += 1
        return o

    def power_images(self, t):
        cur = list(range(self.group.order))
        t %= self.order()
        for _ in range(t):
            cur = [self.images[x] for x in cur]
        return cur

    @staticmethod
    def identity(group):
        return GroupAutomorphism(group, list(range(group.order)))

    @staticmethod
    def inner(group, a):
        return GroupAutomorphism(group, [group.conj(a, x) for x in range(group.order)])


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


@dataclass
class SemidirectData:
    """H x| Gamma with Gamma procyclic pro-p, acting through alpha of order p^n."""

    h: FiniteGroup
    alpha: GroupAutomorphism
    p: int
    n: int = field(init=False)
    alpha_pows: list = field(init=False, repr=False)

    def __post_init__(self):
        if not _is_odd_prime(self.p):
            raise InputError("p must be an odd prime, got %r" % (self.p,))
        o = self.alpha.order()
        n = 0
        while o % self.p == 0:
            o //= self.p
            n += 1
        if o != 1:
            raise InputError("automorphism order must be a power of p")
        self.n = n
        self.alpha_pows = [self.alpha.power_images(t) for t in range(self.p**self.n)]

    def alpha_power(self, t, x):
        return self.alpha_pows[t % (self.p**self.n)][x]

    def name(self):
        return "%s:|Z%d" % (self.h.name, self.p)


def finite_quotient(sd: SemidirectData, m: int) -> FiniteGroup:
    """The quotient H x| Z/p^m; element gamma^i * h has index i*|H| + h.

    H sits at indices 0..|H|-1 and conjugation by the coset generator
    (index |H|) acts on H through alpha.  Requires m >= n so that the
    automorphism factors through the quotient.
    """
    if m < sd.n:
        raise InvalidQuotientError("level m=%d is below the action exponent n=%d" % (m, sd.n))
    hn = sd.h.order
    pm = sd.p**m
    order = hn * pm

    def mult(a, b):
        i, x = divmod(a, hn)
        j, y = divmod(b, hn)
        # gamma^i x gamma^j y = gamma^(i+j) alpha^(-j)(x) y
        xs = sd.alpha_power(-j, x)
        return ((i + j) % pm) * hn + sd.h.mult(xs, y)

    gens = list(sd.h.generators)
    if pm > 1:
        gens.append(hn)
    g = FiniteGroup(order, mult, gens, name="%s:|Z/%d^%d" % (sd.h.name, sd.p, m))
    g.semidirect = (sd, m)
    return g


def direct_product(a: FiniteGroup, b: FiniteGroup, name=None) -> FiniteGroup:
    n, k = a.order, b.order

    def mult(x, y):
        xa, xb = divmod(x, k)
        ya, yb = divmod(y, k)
        return a.mult(xa, ya) * k + b.mult(xb, yb)

    gens = [ga * k for ga in a.generators] + list(b.generators)
    return FiniteGroup(n * k, mult, gens, name=name or "%sx%s" % (a.name, b.name))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(n, lambda a, b: (a + b) % n, [1] if n > 1 else [], name="C%d" % n)


def cyclic_automorphism(n: int, k: int) -> GroupAutomorphism:
    """x -> k*x on Z/n."""
    if gcd(k, n) != 1:
        raise InputError("multiplier must be a unit mod n")
    return GroupAutomorphism(cyclic_group(n), [(k * x) % n for x in range(n)])
