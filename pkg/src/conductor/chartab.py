"""Character tables of finite groups over exact cyclotomic numbers.

Dixon-Schneider: split the common eigenvectors of the class-multiplication
matrices over F_l for the smallest prime l = 1 (mod exp(G)) with
l > 2*sqrt(|G|), then lift values to Q(zeta) through root-of-unity
multiplicities, which are plain integers bounded by the degree.

Everything is deterministic: classes are ordered by smallest member
(identity first), matrices are consumed in class order, eigenvalues
ascending, and finished rows are sorted by (degree, coefficient tuple
at the exponent conductor).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .cyclo import CycloNumber, is_prime, totient
from .errors import GroupTooLargeError
from .groups import ClassData, FiniteGroup, conjugacy_classes

DEFAULT_BOUND = 2000


def _split_prime(exponent: int, order: int) -> int:
    # smallest prime l = 1 (mod exponent) with l^2 > 4*order; such an l
    # never divides the group order (an element of order l would force
    # l | exponent | l - 1)
    l = exponent + 1
    while not (is_prime(l) and l * l > 4 * order):
        l += exponent
    return l


def _primitive_root(l: int) -> int:
    fact = []
    rest, q = l - 1, 2
    while q * q <= rest:
        if rest % q == 0:
            fact.append(q)
            while rest % q == 0:
                rest //= q
        q += 1
    if rest > 1:
        fact.append(rest)
    for w in range(2, l):
        if all(pow(w, (l - 1) // q, l) != 1 for q in fact):
            return w
    raise AssertionError("no primitive root found")


# -- linear algebra mod l ---------------------------------------------------


def _echelon(vectors, l):
    """Row-echelonize over F_l; returns (rows, pivot columns)."""
    rows = [list(v) for v in vectors]
    piv = []
    r = 0
    width = len(rows[0]) if rows else 0
    for c in range(width):
        hit = next((i for i in range(r, len(rows)) if rows[i][c] % l), None)
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        inv = pow(rows[r][c], -1, l)
        rows[r] = [(x * inv) % l for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % l:
                f = rows[i][c]
                rows[i] = [(x - f * y) % l for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    return rows[:r], piv


def _coords(basis_rows, piv, vec, l):
    """Coordinates of vec in an echelonized basis (vec must lie in the span)."""
    v = list(vec)
    out = []
    for row, c in zip(basis_rows, piv):
        f = v[c] % l
        out.append(f)
        if f:
            v = [(x - f * y) % l for x, y in zip(v, row)]
    assert all(x % l == 0 for x in v), "vector escaped the invariant subspace"
    return out


def _charpoly(a, l):
    """Characteristic polynomial mod l via Hessenberg reduction, ascending coeffs."""
    n = len(a)
    h = [row[:] for row in a]
    for c in range(n - 2):
        hit = next((r for r in range(c + 1, n) if h[r][c] % l), None)
        if hit is None:
            continue
        if hit != c + 1:
            h[c + 1], h[hit] = h[hit], h[c + 1]
            for r in range(n):
                h[r][c + 1], h[r][hit] = h[r][hit], h[r][c + 1]
        inv = pow(h[c + 1][c], -1, l)
        for r in range(c + 2, n):
            f = (h[r][c] * inv) % l
            if f:
                h[r] = [(x - f * y) % l for x, y in zip(h[r], h[c + 1])]
                for i in range(n):
                    h[i][c + 1] = (h[i][c + 1] + f * h[i][r]) % l
    # p_k = charpoly of leading k x k block
    polys = [[1]]
    for k in range(1, n + 1):
        p = [0] + polys[k - 1]
        top = polys[k - 1]
        p = [(x - h[k - 1][k - 1] * y) % l for x, y in zip(p, top + [0])]
        run = 1
        for i in range(k - 1, 0, -1):
            run = (run * h[i][i - 1]) % l
            f = (run * h[i - 1][k - 1]) % l
            if f:
                low = polys[i - 1] + [0] * (len(p) - len(polys[i - 1]))
                p = [(x - f * y) % l for x, y in zip(p, low)]
        polys.append(p)
    return polys[n]


def _kernel(a, l):
    """Kernel basis of a mod l (list of vectors)."""
    n = len(a)
    rows, piv = _echelon(a, l)
    free = [c for c in range(n) if c not in piv]
    out = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for row, c in zip(rows, piv):
            v[c] = (-row[fc]) % l
        out.append(v)
    return out


# -- the table ---------------------------------------------------------------


@dataclass
class CharacterTable:
    group: FiniteGroup
    classes: ClassData
    values: list  # values[row][class] as CycloNumber, minimal conductor
    degrees: list
    exponent: int
    split_prime: int
    _sparse: list = None  # values as {exponent mod E: int} at the exponent conductor

    @property
    def n_classes(self):
        return len(self.classes.classes)

    def representatives(self):
        return self.classes.representatives()

    def sizes(self):
        return self.classes.sizes

    def inverse_class(self, t):
        g = self.group
        return self.classes.class_of[g.inv(self.classes.classes[t][0])]

    def value(self, row, elem):
        """Character value at a group element."""
        return self.values[row][self.classes.class_of[elem]]

    # sparse integer root-of-unity sums at the normalized exponent conductor
    def _sparse_values(self):
        if self._sparse is None:
            e = self.exponent
            e_norm = e // 2 if e % 4 == 2 else e
            sp = []
            for row in self.values:
                srow = []
                for v in row:
                    lifted = v.lift(e_norm) if v.m != e_norm else v
                    # the power basis of zeta_E is an integral basis, so the
                    # coordinates of a character value are plain integers
                    assert all(c.denominator == 1 for c in lifted.coeffs)
                    srow.append({i: int(c) for i, c in enumerate(lifted.coeffs) if c})
                sp.append(srow)
            self._sparse = (e_norm, sp)
        return self._sparse

    def verify_row_orthogonality(self):
        e_norm, sp = self._sparse_values()
        sizes = self.sizes()
        order = self.group.order
        k = self.n_classes
        inv = [self.inverse_class(t) for t in range(k)]
        for i in range(len(self.values)):
            for j in range(i, len(self.values)):
                acc: dict = {}
                for t in range(k):
                    a, b = sp[i][t], sp[j][inv[t]]
                    if not a or not b:
                        continue
                    s = sizes[t]
                    for ea, ca in a.items():
                        for eb, cb in b.items():
                            key = ea + eb
                            acc[key] = acc.get(key, 0) + s * ca * cb
                total = _collapse(acc, e_norm)
                want = Fraction(order) if i == j else Fraction(0)
                if total != CycloNumber(1, [want]):
                    return False
        return True

    def verify_column_orthogonality(self):
        e_norm, sp = self._sparse_values()
        sizes = self.sizes()
        order = self.group.order
        k = self.n_classes
        inv = [self.inverse_class(t) for t in range(k)]
        for t in range(k):
            for s in range(t, k):
                acc: dict = {}
                for i in range(len(self.values)):
                    a, b = sp[i][t], sp[i][inv[s]]
                    for ea, ca in a.items():
                        for eb, cb in b.items():
                            key = ea + eb
                            acc[key] = acc.get(key, 0) + ca * cb
                total = _collapse(acc, e_norm)
                want = Fraction(order, sizes[t]) if s == t else Fraction(0)
                if total != CycloNumber(1, [want]):
                    return False
        return True

    def verify_degrees(self):
        order = self.group.order
        return (
            sum(d * d for d in self.degrees) == order
            and all(order % d == 0 for d in self.degrees)
        )

    def to_json(self):
        return {
            "order": self.group.order,
            "classes": [
                {"representative": c[0], "size": len(c)} for c in self.classes.classes
            ],
            "exponent": self.exponent,
            "split_prime": self.split_prime,
            "degrees": list(self.degrees),
            "rows": [[v.to_json() for v in row] for row in self.values],
        }


def _collapse(acc: dict, e_norm: int) -> CycloNumber:
    dense = [0] * e_norm
    for e, c in acc.items():
        dense[e % e_norm] += c
    return CycloNumber(e_norm, dense)


def character_table(g: FiniteGroup, bound: int = DEFAULT_BOUND) -> CharacterTable:
    if g.order > bound:
        raise GroupTooLargeError(
            "character table limited to order <= %d (got %d)" % (bound, g.order)
        )
    cached = getattr(g, "_char_table", None)
    if cached is not None:
        return cached

    cls = conjugacy_classes(g)
    k = len(cls.classes)
    reps = cls.representatives()
    sizes = cls.sizes
    order = g.order
    e = g.exponent()
    l = _split_prime(e, order)

    # class multiplication coefficients a[i][j][t]: c_i c_j = sum_t a_ijt c_t
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for x in range(order):
        i = cls.class_of[x]
        xi = g.inv(x)
        for t, z in enumerate(reps):
            j = cls.class_of[g.mult(xi, z)]
            mats[i][j][t] += 1

    # split the common eigenvectors, matrices in class order
    spaces = [([[1 if c == r else 0 for c in range(k)] for r in range(k)], list(range(k)))]
    for i in range(1, k):
        if all(len(piv) == 1 for _, piv in spaces):
            break
        mat = mats[i]
        nxt = []
        for basis, piv in spaces:
            if len(piv) == 1:
                nxt.append((basis, piv))
                continue
            # (M b)_j = sum_t a_ijt b_t, one image per basis vector
            imgs = [
                [sum(mrow[t] * row[t] for t in range(k) if row[t]) % l for mrow in mat]
                for row in basis
            ]
            act = [_coords(basis, piv, img, l) for img in imgs]
            act = [list(col) for col in zip(*act)]  # columns are the images
            poly = _charpoly(act, l)
            roots = [lam for lam in range(l) if _horner(poly, lam, l) == 0]
            for lam in roots:
                shifted = [
                    [(act[r][c] - (lam if r == c else 0)) % l for c in range(len(act))]
                    for r in range(len(act))
                ]
                ker = _kernel(shifted, l)
                if not ker:
                    continue
                sub = [
                    [sum(kv[r] * basis[r][c] for r in range(len(basis))) % l for c in range(k)]
                    for kv in ker
                ]
                nxt.append(_echelon(sub, l))
        spaces = nxt
    assert all(len(piv) == 1 for _, piv in spaces), "class matrices failed to split"

    # central characters -> degrees -> values mod l
    inv_class = [cls.class_of[g.inv(z)] for z in reps]
    rows_mod = []
    degrees = []
    for basis, _ in spaces:
        u = basis[0]
        u = [(x * pow(u[0], -1, l)) % l for x in u]  # identity coordinate 1
        s = sum(u[t] * u[inv_class[t]] * pow(sizes[t], -1, l) for t in range(k)) % l
        d2 = (order * pow(s, -1, l)) % l
        d = next(dd for dd in range(1, isqrt(order) + 1) if (dd * dd - d2) % l == 0)
        chi = [(d * u[t] * pow(sizes[t], -1, l)) % l for t in range(k)]
        degrees.append(d)
        rows_mod.append(chi)

    # lift to exact cyclotomic values through multiplicities of roots of unity
    w = _primitive_root(l)
    elem_orders = [g.element_order(z) for z in reps]
    powmaps = []  # powmaps[t][s] = class of rep_t^s
    for t, z in enumerate(reps):
        pm = [cls.class_of[0]]
        y = z
        for _ in range(elem_orders[t] - 1):
            pm.append(cls.class_of[y])
            y = g.mult(y, z)
        powmaps.append(pm)

    values = []
    for chi, d in zip(rows_mod, degrees):
        row = []
        for t in range(k):
            o = elem_orders[t]
            zinv = pow(w, -((l - 1) // o), l)
            vs = [chi[powmaps[t][s]] for s in range(o)]
            coeffs = _lift_coeffs(vs, o, zinv, pow(o, -1, l), l)
            assert all(c <= d for c in coeffs), "multiplicity lift exceeded the degree"
            row.append(CycloNumber(o, coeffs).minimal_conductor())
        values.append(row)

    # deterministic row order
    e_norm = e // 2 if e % 4 == 2 else e
    phi_e = totient(e_norm)

    def key(idx):
        row = values[idx]
        flat = []
        for v in row:
            lifted = v.lift(e_norm) if v.m != e_norm else v
            flat.extend(lifted.coeffs)
            flat.extend([Fraction(0)] * (phi_e - len(lifted.coeffs)))
        return (degrees[idx], flat)

    perm = sorted(range(len(values)), key=key)
    table = CharacterTable(
        group=g,
        classes=cls,
        values=[values[i] for i in perm],
        degrees=[degrees[i] for i in perm],
        exponent=e,
        split_prime=l,
    )
    g._char_table = table
    return table


def _horner(poly, x, l):
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % l
    return acc


def _lift_coeffs(vs, o, zinv, oinv, l):
    """Multiplicities a_j of zeta_o^j from values on the power map."""
    out = []
    zj = 1  # zinv^j
    for _ in range(o):
        s_acc = 0
        zs = 1  # zj^s
        for v in vs:
            s_acc += v * zs
            zs = (zs * zj) % l
        out.append((s_acc * oinv) % l)
        zj = (zj * zinv) % l
    return out


# -- automorphism orbits and restriction -------------------------------------


@dataclass
class CharOrbit:
    """Orbit of irreducible characters of H under a group automorphism."""

    members: tuple  # row indices, orbit order
    eta_degree: int

    @property
    def w(self):
        return len(self.members)


def alpha_orbits(table: CharacterTable, alpha) -> list[CharOrbit]:
    """Orbits of table rows under eta -> eta o alpha, smallest row first."""
    g = table.group
    cls = table.classes
    # the permutation row -> row of (eta o alpha)
    perm = []
    for i, row in enumerate(table.values):
        moved = tuple(row[cls.class_of[alpha(z)]] for z in cls.representatives())
        target = next(
            j
            for j, other in enumerate(table.values)
            if tuple(other) == moved
        )
        perm.append(target)
    orbits = []
    seen = set()
    for i in range(len(table.values)):
        if i in seen:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        seen.update(orbit)
        orbits.append(CharOrbit(tuple(orbit), table.degrees[i]))
    return orbits


def restrict_and_decompose(
    big: CharacterTable, row: int, small: CharacterTable, embedding=None
) -> list[tuple[int, int]]:
    """Decompose the restriction of big-row to the subgroup of `small`.

    embedding maps elements of the small group into the big group
    (default: identity indices).  Returns (small row, multiplicity) pairs
    with positive multiplicity; multiplicities are certified integers.
    """
    h = small.group
    if embedding is None:
        embedding = list(range(h.order))
    res = [
        big.values[row][big.classes.class_of[embedding[z]]]
        for z in small.classes.representatives()
    ]
    sizes = small.classes.sizes
    out = []
    for j, eta in enumerate(small.values):
        acc = CycloNumber.rational(0)
        for t in range(small.n_classes):
            acc = acc + res[t] * eta[small.inverse_class(t)] * sizes[t]
        mult = acc / h.order
        assert mult.is_rational() and mult.as_fraction().denominator == 1, (
            "inner product is not an integer"
        )
        m = int(mult.as_fraction())
        if m:
            out.append((j, m))
    return out
