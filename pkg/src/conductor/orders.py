"""Rings of integers as explicit lattices with exact arithmetic.

GlobalFieldModel materializes the valuation ring of an AbelianLocalField
when the presentation is globally inert (the decomposition group times
the stabilizer covers all of (Z/m)*), because then the ring of integers
of the global fixed field tensored with Z_p IS the local ring and the
global trace form agrees with the local one.  The basis is the power
basis of zeta_m for the full cyclotomic field and the Gauss period
basis otherwise; either way maximality at p is certified by comparing
v_p(det Gram) against the conductor-discriminant prediction, so no
unverified maximality assumption enters downstream results.

The maximal ideal is computed as the preimage of the nilradical of
O/pO, which is the kernel of a power of the Frobenius map - an F_p
-linear map here, so plain linear algebra mod p with no element search.
The same routine serves the cyclotomic blocks Z_p[x]/Phi_d used by the
finite-level brute-force oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import CycloNumber, _solve_exact, totient
from .errors import UnsupportedPresentationError
from .localfields import AbelianLocalField
from .padic import PLattice, hnf_columns, vp

DEFAULT_PRECISION = 24


def fraction_determinant(rows) -> Fraction:
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def fraction_inverse(rows):
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


# -- radical of a commutative algebra over Z_p --------------------------------


def _fp_residue(c, p: int) -> int:
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


def _fp_kernel(p, rows):
    """Kernel basis of the matrix mod p (rows as lists)."""
    n = len(rows[0]) if rows else 0
    a = [[x % p for x in row] for row in rows]
    piv_cols = []
    r = 0
    for c in range(n):
        hit = next((i for i in range(r, len(a)) if a[i][c]), None)
        if hit is None:
            continue
        a[r], a[hit] = a[hit], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    out = []
    for c in range(n):
        if c in piv_cols:
            continue
        v = [0] * n
        v[c] = 1
        for row, pc in zip(a, piv_cols):
            v[pc] = (-row[c]) % p
        out.append(v)
    return out


def nilradical_mod_p(p, mult, dim, one):
    """Kernel of Frobenius^t on the F_p-algebra with multiplication mult.

    mult(u, v) maps integer coordinate vectors to one; the algebra is
    commutative with identity coordinates `one`.  t is chosen with
    p^t >= dim, enough to kill every nilpotent.
    """

    def power(vec, n):
        acc = list(one)
        base = [x % p for x in vec]
        while n:
            if n & 1:
                acc = [x % p for x in mult(acc, base)]
            n >>= 1
            if n:
                base = [x % p for x in mult(base, base)]
        return acc

    frob = []
    for i in range(dim):
        e = [1 if j == i else 0 for j in range(dim)]
        frob.append(power(e, p))
    # columns of the Frobenius matrix are frob[i]; iterate t times
    t = 1
    while p**t < dim:
        t += 1
    mat = [[frob[j][i] % p for j in range(dim)] for i in range(dim)]  # rows
    acc = mat
    for _ in range(t - 1):
        acc = [[sum(acc[i][k] * mat[k][j] for k in range(dim)) % p for j in range(dim)]
               for i in range(dim)]
    return _fp_kernel(p, acc)


def radical_lattice(p, precision, mult, dim, one) -> PLattice:
    """The Jacobson radical {v : v nilpotent mod p} as a lattice over Z_p."""
    kernel = nilradical_mod_p(p, mult, dim, one)
    cols = [list(v) for v in kernel]
    cols += [[p if i == j else 0 for i in range(dim)] for j in range(dim)]
    return hnf_columns(p, precision, cols)


def lattice_product(p, precision, mult, a_cols, b_cols) -> PLattice:
    """HNF of the span of all pairwise products of the given columns."""
    cols = [mult(u, v) for u in a_cols for v in b_cols]
    return hnf_columns(p, precision, cols)


# -- the order model -----------------------------------------------------------


class GlobalFieldModel:
    """Ring of integers of an abelian local field as an exact lattice."""

    def __init__(self, field: AbelianLocalField, precision: int = DEFAULT_PRECISION):
        self.field = field
        self.precision = precision
        p, m = field.p, field.m
        units = [a for a in range(m) if gcd(a, m) == 1] or [0]
        covered = sorted({(u * s) % m for u in field.galois_group for s in field.stab})
        if covered != units:
            raise UnsupportedPresentationError(
                "presentation is not globally inert: decomposition group times "
                "stabilizer covers %d of %d residues mod %d"
                % (len(covered), len(units), m)
            )

        if len(field.stab) == 1:
            self.basis = [CycloNumber.root(m) ** i for i in range(totient(m))]
        else:
            stab = set(field.stab)
            reps, seen = [], set()
            for a in units:
                if a not in seen:
                    reps.append(a)
                    seen.update((a * s) % m for s in stab)
            self.basis = [
                sum(
                    (CycloNumber.root(m, (c * s) % m) for s in field.stab),
                    CycloNumber.rational(0),
                )
                for c in reps
            ]
        self.degree = len(self.basis)
        assert self.degree == field.degree

        self._basis_cols = [list(b.lift(m).coeffs) for b in self.basis]
        self._coord_width = totient(m)

        # structure constants must be p-integral for the span to be an
        # order over the local ring; a failure here means the basis does
        # not span a ring at p and the model is unusable
        self.structure = []
        for i in range(self.degree):
            row = []
            for j in range(self.degree):
                coords = self.to_coords(self.basis[i] * self.basis[j])
                if any(c.denominator % p == 0 for c in coords):
                    raise UnsupportedPresentationError(
                        "basis products leave the lattice at p=%d" % p
                    )
                row.append(coords)
            self.structure.append(row)

        # Gram certificate: v_p(det) must equal the conductor-discriminant
        # prediction, which certifies maximality at p
        stab_size = len(field.stab)
        self.gram = [
            [
                (self.basis[i] * self.basis[j]).trace_to_q() / stab_size
                for j in range(self.degree)
            ]
            for i in range(self.degree)
        ]
        det = fraction_determinant(self.gram)
        assert det != 0
        if vp(det, p) != field.discriminant_valuation:
            raise UnsupportedPresentationError(
                "basis discriminant valuation %d does not match the "
                "conductor-discriminant value %d"
                % (vp(det, p), field.discriminant_valuation)
            )
        self._radical = None

    # -- coordinates ---------------------------------------------------------

    def to_coords(self, x: CycloNumber) -> list:
        lifted = x.lift(self.field.m) if x.m != self.field.m else x
        sol = _solve_exact(self._basis_cols, list(lifted.coeffs))
        if sol is None:
            raise ValueError("element does not lie in the field")
        return sol

    def from_coords(self, coords) -> CycloNumber:
        acc = CycloNumber.rational(0)
        for c, b in zip(coords, self.basis):
            if c:
                acc = acc + b * c
        return acc

    def one_coords(self) -> list:
        return self.to_coords(CycloNumber.rational(1))

    def mult_coords(self, u, v) -> list:
        out = [Fraction(0)] * self.degree
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        s = x * y
                        for k, c in enumerate(self.structure[i][j]):
                            if c:
                                out[k] += s * c
        return out

    # -- invariants ------------------------------------------------------------

    def element_valuation(self, x: CycloNumber) -> int:
        """Normalized valuation (uniformizer has valuation 1) via the norm."""
        if x.is_zero():
            raise ValueError("valuation of zero")
        m = self.field.m
        stab = set(self.field.stab)
        norm = CycloNumber.rational(1)
        seen = set()
        for a in range(max(m, 2)):
            if m == 1:
                break
            if gcd(a, m) != 1 or a in seen:
                continue
            seen.update((a * s) % m for s in stab)
            norm = norm * x.galois(a)
        if m == 1:
            norm = x
        q = norm.as_fraction()
        f = self.field.residue_degree
        v = vp(q, self.field.p)
        assert v % f == 0, "norm valuation must be divisible by the residue degree"
        return v // f

    def dual_basis_coords(self):
        """Coordinates (in self.basis) of the trace-dual basis."""
        return fraction_inverse(self.gram)

    def maximal_ideal(self) -> PLattice:
        if self._radical is None:
            p = self.field.p
            self._radical = radical_lattice(
                p,
                self.precision,
                lambda u, v: [_fp_residue(c, p) for c in self.mult_coords(list(u), list(v))],
                self.degree,
                [_fp_residue(c, p) for c in self.one_coords()],
            )
        return self._radical

    def ideal_power(self, k: int) -> PLattice:
        """J^k for k >= 0 as a lattice in basis coordinates."""
        if k == 0:
            unit_cols = [[1 if i == j else 0 for i in range(self.degree)] for j in range(self.degree)]
            return hnf_columns(self.field.p, self.precision, unit_cols)
        j = self.maximal_ideal()
        cols = [list(c) for c in j.cols]
        out = j
        for _ in range(k - 1):
            out = lattice_product(
                self.field.p,
                self.precision,
                lambda u, v: self.mult_coords(list(u), list(v)),
                out.cols,
                cols,
            )
        return out

    def inverse_different_dual_check(self) -> bool:
        """Certify the trace dual of O equals J^(-d) with d from the
        conductor-discriminant route.  Two independent computations of the
        different must coincide."""
        p = self.field.p
        d = self.field.different_exponent
        e = self.field.ramification_index
        q = -(-d // e)  # ceil(d/e)
        r = e * q - d
        # p^q * dual lattice (columns of the inverse Gram) vs J^r
        dual_cols = [list(col) for col in zip(*fraction_inverse(self.gram))]
        scaled = [[x * p**q for x in col] for col in dual_cols]
        left = hnf_columns(p, self.precision, scaled)
        right = self.ideal_power(r)
        return left == right
