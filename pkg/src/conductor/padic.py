"""Linear algebra over Z_p at explicit finite precision.

Scalars, column Hermite forms, Smith forms, and lattice membership all
work with integers understood modulo p^N.  Precision is never silent:
any step that would need to certify a valuation >= N - guard raises
PrecisionExhaustedError instead of returning an unreliable answer.

The column Hermite form here is canonical: pivot entries are exact
powers of p (the unit part is normalized away), columns are ordered by
pivot row, entries of the other columns in a pivot row are reduced into
[0, p^a).  Two spanning sets of the same lattice therefore produce
identical forms, which is what the lattice comparisons rely on.

There are also exact integer helpers (no modulus) for kernels of
integer matrices; those are used to build syzygies where exactness
matters more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionExhaustedError

DEFAULT_GUARD = 8


def vp(n, p: int) -> int:
    """p-adic valuation of a nonzero int or Fraction."""
    if isinstance(n, Fraction):
        if n == 0:
            raise ValueError("valuation of zero")
        return vp(n.numerator, p) - vp(n.denominator, p)
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass
class PadicApprox:
    """An integral p-adic scalar known as value + O(p^precision)."""

    p: int
    value: int
    precision: int

    def __post_init__(self):
        self.value %= self.p**self.precision

    def valuation(self, guard: int = DEFAULT_GUARD) -> int:
        if self.value == 0:
            raise PrecisionExhaustedError(
                "valuation is at least the working precision %d" % self.precision
            )
        v = vp(self.value, self.p)
        if v > self.precision - guard:
            raise PrecisionExhaustedError(
                "valuation %d too close to precision %d" % (v, self.precision)
            )
        return v

    def __add__(self, other):
        assert self.p == other.p
        n = min(self.precision, other.precision)
        return PadicApprox(self.p, (self.value + other.value) % self.p**n, n)

    def __neg__(self):
        return PadicApprox(self.p, -self.value, self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.p == other.p
        v1 = min(vp(self.value, self.p), self.precision) if self.value else self.precision
        v2 = min(vp(other.value, self.p), other.precision) if other.value else other.precision
        n = min(self.precision + v2, other.precision + v1)
        return PadicApprox(self.p, self.value * other.value, n)

    def unit_inverse(self) -> "PadicApprox":
        if self.value % self.p == 0:
            raise ValueError("inverse requires a p-adic unit")
        inv = pow(self.value, -1, self.p**self.precision)
        return PadicApprox(self.p, inv, self.precision)


# -- lattices mod p^N ---------------------------------------------------------


@dataclass
class PLattice:
    """Canonical column Hermite form of a Z_p-lattice in Z_p^n, mod p^N."""

    p: int
    precision: int
    dim: int
    pivots: list  # pivot row per column, increasing
    pivot_vals: list  # valuation a_i of the pivot entry p^{a_i}
    cols: list  # reduced columns, ints mod p^N

    def index_valuation(self) -> int:
        """v_p of [Z_p^n : L] when the lattice has full rank."""
        if len(self.pivots) != self.dim:
            raise ValueError("lattice does not have full rank")
        return sum(self.pivot_vals)

    def __eq__(self, other):
        return (
            isinstance(other, PLattice)
            and self.p == other.p
            and self.dim == other.dim
            and self.pivots == other.pivots
            and self.pivot_vals == other.pivot_vals
            and self.cols == other.cols
        )


def _to_int_columns(p, columns):
    """Scale rational columns to integers; returns (int columns, shift) with
    the lattice multiplied by p^shift.  Non-p denominators are inverted later
    mod p^N, so they are disallowed here on purpose: callers pass integers or
    p-integral fractions times a known power of p."""
    shift = 0
    for col in columns:
        for x in col:
            if isinstance(x, Fraction) and x != 0:
                d = x.denominator
                v = vp(d, p)
                shift = max(shift, v)
    out = []
    for col in columns:
        new = []
        for x in col:
            y = x * p**shift if shift else x
            if isinstance(y, Fraction):
                num, den = y.numerator, y.denominator
                assert den % p != 0, "denominator must be a power of p times a p-unit"
                new.append((num, den))
            else:
                new.append((y, 1))
        out.append(new)
    return out, shift


def hnf_columns(p, precision, columns, guard: int = DEFAULT_GUARD) -> PLattice:
    """Canonical column Hermite form mod p^precision.

    columns: vectors of ints or p-integral Fractions (denominators prime
    to p after clearing a global power of p; the global power is an
    error here - scale the lattice yourself if you need it).
    """
    if not columns:
        raise ValueError("no columns")
    dim = len(columns[0])
    modulus = p**precision
    work = []
    for col in columns:
        new = []
        for x in col:
            if isinstance(x, Fraction):
                assert x.denominator % p != 0, "column entries must be p-integral"
                new.append(x.numerator * pow(x.denominator, -1, modulus) % modulus)
            else:
                new.append(x % modulus)
        work.append(new)

    pivots, pivot_vals, placed = [], [], []
    for row in range(dim):
        best, best_v = None, None
        for idx, col in enumerate(work):
            x = col[row]
            if x == 0:
                continue
            v = vp(x, p)
            if v >= precision:
                continue
            if best_v is None or v < best_v:
                best, best_v = idx, v
        if best is None:
            continue
        if best_v > precision - guard:
            raise PrecisionExhaustedError(
                "pivot valuation %d in row %d exceeds precision %d - guard %d"
                % (best_v, row, precision, guard)
            )
        piv = work.pop(best)
        unit = piv[row] // p**best_v
        inv = pow(unit, -1, modulus)
        piv = [(x * inv) % modulus for x in piv]
        # clear this row from the remaining unplaced columns (their entries
        # here have valuation >= best_v, so the quotient is p-integral)
        for col in work:
            x = col[row]
            if x:
                q = x // p**best_v
                for i in range(dim):
                    col[i] = (col[i] - q * piv[i]) % modulus
        placed.append(piv)
        pivots.append(row)
        pivot_vals.append(best_v)

    # every leftover column was cleared at each pivot row and had no pivot
    # of its own, so it must be exactly zero now
    for col in work:
        assert all(x == 0 for x in col), "unplaced column with visible entries"

    # canonical reduction: entries of column j at later pivot rows into
    # [0, p^{a_i}); increasing i keeps earlier reductions intact because
    # placed[i] vanishes at all pivot rows before its own
    for j in range(len(placed)):
        for i in range(j + 1, len(placed)):
            row, pa = pivots[i], p ** pivot_vals[i]
            q = placed[j][row] // pa
            if q:
                for r in range(dim):
                    placed[j][r] = (placed[j][r] - q * placed[i][r]) % modulus
    return PLattice(p, precision, dim, pivots, pivot_vals, placed)


def lattice_contains(lat: PLattice, vector, guard: int = DEFAULT_GUARD) -> bool:
    """Whether the vector lies in the lattice, mod p^precision."""
    p, modulus = lat.p, lat.p**lat.precision
    v = []
    for x in vector:
        if isinstance(x, Fraction):
            assert x.denominator % p != 0
            v.append(x.numerator * pow(x.denominator, -1, modulus) % modulus)
        else:
            v.append(x % modulus)
    for col, row, a in zip(lat.cols, lat.pivots, lat.pivot_vals):
        x = v[row]
        if x == 0:
            continue
        if vp(x, p) < a:
            return False
        q = x // p**a
        for r in range(lat.dim):
            v[r] = (v[r] - q * col[r]) % modulus
    floor = p ** max(lat.precision - guard, 1)
    return all(x % floor == 0 for x in v)


def sublattice_of(inner: PLattice, outer: PLattice) -> bool:
    return all(lattice_contains(outer, col) for col in inner.cols)


def smith_valuations(p, precision, rows, guard: int = DEFAULT_GUARD) -> list:
    """Elementary divisor valuations of an integer matrix over Z_p.

    Returns the list of valuations (ascending), one per invariant factor
    with valuation < precision - guard; a divisor indistinguishable from
    zero at this precision raises PrecisionExhaustedError.
    """
    modulus = p**precision
    a = [[x % modulus for x in row] for row in rows]
    out = []
    top = 0
    nrows, ncols = len(a), len(a[0]) if a else 0
    while top < min(nrows, ncols):
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if a[i][j]:
                    v = vp(a[i][j], p)
                    if v < precision and (best is None or v < best[0]):
                        best = (v, i, j)
        if best is None:
            # all remaining entries vanish mod p^N: rank deficiency over Q_p
            # is certified only if the caller expected it; report by stopping
            break
        v, bi, bj = best
        if v > precision - guard:
            raise PrecisionExhaustedError(
                "invariant factor valuation %d exceeds precision %d - guard %d"
                % (v, precision, guard)
            )
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        inv = pow(a[top][top] // p**v, -1, modulus)
        a[top] = [(x * inv) % modulus for x in a[top]]
        for i in range(top + 1, nrows):
            x = a[i][top]
            if x:
                q = x // p**v
                a[i] = [(y - q * z) % modulus for y, z in zip(a[i], a[top])]
        for j in range(top + 1, ncols):
            x = a[top][j]
            if x:
                q = x // p**v
                for i in range(top, nrows):
                    a[i][j] = (a[i][j] - q * a[i][top]) % modulus
        out.append(v)
        top += 1
    return out


def smith_with_column_transform(p, precision, rows, guard: int = DEFAULT_GUARD):
    """Smith form tracking column operations: returns (vals, c_cols) where
    R * A * C = diag(p^vals) for unimodular R (discarded) and C, and c_cols
    lists the columns of C.  Columns beyond len(vals) span directions on
    which A vanishes mod p^precision."""
    modulus = p**precision
    a = [[x % modulus for x in row] for row in rows]
    nrows, ncols = len(a), len(a[0]) if a else 0
    c = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]  # columns
    out = []
    top = 0
    while top < min(nrows, ncols):
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if a[i][j]:
                    v = vp(a[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, bi, bj = best
        if v > precision - guard:
            raise PrecisionExhaustedError(
                "invariant factor valuation %d exceeds precision %d - guard %d"
                % (v, precision, guard)
            )
        a[top], a[bi] = a[bi], a[top]
        if bj != top:
            for row in a:
                row[top], row[bj] = row[bj], row[top]
            c[top], c[bj] = c[bj], c[top]
        inv = pow(a[top][top] // p**v, -1, modulus)
        a[top] = [(x * inv) % modulus for x in a[top]]
        for i in range(top + 1, nrows):
            x = a[i][top]
            if x:
                q = x // p**v
                a[i] = [(y - q * z) % modulus for y, z in zip(a[i], a[top])]
        for j in range(top + 1, ncols):
            x = a[top][j]
            if x:
                q = x // p**v
                for i in range(top, nrows):
                    a[i][j] = (a[i][j] - q * a[i][top]) % modulus
                c[j] = [(y - q * z) % modulus for y, z in zip(c[j], c[top])]
        out.append(v)
        top += 1
    return out, c


def quotient_annihilator_exponent(p, precision, columns, guard: int = DEFAULT_GUARD) -> int:
    """Smallest t with p^t * Z_p^n inside the column span (n = dim)."""
    dims = len(columns[0])
    vals = smith_valuations(p, precision, [list(r) for r in zip(*columns)], guard)
    if len(vals) < dims:
        raise PrecisionExhaustedError(
            "column span is not full rank at precision %d" % precision
        )
    return max(vals) if vals else 0


# -- exact integer forms -------------------------------------------------------


def exact_row_hnf(rows):
    """Row echelon form over Z (exact, Euclidean), returns new rows."""
    a = [list(r) for r in rows]
    if not a:
        return a
    ncols = len(a[0])
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, len(a)):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[top], a[piv] = a[piv], a[top]
        for i in range(top + 1, len(a)):
            while a[i][col]:
                q = a[i][col] // a[top][col]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                if a[i][col]:
                    a[top], a[i] = a[i], a[top]
        if a[top][col] < 0:
            a[top] = [-x for x in a[top]]
        for i in range(top):
            q = a[i][col] // a[top][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[top])]
        top += 1
    return [r for r in a if any(r)] + [r for r in a if not any(r)]


def exact_kernel(rows):
    """Z-basis of the integer kernel {x : x * rows = 0} (x as row vector)."""
    n = len(rows)
    width = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    reduced = exact_row_hnf(aug)
    out = []
    for row in reduced:
        if all(x == 0 for x in row[:width]):
            tail = row[width:]
            if any(tail):
                out.append(tail)
    return out
