"""Central conductor of p-adic group rings of finite groups.

Two independent routes are provided.  ``jacobinski_conductor`` evaluates the
closed formula: one component per Galois orbit of irreducible characters,
with ideal (|G|/chi(1)) * D^-1(o[chi]/o) inside the character field.
``brute_force_conductor`` knows nothing about the formula: it materialises a
maximal order containing Z_p[G], writes down the divisibility constraints
defining {x central : x * maximal_order <= Z_p[G]}, and solves them by
elimination.  ``formula_conductor_lattice`` turns the formula into a lattice
in the same coordinates so the two can be compared bit for bit.

The second half of the module computes Ext^1 groups from a projective
presentation and checks that the conductor annihilates them, including the
sharpness probe that exhibits a central element just outside the conductor
which fails to annihilate.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chartab import character_table
from .cyclo import CycloNumber, _solve_exact, cyclotomic_poly, totient
from .errors import InputError, UnsupportedPresentationError
from .localfields import (
    AbelianLocalField,
    decomposition_group,
    field_of_values,
    relative_data,
)
from .orders import fraction_inverse, lattice_product, radical_lattice
from .padic import (
    exact_kernel,
    hnf_columns,
    lattice_contains,
    smith_valuations,
    smith_with_column_transform,
    vp,
)

DEFAULT_PRECISION = 24


def working_precision(g, p):
    """Enough headroom that |G|-denominators never eat the answer."""
    return 2 * vp(g.order, p) + DEFAULT_PRECISION


# ---------------------------------------------------------------------------
# Galois orbits of characters


def _value_key(v):
    return (v.m, tuple(v.coeffs))


def _row_permutation(table, k):
    """Row permutation induced by the coefficient automorphism zeta -> zeta^k."""
    keys = {}
    for r in range(table.n_classes):
        keys[tuple(_value_key(v) for v in table.values[r])] = r
    perm = []
    for r in range(table.n_classes):
        moved = tuple(
            _value_key(v.galois(k % v.m if v.m > 1 else 1)) for v in table.values[r]
        )
        perm.append(keys[moved])
    return perm


def galois_orbits(table, base=None):
    """Partition of the rows of ``table`` into Galois orbits.

    With ``base=None`` the orbits are over Q (full cyclotomic Galois
    action); for an AbelianLocalField base only the automorphisms fixing
    the base pointwise act.  Orbits come out sorted by smallest row.
    """
    e = table.exponent
    if e % 4 == 2:
        e *= 2
    if base is None:
        ks = [k for k in range(1, e + 1) if gcd(k, e) == 1]
    else:
        m = _lcm_conductor(e, base.m)
        ks = set()
        for a in decomposition_group(base.p, m):
            if base.m == 1 or a % base.m in base.stab:
                ks.add(a % e if e > 1 else 1)
        ks = sorted(ks)
    perms = [_row_permutation(table, k) for k in ks]
    seen = [False] * table.n_classes
    orbits = []
    for r in range(table.n_classes):
        if seen[r]:
            continue
        orbit = {r}
        frontier = [r]
        while frontier:
            x = frontier.pop()
            for perm in perms:
                y = perm[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        orbits.append(sorted(orbit))
    return orbits


def _lcm_conductor(a, b):
    m = a * b // gcd(a, b)
    if m % 4 == 2:
        m //= 2
    return m


# ---------------------------------------------------------------------------
# Formula route: the report


@dataclass
class ConductorComponent:
    rep_row: int
    orbit_rows: list
    degree: int
    field: AbelianLocalField
    multiplier: Fraction
    multiplier_vp: int
    e: int
    f: int
    d_rel: int
    valuation: int

    def to_json(self):
        return {
            "rep_row": self.rep_row,
            "orbit_rows": list(self.orbit_rows),
            "degree": self.degree,
            "field": self.field.to_json(),
            "multiplier": {
                "num": self.multiplier.numerator,
                "den": self.multiplier.denominator,
                "vp": self.multiplier_vp,
            },
            "e": self.e,
            "f": self.f,
            "d_rel": self.d_rel,
            "valuation": self.valuation,
        }


@dataclass
class FiniteConductorReport:
    group_name: str
    group_order: int
    p: int
    base: AbelianLocalField
    components: list

    def to_json(self):
        return {
            "group": self.group_name,
            "order": self.group_order,
            "p": self.p,
            "base": self.base.to_json(),
            "components": [c.to_json() for c in self.components],
        }


def jacobinski_conductor(g, p, base=None):
    """Central conductor of o[G], o the valuation ring of ``base``.

    One component per Galois orbit of irreducible characters over the base:
    the fractional ideal (|G|/chi(1)) * D^-1(o[chi]/o) of the character
    field, recorded through its pi-adic valuation
    e(K_chi/base) * e(base) * v_p(|G|/chi(1)) - d(K_chi/base).
    """
    if base is None:
        base = AbelianLocalField.qp(p)
    if base.p != p:
        raise InputError("base field lives over p=%d, not %d" % (base.p, p))
    table = character_table(g)
    components = []
    for orbit in galois_orbits(table, base):
        rep = orbit[0]
        degree = table.degrees[rep]
        field = field_of_values(base, table.values[rep])
        mult = Fraction(g.order, degree)
        mvp = vp(mult, p)
        if mvp < 0:
            raise ArithmeticError("multiplier %s is not p-integral" % mult)
        e_rel, f_rel, d_rel = relative_data(base, field)
        val = e_rel * base.ramification_index * mvp - d_rel
        components.append(
            ConductorComponent(
                rep_row=rep,
                orbit_rows=orbit,
                degree=degree,
                field=field,
                multiplier=mult,
                multiplier_vp=mvp,
                e=e_rel,
                f=f_rel,
                d_rel=d_rel,
                valuation=val,
            )
        )
    return FiniteConductorReport(
        group_name=g.name,
        group_order=g.order,
        p=p,
        base=base,
        components=components,
    )


# ---------------------------------------------------------------------------
# Block bookkeeping shared by the two lattice routes


def _value_order(v):
    """Multiplicative order of a root-of-unity character value."""
    o, acc = 1, v
    while not (acc.is_rational() and acc.as_fraction() == 1):
        acc = acc * v
        o += 1
        if o > 4 * v.m + 4:
            raise ArithmeticError("character value is not a root of unity")
    return o


def _character_order(table, row):
    if table.degrees[row] != 1:
        raise InputError("character in row %d is not linear" % row)
    d = 1
    for j in range(table.n_classes):
        o = _value_order(table.values[row][j])
        d = d * o // gcd(d, o)
    return d


def _orbit_value_sum(table, orbit, j):
    """Sum of chi(g_j) over one full rational orbit; always rational."""
    acc = None
    for r in orbit:
        v = table.values[r][j]
        acc = v if acc is None else acc + v
    if not acc.is_rational():
        raise ArithmeticError("rational-orbit value sum came out irrational")
    return acc.as_fraction()


def _orbit_idempotent(table, orbit):
    """Per-class coefficients of the rational central idempotent sum e_chi."""
    n = table.group.order
    degree = table.degrees[orbit[0]]
    coeffs = []
    for j in range(table.n_classes):
        s = _orbit_value_sum(table, orbit, table.inverse_class(j))
        coeffs.append(Fraction(degree, n) * s)
    return coeffs


def _abelian_block_basis(g, table, orbit):
    """Z_p-basis of the maximal order of the block cut out by a linear
    rational orbit: the block is Q_p[x]/Phi_d(x), d the character order,
    and eps * g0^j pulls back the power basis for any g0 on which the
    character has full order."""
    rep = orbit[0]
    d = _character_order(table, rep)
    classes = table.classes
    g0 = None
    for j in range(table.n_classes):
        if _value_order(table.values[rep][j]) == d:
            g0 = classes.classes[j][0]
            break
    assert g0 is not None, "a linear character attains its order"
    eps = _orbit_idempotent(table, orbit)
    vecs = []
    g0_pow = 0
    for _ in range(totient(d)):
        inv_pow = g.inv(g0_pow)
        vec = [eps[classes.class_of[g.mult(x, inv_pow)]] for x in range(g.order)]
        vecs.append(vec)
        g0_pow = g.mult(g0_pow, g0)
    return d, vecs


def _matrix_block_basis(g, rep_matrices, degree):
    """Z_p-basis of the preimage of M_n(Z_p) inside a split rational block:
    the element (n/|G|) sum_g rep(g^-1)[b][a] g maps to the matrix unit
    E_ab there and to zero in every other block."""
    n = g.order
    inv_mats = [rep_matrices[g.inv(x)] for x in range(n)]
    vecs = []
    for a in range(degree):
        for b in range(degree):
            vecs.append([Fraction(degree * inv_mats[x][b][a], n) for x in range(n)])
    return vecs


def _expand_representation(g, gen_mats):
    """Matrices for every group element from matrices for the generators."""
    mats = [[list(row) for row in m] for m in gen_mats]
    if len(mats) != len(g.generators):
        raise InputError(
            "representation needs %d generator matrices, got %d"
            % (len(g.generators), len(mats))
        )
    return _element_actions(g, mats, len(mats[0]))


def _verify_representation(g, rep_matrices):
    if len(rep_matrices) != g.order:
        raise InputError("need one matrix per group element")
    deg = len(rep_matrices[0])
    ident = [[1 if i == j else 0 for j in range(deg)] for i in range(deg)]
    if [list(r) for r in rep_matrices[0]] != ident:
        raise InputError("representation must send the identity to the identity")
    for x in range(g.order):
        for y in g.generators:
            z = g.mult(x, y)
            prod = [
                [
                    sum(rep_matrices[x][i][k] * rep_matrices[y][k][j] for k in range(deg))
                    for j in range(deg)
                ]
                for i in range(deg)
            ]
            if prod != [list(r) for r in rep_matrices[z]]:
                raise InputError("representation matrices do not respect the group law")


def _rep_character_row(table, rep_matrices):
    classes = table.classes
    traces = [
        sum(rep_matrices[cls[0]][i][i] for i in range(len(rep_matrices[0])))
        for cls in classes.classes
    ]
    for r in range(table.n_classes):
        if all(
            table.values[r][j].is_rational() and table.values[r][j].as_fraction() == traces[j]
            for j in range(table.n_classes)
        ):
            return r
    raise InputError("supplied representation matches no irreducible character")


def maximal_order_basis(g, p, reps=None):
    """Basis, in rational coordinates on group elements, of a maximal order
    containing Z_p[G], together with per-block bookkeeping.

    Linear-character blocks need no input: each rational orbit of linear
    characters contributes a copy of Z_p[x]/Phi_d(x).  Blocks of degree > 1
    require an integral splitting representation; without one the input is
    rejected as unsupported.
    """
    table = character_table(g)
    rep_rows = {}
    if reps:
        for mats in reps:
            if len(mats) != g.order:
                mats = _expand_representation(g, mats)
            _verify_representation(g, mats)
            rep_rows[_rep_character_row(table, mats)] = mats
    basis = []
    blocks = []
    for orbit in galois_orbits(table, None):
        degree = table.degrees[orbit[0]]
        if degree == 1:
            d, vecs = _abelian_block_basis(g, table, orbit)
            blocks.append(("cyclotomic", orbit, d))
        elif orbit[0] in rep_rows:
            if len(orbit) != 1:
                raise UnsupportedPresentationError(
                    "degree-%d characters form an irrational orbit; matrix "
                    "blocks are only built over their rational forms" % degree
                )
            vecs = _matrix_block_basis(g, rep_rows[orbit[0]], degree)
            blocks.append(("matrix", orbit, 1))
        else:
            raise UnsupportedPresentationError(
                "no splitting representation supplied for the degree-%d "
                "character in row %d" % (degree, orbit[0])
            )
        basis.extend(vecs)
    if len(basis) != g.order:
        raise UnsupportedPresentationError(
            "block bases span dimension %d, expected %d" % (len(basis), g.order)
        )
    return basis, blocks


# ---------------------------------------------------------------------------
# Brute-force route


def _class_sum_times(g, classes, l, vec):
    """Coordinates of (class sum number l) * vec in the group algebra."""
    out = [Fraction(0)] * g.order
    for h in classes.classes[l]:
        hinv = g.inv(h)
        for k in range(g.order):
            c = vec[g.mult(hinv, k)]
            if c:
                out[k] += c
    return out


def brute_force_conductor(g, p, reps=None, twist_seed=None, precision=None):
    """Lattice {x central : x * maximal_order <= Z_p[G]}, in class-sum
    coordinates, found by solving the divisibility constraints directly.

    ``twist_seed`` first conjugates the maximal order by a random unit
    u = 1 + p*lambda; the resulting lattice must not move, and tests
    compare it bit for bit against the untwisted run.
    """
    if precision is None:
        precision = working_precision(g, p)
    classes = character_table(g).classes
    basis, _ = maximal_order_basis(g, p, reps)
    if twist_seed is not None:
        basis = _twist_basis(g, p, basis, twist_seed)
    k = len(classes.classes)
    rows = []
    scale = 0
    for vec in basis:
        per_class = [_class_sum_times(g, classes, l, vec) for l in range(k)]
        for elt in range(g.order):
            row = [per_class[l][elt] for l in range(k)]
            for x in row:
                if x:
                    v = vp(x, p)
                    if v < 0:
                        scale = max(scale, -v)
            rows.append(row)
    n_work = precision + scale
    modulus = p**n_work
    int_rows = []
    for row in rows:
        out = []
        for x in row:
            fx = Fraction(x) * p**scale
            assert fx.denominator % p != 0
            out.append(fx.numerator * pow(fx.denominator, -1, modulus) % modulus)
        int_rows.append(out)
    vals, c_cols = smith_with_column_transform(p, n_work, int_rows)
    if len(vals) != k:
        raise ArithmeticError("conductor constraint system is not of full rank")
    columns = [
        [x * p ** max(0, scale - vals[i]) for x in c_cols[i]] for i in range(k)
    ]
    return hnf_columns(p, precision, columns)


def _twist_basis(g, p, basis, seed):
    rng = random.Random(seed)
    n = g.order
    lam = [Fraction(0)] * n
    while all(c == 0 for c in lam):
        for vec in basis:
            c = rng.randrange(-2, 3)
            if c:
                for i in range(n):
                    lam[i] += c * vec[i]
    u = [Fraction(p) * c for c in lam]
    u[0] += 1
    u_inv = _group_algebra_inverse(g, u)
    return [_convolve(g, _convolve(g, u, vec), u_inv) for vec in basis]


def _convolve(g, a, b):
    out = [Fraction(0)] * g.order
    for x in range(g.order):
        ax = a[x]
        if not ax:
            continue
        for y in range(g.order):
            by = b[y]
            if by:
                out[g.mult(x, y)] += ax * by
    return out


def _group_algebra_inverse(g, u):
    """Exact inverse of a unit of Q_p[G], by solving u * y = 1."""
    n = g.order
    m = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        if u[x]:
            for y in range(n):
                m[g.mult(x, y)][y] += u[x]
    inv = fraction_inverse(m)
    return [inv[i][0] for i in range(n)]


# ---------------------------------------------------------------------------
# Formula route, materialised as a lattice in the same coordinates


def formula_conductor_lattice(g, p, precision=None):
    """The lattice the closed formula predicts, in class-sum coordinates.

    Per rational orbit the component is the fractional ideal
    p^(v_p of |G|/chi(1)) * D^-1 of the block centre Z_p[x]/Phi_d(x); it is
    pushed into the centre of Q_p[G] through
    z |-> (chi(1)/|G|) sum_j Tr(z * chi(g_j^-1)) c_j, which hits the value z
    on the chosen orbit and zero on every other one.
    """
    if precision is None:
        precision = working_precision(g, p)
    table = character_table(g)
    k = table.n_classes
    columns = []
    for orbit in galois_orbits(table, None):
        rep = orbit[0]
        degree = table.degrees[rep]
        d = 1
        for j in range(k):
            d = _lcm_conductor(d, table.values[rep][j].minimal_conductor().m)
        mult_vp = vp(Fraction(g.order, degree), p)
        local = AbelianLocalField(p, d, [])
        target = local.ramification_index * mult_vp - local.different_exponent
        for col in _cyclotomic_ideal_basis(p, d, target, precision):
            coeffs = [Fraction(c) for c in col]
            z = CycloNumber(d, coeffs + [Fraction(0)] * (totient(d) - len(coeffs)))
            vec = []
            for j in range(k):
                val = table.values[rep][table.inverse_class(j)]
                vec.append(Fraction(degree, g.order) * (z * val).trace_to_q())
            columns.append(vec)
    return hnf_columns(p, precision, columns)


def _cyclotomic_ideal_basis(p, d, target, precision):
    """Power-basis coordinates of a basis of J^target in Z_p[x]/Phi_d(x),
    J the radical; ``target`` may be negative."""
    if d == 1:
        return [[Fraction(p**target) if target >= 0 else Fraction(1, p**-target)]]
    deg = totient(d)
    local = AbelianLocalField(p, d, [])
    e = local.ramification_index
    mult = _cyclotomic_mult(d)
    one = [1] + [0] * (deg - 1)
    a = 0
    while target + a * e < 0:
        a += 1
    power = target + a * e
    if power == 0:
        cols = [[1 if i == j else 0 for i in range(deg)] for j in range(deg)]
    else:
        rad = radical_lattice(p, precision, mult, deg, one)
        cols = _lattice_power_cols(p, precision, mult, [list(c) for c in rad.cols], power)
    if a:
        cols = [[Fraction(x, p**a) for x in col] for col in cols]
    return cols


def _cyclotomic_mult(d):
    deg = totient(d)
    phi = cyclotomic_poly(d)

    def mult(u, v):
        prod = [0] * (2 * deg - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        prod[i + j] += ui * vj
        for top in range(2 * deg - 2, deg - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for j in range(deg):
                    if phi[j]:
                        prod[top - deg + j] -= c * phi[j]
        return prod[:deg]

    return mult


def _lattice_power_cols(p, precision, mult, cols, power):
    acc = None
    base = cols
    n = power
    while n:
        if n & 1:
            acc = base if acc is None else list(
                list(c) for c in lattice_product(p, precision, mult, acc, base).cols
            )
        n >>= 1
        if n:
            base = [list(c) for c in lattice_product(p, precision, mult, base, base).cols]
    return acc


# ---------------------------------------------------------------------------
# Modules, Ext^1, and the annihilation statements


@dataclass
class GModule:
    """A Z_p[G]-lattice: Z_p^rank with one action matrix per group generator
    (columns are images of basis vectors).  ``quotient_exponent`` q presents
    the finite module lattice/p^q instead."""

    group: object
    rank: int
    gen_actions: list
    name: str = "module"
    quotient_exponent: int = None

    def __post_init__(self):
        for mat in self.gen_actions:
            if len(mat) != self.rank or any(len(row) != self.rank for row in mat):
                raise InputError("action matrices must be rank x rank")

    def mod_p_power(self, q, name=None):
        return GModule(
            self.group,
            self.rank,
            self.gen_actions,
            name or "%s/p^%d" % (self.name, q),
            q,
        )


def trivial_module(g, name="trivial"):
    return GModule(g, 1, [[[1]] for _ in g.generators], name)


def regular_module(g):
    mats = []
    for s in g.generators:
        mat = [[0] * g.order for _ in range(g.order)]
        for x in range(g.order):
            mat[g.mult(s, x)][x] = 1
        mats.append(mat)
    return GModule(g, g.order, mats, "regular")


def augmentation_module(g):
    """Kernel of the augmentation, on the basis x - 1 for x != identity."""
    r = g.order - 1
    mats = []
    for s in g.generators:
        mat = [[0] * r for _ in range(r)]
        for idx in range(1, g.order):
            y = g.mult(s, idx)
            if y != 0:
                mat[y - 1][idx - 1] += 1
            if s != 0:
                mat[s - 1][idx - 1] -= 1
        mats.append(mat)
    return GModule(g, r, mats, "augmentation")


def module_from_columns(g, columns, name="sublattice"):
    """G-stable sublattice of the regular lattice spanned by integer columns."""
    from .padic import exact_row_hnf

    rows = exact_row_hnf([list(c) for c in columns])
    basis = [r for r in rows if any(r)]
    mats = []
    for s in g.generators:
        mat = []
        for b in basis:
            moved = [0] * g.order
            for x in range(g.order):
                if b[x]:
                    moved[g.mult(s, x)] += b[x]
            mat.append(_integral_coords(basis, moved))
        mats.append(_transpose(mat))
    return GModule(g, len(basis), mats, name)


def _integral_coords(basis, target):
    """Coordinates of target in an integer basis; must come out integral."""
    sol = _solve_exact(
        [[Fraction(basis[t][i]) for i in range(len(target))] for t in range(len(basis))],
        [Fraction(x) for x in target],
    )
    out = []
    for c in sol:
        if c.denominator != 1:
            raise InputError("columns do not span a G-stable lattice")
        out.append(c.numerator)
    return out


def _element_actions(g, gen_mats, rank):
    """Action matrix of every group element, grown over the Cayley graph."""
    acts = {0: [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s, mat in zip(g.generators, gen_mats):
            y = g.mult(s, x)
            if y not in acts:
                acts[y] = _mat_mul(mat, acts[x])
                frontier.append(y)
    assert len(acts) == g.order
    return [acts[x] for x in range(g.order)]


def _mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    bt = list(zip(*b))
    return [[sum(ar[t] * bc[t] for t in range(k)) for bc in bt] for ar in a]


def _transpose(m):
    return [list(r) for r in zip(*m)]


class ExtComputation:
    """Ext^1(M, N) over Z_p[G] from the presentation 0 -> K -> P -> M -> 0
    with P = (Z_p[G])^rank(M).

    Everything is reduced to integer linear algebra: Hom(K, N) is the
    solution lattice of the equivariance equations, the comparison map from
    Hom(P, N) = N^rank(M) restricts along K, and the elementary divisors of
    the quotient are read off a Smith form.
    """

    def __init__(self, mod_m, mod_n, p, precision=None):
        if mod_m.group is not mod_n.group:
            raise InputError("modules live over different groups")
        if mod_m.quotient_exponent is not None:
            raise InputError("the first argument must be a lattice")
        self.g = mod_m.group
        self.p = p
        self.mod_m = mod_m
        self.mod_n = mod_n
        self.precision = precision or (
            vp(self.g.order, p) + (mod_n.quotient_exponent or 0) + DEFAULT_PRECISION
        )
        self._run()

    def _run(self):
        g, p = self.g, self.p
        n = g.order
        r = self.mod_m.rank
        acts_m = _element_actions(g, self.mod_m.gen_actions, r)
        # surjection P = (Z_p G)^r -> M, basis vector (i, x) |-> x * m_i
        surj = [[0] * (r * n) for _ in range(r)]
        for i in range(r):
            for x in range(n):
                for row in range(r):
                    surj[row][i * n + x] = acts_m[x][row][i]
        kern = exact_kernel(_transpose(surj))
        self.k_dim = len(kern)
        self.kern = kern
        rank_n = self.mod_n.rank
        self.vec_dim = rank_n * self.k_dim
        if self.k_dim == 0:
            self.hom_basis = []
            self.image_gens = []
            self.divisors = []
            return
        # action of the generators on K, through the P-permutation action
        k_acts = []
        for s in g.generators:
            mat = []
            for v in kern:
                moved = [0] * (r * n)
                for i in range(r):
                    for x in range(n):
                        c = v[i * n + x]
                        if c:
                            moved[i * n + g.mult(s, x)] += c
                mat.append(_integral_coords(kern, moved))
            k_acts.append(_transpose(mat))
        # equivariance equations for f : K -> N, vec index t*rank_n + i
        eqs = []
        for mat_n, mat_k in zip(self.mod_n.gen_actions, k_acts):
            for tp in range(self.k_dim):
                for ip in range(rank_n):
                    row = [0] * self.vec_dim
                    for i in range(rank_n):
                        row[tp * rank_n + i] += mat_n[ip][i]
                    for t in range(self.k_dim):
                        row[t * rank_n + ip] -= mat_k[t][tp]
                    if any(row):
                        eqs.append(row)
        q = self.mod_n.quotient_exponent
        if q is None:
            self.hom_basis = exact_kernel(_transpose(eqs)) if eqs else [
                [1 if i == j else 0 for i in range(self.vec_dim)] for j in range(self.vec_dim)
            ]
        else:
            if eqs:
                vals, c_cols = smith_with_column_transform(p, self.precision, eqs)
                self.hom_basis = [
                    [x * p ** max(0, q - vals[i]) if i < len(vals) else x for x in c_cols[i]]
                    for i in range(self.vec_dim)
                ]
            else:
                self.hom_basis = [
                    [1 if i == j else 0 for i in range(self.vec_dim)] for j in range(self.vec_dim)
                ]
        # restriction of Hom(P, N) = N^r along K
        acts_n = _element_actions(self.g, self.mod_n.gen_actions, rank_n)
        self.acts_n = acts_n
        image = []
        for i in range(r):
            for b in range(rank_n):
                vec = [0] * self.vec_dim
                for t in range(self.k_dim):
                    for x in range(n):
                        c = self.kern[t][i * n + x]
                        if c:
                            for irow in range(rank_n):
                                vec[t * rank_n + irow] += c * acts_n[x][irow][b]
                image.append(vec)
        if q is not None:
            for j in range(self.vec_dim):
                vec = [0] * self.vec_dim
                vec[j] = self.p**q
                image.append(vec)
        self.image_gens = image
        coords = [self._hom_coords(v) for v in image]
        vals = smith_valuations(self.p, self.precision, _int_rows(coords, self.p, self.precision))
        if len(vals) != len(self.hom_basis):
            raise ArithmeticError("Ext group came out infinite; presentation is broken")
        self.divisors = sorted(v for v in vals if v > 0)

    def _hom_coords(self, vec):
        cols = [[Fraction(x) for x in b] for b in self.hom_basis]
        return _solve_exact(cols, [Fraction(x) for x in vec])

    def annihilates(self, class_coords) -> bool:
        """Whether the central element sum_l c_l * (class sum l) kills Ext^1."""
        if not self.divisors:
            return True
        classes = character_table(self.g).classes
        rank_n = self.mod_n.rank
        z_mat = [[Fraction(0)] * rank_n for _ in range(rank_n)]
        for l, c in enumerate(class_coords):
            if c:
                for h in classes.classes[l]:
                    for i in range(rank_n):
                        for j in range(rank_n):
                            if self.acts_n[h][i][j]:
                                z_mat[i][j] += Fraction(c) * self.acts_n[h][i][j]
        image_lattice = hnf_columns(
            self.p,
            self.precision,
            [self._hom_coords(v) for v in self.image_gens],
        )
        for f in self.hom_basis:
            moved = [Fraction(0)] * self.vec_dim
            for t in range(self.k_dim):
                for i in range(rank_n):
                    c = f[t * rank_n + i]
                    if c:
                        for irow in range(rank_n):
                            moved[t * rank_n + irow] += z_mat[irow][i] * c
            if not lattice_contains(image_lattice, self._hom_coords(moved)):
                return False
        return True


def _int_rows(rows, p, precision):
    modulus = p**precision
    out = []
    for row in rows:
        cur = []
        for x in row:
            fx = Fraction(x)
            if fx.denominator % p == 0:
                raise ArithmeticError("non p-integral coordinate in lattice data")
            cur.append(fx.numerator * pow(fx.denominator, -1, modulus) % modulus)
        out.append(cur)
    return out


def ext1(mod_m, mod_n, p, precision=None):
    """Elementary divisor exponents of Ext^1(M, N) over Z_p[G]."""
    return ExtComputation(mod_m, mod_n, p, precision).divisors


def annihilation_check(class_coords, mod_m, mod_n, p, precision=None) -> bool:
    """Whether a central element, given by class-sum coordinates, kills
    Ext^1(M, N)."""
    return ExtComputation(mod_m, mod_n, p, precision).annihilates(class_coords)


def conductor_annihilates(g, p, mod_m, mod_n, reps=None) -> bool:
    """Every generator of the computed conductor annihilates Ext^1(M, N)."""
    lat = brute_force_conductor(g, p, reps)
    comp = ExtComputation(mod_m, mod_n, p)
    return all(comp.annihilates(col) for col in lat.cols)


def maximal_order_module(g, p, reps=None):
    """The maximal order as a Z_p[G]-lattice inside the regular lattice,
    scaled by |G| to clear denominators."""
    basis, _ = maximal_order_basis(g, p, reps)
    columns = []
    for vec in basis:
        col = [x * g.order for x in vec]
        assert all(c.denominator == 1 for c in map(Fraction, col))
        columns.append([Fraction(x).numerator for x in col])
    return module_from_columns(g, columns, "maximal-order")


def sharpness_probe(g, p, reps=None, pool=None):
    """A central element of Z_p[G] just outside the conductor, together with
    a pair (M, N) whose Ext^1 it fails to annihilate.

    Returns (class_coords, name_m, name_n).  Raises if the search pool is
    exhausted, which would contradict the conductor being exactly the
    annihilator ideal.
    """
    lat = brute_force_conductor(g, p, reps)
    k = len(lat.cols[0]) if lat.cols else 0
    candidates = []
    ident = [Fraction(0)] * k
    ident[0] = Fraction(1)
    candidates.append(ident)
    for l in range(k):
        vec = [Fraction(0)] * k
        vec[l] = Fraction(1)
        candidates.append(vec)
    outside = [c for c in candidates if not lattice_contains(lat, c)]
    if pool is None:
        t = trivial_module(g)
        pool = [
            (t, t.mod_p_power(1)),
            (augmentation_module(g), t.mod_p_power(1)),
            (t, augmentation_module(g).mod_p_power(1)),
        ]
    for mod_m, mod_n in pool:
        comp = ExtComputation(mod_m, mod_n, p)
        if not comp.divisors:
            continue
        for cand in outside:
            if not comp.annihilates(cand):
                return cand, mod_m.name, mod_n.name
    raise ArithmeticError("no failing element found; conductor is not sharp here")
