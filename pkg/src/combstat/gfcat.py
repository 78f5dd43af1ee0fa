"""Catalog of the multivariate generating functions.

Nine families, each with a closed form, an independent functional
equation (solved by iteration or a graded linear solve), and for most a
product identity for the y-derivative at y = 1.  Cells are y-polynomials
whose coefficient of y^d counts objects whose marked position has
depth/height d; x marks the position, z the size, v (for P) the leaf
count, u (for Babs) the signed horizontal offset.

ids, statistic counted, and field of coefficients:

* B    binary trees, depth of the r-th leaf                 (ordinary)
* Babs binary trees, depth and abscissa of the r-th leaf    (Laurent u)
* D    Dyck walks, height of the r-th lattice point         (ordinary)
* U    Dyck walks, height of the r-th up-step; equivalently
       plane trees, depth of the r-th preorder node, r >= 1 (ordinary)
* P    plane trees with k leaves, depth of the r-th leaf    (ordinary)
* A    Schroeder trees (sized by leaves-1), r-th leaf depth (ordinary)
* G    noncrossing chord trees, depth of vertex r           (ordinary)
* I    increasing binary trees, r-th leaf depth             (EGF)
* J    increasing binary trees, r-th internal node depth,
       inorder                                              (EGF)
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import yp_eval1
from .series import (
    Series,
    Truncation,
    ps_add,
    ps_coeff,
    ps_div_1mx,
    ps_diff_z,
    ps_exp,
    ps_integrate_z,
    ps_inv,
    ps_linear_solve,
    ps_monomial,
    ps_mul,
    ps_mul_ypoly,
    ps_one,
    ps_retrunc,
    ps_shift,
    ps_sqrt,
    ps_sub,
    ps_subst_scale,
    solve_fixed_point,
)

FAMILY_IDS = ("B", "Babs", "D", "U", "P", "A", "G", "I", "J")

Y = [0, 1]  # the ypoly "y"


def _check_family(family):
    if family not in FAMILY_IDS:
        raise ValueError("unknown generating-function family %r" % (family,))


# ------------------------------------------------------- base builders

def _z(t, p=Y):
    return ps_monomial(t, (1, 0, 0, 0), p)


def _x(t):
    return ps_monomial(t, (0, 1, 0, 0), [1])


def _v(t):
    return ps_monomial(t, (0, 0, 1, 0), [1])


def _sub_x(s, powx):
    """z -> x^powx * z, i.e. C(z) -> C(xz) or C(x^2 z)."""
    return ps_subst_scale(s, s.trunc, {"z": (1, (1, powx, 0, 0))})


def _catalan(t):
    return solve_fixed_point("catalan", t)


def _schroeder_tilde(t):
    """zS(z): the small Schroeder series with its z restored."""
    return ps_shift(solve_fixed_point("schroeder", t), 1)


def _ternary(t):
    return solve_fixed_point("ternary", t)


def _narayana_v(t):
    return solve_fixed_point("narayana", t)


def _geom(t, powx):
    """1/(1 - x^powx z) laid out directly."""
    cells = {}
    for k in range(t.nz + 1):
        key = (k, powx * k, 0, 0)
        if t.contains(key):
            cells[key] = [1]
    return Series(t, cells=cells)


def _log_geom(t, powx):
    """-log(1 - x^powx z) termwise."""
    cells = {}
    for k in range(1, t.nz + 1):
        key = (k, powx * k, 0, 0)
        if t.contains(key):
            cells[key] = [Fraction(1, k)]
    return Series(t, cells=cells)


def _drop_top_z(s: Series) -> Series:
    """Forget the top z-slice (used by the ODE residuals, where d/dz
    genuinely loses one order)."""
    nz = s.trunc.nz
    return Series(
        s.trunc, s.field, {k: p for k, p in s.cells.items() if k[0] < nz}
    )


def _shift_v(s: Series, k: int) -> Series:
    """Divide by v^k; every cell must sit at dv >= k."""
    out = {}
    for (dz, dx, dv, du), p in s.cells.items():
        if dv < k:
            raise ValueError("cell v^%d nonzero, not divisible by v^%d" % (dv, k))
        out[(dz, dx, dv - k, du)] = p
    return Series(s.trunc, s.field, out)


# -------------------------------------------------------- closed forms

def gf_closed(family: str, trunc: Truncation, alt: bool = False) -> Series:
    """The closed form of a family at the given truncation.

    ``alt=True`` selects the second printed closed form where one exists
    (B via the Catalan kernel, D in its manifestly symmetric shape, U
    with the pooled denominator); the pair must agree coefficientwise.
    """
    _check_family(family)
    t = trunc
    one = ps_one(t)

    if family == "B":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        if alt:
            # 1/(1 - yzC(z) - xyzC(xz))
            den = ps_sub(one, ps_add(ps_mul(_z(t), c), ps_mul(_z(t), ps_mul(_x(t), cx))))
            return ps_inv(den)
        # 2/(2 - 2y + y sqrt(1-4z) + y sqrt(1-4xz))
        root = ps_sqrt(ps_sub(one, ps_monomial(t, (1, 0, 0, 0), [4])))
        rootx = _sub_x(root, 1)
        den = ps_add(
            ps_mul_ypoly(one, [2, -2]),
            ps_mul_ypoly(ps_add(root, rootx), Y),
        )
        return ps_mul_ypoly(ps_inv(den, y_unit=True), [2])

    if family == "Babs":
        if t.u_range < 1:
            raise ValueError("Babs needs a truncation with u_range >= 1")
        c = _catalan(t)
        cx = _sub_x(c, 1)
        m = ps_add(
            ps_mul(ps_monomial(t, (1, 0, 0, -1), Y), c),
            ps_mul(ps_monomial(t, (1, 1, 0, 1), Y), cx),
        )
        return ps_inv(ps_sub(one, m))

    if family == "D":
        c = _catalan(t)
        cxx = _sub_x(c, 2)
        if alt:
            # C(z)C(x^2 z)/(1 - xyzC(z)C(x^2 z))
            cc = ps_mul(c, cxx)
            return ps_mul(cc, ps_inv(ps_sub(one, ps_mul(_z(t), ps_mul(_x(t), cc)))))
        den = ps_sub(
            one,
            ps_add(
                ps_mul(_z(t), ps_mul(_x(t), c)),
                ps_mul(ps_monomial(t, (1, 2, 0, 0), [1]), cxx),
            ),
        )
        return ps_mul(c, ps_inv(den))

    if family == "U":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        xyz_c2 = ps_mul(ps_mul(_z(t), _x(t)), ps_mul(c, c))
        if alt:
            # xyzC(z)^2 / (1 - xz(yC(z) + C(xz)))
            xz = ps_monomial(t, (1, 1, 0, 0), [1])
            den = ps_sub(one, ps_mul(xz, ps_add(ps_mul_ypoly(c, Y), cx)))
            return ps_mul(xyz_c2, ps_inv(den))
        den = ps_sub(one, ps_mul(_z(t), ps_mul(_x(t), ps_mul(c, cx))))
        return ps_mul(ps_mul(xyz_c2, cx), ps_inv(den))

    if family == "P":
        if t.nv < 1:
            raise ValueError("P needs a truncation with nv >= 1")
        nar = _narayana_v(t)
        narx = ps_subst_scale(nar, t, {"v": (1, (0, 1, 1, 0))})
        r2 = ps_add(ps_sub(nar, _v(t)), one)
        r1 = ps_add(ps_sub(narx, ps_monomial(t, (0, 1, 1, 0), [1])), one)
        den = ps_sub(one, ps_mul(_z(t), ps_mul(r1, r2)))
        return ps_mul(_v(t), ps_inv(den))

    if family == "A":
        st = _schroeder_tilde(t)
        stx = _sub_x(st, 1)
        r = ps_inv(ps_mul(ps_sub(one, st), ps_sub(one, stx)))
        den = ps_add(one, ps_mul_ypoly(ps_sub(one, r), Y))
        return ps_inv(den)

    if family == "G":
        tt = _ternary(t)
        ttx = _sub_x(tt, 1)
        num = ps_add(tt, ps_mul_ypoly(ps_mul(ps_sub(one, tt), ttx), Y))
        wings = ps_add(tt, ps_mul(_x(t), ttx))
        den = ps_sub(one, ps_mul(_z(t), ps_mul(ps_mul(tt, ttx), wings)))
        return ps_mul(num, ps_inv(den))

    if family == "I":
        arg = ps_mul_ypoly(ps_add(_log_geom(t, 0), _log_geom(t, 1)), Y)
        return ps_exp(arg)

    if family == "J":
        i = gf_closed("I", t)
        arg = ps_mul_ypoly(ps_add(_log_geom(t, 0), _log_geom(t, 1)), [1, -1])
        integrand = ps_exp(arg)
        return ps_mul(i, ps_integrate_z(integrand))

    raise AssertionError  # pragma: no cover


# ------------------------------------------- functional-equation solves

def gf_solve(family: str, trunc: Truncation) -> Series:
    """Solve the family's functional equation directly -- an expansion
    path independent of the closed form."""
    _check_family(family)
    t = trunc
    one = ps_one(t)

    if family == "B":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        m = ps_add(ps_mul(_z(t), c), ps_mul(ps_mul(_z(t), _x(t)), cx))
        return ps_linear_solve(one, m)

    if family == "Babs":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        m = ps_add(
            ps_mul(ps_monomial(t, (1, 0, 0, -1), Y), c),
            ps_mul(ps_monomial(t, (1, 1, 0, 1), Y), cx),
        )
        return ps_linear_solve(one, m)

    if family == "D":
        c = _catalan(t)
        cxx = _sub_x(c, 2)
        m = ps_add(
            ps_mul(ps_mul(_z(t), _x(t)), c),
            ps_mul(ps_monomial(t, (1, 2, 0, 0), [1]), cxx),
        )
        return ps_linear_solve(c, m)

    if family == "U":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        a0 = ps_mul(ps_mul(_z(t), _x(t)), ps_mul(c, c))
        m = ps_add(
            ps_mul(ps_mul(_z(t), _x(t)), c),
            ps_mul(ps_monomial(t, (1, 1, 0, 0), [1]), cx),
        )
        return ps_linear_solve(a0, m)

    if family == "P":
        if t.nv < 1:
            raise ValueError("P needs a truncation with nv >= 1")
        nar = _narayana_v(t)
        narx = ps_subst_scale(nar, t, {"v": (1, (0, 1, 1, 0))})
        zmono = ps_monomial(t, (1, 0, 0, 0), [1])
        inv1 = ps_inv(ps_sub(one, ps_mul(zmono, narx)))
        inv2 = ps_inv(ps_sub(one, ps_mul(zmono, nar)))
        m = ps_mul(_z(t), ps_mul(inv1, inv2))
        return ps_linear_solve(_v(t), m)

    if family == "A":
        # solve for zA one order higher, then divide out the z
        t1 = Truncation(t.nz + 1, t.nx, t.ny, t.nv, t.u_range)
        one1 = ps_one(t1)
        st = _schroeder_tilde(t1)
        stx = _sub_x(st, 1)
        r = ps_inv(ps_mul(ps_sub(one1, st), ps_sub(one1, stx)))
        m = ps_mul_ypoly(ps_sub(r, one1), Y)
        za = ps_linear_solve(ps_monomial(t1, (1, 0, 0, 0), [1]), m)
        return ps_retrunc(ps_shift(za, -1), t)

    if family == "G":
        tt = _ternary(t)
        ttx = _sub_x(tt, 1)
        t3x = ps_mul(ps_mul(tt, tt), ps_mul(tt, ttx))
        a0 = ps_sub(tt, ps_mul(_z(t), t3x))
        m = ps_add(
            ps_mul(_z(t), ps_mul(ps_mul(tt, tt), ttx)),
            ps_mul(ps_mul(_z(t), _x(t)), ps_mul(tt, ps_mul(ttx, ttx))),
        )
        return ps_linear_solve(a0, m)

    if family == "I":
        # d/dz I = y I (F(z) + x F(xz)), I(x,y,0) = 1
        f = ps_add(_geom(t, 0), ps_mul(_x(t), _geom(t, 1)))
        cur = one
        for _ in range(t.nz + 1):
            cur = ps_add(one, ps_integrate_z(ps_mul_ypoly(ps_mul(cur, f), Y)))
        return cur

    if family == "J":
        # d/dz J = F(z)F(xz) + J (y F(z) + xy F(xz)), J(x,y,0) = 0
        f0 = _geom(t, 0)
        fx = _geom(t, 1)
        drive = ps_mul(f0, fx)
        m = ps_mul_ypoly(ps_add(f0, ps_mul(_x(t), fx)), Y)
        cur = Series(t)
        for _ in range(t.nz + 1):
            cur = ps_integrate_z(ps_add(drive, ps_mul(cur, m)))
        return cur

    raise AssertionError  # pragma: no cover


# ------------------------------------------------------------ residuals

def gf_residual(family: str, s: Series) -> Series:
    """Residual of the family's registered functional equation at s
    (zero exactly when s satisfies it inside the truncation box)."""
    _check_family(family)
    t = s.trunc
    one = ps_one(t, s.field)

    if family == "B":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        rhs = ps_add(
            one,
            ps_add(
                ps_mul(ps_mul(_z(t), s), c),
                ps_mul(ps_mul(ps_mul(_z(t), _x(t)), cx), s),
            ),
        )
        return ps_sub(s, rhs)

    if family == "Babs":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        rhs = ps_add(
            one,
            ps_add(
                ps_mul(ps_mul(ps_monomial(t, (1, 0, 0, -1), Y), s), c),
                ps_mul(ps_mul(ps_monomial(t, (1, 1, 0, 1), Y), cx), s),
            ),
        )
        return ps_sub(s, rhs)

    if family == "D":
        c = _catalan(t)
        cxx = _sub_x(c, 2)
        rhs = ps_add(
            c,
            ps_add(
                ps_mul(ps_mul(ps_mul(_z(t), _x(t)), s), c),
                ps_mul(ps_mul(ps_monomial(t, (1, 2, 0, 0), [1]), cxx), s),
            ),
        )
        return ps_sub(s, rhs)

    if family == "U":
        c = _catalan(t)
        cx = _sub_x(c, 1)
        rhs = ps_add(
            ps_mul(ps_mul(_z(t), _x(t)), ps_mul(c, c)),
            ps_add(
                ps_mul(ps_mul(ps_mul(_z(t), _x(t)), s), c),
                ps_mul(ps_mul(ps_monomial(t, (1, 1, 0, 0), [1]), cx), s),
            ),
        )
        return ps_sub(s, rhs)

    if family == "P":
        nar = _narayana_v(t)
        narx = ps_subst_scale(nar, t, {"v": (1, (0, 1, 1, 0))})
        zmono = ps_monomial(t, (1, 0, 0, 0), [1])
        inv1 = ps_inv(ps_sub(one, ps_mul(zmono, narx)))
        inv2 = ps_inv(ps_sub(one, ps_mul(zmono, nar)))
        rhs = ps_add(_v(t), ps_mul(ps_mul(_z(t), s), ps_mul(inv1, inv2)))
        return ps_sub(s, rhs)

    if family == "A":
        st = _schroeder_tilde(t)
        stx = _sub_x(st, 1)
        r = ps_inv(ps_mul(ps_sub(one, st), ps_sub(one, stx)))
        rhs = ps_add(one, ps_mul_ypoly(ps_mul(s, ps_sub(r, one)), Y))
        return ps_sub(s, rhs)

    if family == "G":
        tt = _ternary(t)
        ttx = _sub_x(tt, 1)
        inner = ps_add(
            ps_mul(_z(t), ps_mul(ps_sub(s, tt), tt)),
            ps_mul(ps_mul(_z(t), _x(t)), ps_mul(ttx, s)),
        )
        rhs = ps_add(tt, ps_mul(ps_mul(ttx, tt), inner))
        return ps_sub(s, rhs)

    if family == "I":
        f = ps_add(_geom(t, 0), ps_mul(_x(t), _geom(t, 1)))
        rhs = ps_mul_ypoly(ps_mul(s, f), Y)
        return _drop_top_z(ps_sub(ps_diff_z(s), rhs))

    if family == "J":
        f0 = _geom(t, 0)
        fx = _geom(t, 1)
        rhs = ps_add(
            ps_mul(f0, fx),
            ps_mul(s, ps_mul_ypoly(ps_add(f0, ps_mul(_x(t), fx)), Y)),
        )
        return _drop_top_z(ps_sub(ps_diff_z(s), rhs))

    raise AssertionError  # pragma: no cover


# --------------------------------------- y-derivative product identities

def gf_x1z_slice(family: str, trunc: Truncation) -> Series:
    """The y = 1 specialization written as a divided difference, e.g.
    (C(z) - xC(xz))/(1 - x) for binary trees: the building block of the
    derivative identities below."""
    t = trunc
    if family == "B":
        c = _catalan(t)
        return ps_div_1mx(ps_sub(c, ps_mul(_x(t), _sub_x(c, 1))))
    if family == "D":
        c = _catalan(t)
        return ps_div_1mx(ps_sub(c, ps_mul(_x(t), _sub_x(c, 2))))
    if family == "U":
        c = _catalan(t)
        return ps_mul(_x(t), ps_div_1mx(ps_sub(c, _sub_x(c, 1))))
    if family == "P":
        nar = _narayana_v(t)
        narx = ps_subst_scale(nar, t, {"v": (1, (0, 1, 1, 0))})
        return ps_div_1mx(ps_sub(nar, narx))
    if family == "A":
        s = solve_fixed_point("schroeder", t)
        return ps_div_1mx(ps_sub(s, ps_mul(_x(t), _sub_x(s, 1))))
    if family == "G":
        tt = _ternary(t)
        t2 = ps_mul(tt, tt)
        t2x = _sub_x(t2, 1)
        return ps_div_1mx(ps_sub(t2, ps_mul(_x(t), t2x)))
    raise ValueError("no divided-difference slice for family %r" % (family,))


def gf_dy1_closed(family: str, trunc: Truncation) -> Series:
    """d/dy at y = 1 of the family's series, by its product identity
    (families with one; J has no product form -- differentiate the
    series itself instead)."""
    _check_family(family)
    t = trunc
    one = ps_one(t)

    if family == "B":
        b1 = gf_x1z_slice("B", t)
        return ps_mul(b1, ps_sub(b1, one))
    if family == "D":
        d1 = gf_x1z_slice("D", t)
        return ps_mul(ps_mul(_z(t, [1]), _x(t)), ps_mul(d1, d1))
    if family == "U":
        c = _catalan(t)
        u1 = gf_x1z_slice("U", t)
        return ps_mul(u1, ps_add(one, ps_mul(u1, ps_inv(c))))
    if family == "P":
        p1 = gf_x1z_slice("P", t)
        return _shift_v(ps_mul(p1, ps_sub(p1, _v(t))), 1)
    if family == "A":
        a1 = gf_x1z_slice("A", t)
        return ps_mul(a1, ps_sub(a1, one))
    if family == "G":
        g1 = gf_x1z_slice("G", t)
        return ps_mul(ps_mul(_z(t, [1]), _x(t)), ps_mul(g1, g1))
    if family == "I":
        ell = ps_add(_log_geom(t, 0), _log_geom(t, 1))
        return ps_mul(ell, ps_mul(_geom(t, 0), _geom(t, 1)))
    raise ValueError("no product identity for the y-derivative of %r" % (family,))


def babs_du1_closed(trunc: Truncation) -> Series:
    """d/du at u = 1, y = 1 of Babs: the exact closed form

        [x(1-3z-xz)C(xz) - (1-z-3xz)C(z) + (1-x)] / (z (1-x)^2)

    (the apparent poles cancel; the bracket is divisible by z)."""
    t = Truncation(trunc.nz + 1, trunc.nx, trunc.ny, trunc.nv, trunc.u_range)
    c = _catalan(t)
    cx = _sub_x(c, 1)
    p1 = Series(t, cells={(0, 1, 0, 0): [1], (1, 1, 0, 0): [-3], (1, 2, 0, 0): [-1]})
    p2 = Series(t, cells={(0, 0, 0, 0): [1], (1, 0, 0, 0): [-1], (1, 1, 0, 0): [-3]})
    numer = ps_add(
        ps_sub(ps_mul(p1, cx), ps_mul(p2, c)),
        Series(t, cells={(0, 0, 0, 0): [1], (0, 1, 0, 0): [-1]}),
    )
    return ps_retrunc(ps_div_1mx(ps_div_1mx(ps_shift(numer, -1))), trunc)


# ------------------------------------------------------ EGF reporting

def egf_cell_counts(s: Series, dz: int, dx: int):
    """Read an EGF cell as integer counts: multiply by dz! and check
    that everything clears."""
    p = ps_coeff(s, dz, dx)
    fact = math.factorial(dz)
    out = []
    for coef in p:
        val = coef * fact
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise ValueError("EGF cell z^%d x^%d is not integral" % (dz, dx))
            val = val.numerator
        out.append(val)
    return out


# ---------------------------------------- per-statistic distributions

def distribution_via_gf(family, statistic, n, r, k=None):
    """Distribution of the statistic at position r for size n, read off
    the generating functions: a (dict value -> count, total) pair.
    Mirrors objects.distribution exactly."""
    key = (family, statistic)

    # several closed forms write bare z (or v*x) monomials, so their
    # truncations are clamped to nz >= 1 / nx >= 1 even for tiny n, r
    if key == ("binary", "leaf-depth"):
        if not 0 <= r <= n:
            raise ValueError("leaf position r=%d out of range" % r)
        t = Truncation(max(n, 1), r, n)
        cell = ps_coeff(gf_closed("B", t), n, r)
        return _ypoly_counts(cell)

    if key == ("binary", "leaf-abscissa"):
        if not 0 <= r <= n:
            raise ValueError("leaf position r=%d out of range" % r)
        t = Truncation(max(n, 1), max(r, 1), n, u_range=max(n, 1))
        b = gf_closed("Babs", t)
        counts = {}
        for du in range(-t.u_range, t.u_range + 1):
            tot = yp_eval1(ps_coeff(b, n, r, 0, du))
            if tot:
                counts[du] = tot
        return counts, sum(counts.values())

    if key == ("plane", "leaf-depth"):
        if k is None:
            raise ValueError("plane leaf-depth needs the leaf count k")
        if not (1 <= k <= n + 1 and 0 <= r < k):
            raise ValueError("no plane tree of size %d with k=%d, r=%d" % (n, k, r))
        t = Truncation(max(n, 1), max(r, 1), n, nv=k)
        cell = ps_coeff(gf_closed("P", t), n, r, k)
        return _ypoly_counts(cell)

    if key == ("plane", "node-depth"):
        if r == 0:
            total = math.comb(2 * n, n) // (n + 1)
            return {0: total}, total
        if not 1 <= r <= n:
            raise ValueError("preorder position r=%d out of range" % r)
        t = Truncation(n, r, n)
        cell = ps_coeff(gf_closed("U", t), n, r)
        return _ypoly_counts(cell)

    if key == ("schroeder", "leaf-depth"):
        if not 0 <= r <= n - 1:
            raise ValueError("leaf position r=%d out of range" % r)
        t = Truncation(n - 1, r, max(n - 1, 0))
        cell = ps_coeff(gf_closed("A", t), n - 1, r)
        return _ypoly_counts(cell)

    if key == ("dyck", "vertex-height"):
        if not 0 <= r <= 2 * n:
            raise ValueError("vertex r=%d out of range" % r)
        # the walk system couples x and x^2 columns, so nx >= 2
        t = Truncation(max(n, 1), max(r, 2), n)
        cell = ps_coeff(gf_closed("D", t), n, r)
        return _ypoly_counts(cell)

    if key == ("dyck", "upstep-height"):
        if not 1 <= r <= n:
            raise ValueError("up-step r=%d out of range" % r)
        t = Truncation(n, r, n)
        cell = ps_coeff(gf_closed("U", t), n, r)
        return _ypoly_counts(cell)

    if key == ("dyck", "downstep-height"):
        # reversal pairs the r-th down-step with up-step n+1-r
        if not 1 <= r <= n:
            raise ValueError("down-step r=%d out of range" % r)
        return distribution_via_gf("dyck", "upstep-height", n, n + 1 - r)

    if key == ("noncrossing", "node-depth"):
        if not 0 <= r <= n:
            raise ValueError("vertex r=%d out of range" % r)
        t = Truncation(max(n, 1), max(r, 1), n)
        cell = ps_coeff(gf_closed("G", t), n, r)
        return _ypoly_counts(cell)

    if key == ("increasing", "leaf-depth"):
        if not 0 <= r <= n:
            raise ValueError("leaf position r=%d out of range" % r)
        t = Truncation(n, r, n)
        cell = egf_cell_counts(gf_closed("I", t), n, r)
        return _ypoly_counts(cell)

    if key == ("increasing", "internal-depth"):
        if not 0 <= r <= n - 1:
            raise ValueError("inorder position r=%d out of range" % r)
        t = Truncation(n, r, max(n - 1, 0))
        cell = egf_cell_counts(gf_closed("J", t), n, r)
        return _ypoly_counts(cell)

    if key == ("triangulation", "separating-diagonals"):
        if n == 0:  # the 2-gon: no diagonals at all
            if r != 0:
                raise ValueError("side r=%d out of range" % r)
            return {0: 1}, 1
        counts, total = distribution_via_gf("binary", "leaf-depth", n, r)
        return {d - 1: c for d, c in counts.items()}, total

    if key == ("dissection", "separating-diagonals"):
        if n == 0:
            if r != 0:
                raise ValueError("side r=%d out of range" % r)
            return {0: 1}, 1
        counts, total = distribution_via_gf("schroeder", "leaf-depth", n + 1, r)
        return {d - 1: c for d, c in counts.items()}, total

    raise ValueError("no generating function for %s/%s" % (family, statistic))


def _ypoly_counts(p):
    counts = {d: c for d, c in enumerate(p) if c}
    return counts, sum(counts.values())
