"""Truncated multivariate power series over exact scalars.

A Series is a sparse dict mapping exponent keys ``(dz, dx, dv, du)`` to
dense y-polynomials (see the ``yp_*`` helpers in :mod:`combstat.exact`).
z is the main size variable, x the position marker, v an optional second
marker, u an optional signed (Laurent) marker; y always lives inside the
cell values.  The *grade* of a key is ``dz + dx + dv`` -- u is excluded,
which is what lets Laurent u-cells ride along through the graded
solvers below.

Everything is truncated: exponents beyond the Truncation bounds are
dropped on the spot, and y-degrees beyond ny are clipped inside yp_mul.
All products are lower-triangular in every variable (exponents only ever
grow, and y-degree d of a product needs only y-degrees <= d of the
factors), so the retained box of a clipped series is still exact.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    scalar_inv,
    render_scalar,
    yp_add,
    yp_eval1,
    yp_deriv1,
    yp_inv,
    yp_mul,
    yp_scale,
    yp_trim,
)

ZERO_KEY = (0, 0, 0, 0)


@dataclass(frozen=True)
class Truncation:
    nz: int
    nx: int
    ny: int
    nv: int = 0
    u_range: int = 0

    @property
    def grade_bound(self) -> int:
        return self.nz + self.nx + self.nv

    def contains(self, key) -> bool:
        dz, dx, dv, du = key
        return (
            0 <= dz <= self.nz
            and 0 <= dx <= self.nx
            and 0 <= dv <= self.nv
            and -self.u_range <= du <= self.u_range
        )


def _grade(key) -> int:
    return key[0] + key[1] + key[2]


def _key_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


class Series:
    """Sparse truncated series; cells map (dz,dx,dv,du) -> ypoly."""

    __slots__ = ("trunc", "field", "cells")

    def __init__(self, trunc: Truncation, field: str = "rational", cells=None):
        if field not in ("rational", "quad2"):
            raise ValueError("unknown field %r" % (field,))
        self.trunc = trunc
        self.field = field
        self.cells = {} if cells is None else cells

    # operator sugar; the ps_* functions below are the primary API
    def __add__(self, other):
        if isinstance(other, Series):
            return ps_add(self, other)
        return ps_add(self, ps_const(self.trunc, other, self.field))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Series):
            return ps_sub(self, other)
        return ps_sub(self, ps_const(self.trunc, other, self.field))

    def __rsub__(self, other):
        return ps_sub(ps_const(self.trunc, other, self.field), self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return ps_mul(self, other)
        return ps_scale(self, other)

    def __rmul__(self, other):
        return ps_scale(self, other)

    def __neg__(self):
        return ps_scale(self, -1)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.trunc == other.trunc
            and self.field == other.field
            and self.cells == other.cells
        )

    def __repr__(self):
        return "Series(%r, %s, %d cells)" % (self.trunc, self.field, len(self.cells))


def _check_compat(a: Series, b: Series):
    if a.trunc != b.trunc:
        raise ValueError("truncation mismatch: %r vs %r" % (a.trunc, b.trunc))
    if a.field != b.field:
        raise ValueError("field mismatch: %s vs %s" % (a.field, b.field))


# ------------------------------------------------------------- builders

def ps_zero(trunc, field="rational") -> Series:
    return Series(trunc, field)


def ps_one(trunc, field="rational") -> Series:
    return Series(trunc, field, {ZERO_KEY: [1]})


def ps_const(trunc, c, field="rational") -> Series:
    if c == 0:
        return Series(trunc, field)
    return Series(trunc, field, {ZERO_KEY: [c]})


def ps_monomial(trunc, key, ypoly, field="rational") -> Series:
    """Single-cell series; key must be inside the truncation box."""
    if not trunc.contains(key):
        raise ValueError("monomial key %r outside truncation" % (key,))
    p = yp_trim(list(ypoly))
    return Series(trunc, field, {key: p} if p else {})


# ----------------------------------------------------------- arithmetic

def ps_add(a: Series, b: Series) -> Series:
    _check_compat(a, b)
    out = dict(a.cells)
    for k, p in b.cells.items():
        if k in out:
            s = yp_add(out[k], p)
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = p
    return Series(a.trunc, a.field, out)


def ps_neg(a: Series) -> Series:
    return Series(a.trunc, a.field, {k: [-v for v in p] for k, p in a.cells.items()})


def ps_sub(a: Series, b: Series) -> Series:
    return ps_add(a, ps_neg(b))


def ps_scale(a: Series, c) -> Series:
    if c == 0:
        return Series(a.trunc, a.field)
    return Series(a.trunc, a.field, {k: yp_scale(p, c) for k, p in a.cells.items()})


def ps_mul_ypoly(a: Series, p) -> Series:
    """Multiply every cell by the y-polynomial p."""
    out = {}
    ny = a.trunc.ny
    for k, q in a.cells.items():
        r = yp_mul(q, p, ny)
        if r:
            out[k] = r
    return Series(a.trunc, a.field, out)


def ps_mul(a: Series, b: Series) -> Series:
    _check_compat(a, b)
    t = a.trunc
    ny = t.ny
    out = {}
    # iterate the smaller factor outside: marginally fewer dead key-adds
    ac, bc = a.cells, b.cells
    if len(ac) > len(bc):
        ac, bc = bc, ac
    bitems = list(bc.items())
    for ka, pa in ac.items():
        for kb, pb in bitems:
            nk = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
            if not t.contains(nk):
                continue
            prod = yp_mul(pa, pb, ny)
            if not prod:
                continue
            cur = out.get(nk)
            if cur is None:
                out[nk] = prod
            else:
                s = yp_add(cur, prod)
                if s:
                    out[nk] = s
                else:
                    del out[nk]
    return Series(t, a.field, out)


def ps_is_zero(a: Series) -> bool:
    return not a.cells


def ps_coeff(a: Series, dz, dx=0, dv=0, du=0):
    """The ypoly at one exponent key (a copy; [] when absent)."""
    return list(a.cells.get((dz, dx, dv, du), []))


# -------------------------------------------------------- graded solves

def _by_grade(cells):
    out = defaultdict(list)
    for k, p in cells.items():
        out[_grade(k)].append((k, p))
    return out


def ps_linear_solve(a: Series, m: Series) -> Series:
    """The unique S with S = a + S*m, for m with no grade-0 cells.

    Solved layer by layer in the grade g = dz+dx+dv: the grade-g slice of
    S*m only involves slices of S below g, so one pass from g = 0 up
    costs the same as a single multiplication.
    """
    _check_compat(a, m)
    for k in m.cells:
        if _grade(k) == 0:
            raise ValueError("linear solve needs m with no grade-0 part")
    t = a.trunc
    ny = t.ny
    m_layers = _by_grade(m.cells)
    m_grades = sorted(m_layers)
    pending = defaultdict(dict)
    for k, p in a.cells.items():
        pending[_grade(k)][k] = list(p)
    out = {}
    for g in range(t.grade_bound + 1):
        layer = pending.pop(g, None)
        if not layer:
            continue
        layer = {k: p for k, p in layer.items() if yp_trim(p)}
        out.update(layer)
        for h in m_grades:
            if g + h > t.grade_bound:
                break
            tgt = pending[g + h]
            for mk, mp in m_layers[h]:
                for sk, sp in layer.items():
                    nk = (sk[0] + mk[0], sk[1] + mk[1], sk[2] + mk[2], sk[3] + mk[3])
                    if not t.contains(nk):
                        continue
                    prod = yp_mul(sp, mp, ny)
                    if not prod:
                        continue
                    cur = tgt.get(nk)
                    tgt[nk] = prod if cur is None else yp_add(cur, prod)
    return Series(t, a.field, out)


def ps_inv(a: Series, y_unit: bool = False) -> Series:
    """Multiplicative inverse of a truncated series.

    The constant cell (exponent key all-zero) must be invertible.  By
    default that means a plain scalar (a y-free constant); a constant
    that involves y is refused unless ``y_unit=True``, which treats y as
    one more truncated variable and inverts the constant cell with
    yp_inv.  Either way, write a = c0*(1 + n) and solve x = 1 - x*n,
    then scale by c0^-1.
    """
    c0 = a.cells.get(ZERO_KEY)
    if not c0:
        raise ZeroDivisionError("inverse of a series with zero constant term")
    t = a.trunc
    if len(c0) == 1:
        c0i = scalar_inv(c0[0])
        n = ps_scale(a, c0i)
        del n.cells[ZERO_KEY]
        x = ps_linear_solve(ps_one(t, a.field), ps_neg(n))
        return ps_scale(x, c0i)
    if not y_unit:
        raise ValueError(
            "constant term involves y; pass y_unit=True to invert it as a y-series"
        )
    c0i = yp_inv(c0, t.ny)
    n = ps_mul_ypoly(a, c0i)
    # yp_inv is the exact truncated inverse, so the constant cancels exactly
    assert yp_add(n.cells.pop(ZERO_KEY), [-1]) == []
    x = ps_linear_solve(ps_one(t, a.field), ps_neg(n))
    return ps_mul_ypoly(x, c0i)


def ps_sqrt(a: Series) -> Series:
    """Square root of a series with constant cell exactly 1, by Newton.

    t <- (t + a / t) / 2 doubles the correct grade range each pass, so
    ceil(log2(G+1)) + 1 passes cover grade bound G with margin.
    """
    c0 = a.cells.get(ZERO_KEY)
    if c0 != [1]:
        raise ValueError("ps_sqrt needs constant cell exactly [1]")
    t = a.trunc
    g = t.grade_bound
    k = 1
    while (1 << k) - 1 < g:  # smallest k with 2^k - 1 >= G
        k += 1
    iters = k + 1 if g > 0 else 1
    half = Fraction(1, 2)
    cur = ps_one(t, a.field)
    for _ in range(iters):
        cur = ps_scale(ps_add(cur, ps_mul(a, ps_inv(cur))), half)
    return cur


def ps_exp(a: Series) -> Series:
    """exp(a) for a with no grade-0 cell, via the graded derivative:

        g * E_g = sum_{h>=1} h * A_h * E_{g-h}
    """
    if ZERO_KEY in a.cells:
        raise ValueError("ps_exp needs a series with zero constant term")
    t = a.trunc
    ny = t.ny
    a_layers = _by_grade(a.cells)
    a_grades = sorted(a_layers)
    e_layers = {0: {ZERO_KEY: [1]}}
    out = {ZERO_KEY: [1]}
    for g in range(1, t.grade_bound + 1):
        acc = {}
        for h in a_grades:
            if h > g:
                break
            src = e_layers.get(g - h)
            if not src:
                continue
            for ak, ap in a_layers[h]:
                hap = yp_scale(ap, h)
                for ek, ep in src.items():
                    nk = (ak[0] + ek[0], ak[1] + ek[1], ak[2] + ek[2], ak[3] + ek[3])
                    if not t.contains(nk):
                        continue
                    prod = yp_mul(hap, ep, ny)
                    if not prod:
                        continue
                    cur = acc.get(nk)
                    acc[nk] = prod if cur is None else yp_add(cur, prod)
        inv_g = Fraction(1, g)
        layer = {}
        for k, p in acc.items():
            p = yp_scale(p, inv_g)
            if p:
                layer[k] = p
        if layer:
            e_layers[g] = layer
            out.update(layer)
    return Series(t, a.field, out)


# ------------------------------------------------------- calculus in z

def ps_diff_z(a: Series) -> Series:
    out = {}
    for (dz, dx, dv, du), p in a.cells.items():
        if dz == 0:
            continue
        out[(dz - 1, dx, dv, du)] = yp_scale(p, dz)
    return Series(a.trunc, a.field, out)


def ps_integrate_z(a: Series) -> Series:
    """Term-by-term z-antiderivative, zero constant; the top z-slice
    falls off the truncation edge."""
    t = a.trunc
    out = {}
    for (dz, dx, dv, du), p in a.cells.items():
        if dz + 1 > t.nz:
            continue
        out[(dz + 1, dx, dv, du)] = yp_scale(p, Fraction(1, dz + 1))
    return Series(t, a.field, out)


def ps_shift(a: Series, k: int) -> Series:
    """Multiply by z**k (k may be negative; then the low cells must be
    absent, i.e. the series must actually be divisible by z**-k).
    Shifting up drops cells past nz."""
    t = a.trunc
    out = {}
    for (dz, dx, dv, du), p in a.cells.items():
        nz = dz + k
        if nz < 0:
            raise ValueError("ps_shift: cell z^%d nonzero, not divisible" % dz)
        if nz > t.nz:
            continue
        out[(nz, dx, dv, du)] = p
    return Series(t, a.field, out)


def ps_div_1mx(a: Series) -> Series:
    """Multiply by 1/(1-x): a running sum along the x direction."""
    t = a.trunc
    cols = defaultdict(dict)
    for (dz, dx, dv, du), p in a.cells.items():
        cols[(dz, dv, du)][dx] = p
    out = {}
    for (dz, dv, du), col in cols.items():
        run = []
        for dx in range(t.nx + 1):
            if dx in col:
                run = yp_add(run, col[dx])
            if run:
                out[(dz, dx, dv, du)] = run
    return Series(t, a.field, out)


# ------------------------------------------------- substitution / views

def ps_subst_scale(a: Series, out_trunc: Truncation, subs, field=None) -> Series:
    """Monomial substitution: each variable goes to scale * monomial.

    ``subs`` maps a variable name among "z","x","v","u" to a pair
    ``(scale, (ez, ex, ev, eu))``; unmentioned variables stay put.  E.g.
    C(xz) from C(z) via  {"z": (1, (1, 1, 0, 0))},  and T(4x/27) via
    {"z": (Fraction(4, 27), (0, 1, 0, 0))}.  Distinct source keys may
    collide after substitution; they accumulate.
    """
    table = {
        "z": (1, (1, 0, 0, 0)),
        "x": (1, (0, 1, 0, 0)),
        "v": (1, (0, 0, 1, 0)),
        "u": (1, (0, 0, 0, 1)),
    }
    for var, pair in subs.items():
        if var not in table:
            raise ValueError("unknown variable %r" % (var,))
        table[var] = pair
    vecs = [table["z"], table["x"], table["v"], table["u"]]
    out = {}
    for key, p in a.cells.items():
        nk0 = nk1 = nk2 = nk3 = 0
        factor = 1
        for d, (sc, vec) in zip(key, vecs):
            if d == 0:
                continue
            if sc != 1:
                factor = factor * sc ** d
            nk0 += d * vec[0]
            nk1 += d * vec[1]
            nk2 += d * vec[2]
            nk3 += d * vec[3]
        nk = (nk0, nk1, nk2, nk3)
        if not out_trunc.contains(nk):
            continue
        q = yp_scale(list(p), factor)
        if not q:
            continue
        cur = out.get(nk)
        if cur is None:
            out[nk] = q
        else:
            s = yp_add(cur, q)
            if s:
                out[nk] = s
            else:
                del out[nk]
    return Series(out_trunc, field or a.field, out)


def ps_retrunc(a: Series, new_trunc: Truncation) -> Series:
    """Reinterpret under another truncation, clipping what falls out."""
    out = {k: list(p) for k, p in a.cells.items() if new_trunc.contains(k)}
    return Series(new_trunc, a.field, out)


def ps_eval_y1(a: Series) -> Series:
    """Set y = 1: every cell collapses to the scalar sum of its ypoly."""
    out = {}
    for k, p in a.cells.items():
        s = yp_eval1(p)
        if s != 0:
            out[k] = [s]
    return Series(a.trunc, a.field, out)


def ps_diff_y1(a: Series) -> Series:
    """d/dy at y = 1: every cell collapses to sum k*p_k.  Exact, since
    cells are genuine polynomials in y."""
    out = {}
    for k, p in a.cells.items():
        s = yp_deriv1(p)
        if s != 0:
            out[k] = [s]
    return Series(a.trunc, a.field, out)


def ps_eval_u1(a: Series) -> Series:
    """Set u = 1: fold every Laurent u-cell onto du = 0."""
    out = {}
    for (dz, dx, dv, du), p in a.cells.items():
        nk = (dz, dx, dv, 0)
        cur = out.get(nk)
        out[nk] = list(p) if cur is None else yp_add(cur, p)
    return Series(a.trunc, a.field, {k: p for k, p in out.items() if yp_trim(p)})


def ps_diff_u1(a: Series) -> Series:
    """(u d/du) then u = 1: each cell scaled by its u-exponent, folded
    onto du = 0.  With the usual log-derivative reading this is the
    first moment extractor for the u-marked statistic."""
    out = {}
    for (dz, dx, dv, du), p in a.cells.items():
        if du == 0:
            continue
        nk = (dz, dx, dv, 0)
        q = yp_scale(p, du)
        cur = out.get(nk)
        out[nk] = q if cur is None else yp_add(cur, q)
    return Series(a.trunc, a.field, {k: p for k, p in out.items() if yp_trim(p)})


# ----------------------------------------------------------- JSON dump

def ps_to_json(a: Series) -> dict:
    t = a.trunc
    names = ["z", "x", "y"]
    if t.nv:
        names.append("v")
    if t.u_range:
        names.append("u")
    entries = []
    for key in sorted(a.cells):
        dz, dx, dv, du = key
        e = {"z": dz, "x": dx}
        if t.nv:
            e["v"] = dv
        if t.u_range:
            e["u"] = du
        e["ypoly"] = [render_scalar(c) for c in a.cells[key]]
        entries.append(e)
    return {
        "vars": names,
        "truncation": {
            "nz": t.nz,
            "nx": t.nx,
            "ny": t.ny,
            "nv": t.nv,
            "u_range": t.u_range,
        },
        "field": a.field,
        "entries": entries,
    }


# ---------------------------------------------------- fixed-point bases

def solve_fixed_point(eq_id: str, trunc: Truncation, field: str = "rational") -> Series:
    """Solve one of the registered algebraic fixed-point equations by
    plain iteration (nz+1 passes reach the truncation order; each pass
    is checked nowhere -- the final residual is asserted instead).

    * "catalan":   C = 1 + z C^2
    * "ternary":   T = 1 + z T^3
    * "schroeder": St = z + St^2/(1-St), returned divided by z
    * "narayana":  N = 1/(1 - z N) - 1 + v   (bivariate in v, z)
    """
    if eq_id == "catalan":
        s = ps_one(trunc, field)
        z = ps_monomial(trunc, (1, 0, 0, 0), [1], field)
        for _ in range(trunc.nz + 1):
            s = ps_add(ps_one(trunc, field), ps_mul(z, ps_mul(s, s)))
        assert ps_is_zero(ps_sub(s, ps_add(ps_one(trunc, field), ps_mul(z, ps_mul(s, s)))))
        return s
    if eq_id == "ternary":
        s = ps_one(trunc, field)
        z = ps_monomial(trunc, (1, 0, 0, 0), [1], field)
        for _ in range(trunc.nz + 1):
            s = ps_add(ps_one(trunc, field), ps_mul(z, ps_mul(s, ps_mul(s, s))))
        assert ps_is_zero(
            ps_sub(s, ps_add(ps_one(trunc, field), ps_mul(z, ps_mul(s, ps_mul(s, s)))))
        )
        return s
    if eq_id == "schroeder":
        # solve for St(z) = z*S(z) one order higher, then divide by z
        t1 = Truncation(trunc.nz + 1, trunc.nx, trunc.ny, trunc.nv, trunc.u_range)
        z = ps_monomial(t1, (1, 0, 0, 0), [1], field)
        st = ps_zero(t1, field)
        for _ in range(t1.nz + 1):
            st = ps_add(z, ps_mul(ps_mul(st, st), ps_inv(ps_sub(ps_one(t1, field), st))))
        assert ps_is_zero(
            ps_sub(
                st,
                ps_add(z, ps_mul(ps_mul(st, st), ps_inv(ps_sub(ps_one(t1, field), st)))),
            )
        )
        return ps_retrunc(ps_shift(st, -1), trunc)
    if eq_id == "narayana":
        if trunc.nv < 1:
            raise ValueError("narayana needs a truncation with nv >= 1")
        v = ps_monomial(trunc, (0, 0, 1, 0), [1], field)
        z = ps_monomial(trunc, (1, 0, 0, 0), [1], field)
        one = ps_one(trunc, field)
        s = v
        for _ in range(trunc.nz + 1):
            s = ps_add(ps_sub(ps_inv(ps_sub(one, ps_mul(z, s))), one), v)
        assert ps_is_zero(
            ps_sub(s, ps_add(ps_sub(ps_inv(ps_sub(one, ps_mul(z, s))), one), v))
        )
        return s
    raise ValueError("no fixed-point equation registered under %r" % (eq_id,))
