"""Closed-form counts, exact averages, and limit laws.

Everything here is exact (ints, Fractions, or a + b*sqrt(2) pairs)
except the explicitly-named asymptotic helpers, which return floats.

Most totals are implemented in every printed shape (a min-kernel
convolution, a partial-sum form, a subtracted form, a binomial form);
the public function computes all of them and insists they agree, so a
formula typo cannot slip through silently.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import (
    Quad2,
    RHO,
    RHO_INV,
    yp_add,
    yp_deriv1,
    yp_eval1,
    yp_inv,
    yp_mul,
    yp_scale,
    yp_shift_down,
)
from .series import (
    Series,
    Truncation,
    ps_add,
    ps_coeff,
    ps_diff_y1,
    ps_eval_y1,
    ps_inv,
    ps_mul,
    ps_mul_ypoly,
    ps_one,
    ps_retrunc,
    ps_scale,
    ps_shift,
    ps_sqrt,
    ps_sub,
)

# --------------------------------------------------------------- sequences

def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def narayana_number(n: int, k: int) -> int:
    """Plane trees of size n with k leaves."""
    if n == 0:
        return 1 if k == 1 else 0
    if not 1 <= k <= n:
        return 0
    return math.comb(n, k) * math.comb(n, k - 1) // n


_SCHROEDER = [1, 1]


def little_schroeder(n: int) -> int:
    """1, 1, 3, 11, 45, ...: series-parallel counts (s_n)."""
    while len(_SCHROEDER) <= n:
        m = len(_SCHROEDER)
        val = (3 * (2 * m - 1) * _SCHROEDER[m - 1] - (m - 2) * _SCHROEDER[m - 2]) // (m + 1)
        _SCHROEDER.append(val)
    return _SCHROEDER[n]


def ternary_count(n: int) -> int:
    """t_n = (3n choose n)/(2n+1): noncrossing chord trees on n chords."""
    return math.comb(3 * n, n) // (2 * n + 1)


def ternary_edge(n: int) -> int:
    """t'_n = (3n+1 choose n)/(n+1): the convolution square of t."""
    return math.comb(3 * n + 1, n) // (n + 1)


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


SEQUENCES = {
    "catalan": catalan_number,
    "little-schroeder": little_schroeder,
    "noncrossing-t": ternary_count,
    "noncrossing-t-prime": ternary_edge,
}

AVG_IDS = {
    "binary-leaf": ("binary", "leaf-depth"),
    "binary-abscissa": ("binary", "leaf-abscissa"),
    "dyck-vertex": ("dyck", "vertex-height"),
    "dyck-upstep": ("dyck", "upstep-height"),
    "dyck-downstep": ("dyck", "downstep-height"),
    "schroeder-leaf": ("schroeder", "leaf-depth"),
    "noncrossing-node": ("noncrossing", "node-depth"),
    "increasing-leaf": ("increasing", "leaf-depth"),
    "increasing-internal": ("increasing", "internal-depth"),
}


def _as_int(x) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise AssertionError("expected an integer, got %s" % x)
        return x.numerator
    return x


def _check_formula(formula_id):
    if formula_id not in AVG_IDS:
        raise ValueError("unknown average id %r" % (formula_id,))


# ------------------------------------------------------------ exact totals

def _total_binary_leaf(n, r):
    c = catalan_number
    mins = sum(
        c(i) * c(n - i) * min(r + 1, n + 1 - r, i + 1, n + 1 - i)
        for i in range(1, n + 1)
    )
    rr = min(r, n - r)  # the partial-sum form wants the small side
    partial = (
        c(n + 1) - c(n)
        + 2 * sum(i * c(i) * c(n - i) for i in range(rr))
        + rr * sum(c(i) * c(n - i) for i in range(rr, n - rr + 1))
    )
    subtracted = (
        (r + 1) * c(n + 1) - c(n)
        - 2 * sum((r - i) * c(i) * c(n - i) for i in range(r))
    )
    binom = -c(n) + _as_int(
        Fraction(2 * (2 * r + 1) * (2 * (n - r) + 1), (n + 1) * (n + 2))
        * math.comb(2 * r, r)
        * math.comb(2 * (n - r), n - r)
    )
    assert mins == partial == subtracted == binom
    return mins


def _total_dyck_vertex(n, r):
    c = catalan_number
    mins = sum(
        c(i) * c(n - i - 1) * min(r, 2 * n - r, 2 * i + 1, 2 * n - 2 * i - 1)
        for i in range(n)
    )
    rr = min(r, 2 * n - r)
    h = rr // 2
    partial = 2 * sum((2 * i + 1) * c(i) * c(n - i - 1) for i in range(h)) + rr * sum(
        c(i) * c(n - i - 1) for i in range(h, n - h)
    )
    h = r // 2
    subtracted = r * c(n) - 2 * sum(
        (r - 2 * i - 1) * c(i) * c(n - i - 1) for i in range(h)
    )
    if n == 0:
        assert mins == partial == subtracted == 0
        return 0
    delta = n if r % 2 == 0 else 2 * n + 1
    binom = -c(n) + _as_int(
        Fraction(delta + r * (2 * n - r), n * (n + 1))
        * math.comb(r, r // 2)
        * math.comb(2 * n - r, n - r // 2)
    )
    assert mins == partial == subtracted == binom
    return mins


def _total_dyck_upstep(n, r):
    c = catalan_number
    primary = 2 * r * c(n) - sum((r - i) * c(i) * c(n - i) for i in range(r))
    binom = _as_int(
        2 * r * c(n)
        - Fraction(r + 1, 2) * c(n + 1)
        + Fraction((2 * r + 1) * (2 * (n - r) + 1), (n + 1) * (n + 2))
        * math.comb(2 * r, r)
        * math.comb(2 * (n - r), n - r)
    )
    assert primary == binom
    # height sums of up-steps and leaves are tied together linearly
    assert 2 * primary - _total_binary_leaf(n, r) == (4 * r + 1) * c(n) - (r + 1) * c(n + 1)
    return primary


def _total_schroeder_leaf(m, r):
    s = little_schroeder
    total = (
        (r + 1) * (s(m + 1) + s(m)) // 2
        - s(m)
        - 2 * sum((r - i) * s(i) * s(m - i) for i in range(r))
    )
    return total


def _total_noncrossing_node(n, r):
    tp = ternary_edge
    if r == 0:
        return 0  # the root contributes depth zero
    mins = sum(
        tp(i) * tp(n - 1 - i) * min(r, n + 1 - r, i + 1, n - i) for i in range(n)
    )
    rr = min(r, n + 1 - r)  # columns r and n+1-r agree (r >= 1)
    partial = 2 * sum(i * tp(i - 1) * tp(n - i) for i in range(1, rr)) + rr * sum(
        tp(i - 1) * tp(n - i) for i in range(rr, n - rr + 2)
    )
    small = rr * (tp(n) - ternary_count(n)) - 2 * sum(
        (rr - i) * tp(i - 1) * tp(n - i) for i in range(1, rr)
    )
    assert mins == partial == small
    return mins


def plane_leaf_total(n, k, r):
    """Summed depth of leaf r over plane trees of size n with k leaves."""
    if not (1 <= k <= max(n, 1) and 0 <= r < k):
        raise ValueError("no plane trees with n=%d, k=%d, r=%d" % (n, k, r))
    nn = narayana_number
    return narayana_number(n, k) + sum(
        nn(j, i) * nn(n - j, k + 1 - i) * min(r + 1, k - r, i, k + 1 - i)
        for j in range(1, n)
        for i in range(1, k + 1)
    )


def exact_total(formula_id: str, n: int, r: int):
    """Statistic summed over the whole family at size n, position r.

    For "schroeder-leaf" n is the number of leaves (size n means n-1 in
    the z-grading, matching the enumerator); elsewhere n is the usual
    size.  Abscissa totals may be negative."""
    _check_formula(formula_id)
    _check_range(formula_id, n, r)

    if formula_id == "binary-leaf":
        return _total_binary_leaf(n, r)
    if formula_id == "binary-abscissa":
        return _as_int(Fraction(3 * catalan_number(n) * (2 * r - n), n + 2))
    if formula_id == "dyck-vertex":
        return _total_dyck_vertex(n, r)
    if formula_id == "dyck-upstep":
        return _total_dyck_upstep(n, r)
    if formula_id == "dyck-downstep":
        return _total_dyck_upstep(n, n + 1 - r)
    if formula_id == "schroeder-leaf":
        return _total_schroeder_leaf(n - 1, r)
    if formula_id == "noncrossing-node":
        return _total_noncrossing_node(n, r)
    if formula_id == "increasing-leaf":
        return _as_int(math.factorial(n) * (harmonic(r) + harmonic(n - r)))
    if formula_id == "increasing-internal":
        return _as_int(
            math.factorial(n) * (harmonic(r + 1) + harmonic(n - r) - 2)
        )
    raise AssertionError  # pragma: no cover


def family_count(formula_id: str, n: int) -> int:
    if formula_id in ("binary-leaf", "binary-abscissa", "dyck-vertex",
                      "dyck-upstep", "dyck-downstep"):
        return catalan_number(n)
    if formula_id == "schroeder-leaf":
        return little_schroeder(n - 1)
    if formula_id == "noncrossing-node":
        return ternary_count(n)
    if formula_id in ("increasing-leaf", "increasing-internal"):
        return math.factorial(n)
    raise ValueError("unknown average id %r" % (formula_id,))


def _check_range(formula_id, n, r):
    ok = True
    if formula_id in ("binary-leaf", "binary-abscissa", "increasing-leaf"):
        ok = 0 <= r <= n
    elif formula_id == "dyck-vertex":
        ok = 0 <= r <= 2 * n
    elif formula_id in ("dyck-upstep", "dyck-downstep"):
        ok = 1 <= r <= n
    elif formula_id == "schroeder-leaf":
        ok = n >= 1 and 0 <= r <= n - 1
    elif formula_id == "noncrossing-node":
        ok = 0 <= r <= n
    elif formula_id == "increasing-internal":
        ok = 0 <= r <= n - 1
    if not ok:
        raise ValueError(
            "position r=%d out of range for %s at n=%d" % (r, formula_id, n)
        )


def exact_average(formula_id: str, n: int, r: int) -> Fraction:
    """Average of the statistic at position r, size n, as a Fraction."""
    _check_formula(formula_id)
    if formula_id == "increasing-leaf":
        _check_range(formula_id, n, r)
        return harmonic(r) + harmonic(n - r)
    if formula_id == "increasing-internal":
        _check_range(formula_id, n, r)
        return harmonic(r + 1) + harmonic(n - r) - 2
    total = exact_total(formula_id, n, r)
    avg = Fraction(total, family_count(formula_id, n))
    if formula_id == "binary-leaf":
        direct = (
            Fraction(2 * (2 * r + 1) * (2 * (n - r) + 1), n + 2)
            * math.comb(2 * r, r)
            * math.comb(2 * (n - r), n - r)
            / math.comb(2 * n, n)
            - 1
        )
        assert avg == direct
        if r == 0:
            assert avg == Fraction(3 * n, n + 2)
    elif formula_id == "dyck-vertex" and n > 0:
        delta = n if r % 2 == 0 else 2 * n + 1
        direct = (
            Fraction(delta + r * (2 * n - r), n)
            * math.comb(r, r // 2)
            * math.comb(2 * n - r, n - r // 2)
            / math.comb(2 * n, n)
            - 1
        )
        assert avg == direct
    elif formula_id == "dyck-upstep":
        direct = (
            Fraction((2 * r + 1) * (2 * (n - r) + 1), n + 2)
            * math.comb(2 * r, r)
            * math.comb(2 * (n - r), n - r)
            / math.comb(2 * n, n)
            + Fraction(3 * (r + 1), n + 2)
            - 2
        )
        assert avg == direct
        if r == n:
            assert avg == Fraction(3 * n, n + 2)
    elif formula_id == "schroeder-leaf":
        m = n - 1
        s = little_schroeder
        direct = (
            Fraction((r + 1) * s(m + 1), 2 * s(m))
            + Fraction(r - 1, 2)
            - Fraction(2, s(m)) * sum((r - i) * s(i) * s(m - i) for i in range(r))
        )
        assert avg == direct
    return avg


def plane_leaf_average(n, k, r) -> Fraction:
    return Fraction(plane_leaf_total(n, k, r), narayana_number(n, k))


# --------------------------------------------------------- uniform averages

def uniform_average(formula_id: str, n: int) -> Fraction:
    """Average over a uniformly random position AND object."""
    c = catalan_number(n)
    if formula_id == "binary-leaf":
        return Fraction(4**n, math.comb(2 * n, n)) - 1
    if formula_id == "dyck-area":
        # summed vertex heights = walk area
        return Fraction(4**n - math.comb(2 * n + 2, n + 1) // 2, c)
    if formula_id == "dyck-upstep":
        if n == 0:
            raise ValueError("the empty walk has no up-steps")
        return Fraction(4**n - math.comb(2 * n, n), 2 * n * c)
    if formula_id == "noncrossing-node":
        if n == 0:
            return Fraction(0)
        tot = sum(
            (i + 1) * (n - i) * ternary_edge(i) * ternary_edge(n - 1 - i)
            for i in range(n)
        )
        return Fraction(tot, n * ternary_count(n))
    if formula_id == "increasing-leaf":
        return 2 * harmonic(n) - Fraction(2 * n, n + 1)
    raise ValueError("no uniform average for %r" % (formula_id,))


# -------------------------------------------------------- fixed-r limits

def fixed_r_limit_average(formula_id: str, r: int):
    """Limit of the position-r average as the size grows, r held fixed.
    Exact: a Fraction, or a + b*sqrt(2) for the Schroeder family."""
    _check_formula(formula_id)
    if formula_id in ("increasing-leaf", "increasing-internal"):
        raise ValueError("increasing-tree depths grow with n: no finite fixed-r limit")
    if formula_id == "binary-abscissa":
        return Fraction(-3)  # (6r-3n)/(n+2) -> -3 for fixed r
    if r < 0:
        raise ValueError("r must be nonnegative")

    if formula_id == "binary-leaf":
        return Fraction(4 * (2 * r + 1) * math.comb(2 * r, r), 4**r) - 1
    if formula_id == "dyck-vertex":
        if r % 2 == 0:
            return Fraction(2 * r + 1, 2**r) * math.comb(r, r // 2) - 1
        return Fraction(2 * r + 2, 2**r) * math.comb(r, (r - 1) // 2) - 1
    if formula_id == "dyck-upstep":
        if r == 0:
            raise ValueError("walks have no 0th up-step")
        return Fraction(4 * r + 2, 4**r) * math.comb(2 * r, r) - 2
    if formula_id == "dyck-downstep":
        if r == 0:
            raise ValueError("walks have no 0th down-step")
        s = r - 1
        return Fraction(4 * s + 2, 4**s) * math.comb(2 * s, s) + 1
    if formula_id == "schroeder-leaf":
        sch = little_schroeder
        form1 = Quad2(2, 1) * (r + 1) - 1 - 2 * sum(
            RHO**i * ((r - i) * sch(i)) for i in range(r)
        )
        form2 = (
            RHO ** (r - 1) * Fraction(math.comb(r + 2, 2), 2) * sch(r + 1)
            - RHO**r * math.comb(r + 1, 2) * sch(r)
            - Fraction(1, 2)
        )
        if r >= 1:
            form2 = form2 + RHO ** (r + 1) * Fraction(math.comb(r, 2), 2) * sch(r - 1)
        assert form1 == form2
        return form1
    if formula_id == "noncrossing-node":
        return Fraction(2 * r) - 6 * sum(
            (r - i) * ternary_edge(i - 1) * Fraction(4, 27) ** i for i in range(1, r)
        )
    raise AssertionError  # pragma: no cover


# ------------------------------------------------- limit distribution GFs

def _limit_law_data(formula_id, nx, ny):
    """(N, D, power) with the limit law N/D^power: series in x (stored
    on the z axis), polynomial cells in y."""
    ny = max(ny, 6)  # never clip the finite y-degree of N or D
    t = Truncation(nx, 0, ny)
    one = ps_one(t)
    x = Series(t, cells={(1, 0, 0, 0): [1]})

    if formula_id == "binary-leaf":
        root = ps_sqrt(ps_sub(one, x))
        n = Series(t, cells={(0, 0, 0, 0): [0, 1]})
        d = ps_add(ps_mul_ypoly(one, [2, -2]), ps_mul_ypoly(root, [0, 1]))
        return n, d, 2

    if formula_id == "dyck-vertex":
        root = ps_sqrt(ps_sub(one, ps_mul(x, x)))
        n = Series(t, cells={(0, 0, 0, 0): [2]})
        d = ps_add(
            ps_sub(ps_mul_ypoly(one, [1, 0, 1]), ps_mul_ypoly(x, [0, 2])),
            ps_mul_ypoly(root, [1, 0, -1]),
        )
        return n, d, 1

    if formula_id == "dyck-upstep":
        root = ps_sqrt(ps_sub(one, x))
        n = Series(t, cells={(1, 0, 0, 0): [0, 4, -4], (2, 0, 0, 0): [0, 0, 0, 1]})
        d = ps_add(
            ps_mul_ypoly(ps_add(one, root), [2, -2]),
            Series(t, cells={(1, 0, 0, 0): [0, -3, 4], (2, 0, 0, 0): [0, 0, 0, -1]}),
        )
        return n, d, 1

    if formula_id == "dyck-downstep":
        root = ps_sqrt(ps_sub(one, x))
        n = Series(t, cells={(1, 0, 0, 0): [0, 1]})
        d = ps_add(
            ps_mul_ypoly(ps_add(one, root), [2, -2]),
            Series(t, cells={(0, 0, 0, 0): [0, 0, 1], (1, 0, 0, 0): [-1]}),
        )
        return n, d, 1

    if formula_id == "schroeder-leaf":
        tq = Truncation(nx, 0, ny)
        oneq = ps_one(tq, "quad2")
        kernel = Series(
            tq,
            "quad2",
            {
                (0, 0, 0, 0): [1],
                (1, 0, 0, 0): [Quad2(-18, 12)],
                (2, 0, 0, 0): [Quad2(17, -12)],
            },
        )
        root = ps_sqrt(kernel)  # sqrt((1-x)(1-rho^2 x))
        n = Series(tq, "quad2", {(0, 0, 0, 0): [0, 8]})
        d = ps_add(
            ps_add(
                ps_mul_ypoly(oneq, [Quad2(9, 6), Quad2(-4, -12), Quad2(13, 6)]),
                Series(tq, "quad2", {(1, 0, 0, 0): [-1, -2, -5]}),
            ),
            ps_mul_ypoly(root, [RHO_INV, RHO_INV * 2, RHO_INV * (-3)]),
        )
        return n, d, 1

    raise ValueError("no rational limit law stored for %r" % (formula_id,))


def _noncrossing_limit_pieces(nx):
    """x-coefficient lists (ypolys) of N and D for the noncrossing law
    N/D^2, with T always evaluated at (4/27)x."""

    def tp(i):
        return ternary_edge(i) * Fraction(4, 27) ** i

    def tc(i):
        return ternary_count(i) * Fraction(4, 27) ** i

    third = Fraction(1, 9)
    # numerator pieces: quadratic in T((4/27)x), coefficients polynomial
    # in x and y; each p2 entry still carries a y(1-y) factor
    p2 = {
        2: yp_scale([0, 0, 12, -5, 1], third),
        3: yp_scale([16, -44, 36, -27, 3], third),
        4: yp_scale([0, 0, 0, 4, 4], third),
    }
    p2 = {a: yp_mul(p, [0, 1, -1]) for a, p in p2.items()}
    p1_core = yp_mul(yp_mul([0, 0, 1], yp_mul([1, -1], [1, -1])), [2, -1])
    p1 = {2: yp_mul(p1_core, [4, -1]), 3: yp_mul(p1_core, [-2, -1])}
    p0 = {
        1: [0, 0, 0, 0, 0, 1],
        2: yp_mul([0, 0, 1], [-8, 18, -12, 0, -1]),
        3: yp_mul([0, 0, 1], [0, 8, -18, 13]),
        4: [0, 0, 0, 0, 0, 0, -1],
    }
    n_coeffs = []
    for m in range(nx + 1):
        acc = []
        for a, p in p2.items():
            if 0 <= m - a:
                acc = yp_add(acc, yp_scale(p, tp(m - a)))
        for a, p in p1.items():
            if 0 <= m - a:
                acc = yp_add(acc, yp_scale(p, tc(m - a)))
        if m in p0:
            acc = yp_add(acc, list(p0[m]))
        n_coeffs.append(acc)

    d_coeffs = [
        [0, 0, Fraction(3, 2), Fraction(-1, 2)],
        [-2, 6, Fraction(-15, 2), Fraction(3, 2)],
        [0, 0, 0, 1],
    ]
    return n_coeffs, d_coeffs


def _noncrossing_limit_columns(rmax, dmax):
    """Probability columns of the noncrossing limit law, r = 0..rmax.

    Column m comes out of dividing by the x-constant of D^2, which is
    y^4 times a unit -- so each x step costs four y orders of accuracy
    and the working cap has to grow with rmax."""
    ny = dmax + 4 * (rmax + 1)
    n_coeffs, d_coeffs = _noncrossing_limit_pieces(rmax)
    e = [[] for _ in range(5)]
    for i, di in enumerate(d_coeffs):
        for j, dj in enumerate(d_coeffs):
            e[i + j] = yp_add(e[i + j], yp_mul(di, dj, ny))
    lead = yp_inv([Fraction(9, 4), Fraction(-3, 2), Fraction(1, 4)], ny)
    cols = []
    for m in range(rmax + 1):
        acc = list(n_coeffs[m])
        for j in range(1, 5):
            if m - j >= 0:
                acc = yp_add(acc, yp_scale(yp_mul(e[j], cols[m - j], ny), -1))
        acc = yp_shift_down(acc, 4)
        cols.append(yp_mul(acc, lead, ny))
    return [p[: dmax + 1] for p in cols]


def limit_distribution(formula_id: str, r: int, dmax: int, variant: str = "auto"):
    """Fixed-r limit law of the statistic: [(d, probability)] pairs up
    to dmax, exact.

    variant applies to "schroeder-leaf" only: "auto" uses the printed
    negative-binomial law for r = 0 and the bivariate form otherwise;
    "verbatim" always expands the bivariate form (whose columns are
    known not to normalize -- see the WARN in the verification suite);
    "r0-law" is the r = 0 law itself.
    """
    _check_formula(formula_id)
    if formula_id in ("increasing-leaf", "increasing-internal"):
        raise ValueError("increasing-tree depths grow with n: no fixed-r limit law")
    if formula_id == "binary-abscissa":
        raise ValueError("no discrete limit law: the abscissa drifts to -3")
    if variant != "auto" and formula_id != "schroeder-leaf":
        raise ValueError("variants exist only for schroeder-leaf")
    if r < 0 or dmax < 0:
        raise ValueError("r and dmax must be nonnegative")

    if formula_id == "schroeder-leaf":
        if variant == "auto":
            variant = "r0-law" if r == 0 else "verbatim"
        if variant == "r0-law":
            if r != 0:
                raise ValueError("the r0 law is the r = 0 column only")
            tau = Quad2(-1, 1)  # sqrt(2) - 1
            out = []
            for d in range(1, dmax + 1):
                out.append((d, RHO * (2 * d) * tau ** (d - 1)))
            return out
        n, d, power = _limit_law_data("schroeder-leaf", r, dmax)
        return _column(n, d, power, r, dmax)

    if formula_id == "noncrossing-node":
        if r == 0:
            return [(0, Fraction(1))]
        col = _noncrossing_limit_columns(r, dmax)[r]
        return [(d, p) for d, p in enumerate(col) if p]

    if formula_id in ("dyck-upstep", "dyck-downstep") and r == 0:
        raise ValueError("walks have no 0th step")

    n, d, power = _limit_law_data(formula_id, r, dmax)
    return _column(n, d, power, r, dmax)


def _column(n, d, power, r, dmax):
    f = ps_mul(n, _ps_pow(ps_inv(d, y_unit=True), power))
    col = ps_coeff(f, r, 0)
    return [(deg, p) for deg, p in enumerate(col[: dmax + 1]) if p]


def _ps_pow(s, k):
    out = s
    for _ in range(k - 1):
        out = ps_mul(out, s)
    return out


def limit_mean_series(formula_id: str, rmax: int) -> Series:
    """Exact series in x whose x^r coefficient is the mean of the
    fixed-r limit law (the y-derivative at 1, column by column)."""
    _check_formula(formula_id)
    if formula_id in ("increasing-leaf", "increasing-internal"):
        raise ValueError("increasing-tree depths grow with n: no fixed-r limit law")
    if formula_id == "binary-abscissa":
        raise ValueError("no discrete limit law: the abscissa drifts to -3")
    if formula_id == "noncrossing-node":
        n_coeffs, d_coeffs = _noncrossing_limit_pieces(rmax)
        t = Truncation(rmax, 0, 0)
        n1 = Series(t, cells={})
        dn1 = Series(t, cells={})
        d1 = Series(t, cells={})
        dd1 = Series(t, cells={})
        for m in range(rmax + 1):
            for target, val in (
                (n1, yp_eval1(n_coeffs[m])),
                (dn1, yp_deriv1(n_coeffs[m])),
                (d1, yp_eval1(d_coeffs[m]) if m < 3 else 0),
                (dd1, yp_deriv1(d_coeffs[m]) if m < 3 else 0),
            ):
                if val:
                    target.cells[(m, 0, 0, 0)] = [val]
        inv = ps_inv(d1)
        inv3 = ps_mul(inv, ps_mul(inv, inv))
        return ps_mul(ps_sub(ps_mul(dn1, d1), ps_scale(ps_mul(n1, dd1), 2)), inv3)

    # the up-step denominator vanishes at x = 0 once y = 1 (no 0th
    # up-step), so work two orders deep and cancel the common x^2
    pad = 2 if formula_id == "dyck-upstep" else 0
    n, d, power = _limit_law_data(formula_id, rmax + pad, 6)
    n1, dn1 = ps_eval_y1(n), ps_diff_y1(n)
    d1, dd1 = ps_eval_y1(d), ps_diff_y1(d)
    numer = ps_sub(ps_mul(dn1, d1), ps_scale(ps_mul(n1, dd1), power))
    denom = _ps_pow(d1, power + 1)
    if pad:
        numer = ps_shift(numer, -pad)
        denom = ps_shift(denom, -pad)
    mean = ps_mul(numer, ps_inv(denom))
    return ps_retrunc(mean, Truncation(rmax, 0, 0))


# ----------------------------------------------------------- asymptotics

def asymptotic_average(formula_id: str, n: int, r: int) -> float:
    """Growing-r regime: the average for r ~ alpha * n, as a float."""
    _check_formula(formula_id)
    _check_range(formula_id, n, r)
    pi = math.pi
    if formula_id == "binary-leaf":
        return 8 / math.sqrt(pi) * math.sqrt(r * (1 - r / n))
    if formula_id == "binary-abscissa":
        return float(Fraction(6 * r - 3 * n, n + 2))
    if formula_id == "dyck-vertex":
        return 2 / math.sqrt(pi) * math.sqrt(r * (2 - r / n))
    if formula_id in ("dyck-upstep", "dyck-downstep"):
        return 4 / math.sqrt(pi) * math.sqrt(r * (1 - r / n))
    if formula_id == "schroeder-leaf":
        m = n - 1
        rho = float(RHO)
        coef = math.sqrt(1 - rho * rho) / (rho * math.sqrt(pi))
        return coef * math.sqrt(r * (1 - r / m))
    if formula_id == "noncrossing-node":
        return 8 / math.sqrt(3 * pi) * math.sqrt(r * (1 - r / n))
    # increasing trees: logarithmic growth
    alpha = r / n
    if not 0 < alpha < 1:
        raise ValueError("the log-regime form needs 0 < r < n")
    return 2 * math.log(n) + math.log(alpha) + math.log(1 - alpha)
