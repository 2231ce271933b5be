"""Symbolic phase-space distillation engine.

Evaluates the fiber-sum map exactly for any stabilizer code from `codes`:
takes a parameterized single-qudit Wigner grid, pushes d**(n-1) fiber points
per logical phase-space point through the code's symplectic data, and returns
the output grid, success probability and noise map as exact polynomials and
rational functions.

The fiber enumeration is collapsed to pattern counting: every fiber point
contributes a product of grid-cell polynomials, and only the multiset of
cell classes matters, so the d**(n-1) x n polynomial products reduce to a
handful of multinomial-weighted ones.  The counting itself is done by the
kernel backend (compiled when available).
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._kernels import pattern_counts
from .codes import StabilizerCode, golay_qutrit_code
from .exactpoly import Poly, RationalFunction, isolate_fixed_point, series_truncate
from .fields import symplectic_product

VAR_DELTA = ("delta",)
VARS_NORELL = ("eps0", "epsS")


class ShapeFitError(ValueError):
    """Output grid does not have the symmetry of the requested noise family.

    Carries the offending grid so callers can inspect what the code produced.
    """

    def __init__(self, message: str, grid):
        super().__init__(message)
        self.grid = grid


@dataclass(frozen=True)
class SymbolicWigner:
    """d x d grid of exact polynomials representing a parameterized
    single-qudit Wigner function, indexed grid[u][v]."""

    d: int
    grid: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if len(self.grid) != self.d or any(len(r) != self.d for r in self.grid):
            raise ValueError("grid must be d x d")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.grid[0][0].vars

    def total(self) -> Poly:
        acc = Poly(self.vars)
        for row in self.grid:
            for cell in row:
                acc = acc + cell
        return acc


def input_wigner_strange() -> SymbolicWigner:
    """Wigner grid of the depolarized strange state, one parameter delta:
    -1/3 + (4/9) delta at the origin, 1/6 - delta/18 elsewhere."""
    origin = Poly.univariate("delta", [Fraction(-1, 3), Fraction(4, 9)])
    other = Poly.univariate("delta", [Fraction(1, 6), Fraction(-1, 18)])
    rows = tuple(
        tuple(origin if (u, v) == (0, 0) else other for v in range(3))
        for u in range(3)
    )
    return SymbolicWigner(3, rows)


def input_wigner_norell() -> SymbolicWigner:
    """Wigner grid of the twirled Norell family in (eps0, epsS):
    (1/3)(1-2 epsS) at the origin, (1/6)(3 eps0 + 2 epsS - 1) on the rest of
    the u = 0 line, (1 - eps0)/6 off it."""
    origin = Poly(VARS_NORELL, {(0, 0): Fraction(1, 3), (0, 1): Fraction(-2, 3)})
    mid = Poly(VARS_NORELL, {(0, 0): Fraction(-1, 6), (1, 0): Fraction(1, 2), (0, 1): Fraction(1, 3)})
    rest = Poly(VARS_NORELL, {(0, 0): Fraction(1, 6), (1, 0): Fraction(-1, 6)})
    rows = []
    for u in range(3):
        row = []
        for v in range(3):
            if u == 0:
                row.append(origin if v == 0 else mid)
            else:
                row.append(rest)
        rows.append(tuple(row))
    return SymbolicWigner(3, tuple(rows))


def wigner_from_values(values, d: int = 3) -> SymbolicWigner:
    """Constant (parameter-free) grid from exact rationals or floats;
    floats are converted to their exact binary values."""
    rows = []
    for u in range(d):
        row = []
        for v in range(d):
            x = values[u][v]
            c = Fraction(x) if not isinstance(x, Fraction) else x
            row.append(Poly.constant(c))
        rows.append(tuple(row))
    return SymbolicWigner(d, tuple(rows))


@dataclass(frozen=True)
class DistillationResult:
    """Unnormalized output grid, success-probability polynomial, and the
    fitted noise map (one rational function for the strange family, a pair
    for the Norell family, None for a raw grid)."""

    w_out: SymbolicWigner
    success: Poly
    noise_map: RationalFunction | tuple[RationalFunction, RationalFunction] | None

    def normalized_entry(self, u: int, v: int) -> RationalFunction:
        return RationalFunction(self.w_out.grid[u][v], self.success)


def _pattern_to_poly(args):
    patterns, class_polys, n = args
    max_pow = [0] * len(class_polys)
    for pat in patterns:
        for c, k in enumerate(pat):
            max_pow[c] = max(max_pow[c], k)
    powers = [[Poly.constant(1, class_polys[0].vars)] for _ in class_polys]
    for c, p in enumerate(class_polys):
        for _ in range(max_pow[c]):
            powers[c].append(powers[c][-1] * p)
    acc = Poly(class_polys[0].vars)
    for pat, count in sorted(patterns.items()):
        term = Poly.constant(count, class_polys[0].vars)
        for c, k in enumerate(pat):
            if k:
                term = term * powers[c][k]
        acc = acc + term
    return acc


def distill(code: StabilizerCode, w_in: SymbolicWigner, fit: str = "auto",
            workers: int = 1) -> DistillationResult:
    """Run the exact phase-space distillation map.

    fit: 'strange', 'norell', 'raw', or 'auto' (inferred from the input
    grid's variables).  Shape fitting raises ShapeFitError when the output
    grid lacks the required symmetry.

    The result is deterministic and independent of `workers`.
    """
    if code.d != w_in.d:
        raise ValueError("code and input grid have different qudit dimension")
    d, n = code.d, code.n
    if fit == "auto":
        fit = {VAR_DELTA: "strange", VARS_NORELL: "norell"}.get(w_in.vars, "raw")

    mat = code.matrix.array().reshape(code.num_generators, 2 * n)
    amat = mat[:, :n].T.copy()   # (n, m): z-coordinate coefficients
    bmat = mat[:, n:].T.copy()
    az, bz = np.array(code.logical_z.u), np.array(code.logical_z.v)
    ax, bx = np.array(code.logical_x.u), np.array(code.logical_x.v)

    # distinct cell polynomials -> class ids; phased codes shift each qudit's
    # cell lookup by the phase offset t
    t = code.phase_offset()
    class_polys: list[Poly] = []
    base_class = np.empty((d, d), dtype=np.int64)
    for u in range(d):
        for v in range(d):
            cell = w_in.grid[u][v]
            for cid, p in enumerate(class_polys):
                if p == cell:
                    base_class[u, v] = cid
                    break
            else:
                base_class[u, v] = len(class_polys)
                class_polys.append(cell)
    tables = np.empty((n, d, d), dtype=np.int64)
    for q in range(n):
        for z in range(d):
            for x in range(d):
                tables[q, z, x] = base_class[(z + t.u[q]) % d, (x + t.v[q]) % d]

    counts = pattern_counts(amat, bmat, az, bz, ax, bx, tables, len(class_polys), d)

    jobs = [(counts[(zl, xl)], class_polys, n) for zl in range(d) for xl in range(d)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            polys = list(pool.map(_pattern_to_poly, jobs))
    else:
        polys = [_pattern_to_poly(j) for j in jobs]
    raw = {(zl, xl): polys[zl * d + xl] for zl in range(d) for xl in range(d)}

    # decode orientation: grid point (u,v) reads the fiber labeled
    # (zL, xL) = (alpha - v, -u - beta), where (alpha, beta) are the
    # symplectic pairings of the logicals with the phase offset
    alpha = symplectic_product(code.logical_x, t)
    beta = symplectic_product(code.logical_z, t)
    grid_rows = []
    for u in range(d):
        row = []
        for v in range(d):
            zl = (alpha - v) % d
            xl = (-u - beta) % d
            row.append(raw[(zl, xl)])
        grid_rows.append(tuple(row))
    w_out = SymbolicWigner(d, tuple(grid_rows))

    success = Poly(w_in.vars)
    for p in raw.values():
        success = success + p

    noise_map = None
    if fit == "strange":
        noise_map = _fit_strange(w_out, success)
    elif fit == "norell":
        noise_map = _fit_norell(w_out, success)
    elif fit != "raw":
        raise ValueError(f"unknown fit mode {fit!r}")
    return DistillationResult(w_out=w_out, success=success, noise_map=noise_map)


def _fit_strange(w_out: SymbolicWigner, success: Poly) -> RationalFunction:
    cells = [w_out.grid[u][v] for u in range(3) for v in range(3) if (u, v) != (0, 0)]
    if any(c != cells[0] for c in cells[1:]):
        raise ShapeFitError("off-origin Wigner entries differ; no depolarized-strange form", w_out)
    # W(0,0)/P = -1/3 + (4/9) delta_out  and  W(other)/P = 1/6 - delta_out/18
    origin = w_out.grid[0][0]
    out = RationalFunction(origin * 9 + success * 3, success * 4)
    via_other = RationalFunction(success * 3 - cells[0] * 18, success)
    assert out == via_other, "origin and off-origin cells disagree on delta_out"
    return out


def _fit_norell(w_out: SymbolicWigner, success: Poly) -> tuple[RationalFunction, RationalFunction]:
    mids = [w_out.grid[0][1], w_out.grid[0][2]]
    rests = [w_out.grid[u][v] for u in (1, 2) for v in range(3)]
    if mids[0] != mids[1] or any(r != rests[0] for r in rests[1:]):
        raise ShapeFitError("output grid lacks the Norell-family symmetry", w_out)
    origin = w_out.grid[0][0]
    eps0_out = RationalFunction(success - rests[0] * 6, success)
    eps_s_out = RationalFunction(success - origin * 3, success * 2)
    # the middle cells carry no extra information once the success sum is
    # fixed: origin + 2*mid + 6*rest = success by construction
    assert origin + mids[0] * 2 + rests[0] * 6 == success
    return eps0_out, eps_s_out


def extract_factored_form(rf: RationalFunction, var: str, power: int,
                          den_multiplier: int = 1, num_multiplier: int = 1) -> tuple[Poly, Poly]:
    """Write rf as num_multiplier * var**power * P / (den_multiplier * Q)
    with P, Q integer polynomials, jointly coprime, and Q's constant term
    positive.

    Exact: raises if the numerator is not divisible by var**power, and
    verifies the reassembled form against rf.
    """
    p_part = rf.num.shift_down(var, power) * Fraction(1, num_multiplier)
    q_part = rf.den * Fraction(1, den_multiplier)
    denom_lcm = 1
    for c in list(p_part.terms.values()) + list(q_part.terms.values()):
        denom_lcm = math.lcm(denom_lcm, c.denominator)
    p_int = p_part * denom_lcm
    q_int = q_part * denom_lcm
    g = 0
    for c in list(p_int.terms.values()) + list(q_int.terms.values()):
        g = math.gcd(g, abs(c.numerator))
    p_int = p_int * Fraction(1, g)
    q_int = q_int * Fraction(1, g)
    q0 = q_int.constant_term()
    sign = -1 if q0 < 0 or (q0 == 0 and q_int.leading()[1] < 0) else 1
    p_int, q_int = p_int * sign, q_int * sign
    check = RationalFunction(
        Poly.variable(var, rf.vars) ** power * p_int * num_multiplier,
        q_int * den_multiplier,
    )
    assert check == rf, "factored form does not reproduce the rational function"
    return p_int, q_int


# -- the headline curves -------------------------------------------------------

@lru_cache(maxsize=None)
def strange_distillation() -> DistillationResult:
    """Exact one-round map for the 11-qutrit code on depolarized strange states."""
    return distill(golay_qutrit_code(), input_wigner_strange())


@lru_cache(maxsize=None)
def norell_distillation() -> DistillationResult:
    """Exact one-round map for the 11-qutrit code on the twirled Norell family."""
    return distill(golay_qutrit_code(), input_wigner_norell())


def strange_curve() -> RationalFunction:
    return strange_distillation().noise_map


def norell_maps() -> tuple[RationalFunction, RationalFunction]:
    return norell_distillation().noise_map


def threshold_strange() -> tuple[Fraction, Fraction, Fraction]:
    """Fixed point of the strange curve in (0,1): (midpoint, bracket)."""
    return isolate_fixed_point(strange_curve())


def yield_report() -> dict:
    """Resource accounting at zero noise: qutrits consumed per successful
    round and the yield exponent, with the 5-qubit comparison point."""
    p0 = strange_distillation().success.constant_term()
    cost = Fraction(11, 1) / p0
    assert cost.denominator == 1
    cost = int(cost)
    xi = 1 / math.log(cost, 3)
    return {
        "qutrit_cost": cost,
        "xi": round(xi, 3),
        "five_qubit_cost": 30,
        "five_qubit_xi": round(1 / math.log2(30), 3),
    }


def weight1_orthogonality_check(code: StabilizerCode) -> bool:
    """True iff the code's strange-state noise map has no linear or quadratic
    term, i.e. single-site deviations are perfectly rejected."""
    result = distill(code, input_wigner_strange())
    series = series_truncate(result.noise_map, 2)
    return series.coefficient((1,)) == 0 and series.coefficient((2,)) == 0


# -- Norell iteration, threshold and basins -----------------------------------

def _compiled(poly: Poly):
    exps = np.array([e for e, _ in poly.sorted_terms()], dtype=np.int64)
    coeffs = np.array([float(c) for _, c in poly.sorted_terms()])
    return exps, coeffs


@lru_cache(maxsize=None)
def _norell_float_maps():
    e0_map, es_map = norell_maps()
    return tuple(_compiled(p) for p in (e0_map.num, e0_map.den, es_map.num, es_map.den))


def _eval_compiled(compiled, e0, es):
    exps, coeffs = compiled
    return (coeffs * (e0 ** exps[:, 0]) * (es ** exps[:, 1])).sum(axis=-1)


_CORNERS = {"norell": (0.0, 0.0), "zero": (1.0, 0.0), "strange": (0.0, 1.0)}


def norell_iterate(eps0, eps_s, max_steps: int = 200, tol: float = 1e-8,
                   precision: str = "double"):
    """Iterate the Norell noise maps from (eps0, epsS).

    Returns (trajectory, label) with label in {'norell', 'strange', 'zero',
    'mixed', 'singular'}: a corner label as soon as the iterate is within
    `tol` of that corner (the corners are exact fixed points), 'singular' if
    the denominator vanishes along the way, 'mixed' otherwise.

    precision='mp256' reruns the arithmetic with 256-bit floats; used to
    confirm classifications near basin boundaries.
    """
    if precision == "mp256":
        return _norell_iterate_mp(eps0, eps_s, max_steps, tol)
    n0, d0, ns, ds = _norell_float_maps()
    e0, es = float(eps0), float(eps_s)
    traj = [(e0, es)]
    for _ in range(max_steps):
        for label, (c0, cs) in _CORNERS.items():
            if abs(e0 - c0) <= tol and abs(es - cs) <= tol:
                return traj, label
        den = _eval_compiled(d0, e0, es)
        if abs(den) < 1e-300:
            return traj, "singular"
        e0, es = _eval_compiled(n0, e0, es) / den, _eval_compiled(ns, e0, es) / _eval_compiled(ds, e0, es)
        traj.append((e0, es))
    return traj, "mixed"


def _norell_iterate_mp(eps0, eps_s, max_steps, tol):
    from mpmath import mp, mpf

    e0_map, es_map = norell_maps()
    with mp.workprec(256):
        e0, es = mpf(float(eps0)), mpf(float(eps_s))
        terms = [
            [(exp, mpf(c.numerator) / mpf(c.denominator)) for exp, c in p.sorted_terms()]
            for p in (e0_map.num, e0_map.den, es_map.num, es_map.den)
        ]

        def ev(tt, a, b):
            return sum(c * a**i * b**j for (i, j), c in tt)

        traj = [(float(e0), float(es))]
        for _ in range(max_steps):
            for label, (c0, cs) in _CORNERS.items():
                if abs(e0 - c0) <= tol and abs(es - cs) <= tol:
                    return traj, label
            den = ev(terms[1], e0, es)
            if den == 0:
                return traj, "singular"
            e0, es = ev(terms[0], e0, es) / den, ev(terms[2], e0, es) / ev(terms[3], e0, es)
            traj.append((float(e0), float(es)))
    return traj, "mixed"


def depolarizing_threshold_norell(tol: float = 1e-5) -> float:
    """Largest depolarizing rate on the ray eps0 = epsS = delta/3 whose
    iteration still converges to the Norell corner (bisection on the label)."""
    lo, hi = 0.30, 0.45
    assert norell_iterate(lo / 3, lo / 3)[1] == "norell"
    assert norell_iterate(hi / 3, hi / 3)[1] != "norell"
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if norell_iterate(mid / 3, mid / 3)[1] == "norell":
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def basin_raster(resolution: int, workers: int = 1, recheck: bool = True):
    """Classify a uniform barycentric grid over the noise simplex.

    Returns a list of (eps0, epsS, label) with eps0 = i/R, epsS = j/R,
    i + j <= R, in row-major order.  With `recheck`, points adjacent to a
    classification boundary are recomputed at 256-bit precision and the
    high-precision label kept.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    r = resolution
    points = [(i, j) for i in range(r + 1) for j in range(r + 1 - i)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            labels = list(pool.map(_classify_point, [(i, j, r) for i, j in points], chunksize=64))
    else:
        labels = [_classify_point((i, j, r)) for i, j in points]
    by_idx = dict(zip(points, labels))
    if recheck:
        neighborhood = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
        boundary = [
            (i, j) for (i, j) in points
            if any((i + di, j + dj) in by_idx and by_idx[(i + di, j + dj)] != by_idx[(i, j)]
                   for di, dj in neighborhood)
        ]
        for i, j in boundary:
            _, label = norell_iterate(Fraction(i, r), Fraction(j, r), precision="mp256")
            by_idx[(i, j)] = label
    return [(i / r, j / r, by_idx[(i, j)]) for i, j in points]


def _classify_point(args):
    i, j, r = args
    _, label = norell_iterate(Fraction(i, r), Fraction(j, r))
    return label


def basin_csv(rows) -> str:
    lines = ["eps0,epsS,class"]
    lines += [f"{e0:.6f},{es:.6f},{label}" for e0, es, label in rows]
    return "\n".join(lines) + "\n"
