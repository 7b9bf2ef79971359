"""Critical points of master functions and their polynomial counterparts.

A master function is determined by level sizes l_1..l_N and, for each marked
point z_s, a weight column m_s(1..N).  Its critical-point system couples the
variables of adjacent levels through simple poles; the same data translates
into a marked-point problem for polynomial spaces (translate_master), whose
intersection number bounds how many critical orbits can exist.

Numeric root finding is multistart Gauss-Newton over the complex field; local
structure (multiplicities, positive-dimensional components) is delegated to
the dual-space machinery of the multiplicity module.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicatePoints,
    EmptySector,
    Inadmissible,
    NoCriticalPoints,
    NotASolution,
    NotCertified,
    NotIsolated,
    OvercountWarning,
    UndercountWarning,
    WroncritError,
)
from .field import CC, common_ring, embed_scalar, format_scalar, ring_of
from .multiplicity import MPoly, MultivariateSystem, clear_denominators, local_multiplicity
from .polyring import Poly, div_rem, format_poly, wronskian_pair
from .ramification import BasicSituation, exponents_of_ram, ram_from_exponents, validate_basic
from .schubert import intersection_number

# numeric knobs shared by the solver paths
_POLISH_REL_STEP = 1e-11
_MAX_GN_ITER = 80
_DEDUP_RADIUS = 1e-6   # relative to coordinate scale
_SPACE_MATCH = 1e-6
_FAR_FACTOR = 1e3      # samples beyond this multiple of the start radius are recycled


# ---------------------------------------------------------------------------
# input data

@dataclass(frozen=True)
class MasterData:
    """Level sizes l_1..l_N plus weights m_s(i) >= 0 at distinct points z_s.

    ``points`` holds (z, (m_s(1), .., m_s(N))) pairs; z is coerced into
    ``ring``.  Level i carries l_i variables, and its weight polynomial is
    T_i = prod_s (x - z_s)^{m_s(i)}.
    """

    ring: Any
    l: tuple[int, ...]
    points: tuple[tuple[Any, tuple[int, ...]], ...]

    def __post_init__(self):
        l = tuple(int(v) for v in self.l)
        if not l:
            raise DimensionMismatch("need at least one level")
        if any(v < 0 for v in l):
            raise DimensionMismatch(f"negative level size in {l}")
        pts = []
        for z, m in self.points:
            z = self.ring.coerce(z)
            if any(z == seen for seen, _ in pts):
                raise DuplicatePoints(f"marked point {format_scalar(z)} repeats")
            m = tuple(int(v) for v in m)
            if len(m) != len(l):
                raise DimensionMismatch(
                    f"weight column at {format_scalar(z)} has {len(m)} entries, want {len(l)}")
            if any(v < 0 for v in m):
                raise DimensionMismatch(f"negative weight at {format_scalar(z)}")
            pts.append((z, m))
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def N(self) -> int:
        return len(self.l)

    @cached_property
    def T(self) -> tuple[Poly, ...]:
        """Weight polynomials T_1..T_N (index 0 is T_1)."""
        x = Poly.x(self.ring)
        out = []
        for i in range(self.N):
            f = Poly.one(self.ring)
            for z, m in self.points:
                f = f * (x - z) ** m[i]
            out.append(f)
        return tuple(out)

    def size(self) -> int:
        return sum(self.l)


def _check_shape(point, data: MasterData) -> None:
    if len(point) != data.N:
        raise DimensionMismatch(f"point has {len(point)} levels, data has {data.N}")
    for i, (lev, li) in enumerate(zip(point, data.l), start=1):
        if len(lev) != li:
            raise DimensionMismatch(f"level {i} has {len(lev)} coordinates, want {li}")


def _is_numeric_point(point) -> bool:
    return any(isinstance(t, (float, complex)) for lev in point for t in lev)


def check_admissible(point, data: MasterData) -> None:
    """Raise Inadmissible naming the first violated non-collision condition.

    Conditions: coordinates within a level are distinct; coordinates of
    adjacent levels are distinct; no coordinate sits on a marked point whose
    weight at that level is positive.
    """
    _check_shape(point, data)
    numeric = _is_numeric_point(point)
    zs = [(embed_scalar(z) if numeric else z, m) for z, m in data.points]
    for i, lev in enumerate(point, start=1):
        for j in range(len(lev)):
            for k in range(j + 1, len(lev)):
                if lev[j] == lev[k]:
                    raise Inadmissible(
                        f"coordinates t{i}_{j + 1} and t{i}_{k + 1} collide")
            for z, m in zs:
                if m[i - 1] > 0 and lev[j] == z:
                    raise Inadmissible(
                        f"coordinate t{i}_{j + 1} sits on the marked point "
                        f"{format_scalar(z)}")
        if i < len(point):
            for j, a in enumerate(lev):
                for k, b in enumerate(point[i]):
                    if a == b:
                        raise Inadmissible(
                            f"coordinates t{i}_{j + 1} and t{i + 1}_{k + 1} collide")


def bethe_residual(point, data: MasterData):
    """Gradient of log of the master function, in the shape of ``point``.

    The (i, j) component is
      sum_{k != j} 2/(t_ij - t_ik)
      - sum_k 1/(t_ij - t_{i-1,k}) - sum_k 1/(t_ij - t_{i+1,k})
      - T_i'(t_ij)/T_i(t_ij),
    the point term expanded as sum_s m_s(i)/(t_ij - z_s).  Exact scalars stay
    exact; any floating coordinate switches the whole evaluation to complex.
    """
    check_admissible(point, data)
    numeric = _is_numeric_point(point)
    if numeric:
        pt = tuple(tuple(complex(t) for t in lev) for lev in point)
        zs = [(embed_scalar(z), m) for z, m in data.points]
        one = 1.0
    else:
        ring = data.ring
        pt = tuple(tuple(ring.coerce(t) for t in lev) for lev in point)
        zs = list(data.points)
        one = ring.one()
    out = []
    for i, lev in enumerate(pt):
        row = []
        for j, t in enumerate(lev):
            acc = one - one
            for k, u in enumerate(lev):
                if k != j:
                    acc = acc + (one + one) / (t - u)
            for adj in (i - 1, i + 1):
                if 0 <= adj < len(pt):
                    for u in pt[adj]:
                        acc = acc - one / (t - u)
            for z, m in zs:
                if m[i]:
                    acc = acc - (m[i] * one) / (t - z)
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def master_value(point, data: MasterData):
    """Value of the master function itself at an admissible point."""
    check_admissible(point, data)
    numeric = _is_numeric_point(point)
    if numeric:
        pt = [[complex(t) for t in lev] for lev in point]
        zs = [(embed_scalar(z), m) for z, m in data.points]
        val = 1.0 + 0j
    else:
        ring = data.ring
        pt = [[ring.coerce(t) for t in lev] for lev in point]
        zs = list(data.points)
        val = ring.one()
    for i, lev in enumerate(pt):
        for j in range(len(lev)):
            for k in range(j + 1, len(lev)):
                val = val * (lev[j] - lev[k]) ** 2
            if i + 1 < len(pt):
                for u in pt[i + 1]:
                    val = val / (lev[j] - u)
            for z, m in zs:
                if m[i]:
                    val = val / (lev[j] - z) ** m[i]
    return val


# ---------------------------------------------------------------------------
# the tuple attached to a critical point

def gamma(point) -> tuple[Poly, ...]:
    """Monic level polynomials y_i = prod_j (x - t_ij) of a point.

    Exact coordinates give exact coefficients; floating coordinates give a
    tuple over the machine complex field.
    """
    coords = [t for lev in point for t in lev]
    if any(isinstance(t, (float, complex)) for t in coords):
        ring = CC
    else:
        ring = common_ring(*coords) if coords else ring_of(Fraction(0))
    return tuple(Poly.from_roots(ring, lev) for lev in point)


# ---------------------------------------------------------------------------
# certification

@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact or floating check; residuals are per item."""

    kind: str
    mode: str
    residuals: tuple[float, ...]
    tol: float

    def __str__(self):
        body = ", ".join(f"{r:.3e}" for r in self.residuals)
        return f"{self.kind} [{self.mode}] residuals: {body or 'none'} (tol {self.tol:g})"


def _poly_norm(f: Poly) -> float:
    return max((abs(complex(c)) for c in f.coeffs), default=0.0)


def certify_divisibility(ys: Sequence[Poly], data: MasterData, tol: float = 1e-9) -> Certificate:
    """Check y_i | Wr(y_i', T_i y_{i-1} y_{i+1}) for every level.

    Exact rings use exact remainders; over machine complex numbers the
    remainder norm must stay below tol times the dividend norm.  Raises
    NotCertified naming the first level that fails.
    """
    ys = list(ys)
    if len(ys) != data.N:
        raise DimensionMismatch(f"tuple has {len(ys)} levels, data has {data.N}")
    numeric = any(y.ring == CC for y in ys)
    T = data.T
    if numeric:
        ys = [y.to_ring(CC) for y in ys]
        T = [f.to_ring(CC) for f in T]
    one = Poly.one(ys[0].ring)
    resid = []
    for i in range(len(ys)):
        lo = ys[i - 1] if i > 0 else one
        hi = ys[i + 1] if i + 1 < len(ys) else one
        w = wronskian_pair(ys[i].deriv(), T[i] * lo * hi)
        _, rem = div_rem(w, ys[i])
        if numeric:
            bound = tol * (1.0 + _poly_norm(w))
            r = _poly_norm(rem)
            if r > bound:
                raise NotCertified(
                    f"level {i + 1}: remainder norm {r:.3e} exceeds {bound:.3e}")
            resid.append(r)
        else:
            if not rem.is_zero():
                raise NotCertified(f"level {i + 1}: nonzero remainder {format_poly(rem)}")
            resid.append(0.0)
    return Certificate("divisibility", "numeric" if numeric else "exact", tuple(resid), tol)


def certify_critical(data: MasterData, point, tol: float = 1e-9) -> Certificate:
    """Check that a given admissible point solves the critical equations.

    Exact coordinates must give an exactly zero gradient; floating ones must
    get within tol.  Raises Inadmissible or NotCertified.
    """
    res = bethe_residual(point, data)
    vals = [t for lev in res for t in lev]
    if _is_numeric_point(point):
        worst = max((abs(complex(v)) for v in vals), default=0.0)
        if worst > tol:
            raise NotCertified(f"gradient norm {worst:.3e} exceeds tol {tol:g}")
        return Certificate("critical point", "numeric", (worst,), tol)
    for lev_i, lev in enumerate(res, start=1):
        for j, v in enumerate(lev, start=1):
            if v != data.ring.zero():
                raise NotCertified(
                    f"gradient component ({lev_i},{j}) is {format_scalar(v)}, not 0")
    return Certificate("critical point", "exact", (0.0,) * bool(vals), tol)


# ---------------------------------------------------------------------------
# sectors: labels at infinity distributed over the levels

@dataclass(frozen=True)
class SectorSpec:
    """Strictly decreasing exponent labels and which level draws which.

    ``w`` is a bijection of 1..N+1: the i-th step of the filtration picks up
    the label ``labels[w[i-1] - 1]``.
    """

    labels: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(c) for c in self.labels)
        w = tuple(int(v) for v in self.w)
        if sorted(w) != list(range(1, len(labels) + 1)):
            raise DimensionMismatch(f"{w} is not a bijection of 1..{len(labels)}")
        if any(labels[i] <= labels[i + 1] for i in range(len(labels) - 1)):
            raise DimensionMismatch(f"labels {labels} are not strictly decreasing")
        if labels and labels[-1] < 0:
            raise DimensionMismatch(f"negative label in {labels}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "w", w)

    def filtration_labels(self) -> tuple[int, ...]:
        return tuple(self.labels[v - 1] for v in self.w)


def sector_lengths(c: Sequence[int], w: Sequence[int], K: Sequence[Poly]) -> tuple[int, ...]:
    """Level sizes induced by handing out labels c in the order w.

    ``c`` must be strictly decreasing, ``w`` a bijection of 1..N+1 and ``K``
    the divisor ladder K_0..K_{N+1} of the situation.  Returns (l_1..l_N);
    raises EmptySector when some level size comes out negative, and
    DimensionMismatch when the data are inconsistent (the (N+1)-st size must
    close at zero).
    """
    spec = SectorSpec(tuple(c), tuple(w))
    N = len(spec.labels) - 1
    if len(K) != N + 2:
        raise DimensionMismatch(f"need K_0..K_{N + 1}, got {len(K)} entries")
    out = []
    acc = 0
    for i in range(1, N + 2):
        acc += spec.labels[spec.w[i - 1] - 1]
        li = acc - i * (i - 1) // 2 - K[i].degree()
        if i <= N:
            if li < 0:
                raise EmptySector(f"level size l_{i} = {li} < 0 for w = {spec.w}")
            out.append(li)
        elif li != 0:
            raise DimensionMismatch(
                f"labels and divisor ladder disagree: closing size is {li}, not 0")
    return tuple(out)


def translate_master(data: MasterData) -> tuple[BasicSituation, SectorSpec]:
    """Marked-point problem and sector solved by the critical points of ``data``.

    The filtration label of level i is
        c_i = i - 1 + l_i - l_{i-1} + sum_{j<i} sum_s m_s(j)
    (l_0 = l_{N+1} = 0).  Negative or colliding labels mean the master
    function has no critical points at all; that raises NoCriticalPoints.
    """
    N = data.N
    l = (0,) + data.l + (0,)
    c = []
    acc = 0
    for i in range(1, N + 2):
        ci = i - 1 + l[i] - l[i - 1] + acc
        if ci < 0:
            raise NoCriticalPoints(f"label c_{i} = {ci} is negative")
        c.append(ci)
        acc += sum(m[i - 1] for _, m in data.points) if i <= N else 0
    if len(set(c)) != len(c):
        raise NoCriticalPoints(f"labels {tuple(c)} collide")

    d = max(c)
    pts = []
    for z, m in data.points:
        a = tuple(sum(m[N - el] for el in range(j, N + 1)) for j in range(1, N + 2))
        pts.append((z, a))
    a_inf = ram_from_exponents(sorted(c), d, at_infinity=True)
    basic = validate_basic(data.ring, d, N, pts, a_inf)

    labels = tuple(sorted(c, reverse=True))
    w = tuple(1 + sum(1 for cj in c if cj > ci) for ci in c)
    sector = SectorSpec(labels, w)
    if sector_lengths(labels, w, basic.K) != data.l:
        raise WroncritError("internal: sector sizes fail to reproduce the input")
    return basic, sector


def master_from_sector(basic: BasicSituation, w: Sequence[int]) -> MasterData:
    """Master-function data whose critical points feed the sector ``w``.

    Inverse of translate_master on its image: level sizes come from
    sector_lengths, weights from the orders of T_i at the marked points.
    """
    e_inf = exponents_of_ram(basic.infinity, basic.d, at_infinity=True)
    labels = tuple(reversed(e_inf))
    l = sector_lengths(labels, tuple(w), basic.K)
    pts = []
    for z, a in basic.points:
        m = tuple(a[basic.N - i] - a[basic.N + 1 - i] for i in range(1, basic.N + 1))
        pts.append((z, m))
    return MasterData(basic.ring, l, tuple(pts))


def sectors_of(basic: BasicSituation) -> list[SectorSpec]:
    """All sectors with nonnegative level sizes, identity first."""
    e_inf = exponents_of_ram(basic.infinity, basic.d, at_infinity=True)
    labels = tuple(reversed(e_inf))
    out = []
    for w in itertools.permutations(range(1, basic.N + 2)):
        try:
            sector_lengths(labels, w, basic.K)
        except EmptySector:
            continue
        out.append(SectorSpec(labels, w))
    return out


# ---------------------------------------------------------------------------
# numeric solving

@dataclass(frozen=True)
class CriticalOrbit:
    """One solution of the critical equations up to reordering within levels.

    ``point`` is the canonical representative (each level sorted by real then
    imaginary part), ``residual`` the max gradient norm there, ``tuple_y``
    the monic level polynomials.  ``multiplicity`` is the local intersection
    multiplicity when the orbit is isolated; for a positive-dimensional
    family it is the multiplicity transversal to the component and
    ``dimension`` the observed local dimension.  ``hits`` counts converged
    starts that landed here.
    """

    point: tuple[tuple[Any, ...], ...]
    residual: float
    multiplicity: int | None
    tuple_y: tuple[Poly, ...]
    admissible: bool = True
    isolated: bool = True
    dimension: int = 0
    hits: int = 1


def _layout(l: Sequence[int]) -> list[int]:
    # level index (0-based) of each flattened coordinate
    out = []
    for i, li in enumerate(l):
        out.extend([i] * li)
    return out


def _coupling_matrix(l: Sequence[int]) -> np.ndarray:
    lev = _layout(l)
    L = len(lev)
    C = np.zeros((L, L))
    for p in range(L):
        for q in range(L):
            if p == q:
                continue
            if lev[p] == lev[q]:
                C[p, q] = 2.0
            elif abs(lev[p] - lev[q]) == 1:
                C[p, q] = -1.0
    return C


def _embedded_weights(data: MasterData) -> tuple[np.ndarray, np.ndarray]:
    zs = np.array([embed_scalar(z) for z, _ in data.points], dtype=complex)
    M = np.array([[m[i] for i in range(data.N)] for _, m in data.points], dtype=float)
    return zs, M.reshape(len(data.points), data.N)


def _batch_residual(t: np.ndarray, C: np.ndarray, lev: list[int],
                    zs: np.ndarray, M: np.ndarray) -> np.ndarray:
    S, L = t.shape
    D = t[:, :, None] - t[:, None, :]
    D[:, range(L), range(L)] = 1.0
    r = (C[None, :, :] / D).sum(axis=2)
    if len(zs):
        W = np.array([[M[s, lev[p]] for s in range(len(zs))] for p in range(L)])
        Dz = t[:, :, None] - zs[None, None, :]
        r = r - (W[None, :, :] / Dz).sum(axis=2)
    return r


def _compile_polys(polys, L: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # (coefficient vector, exponent matrix) per polynomial, for batched eval
    out = []
    for f in polys:
        if not f.terms:
            out.append((np.zeros(1, dtype=complex), np.zeros((1, L), dtype=np.int64)))
            continue
        E = np.array(list(f.terms.keys()), dtype=np.int64)
        c = np.array([complex(embed_scalar(v)) for v in f.terms.values()])
        out.append((c, E))
    return out


def _eval_compiled(comp: list[tuple[np.ndarray, np.ndarray]], t: np.ndarray) -> np.ndarray:
    # t: (S, L) -> values (S, len(comp))
    cols = []
    for c, E in comp:
        P = np.prod(t[:, None, :] ** E[None, :, :], axis=2)
        cols.append(P @ c)
    return np.stack(cols, axis=1)


def _canonical(row: np.ndarray, l: Sequence[int]) -> tuple[tuple[complex, ...], ...]:
    out = []
    pos = 0
    for li in l:
        lev = sorted((complex(v) for v in row[pos:pos + li]), key=lambda v: (v.real, v.imag))
        out.append(tuple(lev))
        pos += li
    return tuple(out)


def _flat(point) -> list:
    return [t for lev in point for t in lev]


def _rand_point(rng: np.random.Generator, L: int, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.uniform(size=L))
    ang = rng.uniform(size=L) * 2 * np.pi
    return r * np.exp(1j * ang)


# -- induced space of a sample, used to group samples on one component --------

def _wronskian_solve_lstsq(y: Poly, rhs: Poly) -> Poly:
    # least-squares particular solution g of Wr(y, g) = rhs over CC
    dg = max(rhs.degree() - max(y.degree(), 1) + 1, 0) + 1
    cols = []
    for k in range(dg + 1):
        w = wronskian_pair(y, Poly.monomial(CC, 1.0, k))
        cols.append([complex(w.coeff(m)) for m in range(rhs.degree() + dg + 2)])
    A = np.array(cols, dtype=complex).T
    b = np.array([complex(rhs.coeff(m)) for m in range(A.shape[0])], dtype=complex)
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    return Poly(CC, list(sol))


def induced_space(ys: Sequence[Poly], data: MasterData) -> np.ndarray:
    """Orthonormal coefficient basis of the space generated by a tuple.

    Mirrors the reproduction cascade numerically: for each target size the
    tuple is remutated from scratch in directions i..1 and the final first
    entry joins the basis.  Only spans matter here, so least-squares
    particular solutions are fine.
    """
    T = [f.to_ring(CC) for f in data.T]
    ys = [y.to_ring(CC) for y in ys]
    one = Poly.one(CC)
    us = [ys[0]]
    for i in range(1, data.N + 1):
        cur = list(ys)
        for j in range(i, 0, -1):
            lo = cur[j - 2] if j >= 2 else one
            hi = cur[j] if j < data.N else one
            g = _wronskian_solve_lstsq(cur[j - 1], T[j - 1] * lo * hi)
            cur[j - 1] = g
        us.append(cur[0])
    deg = max(u.degree() for u in us)
    A = np.array([[complex(u.coeff(k)) for k in range(deg + 1)] for u in us], dtype=complex).T
    Q, _ = np.linalg.qr(A)
    return Q[:, : len(us)]


def _same_space(Q1: np.ndarray, Q2: np.ndarray) -> bool:
    if Q1.shape != Q2.shape:
        return False
    s = np.linalg.svd(Q1.conj().T @ Q2, compute_uv=False)
    return bool(s.min() > 1 - _SPACE_MATCH)


def component_multiplicity(system: MultivariateSystem, sample: Sequence[complex],
                           rng: np.random.Generator, tol: float = 1e-8,
                           max_order: int = 12) -> tuple[int, int]:
    """(local dimension, transversal multiplicity) at a non-isolated sample.

    Cuts the solution set by random affine hyperplanes through the sample,
    one more at a time, until the sliced system has an isolated root there.
    Valid at a generic smooth sample of the component.
    """
    n = system.nvars
    polys = list(system.polys)
    for dim in range(1, n + 1):
        coeffs = rng.normal(size=n) + 1j * rng.normal(size=n)
        coeffs /= np.linalg.norm(coeffs)
        const = -sum(c * t for c, t in zip(coeffs, sample))
        terms = {tuple(0 for _ in range(n)): complex(const)}
        for k in range(n):
            e = tuple(1 if q == k else 0 for q in range(n))
            terms[e] = complex(coeffs[k])
        polys.append(MPoly(n, terms))
        sliced = MultivariateSystem(system.names, tuple(polys))
        try:
            res = local_multiplicity(sliced, tuple(sample), mode="numeric",
                                     tol=tol, max_order=max_order)
        except NotIsolated:
            continue
        return dim, res.multiplicity
    raise NotIsolated("slicing never produced an isolated root")


# -- the solver ----------------------------------------------------------------

def solve_critical(data: MasterData, starts: int = 200, seed: int = 0,
                   tol: float = 1e-12, mult_tol: float = 1e-6) -> list[CriticalOrbit]:
    """Multistart search for all critical orbits of a master function.

    Deterministic for fixed (data, starts, seed, tol).  Starts are drawn
    uniformly from a disc of radius 2(max|z_s| + 1); Gauss-Newton steps use
    the pseudoinverse so degenerate and positive-dimensional solutions are
    reached as well, at a linear rate.  Orbits closer than 1e-6 after
    canonical sorting are merged.  Each orbit gets a local multiplicity;
    samples where the dual spaces keep growing are grouped by their induced
    polynomial space and reported once per component with a transversal
    multiplicity.  A warning is emitted when the total multiplicity found
    misses the intersection number of the translated problem.

    mult_tol is the rank tolerance handed to the dual-space computations.
    It is looser than the solver tolerance on purpose: a root of local
    multiplicity m is only located to about machine_eps^(1/m) by any
    iteration, so rank decisions must forgive coordinate errors of that
    size even though the gradient norm itself sits far below ``tol``.
    """
    try:
        basic, _sector = translate_master(data)
        target = intersection_number(basic)
    except NoCriticalPoints:
        return []

    L = data.size()
    if L == 0:
        one = Poly.one(data.ring)
        orbit = CriticalOrbit(tuple(() for _ in range(data.N)), 0.0, 1,
                              tuple(one for _ in range(data.N)))
        if target != 1:
            warnings.warn(f"empty critical point carries multiplicity 1 but the "
                          f"intersection number is {target}", UndercountWarning,
                          stacklevel=2)
        return [orbit]

    lev = _layout(data.l)
    C = _coupling_matrix(data.l)
    zs, M = _embedded_weights(data)
    radius = 2.0 * (max((abs(z) for z in zs), default=0.0) + 1.0)
    rng = np.random.default_rng(seed)

    def fresh_start() -> np.ndarray:
        for _ in range(100):
            cand = _rand_point(rng, L, radius)
            try:
                check_admissible(_canonical(cand, data.l), data)
            except Inadmissible:
                continue
            return cand
        return cand

    pts = np.empty((starts, L), dtype=complex)
    for s in range(starts):
        pts[s] = fresh_start()

    # Newton runs on the cleared polynomial form of the equations: the raw
    # gradient has a spurious attracting zero at infinity that swallows
    # almost every start, while the polynomial system has honest basins.
    # Its extra roots (coordinate collisions, coordinates on marked points)
    # are filtered afterwards by the rational residual, which blows up
    # there.  Runaway slots (no basin, or walking out along a noncompact
    # solution curve) are recycled with fresh draws, so the search
    # effectively covers |t| up to _FAR_FACTOR * radius.
    system = clear_denominators(data)
    polys = system.map_coeffs(lambda v: complex(embed_scalar(v))).polys
    comp_F = _compile_polys(polys, L)
    comp_J = _compile_polys([f.deriv(q) for f in polys for q in range(L)], L)

    far_cut = _FAR_FACTOR * radius
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range(_MAX_GN_ITER):
            F = _eval_compiled(comp_F, pts)
            J = _eval_compiled(comp_J, pts).reshape(-1, L, L)
            step = -np.linalg.pinv(J) @ F[:, :, None]
            step = step[:, :, 0]
            step[~np.isfinite(step).all(axis=1)] = 0.0
            pts = pts + step
            bad = ~np.isfinite(pts).all(axis=1) | (np.abs(pts).max(axis=1) > far_cut)
            for s in np.nonzero(bad)[0]:
                pts[s] = fresh_start()
        res = np.abs(_batch_residual(pts, C, lev, zs, M)).max(axis=1)
    good = np.isfinite(res) & (res < tol) & (np.abs(pts).max(axis=1) < far_cut)

    samples = sorted(
        ((_canonical(pts[s], data.l), float(res[s])) for s in np.nonzero(good)[0]),
        key=lambda pr: [(v.real, v.imag) for v in _flat(pr[0])])
    clusters: list[list] = []  # [rep_point, residual, hits]
    for point, rv in samples:
        fp = _flat(point)
        scale = 1.0 + max(abs(v) for v in fp)
        for cl in clusters:
            if max(abs(a - b) for a, b in zip(fp, _flat(cl[0]))) < _DEDUP_RADIUS * scale:
                cl[1] = min(cl[1], rv)
                cl[2] += 1
                break
        else:
            clusters.append([point, rv, 1])

    max_order = max(4, target + 1)
    orbits: list[CriticalOrbit] = []
    loose: list[list] = []  # one entry per component: [Q, point, residual, hits]
    for point, rv, hits in clusters:
        flat = tuple(_flat(point))
        try:
            m = local_multiplicity(system, flat, mode="numeric", tol=mult_tol,
                                   max_order=max_order)
            orbits.append(CriticalOrbit(point, rv, m.multiplicity, gamma(point), hits=hits))
        except NotASolution:
            continue  # true critical point at a scale the cleared system cannot hold
        except NotIsolated:
            Q = induced_space(gamma(point), data)
            for cl in loose:
                if _same_space(cl[0], Q):
                    # keep the most central sample: best conditioned representative
                    if max(abs(v) for v in flat) < max(abs(v) for v in _flat(cl[1])):
                        cl[1] = point
                    cl[2] = min(cl[2], rv)
                    cl[3] += hits
                    break
            else:
                loose.append([Q, point, rv, hits])

    for Q, point, rv, hits in loose:
        dim, m = component_multiplicity(system, _flat(point), rng, tol=mult_tol,
                                        max_order=max_order)
        orbits.append(CriticalOrbit(point, rv, m, gamma(point),
                                    isolated=False, dimension=dim, hits=hits))

    orbits.sort(key=lambda o: [(v.real, v.imag) for v in _flat(o.point)])
    total = sum(o.multiplicity or 0 for o in orbits)
    if total < target:
        warnings.warn(f"found total multiplicity {total} < intersection number {target}; "
                      f"try more starts", UndercountWarning, stacklevel=2)
    elif total > target:
        warnings.warn(f"found total multiplicity {total} > intersection number {target}; "
                      f"some orbits are spurious or overcounted", OvercountWarning,
                      stacklevel=2)
    return orbits
