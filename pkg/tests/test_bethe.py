"""Critical points of master functions.

Benchmark values are solved by hand.  With one variable and simple weights
at 0, 1, -1 the critical equation is sum_s 1/(t - z_s) = 0, whose numerator
is 3t^2 - 1: two simple roots at +-1/sqrt(3).  Moving the weights to the
cube roots of unity gives numerator 3t^2/(t^3-1): one doubled root at 0.
The two-level anchor (weights (1,0) at 0 and (0,1) at 1, l = (1,1)) reduces
to t2 = 2*t1 and t1 = 1/3 by elimination.
"""

import math
import warnings
from fractions import Fraction

import numpy as np
import pytest

from wroncrit.bethe import (
    MasterData,
    SectorSpec,
    bethe_residual,
    certify_critical,
    certify_divisibility,
    check_admissible,
    component_multiplicity,
    gamma,
    induced_space,
    master_from_sector,
    master_value,
    sector_lengths,
    sectors_of,
    solve_critical,
    translate_master,
)
from wroncrit.errors import (
    DimensionMismatch,
    DuplicatePoints,
    EmptySector,
    Inadmissible,
    NoCriticalPoints,
    NotCertified,
)
from wroncrit.field import CC, QQ, make_extension
from wroncrit.multiplicity import MPoly, MultivariateSystem, clear_denominators
from wroncrit.polyring import parse_poly
from wroncrit.schubert import intersection_number

OMEGA = make_extension("x^2+x+1")
R3 = 1.0 / math.sqrt(3.0)


def rational_data(ring=QQ, l=(1,)):
    m = (1,) + (0,) * (len(l) - 1)
    return MasterData(ring, l, ((0, m), (1, m), (-1, m)))


def cuberoots_data(l=(1,)):
    w = OMEGA.gen
    m = (1,) + (0,) * (len(l) - 1)
    return MasterData(OMEGA, l, ((OMEGA.one(), m), (w, m), (-OMEGA.one() - w, m)))


def anchor_data():
    return MasterData(QQ, (1, 1), ((0, (1, 0)), (1, (0, 1))))


# -- data validation -------------------------------------------------------------

def test_masterdata_guards():
    with pytest.raises(DimensionMismatch):
        MasterData(QQ, (), ())
    with pytest.raises(DimensionMismatch):
        MasterData(QQ, (-1,), ())
    with pytest.raises(DuplicatePoints):
        MasterData(QQ, (1,), ((0, (1,)), (0, (1,))))
    with pytest.raises(DimensionMismatch):
        MasterData(QQ, (1,), ((0, (1, 2)),))
    with pytest.raises(DimensionMismatch):
        MasterData(QQ, (1,), ((0, (-1,)),))


def test_weight_polynomials():
    data = rational_data()
    assert data.T == (parse_poly("x^3-x", QQ),)
    assert anchor_data().T == (parse_poly("x", QQ), parse_poly("x-1", QQ))
    assert data.size() == 1 and data.N == 1


def test_admissibility():
    data = anchor_data()
    check_admissible([[Fraction(1, 2)], [Fraction(1, 4)]], data)
    # a level-2 coordinate may sit at z = 0 since m_0(2) = 0
    check_admissible([[Fraction(1, 2)], [Fraction(0)]], data)
    with pytest.raises(Inadmissible):
        check_admissible([[Fraction(0)], [Fraction(1, 2)]], data)
    with pytest.raises(Inadmissible):
        check_admissible([[Fraction(1, 3)], [Fraction(1, 3)]], data)
    two = MasterData(QQ, (2,), ((0, (1,)),))
    with pytest.raises(Inadmissible):
        check_admissible([[Fraction(1), Fraction(1)]], two)
    with pytest.raises(DimensionMismatch):
        check_admissible([[Fraction(1)]], data)


# -- residual and master value ----------------------------------------------------

def test_residual_known_formula():
    data = rational_data()
    t = Fraction(3, 10)
    (r,), = bethe_residual([[t]], data)
    assert r == -(1 / t + 1 / (t - 1) + 1 / (t + 1))
    (rn,), = bethe_residual([[0.3]], data)
    assert abs(complex(r) - rn) < 1e-12


def test_residual_is_log_gradient():
    # finite differences of the master value against the closed-form gradient
    data = anchor_data()
    base = [[0.25], [0.6]]
    res = bethe_residual(base, data)
    h = 1e-6
    for i in range(2):
        up = [list(lev) for lev in base]
        dn = [list(lev) for lev in base]
        up[i][0] += h
        dn[i][0] -= h
        fd = (master_value(up, data) - master_value(dn, data)) / (2 * h)
        grad = fd / master_value(base, data)
        assert abs(grad - res[i][0]) < 1e-4 * (1 + abs(grad))


def test_master_value_pinned():
    data = rational_data()
    assert master_value([[Fraction(1, 3)]], data) == Fraction(-27, 8)
    with pytest.raises(Inadmissible):
        master_value([[Fraction(1)]], data)


def test_gamma_rings():
    ys = gamma([[Fraction(1, 2)], [Fraction(0), Fraction(1)]])
    assert ys[0] == parse_poly("x-1/2", QQ)
    assert ys[1] == parse_poly("x^2-x", QQ)
    assert gamma([[0.5j]])[0].ring == CC


# -- exact certification -----------------------------------------------------------

def test_certify_critical_cuberoots_origin():
    # 1/(0-1) + 1/(0-w) + 1/(0-w^2) = -(1 + w^2 + w) = 0
    data = cuberoots_data()
    cert = certify_critical(data, [[OMEGA.zero()]])
    assert cert.mode == "exact" and cert.residuals == (0.0,)


def test_certify_critical_sqrt3():
    F = make_extension("x^2-3")
    third = F.coerce(Fraction(1, 3))
    data = rational_data(ring=F)
    for t in (third * F.gen, -third * F.gen):
        cert = certify_critical(data, [[t]])
        assert cert.mode == "exact"
    with pytest.raises(NotCertified):
        certify_critical(data, [[F.coerce(Fraction(1, 2))]])


def test_certify_critical_numeric():
    data = rational_data()
    cert = certify_critical(data, [[R3 + 0j]], tol=1e-9)
    assert cert.mode == "numeric" and cert.residuals[0] < 1e-9
    with pytest.raises(NotCertified):
        certify_critical(data, [[0.25 + 0j]], tol=1e-9)


def test_certify_divisibility():
    F = make_extension("x^2-3")
    y = parse_poly("x", F) - F.coerce(Fraction(1, 3)) * F.gen
    cert = certify_divisibility([y], rational_data(ring=F))
    assert cert.mode == "exact" and str(cert).startswith("divisibility [exact]")
    with pytest.raises(NotCertified):
        certify_divisibility([parse_poly("x-1/2", QQ)], rational_data())
    # identity sector of the cube-roots problem: Wr(3x^2+5, x^3-1) = -3x(x^3+5x+2)
    cert = certify_divisibility([parse_poly("x^3+5*x+2", OMEGA)], cuberoots_data(l=(3,)))
    assert cert.mode == "exact"
    with pytest.raises(DimensionMismatch):
        certify_divisibility([y, y], rational_data(ring=F))


def test_certify_divisibility_numeric():
    y = gamma([[R3 + 0j]])[0]
    cert = certify_divisibility([y], rational_data(), tol=1e-9)
    assert cert.mode == "numeric" and cert.residuals[0] < 1e-9
    with pytest.raises(NotCertified):
        certify_divisibility([parse_poly("x", QQ).to_ring(CC)], rational_data())


# -- sector bookkeeping ------------------------------------------------------------

def test_translate_rational_variant():
    basic, sector = translate_master(rational_data())
    assert (basic.d, basic.N) == (3, 1)
    assert all(a == (1, 0) for _, a in basic.points)
    assert basic.infinity == (1, 0)
    assert sector.labels == (3, 1) and sector.w == (2, 1)
    assert intersection_number(basic) == 2


def test_translate_anchor():
    basic, sector = translate_master(anchor_data())
    assert (basic.d, basic.N) == (3, 2)
    assert dict((complex(z), a) for z, a in basic.points) == {0j: (1, 1, 0), 1 + 0j: (1, 0, 0)}
    assert basic.infinity == (0, 0, 0)
    assert sector.labels == (3, 2, 1) and sector.w == (3, 2, 1)
    assert sector.filtration_labels() == (1, 2, 3)
    assert intersection_number(basic) == 1


def test_master_sector_round_trip():
    for data in (rational_data(), cuberoots_data(), anchor_data()):
        basic, sector = translate_master(data)
        back = master_from_sector(basic, sector.w)
        assert back.l == data.l
        assert [(m) for _, m in back.points] == [m for _, m in data.points]


def test_identity_sector_sizes():
    basic, _ = translate_master(rational_data())
    ident = master_from_sector(basic, (1, 2))
    assert ident.l == (3,)
    specs = sectors_of(basic)
    assert specs[0].w == (1, 2)              # identity first
    assert {s.w for s in specs} == {(1, 2), (2, 1)}


def test_sector_lengths_guards():
    basic, _ = translate_master(anchor_data())
    with pytest.raises(DimensionMismatch):
        sector_lengths((3, 2, 1), (1, 2, 3), basic.K[:-1])
    with pytest.raises(DimensionMismatch):
        SectorSpec((1, 2, 3), (1, 2, 3))     # labels must decrease
    with pytest.raises(DimensionMismatch):
        SectorSpec((3, 2, 1), (1, 1, 2))
    # a steep divisor ladder leaves no room for the small labels first
    one = parse_poly("1", QQ)
    ladder = (one, one, parse_poly("x^3", QQ), parse_poly("x^3", QQ))
    assert sector_lengths((3, 2, 1), (1, 2, 3), ladder) == (3, 1)
    with pytest.raises(EmptySector):
        sector_lengths((3, 2, 1), (3, 2, 1), ladder)


def test_no_critical_points():
    # l = (1,), one simple weight: labels come out (1, 1) and collide
    data = MasterData(QQ, (1,), ((0, (1,)),))
    with pytest.raises(NoCriticalPoints):
        translate_master(data)
    assert solve_critical(data, starts=4, seed=0) == []


def test_empty_point_solver():
    data = MasterData(QQ, (0,), ((0, (1,)),))
    orbits = solve_critical(data, starts=4, seed=0)
    assert len(orbits) == 1 and orbits[0].multiplicity == 1
    assert orbits[0].point == ((),)


# -- cleared polynomial form --------------------------------------------------------

def test_clear_denominators_rational():
    sys_ = clear_denominators(rational_data())
    assert sys_.nvars == 1 and len(sys_.polys) == 1
    assert sys_.polys[0] == MPoly(1, {(2,): Fraction(3), (0,): Fraction(-1)})


def test_clear_denominators_anchor_roots():
    sys_ = clear_denominators(anchor_data())
    vals = [f.eval([Fraction(1, 3), Fraction(2, 3)]) for f in sys_.polys]
    assert vals == [0, 0]


# -- the solver ---------------------------------------------------------------------

def test_solver_rational_variant():
    data = rational_data()
    orbits = solve_critical(data, starts=80, seed=1)
    assert len(orbits) == 2
    for orbit, want in zip(orbits, (-R3, R3)):
        t = orbit.point[0][0]
        assert abs(t - want) < 1e-8
        assert orbit.multiplicity == 1 and orbit.isolated
        assert orbit.residual < 1e-10
        assert abs(orbit.tuple_y[0].eval(complex(t))) < 1e-12
    assert sum(o.multiplicity for o in orbits) == 2


def test_solver_cuberoots_double_orbit():
    orbits = solve_critical(cuberoots_data(), starts=60, seed=0)
    assert len(orbits) == 1
    assert abs(orbits[0].point[0][0]) < 1e-8
    assert orbits[0].multiplicity == 2


def test_solver_anchor():
    orbits = solve_critical(anchor_data(), starts=60, seed=3)
    assert len(orbits) == 1
    (t1,), (t2,) = orbits[0].point
    assert abs(t1 - 1 / 3) < 1e-8 and abs(t2 - 2 / 3) < 1e-8
    assert orbits[0].multiplicity == 1


def test_solver_identity_sector_components():
    basic, _ = translate_master(rational_data())
    ident = master_from_sector(basic, (1, 2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        orbits = solve_critical(ident, starts=250, seed=5)
    live = [o for o in orbits if not o.isolated]
    assert len(live) == 2
    assert all(o.dimension == 1 and o.multiplicity == 1 for o in live)
    assert sum(o.multiplicity for o in orbits) == 2


def test_solver_deterministic():
    a = solve_critical(rational_data(), starts=40, seed=9)
    b = solve_critical(rational_data(), starts=40, seed=9)
    assert [o.point for o in a] == [o.point for o in b]
    assert [o.hits for o in a] == [o.hits for o in b]


# -- positive-dimensional helpers ----------------------------------------------------

def test_component_multiplicity_direct():
    rng = np.random.default_rng(5)
    xy = MultivariateSystem(("x", "y"), (MPoly(2, {(1, 1): 1 + 0j}),))
    assert component_multiplicity(xy, (0j, 1 + 0j), rng) == (1, 1)
    xx = MultivariateSystem(("x", "y"), (MPoly(2, {(2, 0): 1 + 0j}),))
    assert component_multiplicity(xx, (0j, 1.3 + 0j), rng) == (1, 2)


def test_induced_space_span():
    # tuple (x) of the cube-roots problem generates span{x, x^3 + 2}
    Q = induced_space([parse_poly("x", QQ).to_ring(CC)], cuberoots_data())
    assert Q.shape == (4, 2)
    proj = Q @ Q.conj().T
    for coeffs in ([0, 1, 0, 0], [2, 0, 0, 1]):
        v = np.array(coeffs, dtype=complex)
        assert np.linalg.norm(proj @ v - v) < 1e-9
