"""Mutation of polynomial tuples and the space construction they generate.

Random tuples are grown from the all-ones tuple by mutations, so every
instance is fertile by construction; the exponent tables of the built
spaces are then compared against the closed-form predictions, measured
independently with the echelon-based exponent readers.
"""

import random
from fractions import Fraction

import pytest

from wroncrit.errors import (
    DuplicatePoints,
    NotFertile,
    NotMonic,
    WroncritError,
)
from wroncrit.field import QQ, make_extension
from wroncrit.polyring import Poly, ord_at, parse_poly, wronskian_pair
from wroncrit.ramification import exponents_at, exponents_at_infinity
from wroncrit.reproduction import (
    FertileTuple,
    build_space,
    is_fertile,
    mutate,
    q_witness,
    theta,
)


def P(s):
    return parse_poly(s, QQ)


def cuberoots_tuple():
    K = make_extension("x^2+x+1")
    w = K.gen
    x = Poly.x(K)
    return FertileTuple(K, (x,), (Poly.one(K), x ** 3 - 1), (K.one(), w, -1 - w))


# -- the worked example ---------------------------------------------------------

def test_cuberoots_tuple_is_fertile():
    rep = is_fertile(cuberoots_tuple())
    assert rep.ok
    assert not rep.failures


def test_cuberoots_space():
    space = build_space(cuberoots_tuple())
    ring = space.source.ring
    x = Poly.x(ring)
    assert space.basis == (x, x ** 3 + 2)
    # Wr(x, x^3+2) = 2 - 2x^3 = -2 K_2, so kappa = (1, -2)
    assert space.kappa == (ring.one(), ring.coerce(-2))
    assert space.infinity_exponents == (1, 3)
    assert space.w == (2, 1)
    for z, etab in space.finite_exponents:
        assert etab == (0, 2)


def test_theta_round_trip():
    t = cuberoots_tuple()
    assert theta(build_space(t)) == t.y


def test_q_witness_cuberoots():
    space = build_space(cuberoots_tuple())
    ring = space.source.ring
    Q = q_witness(space, 1)     # raises IdentityFailed if the relation breaks
    assert Q == Poly.x(ring) ** 3 + 2


def test_mutation_step():
    t = cuberoots_tuple()
    new, ytilde, c = mutate(t, 1)
    assert ytilde == Poly.x(t.ring) ** 3 + 2
    assert new.y == (ytilde,)
    # the unscaled solution was -(x^3+2)/2; the monic scaling costs a constant
    assert wronskian_pair(t.y_at(1), ytilde * Fraction(-1, 2)) == t.rhs(1)


# -- constructor guards ----------------------------------------------------------

def test_tuple_guards():
    one = Poly.one(QQ)
    with pytest.raises(NotMonic):
        FertileTuple(QQ, (P("2*x"),), (one, P("x")), (Fraction(0),))
    with pytest.raises(DuplicatePoints):
        FertileTuple(QQ, (P("x"),), (one, one), (Fraction(1), Fraction(1)))
    with pytest.raises(WroncritError):
        # T_1 has a root outside the declared points
        FertileTuple(QQ, (P("x"),), (one, P("x-5")), (Fraction(0),))
    # a declared point dividing no T_j carries no weight and is dropped
    t = FertileTuple(QQ, (P("x"),), (one, P("x-5")), (Fraction(5), Fraction(0)))
    assert t.points == (Fraction(5),)


def test_infertile_reports():
    one = Poly.one(QQ)
    t = FertileTuple(QQ, (P("x"),), (one, P("x")), (Fraction(0),))
    rep = is_fertile(t)       # y_1 shares its root with T_1
    assert not rep.ok
    assert any("shares a root" in f for f in rep.failures)
    with pytest.raises(NotFertile):
        build_space(t)


# -- random growth and the exponent formulas -------------------------------------

def random_grown_tuple(rng):
    N = rng.randint(1, 3)
    pts = [Fraction(z) for z in rng.sample(range(-6, 7), rng.randint(1, 3))]
    x = Poly.x(QQ)
    T = []
    for j in range(N + 1):
        f = Poly.one(QQ)
        for z in pts:
            if rng.random() < 0.45:
                f = f * (x - z)
        T.append(f)
    t = FertileTuple(QQ, tuple([Poly.one(QQ)] * N), tuple(T), tuple(pts))
    for _ in range(rng.randint(1, 2)):
        i = rng.randint(1, N)
        try:
            t, _, _ = mutate(t, i)
        except WroncritError:
            return None       # rare ladder corner; caller draws again
        if max(p.degree() for p in t.y) > 6:
            break
    return t


def predicted_tables(t):
    """Closed forms: c_i at infinity and e_i(z) at each marked point."""
    cs, es = [], {}
    for i in range(1, t.N + 2):
        ci = (i - 1 + t.y_at(i).degree() - t.y_at(i - 1).degree()
              + sum(t.T[j].degree() for j in range(i)))
        cs.append(ci)
    for z in t.points:
        es[z] = tuple(i - 1 + sum(ord_at(t.T[j], z) for j in range(i))
                      for i in range(1, t.N + 2))
    return tuple(cs), es


def test_exponent_formulas_on_grown_tuples():
    rng = random.Random(2025)
    done = 0
    while done < 25:
        t = random_grown_tuple(rng)
        if t is None:
            continue
        space = build_space(t)
        cs, es = predicted_tables(t)
        assert space.infinity_exponents == cs
        assert exponents_at_infinity(space.basis) == tuple(sorted(cs))
        for z, etab in space.finite_exponents:
            assert etab == es[z]
            assert exponents_at(space.basis, z) == etab
        for i in range(1, t.N + 1):
            q_witness(space, i)   # Wr(y_i, Q_i) = T_i y_{i-1} y_{i+1}, exactly
        done += 1


def test_wronskian_family_factorization():
    # Wr(u_1..u_i) = kappa_i K_i y_i with constant kappa_i
    rng = random.Random(77)
    done = 0
    while done < 10:
        t = random_grown_tuple(rng)
        if t is None:
            continue
        space = build_space(t)
        for i in range(1, t.N + 2):
            expect = space.source.K[i] * t.y_at(i) * Poly.constant(QQ, space.kappa[i - 1])
            assert space.wronskians[i - 1] == expect
        done += 1
