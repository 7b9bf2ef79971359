"""Dense univariate polynomials and Wronskian determinants.

The Wronskian here puts higher derivatives in the top rows, so
Wr(f, g) = f'g - fg'.  Degree bookkeeping, division and the classical
determinant identities are checked on random exact inputs.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wroncrit.errors import NotDivisible, ZeroPolynomial
from wroncrit.field import QQ, make_extension
from wroncrit.polyring import (
    Poly,
    div_rem,
    divides,
    exact_div,
    format_poly,
    gcd_monic,
    is_squarefree,
    ord_at,
    parse_poly,
    wronskian,
    wronskian_pair,
    xgcd,
)

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(fracs, min_size=0, max_size=6).map(lambda cs: Poly(QQ, cs))
nonzero_polys = polys.filter(lambda f: not f.is_zero())


def P(s):
    return parse_poly(s, QQ)


# -- construction and printing -----------------------------------------------

def test_constructors():
    assert Poly.x(QQ) == P("x")
    assert Poly.monomial(QQ, Fraction(3), 2) == P("3*x^2")
    assert Poly.from_roots(QQ, [1, 2]) == P("x^2-3*x+2")
    assert Poly.from_root_data(QQ, [(1, 2)]) == P("x^2-2*x+1")


@given(polys)
def test_parse_format_roundtrip(f):
    assert parse_poly(format_poly(f), QQ) == f


def test_eval_shift():
    f = P("x^2+1")
    assert f(Fraction(2)) == 5
    assert f.shift(1) == P("x^2+2*x+2")   # f(x + 1)


# -- division ----------------------------------------------------------------

@given(polys, nonzero_polys)
def test_div_rem_identity(f, y):
    q, r = div_rem(f, y)
    assert q * y + r == f
    assert r.is_zero() or r.degree() < y.degree()


@given(polys, nonzero_polys)
def test_exact_div_of_product(f, y):
    if f.is_zero():
        return
    assert exact_div(f * y, y) == f
    assert divides(y, f * y)


def test_exact_div_rejects_remainder():
    with pytest.raises(NotDivisible):
        exact_div(P("x^2+1"), P("x"))
    with pytest.raises(ZeroPolynomial):
        div_rem(P("x"), Poly.zero(QQ))


@given(nonzero_polys, nonzero_polys)
def test_xgcd_bezout(f, g):
    d, u, v = xgcd(f, g)
    assert u * f + v * g == d
    assert d.is_monic()
    assert divides(d, f) and divides(d, g)


def test_squarefree_detector():
    assert is_squarefree(P("x^2-1"))
    assert not is_squarefree(P("x^2-2*x+1"))
    assert is_squarefree(P("5"))


# -- order of vanishing ------------------------------------------------------

def test_ord_at():
    f = P("x^2") * P("x-1")
    assert ord_at(f, 0) == 2
    assert ord_at(f, 1) == 1
    assert ord_at(f, 2) == 0


# -- Wronskians --------------------------------------------------------------

def test_wronskian_sign_convention():
    # rows carry derivatives top-down, so Wr(f, g) = f'g - f g'
    assert wronskian_pair(P("x"), P("1")) == P("1")
    assert wronskian_pair(P("1"), P("x")) == P("-1")
    assert wronskian_pair(P("x"), P("x^3+2")) == P("-2*x^3+2")


@given(polys, polys)
def test_wronskian_pair_equals_general(f, g):
    assert wronskian([f, g]) == wronskian_pair(f, g)


@given(polys, polys)
def test_wronskian_antisymmetry(f, g):
    assert wronskian_pair(f, g) == -wronskian_pair(g, f)
    assert wronskian_pair(f, f).is_zero()


@given(polys, polys, fracs)
def test_wronskian_bilinearity(f, g, c):
    h = g * Poly.constant(QQ, c)
    assert wronskian_pair(f, g + h) == wronskian_pair(f, g) + wronskian_pair(f, h)


@given(polys, polys, polys)
def test_wronskian_scaling_rule(f, g, k):
    # multiplying both entries by K picks up K^2
    assert wronskian_pair(f * k, g * k) == wronskian_pair(f, g) * k * k


@settings(max_examples=80)
@given(polys, polys, polys)
def test_wronskian_three_term_rule(f, p, q):
    # Wr(f,P)*Q - Wr(f,Q)*P = Wr(Q,P)*f
    lhs = wronskian_pair(f, p) * q - wronskian_pair(f, q) * p
    assert lhs == wronskian_pair(q, p) * f


@settings(max_examples=80)
@given(polys, polys, polys)
def test_jacobi_composition_order_2(u1, u2, u3):
    # Wr(Wr(u1,u2), Wr(u1,u3)) = u1 * Wr(u1,u2,u3)
    lhs = wronskian_pair(wronskian_pair(u1, u2), wronskian_pair(u1, u3))
    assert lhs == u1 * wronskian([u1, u2, u3])


@settings(max_examples=40)
@given(polys, polys, polys, polys)
def test_jacobi_composition_order_3(u1, u2, u3, u4):
    lhs = wronskian_pair(wronskian([u1, u2, u3]), wronskian([u1, u2, u4]))
    assert lhs == wronskian_pair(u1, u2) * wronskian([u1, u2, u3, u4])


def test_wronskian_three_functions():
    f, g, h = P("1"), P("x"), P("x^2")
    # constant Vandermonde: derivatives of 1, x, x^2 -> det = -2 under the
    # descending-row layout (odd permutation of the ascending one)
    assert wronskian([f, g, h]) == P("-2")


@given(nonzero_polys, nonzero_polys)
def test_wronskian_degree_bound(f, g):
    w = wronskian_pair(f, g)
    bound = f.degree() + g.degree() - 1
    if f.degree() != g.degree():
        assert w.degree() == max(bound, 0)
    elif not w.is_zero():
        assert w.degree() <= bound


def test_extension_coefficients():
    K = make_extension("x^2+x+1")
    w = K.gen
    f = Poly(K, [w, K.one()])          # x + w
    g = Poly(K, [K.one(), K.zero(), K.one()])  # x^2 + 1
    # f'g - fg' = (x^2+1) - (x+w)(2x) = -x^2 - 2wx + 1
    assert wronskian_pair(f, g) == Poly(K, [K.one(), -2 * w, -K.one()])
