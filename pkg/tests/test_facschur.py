import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eqrimhook.facschur import (
    T,
    WeightSeq,
    XPoly,
    expand_at,
    expand_in_factorial_schur,
    expand_in_schur,
    expand_product,
    factorial_e,
    factorial_h,
    factorial_schur_ssyt,
    jacobi_trudi,
    localization_point,
    mul_at,
    ordinary_schur,
    recombine,
    schur_at,
)
from eqrimhook.partitions import EMPTY, Partition, partitions_in_box, partitions_with_rows
from eqrimhook.polyring import TPoly

from conftest import boxed

P = Partition


def x(k, i):
    return XPoly.x(k, i)


def lin(k, i, j):
    """x_i - t_j"""
    return XPoly.linear_factor(k, i, j)


def t(i):
    return TPoly.var(i)


def test_ssyt_examples():
    assert factorial_schur_ssyt(EMPTY, 2) == XPoly.const(2, 1)
    assert factorial_schur_ssyt(P((1,)), 2) == lin(2, 1, 1) + lin(2, 2, 2)
    # fillings 11, 12, 22 with contents 0 and 1
    two = lin(2, 1, 1) * lin(2, 1, 2) + lin(2, 1, 1) * lin(2, 2, 3) + lin(2, 2, 2) * lin(2, 2, 3)
    assert factorial_schur_ssyt(P((2,)), 2) == two
    # single column: 1 above 2, contents 0 and -1
    assert factorial_schur_ssyt(P((1, 1)), 2) == lin(2, 1, 1) * lin(2, 2, 1)


def test_too_many_rows():
    with pytest.raises(ValueError):
        factorial_schur_ssyt(P((1, 1, 1)), 2)


def test_h_and_e():
    assert factorial_h(0, 2) == XPoly.const(2, 1)
    assert factorial_h(-2, 2).is_zero()
    h1 = factorial_h(1, 2)
    assert h1 == x(2, 1) + x(2, 2) - XPoly.const(2, t(1) + t(2))
    assert str(h1) == "x1 + x2 - t2 - t1"
    assert factorial_e(0, 2) == XPoly.const(2, 1)
    assert factorial_e(1, 2) == h1
    assert factorial_e(3, 2).is_zero()


def test_shifted_weights():
    # tau^{-1} t replaces t_i by t_{i-1}
    assert factorial_h(1, 2, WeightSeq(-1)) == x(2, 1) + x(2, 2) - XPoly.const(2, t(0) + t(1))
    assert factorial_h(1, 2, WeightSeq(-1)) == factorial_h(1, 2).map_coefficients(lambda c: c.shift(-1))


def test_jacobi_trudi_small():
    assert jacobi_trudi(P((3,)), 2) == factorial_h(3, 2)
    assert jacobi_trudi(P((1, 1)), 2) == factorial_schur_ssyt(P((1, 1)), 2)
    assert jacobi_trudi(P((2, 1)), 2) == factorial_schur_ssyt(P((2, 1)), 2)


@pytest.mark.parametrize("k,n", [(2, 4), (3, 5)])
def test_jacobi_trudi_shifted(k, n):
    w = WeightSeq(-2)
    for lam in partitions_in_box(k, n):
        assert jacobi_trudi(lam, k, w) == factorial_schur_ssyt(lam, k, w)


def _plain_h(m, k):
    if m < 0:
        return XPoly(k)
    return XPoly(k, {e: 1 for e in itertools.product(range(m + 1), repeat=k) if sum(e) == m})


def _plain_jacobi_trudi(lam, k):
    """Ordinary Jacobi-Trudi determinant by the Leibniz formula."""
    parts = lam.padded(k)
    total = XPoly(k)
    for perm in itertools.permutations(range(k)):
        sign = 1
        for a, b in itertools.combinations(range(k), 2):
            if perm[a] > perm[b]:
                sign = -sign
        term = XPoly.const(k, sign)
        for i in range(k):
            term = term * _plain_h(parts[i] + perm[i] - i, k)
        total = total + term
    return total


@pytest.mark.parametrize("k", [1, 2, 3])
def test_t_zero_gives_ordinary_schur(k):
    for lam in partitions_with_rows(k, 6):
        s = factorial_schur_ssyt(lam, k)
        assert s.specialize_t_zero() == _plain_jacobi_trudi(lam, k)
        assert s.top_homogeneous() == ordinary_schur(lam, k)
        assert s.is_symmetric()


def test_expand_basis_and_zero():
    assert expand_in_factorial_schur(factorial_schur_ssyt(P((2,)), 2), 2) == {P((2,)): 1}
    assert expand_in_factorial_schur(XPoly(2), 2) == {}


def test_expand_square_of_one_box():
    # hand computation: s_1^2 - s_2 - s_11 = (t3 - t2) s_1
    s1 = lin(2, 1, 1) + lin(2, 2, 2)
    s2 = lin(2, 1, 1) * lin(2, 1, 2) + lin(2, 1, 1) * lin(2, 2, 3) + lin(2, 2, 2) * lin(2, 2, 3)
    s11 = lin(2, 1, 1) * lin(2, 2, 1)
    assert s1 * s1 - s2 - s11 == s1.scale(t(3) - t(2))
    got = expand_in_factorial_schur(s1 * s1, 2)
    assert got == {P((2,)): 1, P((1, 1)): 1, P((1,)): t(3) - t(2)}


def test_expand_rejects_non_symmetric():
    with pytest.raises(ValueError):
        expand_in_factorial_schur(x(2, 1), 2)
    with pytest.raises(ValueError):
        expand_in_factorial_schur(x(3, 1), 2)


def test_localization_vanishing_p24():
    for lam, mu in itertools.product(partitions_in_box(2, 4), repeat=2):
        value = factorial_schur_ssyt(lam, 2).evaluate(localization_point(mu, 2))
        assert value.is_zero() == (not mu.contains(lam))


def _localization_expansion(lam, mu, k, N, point):
    """
    Coefficients of s_lam s_mu in the Gr(k,N) basis at integer weights, by
    triangular solving over the fixed points nu (smallest first).
    """
    sub = {i: v for i, v in enumerate(point, 1)}

    def at(poly, nu):
        return poly.evaluate(localization_point(nu, k)).substitute(sub).constant_value()

    prod = factorial_schur_ssyt(lam, k) * factorial_schur_ssyt(mu, k)
    coeffs = {}
    for nu in sorted(partitions_in_box(k, N), key=lambda p: (p.size, tuple(p))):
        rest = at(prod, nu) - sum(c * at(factorial_schur_ssyt(g, k), nu) for g, c in coeffs.items() if c)
        coeffs[nu] = Fraction(rest, at(factorial_schur_ssyt(nu, k), nu))
    return {nu: c for nu, c in coeffs.items() if c}


@pytest.mark.parametrize("k,N", [(2, 4), (2, 5), (3, 6)])
def test_expand_product_matches_localization(k, N):
    rng = random.Random(k * 100 + N)
    box = partitions_in_box(k, N)
    for _ in range(6 if k == 2 else 3):
        lam, mu = rng.choice(box), rng.choice(box)
        # distinct weights keep every fixed-point denominator nonzero
        point = rng.sample(range(-50, 50), 2 * N)
        sub = {i: v for i, v in enumerate(point, 1)}
        expected = _localization_expansion(lam, mu, k, N, point)
        got = {
            g: c.substitute(sub).constant_value()
            for g, c in expand_product(lam, mu, k).items()
            if g in box
        }
        assert {g: c for g, c in got.items() if c} == expected


@settings(max_examples=25)
@given(st.data())
def test_recombine_round_trip(data):
    k = data.draw(st.sampled_from([2, 3]))
    lam = data.draw(boxed(k, k + 2))
    mu = data.draw(boxed(k, k + 2))
    p = factorial_schur_ssyt(lam, k) * factorial_schur_ssyt(mu, k)
    coeffs = expand_in_factorial_schur(p, k)
    assert recombine(coeffs, k) == p
    assert coeffs == expand_product(lam, mu, k)


def test_expand_in_schur():
    p = ordinary_schur(P((1,)), 2) * ordinary_schur(P((1,)), 2)
    assert expand_in_schur(p, 2) == {P((2,)): 1, P((1, 1)): 1}
    with pytest.raises(ValueError):
        expand_in_schur(factorial_schur_ssyt(P((1,)), 2), 2)


def test_integer_specialization_matches_symbolic():
    values = (3, -7, 11, 2)
    period = {i: values[(i - 1) % 4] for i in range(-8, 20)}
    for lam in [P((2, 1)), P((3,)), P((2, 2))]:
        for shift in (0, -2):
            sym = factorial_schur_ssyt(lam, 2, WeightSeq(shift))
            want = {xe: c.substitute(period).constant_value() for xe, c in sym.items()}
            assert schur_at(lam, 2, values, WeightSeq(shift)) == {xe: v for xe, v in want.items() if v}
    p = mul_at(schur_at(P((2,)), 2, values), schur_at(P((1,)), 2, values))
    sym = expand_product(P((2,)), P((1,)), 2)
    assert expand_at(p, 2, values) == {
        g: c.substitute(period).constant_value() for g, c in sym.items() if c.substitute(period).constant_value()
    }


def test_xpoly_json_round_trip():
    p = factorial_schur_ssyt(P((2, 1)), 3, WeightSeq(-1))
    assert XPoly.from_json(p.to_json()) == p


def test_xpoly_latex():
    assert factorial_h(1, 2).latex() == r"x_{1} + x_{2} - t_{2} - t_{1}"
    assert XPoly(2).latex() == "0"
