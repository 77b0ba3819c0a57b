from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from springergreen import partitions as P
from springergreen import symfunc as S
from springergreen.errors import DegreeTooSmall, SizeMismatch
from springergreen.poly import IntPoly, ONE, T, ZERO
from springergreen.symfunc import SymFunc, SymFunc2

s = SymFunc.schur


def poly(*coeffs):
    return IntPoly(tuple(coeffs))


# --- IntPoly --------------------------------------------------------------------


def test_intpoly_basics():
    p = poly(1, 1)
    assert str(p) == "1 + t" and str(T) == "t" and str(ZERO) == "0"
    assert ZERO.degree == -1 and p.degree == 1
    assert p * p == poly(1, 2, 1)
    assert p - p == ZERO and -p + p == ZERO
    assert p(-1) == 0 and p(3) == 4
    assert poly(0, 1, 0, 0) == T
    assert poly(0, 1).reciprocal(3) == poly(0, 0, 1)
    assert IntPoly.from_json(p.to_json()) == p
    assert p.to_json() == {"coeffs": ["1", "1"]}


@given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), max_size=5), st.integers(-3, 3))
def test_intpoly_ring_evaluation(a, c, x):
    pa, pc = IntPoly(tuple(a)), IntPoly(tuple(c))
    assert (pa * pc)(x) == pa(x) * pc(x)
    assert (pa + pc)(x) == pa(x) + pc(x)


# --- power sums and characters -----------------------------------------------------


def test_schur_expand_p_examples():
    assert S.power_sum((1,)) == s((1,))
    assert S.power_sum((2,)) == s((2,)) - s((1, 1))
    assert S.power_sum((1, 1)) == s((2,)) + s((1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_match_alternant_oracle(n):
    for lam in P.partitions(n):
        for rho in P.partitions(n):
            assert S.character(lam, rho) == O.sym_character(lam, rho)


@pytest.mark.parametrize("n", range(1, 9))
def test_power_sums_orthogonal(n):
    ps = {rho: S.power_sum(rho) for rho in P.partitions(n)}
    for a, pa in ps.items():
        for c, pc in ps.items():
            assert S.scalar(pa, pc) == IntPoly.const(P.z(a) if a == c else 0)


# --- Kostka-Foulkes -----------------------------------------------------------------


def test_kostka_foulkes_examples():
    assert S.kostka_foulkes((2,), (1, 1)) == T
    assert S.kostka_foulkes((2, 1), (2, 1)) == ONE
    assert S.kostka_foulkes((1, 1), (2,)) == ZERO
    assert S.kostka_foulkes((2, 1), (1, 1, 1)) == poly(0, 1, 1)
    assert S.kostka_foulkes((3,), (1, 1, 1)) == poly(0, 0, 0, 1)
    with pytest.raises(SizeMismatch):
        S.kostka_foulkes((2,), (1,))


def test_charge_examples():
    assert S.charge([1, 2]) == 1
    assert S.charge([2, 1]) == 0
    assert S.charge([3, 2, 1]) == 0
    assert S.charge([1, 2, 3]) == 3


@pytest.mark.parametrize("n", range(1, 11))
def test_kostka_row_is_t_to_the_b(n):
    for lam in P.partitions(n):
        assert S.kostka_foulkes((n,), lam) == IntPoly.monomial(P.b(lam))


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_against_fake_degrees(n):
    for mu in P.partitions(n):
        want = O.fake_degree(mu)
        got = S.kostka_foulkes(mu, (1,) * n)
        assert {d: c for d, c in enumerate(got.coeffs) if c} == want


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_structure(n):
    for lam in P.partitions(n):
        for mu in P.partitions(n):
            k = S.kostka_foulkes(mu, lam)
            assert (k != ZERO) == P.dominates(mu, lam)
            assert all(c >= 0 for c in k.coeffs)
            assert k(1) == S.kostka_number(mu, lam) == O.ssyt_count(mu, lam)
        assert S.kostka_foulkes(lam, lam) == ONE


# --- Q' and P ---------------------------------------------------------------------


def test_qprime_and_p_examples():
    assert S.qprime((1,)) == s((1,))
    assert S.qprime((1, 1)) == s((1, 1)) + s((2,)) * T
    assert S.hall_littlewood_p((1, 1)) == s((1, 1))
    assert S.hall_littlewood_p((3,)).coeff((3,)) == ONE
    assert S.scalar(S.power_sum((2,)), S.qprime((1, 1))) == poly(-1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_hall_littlewood_specializations(n):
    for lam in P.partitions(n):
        assert S.hall_littlewood_p(lam).at(0) == s(lam)
        for mu in P.partitions(n):
            assert S.scalar(s(mu), S.qprime(lam)) == S.kostka_foulkes(mu, lam)
    # at t = 1, P_lam is the monomial function: s_nu = sum_lam K_{nu,lam} m_lam
    for nu in P.partitions(n):
        acc = SymFunc.zero(n)
        for lam in P.partitions(n):
            acc = acc + S.hall_littlewood_p(lam).at(1) * S.kostka_number(nu, lam)
        assert acc == s(nu)


# --- Green polynomials -----------------------------------------------------------------


def test_green_examples():
    assert S.green((1,), (1,)) == ONE
    assert S.green((1, 1), (1, 1)) == poly(1, 1)
    assert S.green((4,), (2, 1, 1)) == ONE
    assert S.green_at((1, 1), (2,), -1) == S.green_x((1, 1), (2,))(-1) * (-1) ** 1


@pytest.mark.parametrize("n", range(1, 8))
def test_green_properties(n):
    flags = IntPoly.const(1)
    for m in range(1, n + 1):
        flags = flags * IntPoly(tuple([1] * m))
    assert S.green((1,) * n, (1,) * n) == flags
    for lam in P.partitions(n):
        for rho in P.partitions(n):
            g = S.green(lam, rho)
            x = S.green_x(lam, rho)
            assert g.degree <= P.b(lam)
            assert g.coeff(P.b(lam)) == x.coeff(0)
            assert g(1) == x(1) == O.fixed_points(lam, rho)


@pytest.mark.parametrize("n", range(1, 9))
def test_green_generates_qprime(n):
    for lam in P.partitions(n):
        acc = {}
        for rho in P.partitions(n):
            x = S.green_x(lam, rho)
            for mu, c in S.schur_expand_p(rho).items():
                acc[mu] = acc.get(mu, ZERO) + x * IntPoly.const(Fraction(c, P.z(rho)))
        assert SymFunc(n, acc) == S.qprime(lam)


def test_green_size_mismatch():
    with pytest.raises(SizeMismatch):
        S.green((2,), (1,))


# --- products, omega, skew ---------------------------------------------------------------


def test_product_examples():
    assert S.multiply(s((1,)), s((1,))) == s((2,)) + s((1, 1))
    f = s((2, 1)) + s((3,)) * T
    assert S.multiply(f, s(())) == f
    assert S.skew_schur((2, 1), (1,)) == s((2,)) + s((1, 1))


@pytest.mark.parametrize("a, c", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_littlewood_richardson_against_characters(a, c):
    for mu in P.partitions(a):
        for nu in P.partitions(c):
            lr = S.littlewood_richardson(mu, nu)
            for lam in P.partitions(a + c):
                assert lr.get(lam, 0) == O.lr_coefficient(lam, mu, nu)


def test_omega():
    assert S.omega(s((2,))) == s((1, 1))
    assert S.omega(S.power_sum((2,))) == -S.power_sum((2,))
    f = s((3, 1)) * poly(1, 2) + s((2, 2))
    assert S.omega(S.omega(f)) == f


# --- plethysm, Verschiebung, skewing ---------------------------------------------------------


def test_plethysm_and_verschiebung_examples():
    assert S.plethysm_p2(S.power_sum((1,))) == S.power_sum((2,))
    assert S.plethysm_p2(s((2,))) == s((4,)) - s((3, 1)) + s((2, 2))
    assert S.verschiebung(s((2,))) == s((1,))
    assert S.verschiebung(s((3,))).is_zero()


@pytest.mark.parametrize("m", range(0, 5))
def test_frobenius_verschiebung_adjunction(m):
    for f in P.partitions(m):
        image = S.plethysm_p2(s(f))
        for g in P.partitions(2 * m):
            assert S.scalar(image, s(g)) == S.scalar(s(f), S.verschiebung(s(g)))


def test_verschiebung_on_h():
    # phi(h_2n) = h_n, phi(h_odd) = 0, and phi is multiplicative
    assert S.verschiebung(s((4,))) == s((2,))
    h2h2 = S.multiply(s((2,)), s((2,)))
    assert S.verschiebung(h2h2) == S.multiply(s((1,)), s((1,)))


def test_skew_by_p_examples():
    assert S.skew_by_p(1, s((1,))) == s(())
    assert S.skew_by_p(2, S.power_sum((2,))) == s(()) * 2
    with pytest.raises(DegreeTooSmall):
        S.skew_by_p(3, s((2,)))


@st.composite
def symfuncs(draw, degree):
    parts = P.partitions(degree)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(parts), max_size=len(parts)))
    return SymFunc(degree, {lam: c for lam, c in zip(parts, coeffs)})


@given(st.data(), st.integers(1, 4), st.integers(0, 4))
def test_skew_by_p_is_adjoint_to_multiplication(data, k, d):
    f = data.draw(symfuncs(k + d))
    g = data.draw(symfuncs(d))
    lhs = S.scalar(S.skew_by_p(k, f), g)
    rhs = S.scalar(f, S.multiply(S.power_sum((k,)), g))
    assert lhs == rhs


# --- two alphabets ------------------------------------------------------------------------


def test_sf2_examples():
    got = S.sf2_p((1,), ())
    assert got == SymFunc2.pair((1,), ()) + SymFunc2.pair((), (1,))
    for n in range(5):
        want = SymFunc2(n, {((i,) if i else (), (n - i,) if n - i else ()): 1 for i in range(n + 1)})
        assert S.sf2_delta(s((n,) if n else ())) == want


@pytest.mark.parametrize("n", range(0, 7))
def test_coproduct_product_adjunction(n):
    for lam in P.partitions(n):
        delta = S.sf2_delta(s(lam))
        for j in range(n + 1):
            for a in P.partitions(j):
                for c in P.partitions(n - j):
                    pair = SymFunc2.pair(a, c)
                    assert S.sf2_scalar(delta, pair) == S.scalar(s(lam), S.sf2_nabla(pair))


def test_symfunc_json_round_trip():
    f = S.qprime((2, 1, 1))
    doc = f.to_json()
    assert doc["degree"] == 4 and doc["terms"][0]["partition"] == "4"
    assert SymFunc.from_json(doc) == f


def test_factorial_dimension_sanity():
    # sum of f^lam squared over partitions of n is n!
    for n in range(1, 8):
        assert sum(S.character(lam, (1,) * n) ** 2 for lam in P.partitions(n)) == factorial(n)
