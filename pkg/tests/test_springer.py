from __future__ import annotations

from math import factorial

import pytest

import oracles as O
from springergreen import partitions as P
from springergreen import springer as SP
from springergreen import symfunc as S
from springergreen.errors import InvalidJordanType, InvalidLabel, SizeMismatch
from springergreen.poly import IntPoly
from springergreen.springer import ZERO, NilpotentLabel
from springergreen.weylchar import ClassLabel, IrrLabel, inner, restrict_coset, weyl_group


def nl(t, n, lam, split=None):
    return NilpotentLabel(t, n, lam, split)


def bc(a, b):
    return IrrLabel("BC", a, b)


def all_labels(types="BCD", max_size=12):
    for t in types:
        n = 0 if t != "D" else 1
        while P.jordan_size(t, n + 1) <= max_size:
            n += 1
            for lam, s in P.jordan_types(t, n):
                yield NilpotentLabel(t, n, lam, s)


# --- labels --------------------------------------------------------------------------


def test_springer_label_examples():
    assert SP.springer_label(nl("C", 1, (2,))) == bc((1,), ())
    assert SP.springer_label(nl("C", 1, (1, 1))) == bc((), (1,))
    assert P.two_core((2, 1)) == (2, 1)
    assert SP.label_of("C", (2, 1)) is ZERO
    assert SP.springer_label(nl("A", 3, (2, 1))) == IrrLabel("A", (2, 1))
    assert SP.springer_label(nl("D", 2, (2, 2), "-")) == IrrLabel.d((1,), (1,), "-")


def test_nilpotent_label_validation():
    with pytest.raises(InvalidJordanType, match="even part 2"):
        nl("B", 2, (2, 1, 1, 1))
    with pytest.raises(InvalidJordanType, match="split"):
        nl("D", 2, (2, 2))
    with pytest.raises(InvalidJordanType):
        nl("C", 2, (3, 1, 1, 1), "+")
    with pytest.raises(InvalidJordanType):
        nl("C", 2, (3, 1))


def test_springer_labels_are_a_bijection_onto_irreducibles():
    for t, n in (("B", 3), ("C", 3), ("D", 4)):
        g = weyl_group("BC" if t != "D" else "D", n)
        seen = []
        for mu in P.partitions(P.jordan_size(t, n)):
            splits = ("+", "-") if t == "D" and mu and P.is_very_even(mu) else (None,)
            for s in splits:
                chi = SP.label_of(t, mu, s)
                if chi:
                    seen.append(chi)
        if t != "D":
            assert len(seen) == len(set(seen)) == len(g.irreps)
        else:
            assert set(seen) == set(g.irreps)


# --- total characters ---------------------------------------------------------------------


def test_gue_examples():
    g1 = weyl_group("BC", 1)
    assert SP.gue("C", (2,)) == g1.trivial()
    two = SP.gue("C", (1, 1))
    assert two == g1.character(bc((1,), ())) + g1.character(bc((), (1,)))
    assert two.dimension == 2


def test_so9_distinguished_decomposition():
    dec = SP.decomposition(nl("B", 4, (5, 3, 1)))
    want = {SP.label_of("B", mu) for mu in [(5, 3, 1), (5, 4), (6, 2, 1), (7, 1, 1), (9,)]}
    assert set(dec) == want
    assert all(m == 1 for m in dec.values())


def test_d_total_examples():
    assert SP.d_total(nl("D", 2, (1, 1, 1, 1))).dimension == 4
    assert SP.d_total(nl("D", 2, (2, 2), "+")).dimension == 2
    assert SP.d_total(nl("D", 2, (3, 1))).dimension == 1


def test_ague_is_double_or_sum():
    for n in range(2, 6):
        for lam, s in P.jordan_types("D", n):
            if s == "-":
                continue
            if s is None:
                assert SP.ague(lam) == SP.d_total(nl("D", n, lam)) * 2
            else:
                assert SP.ague(lam) == SP.d_total(nl("D", n, lam, "+")) + SP.d_total(nl("D", n, lam, "-"))


@pytest.mark.parametrize("label", list(all_labels()), ids=str)
def test_positivity_containment_dimension(label):
    dec = SP.decomposition(label)
    assert all(m >= 0 and m.denominator == 1 for m in dec.values())
    assert dec.get(SP.springer_label(label), 0) >= 1
    f = SP.total_character(label)
    assert all(v.denominator == 1 for v in f.values)
    assert f.dimension == SP.euler_characteristic(label) > 0


def test_bc_coefficient_sign_pattern():
    for t in "BC":
        for label in all_labels(t):
            lam = label.lam
            for mu in P.partitions(P.size(lam)):
                assert P.sign(lam) * P.sign(mu) * S.kostka_foulkes(mu, lam)(-1) >= 0


# --- Green values and Euler characteristics ----------------------------------------------


def test_green_value_examples():
    for n in range(1, 6):
        assert SP.green_value(nl("C", n, (2 * n,)), (n,)) == 1
        full = nl("B", n, (1,) * (2 * n + 1))
        assert SP.green_value(full, (1,) * n) == 2**n * factorial(n)
        assert SP.gue("B", full.lam).dimension == 2**n * factorial(n)
    very = nl("D", 4, (4, 4), "+")
    assert SP.green_value(very, (2, 2), "-") == 0
    assert SP.green_value(very, (2, 2), "+") != 0


def test_green_value_errors():
    with pytest.raises(SizeMismatch):
        SP.green_value(nl("C", 2, (4,)), (1,))
    with pytest.raises(InvalidLabel):
        SP.green_value(nl("D", 2, (3, 1)), (2,))
    with pytest.raises(InvalidLabel):
        SP.green_value(nl("D", 2, (3, 1)), (1, 1), "+")


def test_euler_examples():
    assert SP.euler_characteristic(nl("C", 1, (2,))) == 1
    assert SP.euler_characteristic(nl("C", 1, (1, 1))) == 2
    assert SP.euler_characteristic(nl("A", 3, (1, 1, 1))) == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_regular_and_zero_orbits(n):
    assert SP.euler_characteristic(nl("A", n, (n,))) == 1
    assert SP.euler_characteristic(nl("A", n, (1,) * n)) == factorial(n)
    assert SP.euler_characteristic(nl("B", n, (2 * n + 1,))) == 1
    assert SP.euler_characteristic(nl("C", n, (2 * n,))) == 1
    assert SP.euler_characteristic(nl("B", n, (1,) * (2 * n + 1))) == 2**n * factorial(n)
    assert SP.euler_characteristic(nl("C", n, (1,) * (2 * n))) == 2**n * factorial(n)
    if n >= 2:
        assert SP.euler_characteristic(nl("D", n, (2 * n - 1, 1))) == 1
        assert SP.euler_characteristic(nl("D", n, (1,) * (2 * n))) == 2 ** (n - 1) * factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_euler_is_multinomial(n):
    for lam in P.partitions(n):
        want = factorial(n)
        for p in lam:
            want //= factorial(p)
        assert SP.euler_characteristic(nl("A", n, lam)) == want
        assert SP.total_character(nl("A", n, lam)).dimension == want


def test_graded_char_a():
    assert SP.graded_char_A((1, 1), (1, 1)) == IntPoly((1, 1))
    for rho in P.partitions(4):
        assert SP.graded_char_A((4,), rho) == IntPoly.const(1)
    for n in range(1, 6):
        for lam in P.partitions(n):
            assert SP.graded_char_A(lam, (1,) * n)(1) == SP.euler_characteristic(nl("A", n, lam))
            for rho in P.partitions(n):
                assert SP.graded_char_A(lam, rho)(1) == SP.total_character(nl("A", n, lam))(ClassLabel(rho))
    with pytest.raises(SizeMismatch):
        SP.graded_char_A((2,), (1,))


# --- type D structure -----------------------------------------------------------------------


def _flip(c: ClassLabel) -> ClassLabel:
    if c.split is None:
        return c
    return ClassLabel(c.rho, c.sigma, "+" if c.split == "-" else "-")


@pytest.mark.parametrize("n", range(2, 7))
def test_tau_symmetry(n):
    g = weyl_group("D", n)
    for lam, s in P.jordan_types("D", n):
        f = SP.d_total(nl("D", n, lam, s))
        other = "+" if s == "-" else "-" if s == "+" else None
        h = SP.d_total(nl("D", n, lam, other))
        for c in g.classes:
            assert f(c) == h(_flip(c))


@pytest.mark.parametrize("n", range(2, 7))
def test_split_labels_vanish_on_opposite_classes(n):
    for lam, s in P.jordan_types("D", n):
        if s is None:
            continue
        f = SP.d_total(nl("D", n, lam, s))
        for c in weyl_group("D", n).classes:
            if c.split and c.split != s:
                assert f(c) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_n_cycle_base_cases(n):
    if n % 2 == 0:
        for s in "+-":
            f = SP.d_total(nl("D", n, (n, n), s))
            for w in "+-":
                assert restrict_coset(f, n, w).values == (2 if s == w else 0,)
    else:
        f = SP.d_total(nl("D", n, (n, n)))
        assert restrict_coset(f, n).values == (1,)


def test_d_cycle_value_small_dimension_formula():
    for lam, s in P.jordan_types("D", 2):
        want = {(1, 1, 1, 1): 4, (2, 2): 2, (3, 1): 1}[lam]
        assert SP.d_total(nl("D", 2, lam, s)).dimension == want


def test_restriction_terms_example():
    terms = SP.restriction_terms((3, 3, 1), 1)
    assert (2, (2, 2, 1)) in terms
    assert all(P.size(mu) == 5 for _, mu in terms)


def test_difference_character_of_very_even():
    # the +/- difference pairs with chi^{(2mu u 2mu)+} to K_{mu,lam}
    for n in (2, 4, 6):
        g = weyl_group("D", n)
        for lam in P.partitions(n // 2):
            big = P.union(P.scale(lam, 2), P.scale(lam, 2))
            d = SP.d_total(nl("D", n, big, "+")) - SP.d_total(nl("D", n, big, "-"))
            for mu in P.partitions(n // 2):
                chi = g.character(SP.label_of("D", P.union(P.scale(mu, 2), P.scale(mu, 2)), "+"))
                assert inner(d, chi) == S.kostka_number(mu, lam) == O.ssyt_count(mu, lam)
