"""Springer correspondence and total Springer characters for classical groups.

Total Springer characters are assembled from Kostka-Foulkes polynomials at
``t = -1`` (``gue`` for types B/C, ``ague`` and its split refinements for
type D).  Character values at elements of ``S_n`` come independently from
Green polynomials at ``t = -1``; the verification suites compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import partitions as P
from . import symfunc as S
from .errors import InvalidJordanType, InvalidLabel, SizeMismatch
from .poly import IntPoly
from .weylchar import (
    ClassFunction,
    ClassLabel,
    IrrLabel,
    combine,
    group_type,
    weyl_group,
)

Partition = P.Partition


class Zero:
    """Springer label of a partition whose 2-core is not minimal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Zero"

    def __bool__(self) -> bool:
        return False


ZERO = Zero()


@dataclass(frozen=True)
class NilpotentLabel:
    """A nilpotent orbit: Lie type, rank, Jordan type and split marker."""

    type: str
    n: int
    lam: Partition
    split: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", P.make(self.lam))
        if self.type not in P.LIE_TYPES:
            raise InvalidJordanType(f"unknown Lie type {self.type!r}")
        why = P.jordan_type_violation(self.type, self.n, self.lam)
        if why:
            raise InvalidJordanType(f"not a Jordan type for {self.type}{self.n}: {why}")
        needs = self.type == "D" and bool(self.lam) and P.is_very_even(self.lam)
        if needs and self.split not in ("+", "-"):
            raise InvalidJordanType(f"very even {self.lam} needs a split marker")
        if not needs and self.split is not None:
            raise InvalidJordanType(f"{self.lam} takes no split marker")

    @property
    def very_even(self) -> bool:
        return self.split is not None

    def __str__(self) -> str:
        return P.fmt(self.lam) + (self.split or "")


def label_of(lie_type: str, mu: Partition, split: str | None = None):
    """Springer label of an arbitrary partition ``mu``, or ``ZERO``."""
    mu = tuple(mu)
    if lie_type == "A":
        return IrrLabel("A", mu)
    if not P.has_minimal_core(mu):
        return ZERO
    q0, q1 = P.two_quotient(mu)
    if lie_type == "B":
        return IrrLabel("BC", q0, q1)
    if lie_type == "C":
        return IrrLabel("BC", q1, q0)
    if lie_type == "D":
        if q0 == q1:
            if split not in ("+", "-"):
                raise InvalidLabel(f"{mu} needs a split marker")
            return IrrLabel.d(q0, q1, split)
        return IrrLabel.d(q0, q1)
    raise InvalidJordanType(f"unknown Lie type {lie_type!r}")


def springer_label(nl: NilpotentLabel):
    return label_of(nl.type, nl.lam, nl.split)


def _gue_terms(lie_type: str, lam: Partition) -> dict[IrrLabel, int]:
    el = P.sign(lam)
    out: dict[IrrLabel, int] = {}
    for mu, k in S.kostka_column(lam).items():
        chi = label_of(lie_type, mu)
        if chi is ZERO:
            continue
        c = el * P.sign(mu) * k(-1)
        if c:
            out[chi] = out.get(chi, 0) + c
    return {k: v for k, v in out.items() if v}


def _rank(lie_type: str, lam: Partition) -> int:
    m = P.size(lam)
    return m if lie_type == "A" else m // 2


@cache
def gue(lie_type: str, lam: Partition) -> ClassFunction:
    """``sum_mu eps(lam) eps(mu) K_{mu,lam}(-1) chi^mu`` on ``W(BC_n)``."""
    if lie_type not in ("B", "C"):
        raise InvalidJordanType("gue is defined for types B and C")
    lam = P.make(lam)
    n = _rank(lie_type, lam)
    if not P.is_valid_jordan_type(lie_type, n, lam):
        raise InvalidJordanType(f"{lam} is not a Jordan type for {lie_type}{n}")
    return combine(_gue_terms(lie_type, lam), weyl_group("BC", n))


def _very_even_pair(mu: Partition) -> tuple[IrrLabel, IrrLabel]:
    q0, _ = P.two_quotient(mu)
    return IrrLabel.d(q0, q0, "+"), IrrLabel.d(q0, q0, "-")


@cache
def _ague_terms(lam: Partition) -> dict[IrrLabel, int]:
    el = P.sign(lam)
    out: dict[IrrLabel, int] = {}
    for mu, k in S.kostka_column(lam).items():
        if not P.has_minimal_core(mu):
            continue
        c = el * P.sign(mu) * k(-1)
        if not c:
            continue
        if P.is_very_even(mu):
            for chi in _very_even_pair(mu):
                out[chi] = out.get(chi, 0) + c
        else:
            chi = label_of("D", mu)
            out[chi] = out.get(chi, 0) + c
    return {k: v for k, v in out.items() if v}


@cache
def ague(lam: Partition) -> ClassFunction:
    """The averaged type-D character; ``ague(()) = 1`` and ``ague((1,1)) = 2``."""
    lam = P.make(lam)
    n = _rank("D", lam)
    if not P.is_valid_jordan_type("D", n, lam):
        raise InvalidJordanType(f"{lam} is not a Jordan type for D{n}")
    g = weyl_group("D", n)
    if n == 0:
        return g.trivial()
    return combine(_ague_terms(lam), g)


def _half_tilde(mu: Partition) -> Partition:
    return tuple(p // 2 for p in mu[::2])


@cache
def _d_terms(lam: Partition, split: str | None) -> dict[IrrLabel, Fraction]:
    if split is None:
        return {k: Fraction(v, 2) for k, v in _ague_terms(lam).items()}
    sgn = 1 if split == "+" else -1
    lt = _half_tilde(lam)
    out: dict[IrrLabel, Fraction] = {}
    for mu, k in S.kostka_column(lam).items():
        if not P.has_minimal_core(mu):
            continue
        km = k(-1)
        if P.is_very_even(mu):
            kt = S.kostka_number(_half_tilde(mu), lt)
            plus, minus = _very_even_pair(mu)
            out[plus] = out.get(plus, 0) + Fraction(km + sgn * kt, 2)
            out[minus] = out.get(minus, 0) + Fraction(km - sgn * kt, 2)
        elif km:
            chi = label_of("D", mu)
            out[chi] = out.get(chi, 0) + Fraction(P.sign(mu) * km, 2)
    return {k: v for k, v in out.items() if v}


@cache
def d_total(nl: NilpotentLabel) -> ClassFunction:
    """Total Springer character of a type-D nilpotent orbit."""
    if nl.type != "D":
        raise InvalidJordanType("d_total needs type D")
    g = weyl_group("D", nl.n)
    if nl.n == 0:
        return g.trivial()
    return combine(_d_terms(nl.lam, nl.split), g)


def total_character(nl: NilpotentLabel) -> ClassFunction:
    """Character of ``W`` on the total cohomology of the Springer fiber."""
    if nl.type == "A":
        g = weyl_group("A", nl.n)
        terms = {IrrLabel("A", mu): k(1) for mu, k in S.kostka_column(nl.lam).items()}
        return combine(terms, g)
    if nl.type in ("B", "C"):
        return gue(nl.type, nl.lam)
    return d_total(nl)


def decomposition(nl: NilpotentLabel) -> dict[IrrLabel, Fraction]:
    """Irreducible multiplicities of the total character, in label order."""
    if nl.type in ("B", "C"):
        terms = _gue_terms(nl.type, nl.lam)
    elif nl.type == "D":
        terms = _d_terms(nl.lam, nl.split) if nl.n else {IrrLabel.d((), ()): 1}
    else:
        terms = {IrrLabel("A", mu): k(1) for mu, k in S.kostka_column(nl.lam).items()}
    g = weyl_group(group_type(nl.type), nl.n)
    return {chi: Fraction(terms[chi]) for chi in g.irreps if terms.get(chi)}


# --- Green values -----------------------------------------------------------------


def green_value(nl: NilpotentLabel, rho: Partition, rho_split: str | None = None) -> Fraction:
    """Character value at ``w_rho`` in ``S_n`` (``S_n+``/``S_n-`` via ``rho_split``)."""
    rho = P.make(rho)
    if P.size(rho) != nl.n:
        raise SizeMismatch(f"{rho} is not a partition of {nl.n}")
    lam = nl.lam
    if nl.type == "A":
        return Fraction(S.green_at(lam, rho, 1))
    if nl.type == "B":
        return Fraction(S.green_at(lam, P.union(P.scale(rho, 2), (1,)), -1))
    if nl.type == "C":
        return Fraction(S.green_at(lam, P.scale(rho, 2), -1))
    if nl.n == 0:
        return Fraction(1)
    g = Fraction(S.green_at(lam, P.scale(rho, 2), -1))
    rho_even = all(p % 2 == 0 for p in rho)
    if rho_even and rho_split not in ("+", "-"):
        raise InvalidLabel(f"even class {rho} needs a split marker")
    if not rho_even and rho_split is not None:
        raise InvalidLabel(f"class {rho} does not split")
    if nl.very_even and rho_even:
        return g if nl.split == rho_split else Fraction(0)
    return g / 2


def graded_char_A(lam: Partition, rho: Partition) -> IntPoly:
    """Graded character value ``sum_i (-1)^i t^(i/2) tr(w_rho, H^i)`` in type A."""
    return S.green(lam, rho)


def euler_characteristic(nl: NilpotentLabel) -> Fraction:
    """Euler characteristic of the Springer fiber."""
    n = nl.n
    if nl.type == "A":
        return Fraction(S.green_at(nl.lam, (1,) * n, 1))
    if nl.type == "B":
        return Fraction(S.green_at(nl.lam, (2,) * n + (1,), -1))
    if nl.type == "C":
        return Fraction(S.green_at(nl.lam, (2,) * n, -1))
    if n == 0:
        return Fraction(1)
    return Fraction(S.green_at(nl.lam, (2,) * n, -1), 2)


# --- the three-sum expansion ---------------------------------------------------------


def restriction_terms(lam: Partition, k: int, general: bool = False) -> list[tuple[int, Partition]]:
    """Coefficient/partition pairs of the restriction to a ``k``-cycle coset.

    With ``general=True`` the signs carry the extra conjugate-partition
    factors needed for arbitrary ``lam``; for Jordan types of types B, C, D
    those factors are all ``+1``.
    """
    lam = P.make(lam)
    if k < 1:
        raise ValueError("k must be positive")
    mult = P.multiplicities(lam)
    conj = P.conjugate(lam)

    def colsum(lo: int, hi: int) -> int:
        return sum(conj[a - 1] for a in range(max(lo, 1), hi + 1) if a <= len(conj))

    out: list[tuple[int, Partition]] = []
    for i in sorted(mult, reverse=True):
        m = mult[i]
        if i >= k and m >= 2:
            out.append((2 * (m // 2), P.replace(lam, [i, i], [i - k, i - k])))
        if i >= 2 * k and m % 2:
            new = P.replace(lam, [i], [i - 2 * k])
            s = P.move_height(lam, i, i - 2 * k) + (colsum(i - 2 * k + 1, i) if general else 0)
            out.append((-1 if s % 2 else 1, new))
    odd = sorted((i for i, m in mult.items() if m % 2), reverse=True)
    for a, i in enumerate(odd):
        for j in odd[a + 1:]:
            if (i - j) % 2 or not (0 < i - j < 2 * k <= i + j):
                continue
            s = P.move_height(lam, i, j)
            if general:
                s += colsum(j + 1, i)
            h = (i + j) // 2 - k
            out.append((-2 if s % 2 else 2, P.replace(lam, [i, j], [h, h])))
    return out


def d_restriction_terms(nl: NilpotentLabel, k: int) -> list[tuple[Fraction, NilpotentLabel]]:
    """Split-level refinement of :func:`restriction_terms` in type D, ``k <= n-2``."""
    if nl.type != "D" or not 1 <= k <= nl.n - 2:
        raise InvalidLabel("needs type D and 1 <= k <= n-2")
    out = []
    for c, mu in restriction_terms(nl.lam, k):
        if mu and P.is_very_even(mu):
            if nl.very_even:
                out.append((Fraction(c), NilpotentLabel("D", nl.n - k, mu, nl.split)))
            else:
                for s in "+-":
                    out.append((Fraction(c, 2), NilpotentLabel("D", nl.n - k, mu, s)))
        else:
            out.append((Fraction(c), NilpotentLabel("D", nl.n - k, mu)))
    return out


def d_cycle_value(nl: NilpotentLabel, which: str | None = None) -> int:
    """Closed-form value at an ``(n-1)``-cycle (``which is None``) or at an
    ``n``-cycle of ``S_n+``/``S_n-``."""
    n, lam = nl.n, nl.lam
    if which is None:
        if n == 2:
            return {(1, 1, 1, 1): 4, (2, 2): 2, (3, 1): 1}.get(lam, 0)
        if lam in ((n - 1, n - 1, 1, 1), (n, n)):
            return 2
        if lam == (2 * n - 1, 1):
            return 1
        if len(lam) == 4 and lam[2:] == (1, 1) and lam[0] > lam[1] and lam[1] % 2 and lam[0] % 2:
            return 2
        if len(lam) == 2 and lam[0] > lam[1] > 1 and lam[0] % 2 and lam[1] % 2:
            return 2
        return 0
    if len(lam) == 2 and lam[0] > lam[1] and lam[0] % 2 and lam[1] % 2:
        return 1
    if lam == (n, n):
        if n % 2:
            return 1
        return 2 if nl.split == which else 0
    return 0
