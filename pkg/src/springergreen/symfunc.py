"""Symmetric functions in the Schur basis with polynomial coefficients.

A :class:`SymFunc` is a homogeneous symmetric function stored as a map from
partitions to :class:`~springergreen.poly.IntPoly`; :class:`SymFunc2` does the
same for functions of two alphabets ``x`` and ``y``, keyed by pairs.  All
arithmetic is exact.
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from functools import cache
from typing import Callable, Iterable, Mapping

from . import partitions as P
from .errors import DegreeTooSmall, SizeMismatch
from .poly import ONE, ZERO, IntPoly

Partition = P.Partition


def _as_poly(c) -> IntPoly:
    if isinstance(c, IntPoly):
        return c
    return IntPoly.const(c)


class SymFunc:
    """Homogeneous symmetric function ``sum_lam coeff[lam] * s_lam``."""

    __slots__ = ("degree", "_c")

    def __init__(self, degree: int, coeffs: Mapping[Partition, object] | None = None):
        self.degree = degree
        self._c: dict[Partition, IntPoly] = {}
        for lam, c in (coeffs or {}).items():
            if P.size(lam) != degree:
                raise SizeMismatch(f"{lam} does not have size {degree}")
            c = _as_poly(c)
            if c:
                self._c[lam] = self._c.get(lam, ZERO) + c
        self._c = {k: v for k, v in self._c.items() if v}

    @classmethod
    def schur(cls, lam: Partition) -> SymFunc:
        return cls(P.size(lam), {tuple(lam): ONE})

    @classmethod
    def zero(cls, degree: int) -> SymFunc:
        return cls(degree)

    def coeff(self, lam: Partition) -> IntPoly:
        return self._c.get(tuple(lam), ZERO)

    def terms(self) -> list[tuple[Partition, IntPoly]]:
        """Nonzero terms, partitions in reverse lexicographic order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def _check(self, other: SymFunc) -> None:
        if self.degree != other.degree:
            raise SizeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other: SymFunc) -> SymFunc:
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return SymFunc(self.degree, out)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def __mul__(self, c) -> SymFunc:
        if isinstance(c, SymFunc):
            return multiply(self, c)
        c = _as_poly(c)
        return SymFunc(self.degree, {k: v * c for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.degree == other.degree and self._c == other._c

    def __hash__(self):
        return hash((self.degree, frozenset(self._c.items())))

    def at(self, t) -> SymFunc:
        """Specialize ``t`` to a number."""
        return SymFunc(self.degree, {k: v(t) for k, v in self._c.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*s{list(k)}" for k, v in self.terms()) or "0"
        return f"SymFunc[{self.degree}]({body})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"partition": P.fmt(lam), "poly": c.to_json()} for lam, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> SymFunc:
        return cls(
            data["degree"],
            {P.parse(t["partition"]): IntPoly.from_json(t["poly"]) for t in data["terms"]},
        )


def scalar(f: SymFunc, g: SymFunc) -> IntPoly:
    """Hall inner product, Schur functions orthonormal."""
    f._check(g)
    acc = ZERO
    for lam, c in f._c.items():
        d = g._c.get(lam)
        if d is not None:
            acc = acc + c * d
    return acc


def _linear(f: SymFunc, degree: int, image: Callable[[Partition], Mapping]) -> SymFunc:
    out: dict[Partition, IntPoly] = {}
    for lam, c in f._c.items():
        for mu, a in image(lam).items():
            if a:
                out[mu] = out.get(mu, ZERO) + c * a
    return SymFunc(degree, out)


def _integral(d: Mapping[Partition, Fraction]) -> dict[Partition, int]:
    out = {}
    for k, v in d.items():
        if v:
            if Fraction(v).denominator != 1:
                raise ArithmeticError(f"non-integral Schur coefficient {v} at {k}")
            out[k] = int(v)
    return out


# --- characters of symmetric groups --------------------------------------------


@cache
def schur_expand_p(rho: Partition) -> dict[Partition, int]:
    """Schur expansion of ``p_rho``: the values ``chi^lam(rho)``.

    Built by adding border strips one part at a time.
    """
    rho = P.make(rho)
    if not rho:
        return {(): 1}
    prev = schur_expand_p(rho[:-1])
    k = rho[-1]
    out: dict[Partition, int] = {}
    for nu, c in prev.items():
        for mu, ht in P.add_border_strips(nu, k):
            out[mu] = out.get(mu, 0) + (-c if ht % 2 else c)
    return {k: v for k, v in out.items() if v}


def character(lam: Partition, rho: Partition) -> int:
    """``chi^lam`` on the class of cycle type ``rho``."""
    if P.size(lam) != P.size(rho):
        raise SizeMismatch(f"{lam} and {rho} have different sizes")
    return schur_expand_p(P.make(rho)).get(tuple(lam), 0)


@cache
def skew_character(lam: Partition, mu: Partition, rho: Partition) -> int:
    """Skew character ``chi^{lam/mu}(rho)`` by iterated border-strip removal."""
    if not rho:
        return 1 if lam == mu else 0
    k = rho[0]
    total = 0
    for nu, ht in P.remove_border_strips(lam, k):
        if P.contains(nu, mu):
            v = skew_character(nu, mu, rho[1:])
            total += -v if ht % 2 else v
    return total


def power_sum(rho: Partition) -> SymFunc:
    rho = P.make(rho)
    return SymFunc(P.size(rho), schur_expand_p(rho))


# --- Kostka numbers and Kostka-Foulkes polynomials ---------------------------------


def _hstrips(shape: Partition, k: int) -> Iterable[list[int]]:
    """Row increments adding a horizontal strip of size ``k`` to ``shape``."""
    rows = list(shape) + [0]

    def rec(i, rem, acc):
        if i == len(rows):
            if rem == 0:
                yield acc
            return
        cap = rem if i == 0 else min(rem, rows[i - 1] - rows[i])
        for a in range(cap, -1, -1):
            yield from rec(i + 1, rem - a, acc + [a])

    yield from rec(0, k, [])


def _grow(shape: Partition, add: list[int]) -> Partition:
    return P.make(s + a for s, a in zip(list(shape) + [0], add))


@cache
def kostka_number(mu: Partition, lam: Partition) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``lam``."""
    if P.size(mu) != P.size(lam):
        raise SizeMismatch(f"{mu} and {lam} have different sizes")
    if not lam:
        return 1
    k = lam[-1]
    total = 0
    for nu, _ in _remove_hstrips(mu, k):
        total += kostka_number(nu, lam[:-1])
    return total


def _remove_hstrips(mu: Partition, k: int) -> list[tuple[Partition, list[int]]]:
    out = []
    rows = list(mu)

    def rec(i, rem, acc):
        if i == len(rows):
            if rem == 0:
                out.append((P.make(r - a for r, a in zip(rows, acc)), acc))
            return
        below = rows[i + 1] if i + 1 < len(rows) else 0
        for a in range(min(rem, rows[i] - below), -1, -1):
            rec(i + 1, rem - a, acc + [a])

    rec(0, k, [])
    return out


def charge(word: Iterable[int]) -> int:
    """Charge of a word whose content is a partition."""
    pos: dict[int, list[int]] = {}
    for i, a in enumerate(word):
        pos.setdefault(a, []).append(i)
    total = 0
    while pos.get(1):
        p = pos[1].pop()
        idx = 0
        r = 2
        while pos.get(r):
            lst = pos[r]
            k = bisect.bisect_left(lst, p)
            if k > 0:
                p = lst.pop(k - 1)
            else:
                p = lst.pop()
                idx += 1
            total += idx
            r += 1
    return total


@cache
def _kf_column(lam: Partition) -> dict[Partition, IntPoly]:
    """``K_{mu,lam}(t)`` for all ``mu``, summing ``t**charge`` over tableaux."""
    acc: dict[Partition, dict[int, int]] = {}

    def rec(i, shape, tab):
        if i == len(lam):
            word = [x for row in reversed(tab) for x in row]
            d = acc.setdefault(shape, {})
            c = charge(word)
            d[c] = d.get(c, 0) + 1
            return
        for add in _hstrips(shape, lam[i]):
            newtab = [row + [i + 1] * a for row, a in zip(tab + [[]], add)]
            rec(i + 1, _grow(shape, add), [r for r in newtab if r])

    rec(0, (), [])
    out = {}
    for mu, d in acc.items():
        coeffs = [0] * (max(d) + 1)
        for e, c in d.items():
            coeffs[e] = c
        out[mu] = IntPoly(tuple(coeffs))
    return out


def kostka_foulkes(mu: Partition, lam: Partition) -> IntPoly:
    """The Kostka-Foulkes polynomial ``K_{mu,lam}(t)``."""
    mu, lam = tuple(mu), tuple(lam)
    if P.size(mu) != P.size(lam):
        raise SizeMismatch(f"{mu} and {lam} have different sizes")
    return _kf_column(lam).get(mu, ZERO)


def kostka_column(lam: Partition) -> dict[Partition, IntPoly]:
    return dict(_kf_column(tuple(lam)))


def qprime(lam: Partition) -> SymFunc:
    """Modified Hall-Littlewood function ``Q'_lam = sum_mu K_{mu,lam}(t) s_mu``."""
    lam = tuple(lam)
    return SymFunc(P.size(lam), _kf_column(lam))


@cache
def hall_littlewood_p(mu: Partition) -> SymFunc:
    """``P_mu`` from ``s_mu = sum_{lam <= mu} K_{mu,lam}(t) P_lam``."""
    mu = tuple(mu)
    n = P.size(mu)
    out = SymFunc.schur(mu)
    for lam in P.partitions(n):
        if lam != mu and P.dominates(mu, lam):
            k = kostka_foulkes(mu, lam)
            if k:
                out = out - hall_littlewood_p(lam) * k
    return out


@cache
def green_x(lam: Partition, rho: Partition) -> IntPoly:
    """``X^lam_rho(t) = <p_rho, Q'_lam>``."""
    lam, rho = tuple(lam), P.make(rho)
    if P.size(lam) != P.size(rho):
        raise SizeMismatch(f"{lam} and {rho} have different sizes")
    chars = schur_expand_p(rho)
    acc = ZERO
    for mu, k in _kf_column(lam).items():
        c = chars.get(mu)
        if c:
            acc = acc + k * c
    return acc


def green(lam: Partition, rho: Partition) -> IntPoly:
    """Green polynomial ``t**b(lam) * X^lam_rho(1/t)``."""
    return green_x(lam, rho).reciprocal(P.b(lam))


def green_at(lam: Partition, rho: Partition, t) -> int:
    return green(lam, rho)(t)


# --- products and operators -------------------------------------------------------


@cache
def littlewood_richardson(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Schur expansion of ``s_mu * s_nu``."""
    mu, nu = tuple(mu), tuple(nu)
    out: dict[Partition, int] = {}

    def rec(i, shape, prev):
        # prev[r]: cells carrying letter i in row r; the lattice condition
        # requires #(i+1) in rows <= r to be at most #i in rows < r
        if i == len(nu):
            out[shape] = out.get(shape, 0) + 1
            return
        for add in _hstrips(shape, nu[i]):
            if i > 0:
                ok = True
                have = need = 0
                for r, a in enumerate(add):
                    need += a
                    if need > have:
                        ok = False
                        break
                    have += prev[r] if r < len(prev) else 0
                if not ok:
                    continue
            rec(i + 1, _grow(shape, add), add)

    rec(0, mu, [])
    return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    out: dict[Partition, IntPoly] = {}
    for lam, c in f._c.items():
        for mu, d in g._c.items():
            cd = c * d
            for nu, m in littlewood_richardson(lam, mu).items():
                out[nu] = out.get(nu, ZERO) + cd * m
    return SymFunc(f.degree + g.degree, out)


def omega(f: SymFunc) -> SymFunc:
    return _linear(f, f.degree, lambda lam: {P.conjugate(lam): 1})


@cache
def _skew_schur(lam: Partition, mu: Partition) -> dict[Partition, int]:
    n = P.size(lam) - P.size(mu)
    acc: dict[Partition, Fraction] = {}
    for rho in P.partitions(n):
        c = skew_character(lam, mu, rho)
        if c:
            w = Fraction(c, P.z(rho))
            for nu, x in schur_expand_p(rho).items():
                acc[nu] = acc.get(nu, 0) + w * x
    return _integral(acc)


def skew_schur(lam: Partition, mu: Partition) -> SymFunc:
    """``s_{lam/mu}``; zero when ``mu`` is not inside ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    n = P.size(lam) - P.size(mu)
    if n < 0:
        raise SizeMismatch(f"{mu} is larger than {lam}")
    if not P.contains(lam, mu):
        return SymFunc.zero(n)
    return SymFunc(n, _skew_schur(lam, mu))


@cache
def _plethysm_p2(mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, Fraction] = {}
    for rho in P.partitions(P.size(mu)):
        c = schur_expand_p(rho).get(mu, 0)
        if c:
            w = Fraction(c, P.z(rho))
            for nu, x in schur_expand_p(P.scale(rho, 2)).items():
                acc[nu] = acc.get(nu, 0) + w * x
    return _integral(acc)


def plethysm_p2(f: SymFunc) -> SymFunc:
    """``f[p_2]``, substituting ``p_k -> p_{2k}``."""
    return _linear(f, 2 * f.degree, _plethysm_p2)


@cache
def _schur_in_h(mu: Partition) -> dict[Partition, int]:
    """Coefficients of ``s_mu`` in the complete homogeneous basis."""
    out = {mu: 1}
    for nu in P.partitions(P.size(mu)):
        if nu != mu and P.dominates(nu, mu):
            k = kostka_number(nu, mu)
            if k:
                for lam, c in _schur_in_h(nu).items():
                    out[lam] = out.get(lam, 0) - k * c
    return {k: v for k, v in out.items() if v}


def _h_in_schur(lam: Partition) -> dict[Partition, int]:
    out = {}
    for mu in P.partitions(P.size(lam)):
        k = kostka_number(mu, lam)
        if k:
            out[mu] = k
    return out


@cache
def _verschiebung(mu: Partition) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for lam, c in _schur_in_h(mu).items():
        if all(p % 2 == 0 for p in lam):
            for nu, k in _h_in_schur(tuple(p // 2 for p in lam)).items():
                out[nu] = out.get(nu, 0) + c * k
    return {k: v for k, v in out.items() if v}


def verschiebung(f: SymFunc) -> SymFunc:
    """Adjoint of ``f -> f[p_2]``: ``h_lam -> h_{lam/2}`` or zero.

    An odd-degree input maps to zero in degree ``f.degree // 2``.
    """
    if f.degree % 2:
        return SymFunc.zero(f.degree // 2)
    return _linear(f, f.degree // 2, _verschiebung)


@cache
def _skew_by_p(k: int, mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, Fraction] = {}
    for rho in P.partitions(P.size(mu)):
        m = rho.count(k)
        if not m:
            continue
        c = schur_expand_p(rho).get(mu, 0)
        if c:
            w = Fraction(c * k * m, P.z(rho))
            for nu, x in schur_expand_p(P.replace(rho, [k], [])).items():
                acc[nu] = acc.get(nu, 0) + w * x
    return _integral(acc)


def skew_by_p(k: int, f: SymFunc) -> SymFunc:
    """The adjoint of multiplication by ``p_k``, i.e. ``k d/dp_k``."""
    if k <= 0:
        raise ValueError("k must be positive")
    if f.degree < k:
        raise DegreeTooSmall(f"degree {f.degree} is less than {k}")
    return _linear(f, f.degree - k, lambda mu: _skew_by_p(k, mu))


# --- two alphabets ------------------------------------------------------------------

Pair = tuple[Partition, Partition]


class SymFunc2:
    """Homogeneous function ``sum coeff[(a, b)] * s_a(x) s_b(y)``."""

    __slots__ = ("degree", "_c")

    def __init__(self, degree: int, coeffs: Mapping[Pair, object] | None = None):
        self.degree = degree
        self._c: dict[Pair, IntPoly] = {}
        for (a, c_), v in (coeffs or {}).items():
            if P.size(a) + P.size(c_) != degree:
                raise SizeMismatch(f"{(a, c_)} does not have size {degree}")
            v = _as_poly(v)
            key = (tuple(a), tuple(c_))
            self._c[key] = self._c.get(key, ZERO) + v
        self._c = {k: v for k, v in self._c.items() if v}

    @classmethod
    def pair(cls, a: Partition, c: Partition) -> SymFunc2:
        return cls(P.size(a) + P.size(c), {(tuple(a), tuple(c)): ONE})

    def coeff(self, a: Partition, c: Partition) -> IntPoly:
        return self._c.get((tuple(a), tuple(c)), ZERO)

    def terms(self) -> list[tuple[Pair, IntPoly]]:
        return sorted(self._c.items(), reverse=True)

    def __add__(self, other: SymFunc2) -> SymFunc2:
        if self.degree != other.degree:
            raise SizeMismatch("degrees differ")
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return SymFunc2(self.degree, out)

    def __neg__(self) -> SymFunc2:
        return SymFunc2(self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: SymFunc2) -> SymFunc2:
        return self + (-other)

    def __mul__(self, c) -> SymFunc2:
        c = _as_poly(c)
        return SymFunc2(self.degree, {k: v * c for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc2):
            return NotImplemented
        return self.degree == other.degree and self._c == other._c

    def __hash__(self):
        return hash((self.degree, frozenset(self._c.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*s{list(a)}(x)s{list(c)}(y)" for (a, c), v in self.terms())
        return f"SymFunc2[{self.degree}]({body or '0'})"


def sf2_scalar(f: SymFunc2, g: SymFunc2) -> IntPoly:
    if f.degree != g.degree:
        raise SizeMismatch("degrees differ")
    acc = ZERO
    for k, v in f._c.items():
        w = g._c.get(k)
        if w is not None:
            acc = acc + v * w
    return acc


@cache
def _sf2_p(rho: Partition, sigma: Partition) -> dict[Pair, int]:
    parts = [(k, 1) for k in rho] + [(k, -1) for k in sigma]
    out: dict[Pair, int] = {}
    for mask in range(1 << len(parts)):
        xs, ys, sgn = [], [], 1
        for i, (k, s) in enumerate(parts):
            if mask >> i & 1:
                ys.append(k)
                sgn *= s
            else:
                xs.append(k)
        ex, ey = schur_expand_p(P.make(xs)), schur_expand_p(P.make(ys))
        for a, ca in ex.items():
            for c, cc in ey.items():
                out[(a, c)] = out.get((a, c), 0) + sgn * ca * cc
    return {k: v for k, v in out.items() if v}


def sf2_p(rho: Partition, sigma: Partition) -> SymFunc2:
    """``prod (p_r(x) + p_r(y)) * prod (p_s(x) - p_s(y))``."""
    rho, sigma = P.make(rho), P.make(sigma)
    return SymFunc2(P.size(rho) + P.size(sigma), _sf2_p(rho, sigma))


def sf2_nabla(f: SymFunc2) -> SymFunc:
    """Identify the two alphabets: ``s_a(x) s_b(y) -> s_a s_b``."""
    out: dict[Partition, IntPoly] = {}
    for (a, c), v in f._c.items():
        for nu, m in littlewood_richardson(a, c).items():
            out[nu] = out.get(nu, ZERO) + v * m
    return SymFunc(f.degree, out)


def sf2_delta(f: SymFunc) -> SymFunc2:
    """Coproduct ``s_lam -> sum_mu s_mu(x) s_{lam/mu}(y)``."""
    out: dict[Pair, IntPoly] = {}
    for lam, v in f._c.items():
        for k in range(P.size(lam) + 1):
            for mu in P.partitions(k):
                if not P.contains(lam, mu):
                    continue
                for nu, m in _skew_schur(lam, mu).items():
                    out[(mu, nu)] = out.get((mu, nu), ZERO) + v * m
    return SymFunc2(f.degree, out)
