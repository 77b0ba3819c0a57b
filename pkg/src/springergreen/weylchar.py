"""Conjugacy classes, irreducible characters and class functions of the
classical Weyl groups ``S_n``, ``W(BC_n)`` and ``W(D_n)``.

Classes of ``W(BC_n)`` are pairs ``(rho, sigma)`` of cycle types of positive
and negative cycles.  In ``W(D_n)`` only ``l(sigma)`` even occurs, and a class
``(rho, ())`` with every part of ``rho`` even splits into halves ``+``/``-``;
the ``+`` half contains the permutations of cycle type ``rho`` from the
parabolic subgroup ``S_n+``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Iterable, Mapping

from . import partitions as P
from . import symfunc as S
from .errors import InvalidLabel, InvalidParabolic, RankTooSmall, SizeMismatch
from .poly import IntPoly

Partition = P.Partition

GROUP_TYPES = ("A", "BC", "D")


def group_type(lie_type: str) -> str:
    """Map a Lie type to the type of its Weyl group."""
    if lie_type in ("B", "C"):
        return "BC"
    if lie_type in GROUP_TYPES:
        return lie_type
    raise InvalidLabel(f"unknown type {lie_type!r}")


def _fmt_part(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "∅"


@dataclass(frozen=True)
class ClassLabel:
    rho: Partition
    sigma: Partition = ()
    split: str | None = None

    def sort_key(self):
        return (
            P.size(self.sigma),
            tuple(-x for x in self.sigma),
            self.rho,
            self.split or "",
        )

    def __str__(self) -> str:
        if self.split:
            return f"{P.fmt(self.rho)};{P.fmt(self.sigma)};{self.split}"
        if self.sigma:
            return f"{P.fmt(self.rho)};{P.fmt(self.sigma)}"
        return P.fmt(self.rho) or "-"

    @classmethod
    def parse(cls, text: str) -> ClassLabel:
        """Parse ``"rho;sigma"`` with an optional ``";+"``/``";-"`` suffix.

        A lone ``-`` stands for an empty partition, and the short form
        ``"2,-;+"`` (sigma written after a comma) is accepted as well.
        """
        fields = [f.strip().replace("−", "-") for f in text.strip().split(";")]
        split = None
        if len(fields) == 2 and fields[1] in ("+", "-") and "," in fields[0]:
            head, _, tail = fields[0].rpartition(",")
            if tail == "-":
                fields = [head, "", fields[1]]
        if len(fields) == 3:
            split = fields[2].strip().replace("−", "-")
            if split not in ("+", "-"):
                raise InvalidLabel(f"bad split marker in {text!r}")
        elif len(fields) not in (1, 2):
            raise InvalidLabel(f"malformed class label {text!r}")
        try:
            rho = P.parse(fields[0])
            sigma = P.parse(fields[1]) if len(fields) > 1 else ()
        except ValueError as exc:
            raise InvalidLabel(str(exc)) from exc
        return cls(rho, sigma, split)


@dataclass(frozen=True)
class IrrLabel:
    """Irreducible character label.

    Type A uses ``alpha`` only.  Type BC uses the ordered pair
    ``(alpha, beta)``.  Type D stores the unordered pair with
    ``alpha <= beta`` and a ``split`` marker when ``alpha == beta``.
    """

    kind: str
    alpha: Partition
    beta: Partition = ()
    split: str | None = None

    def __str__(self) -> str:
        if self.kind == "A":
            return P.fmt(self.alpha) or "∅"
        a, b = _fmt_part(self.alpha), _fmt_part(self.beta)
        if self.kind == "BC":
            return f"({a},{b})"
        return f"{{{a},{b}}}" + (self.split or "")

    @classmethod
    def d(cls, alpha: Partition, beta: Partition, split: str | None = None) -> IrrLabel:
        alpha, beta = tuple(alpha), tuple(beta)
        if beta < alpha:
            alpha, beta = beta, alpha
        return cls("D", alpha, beta, split)


@dataclass(frozen=True)
class ClassData:
    label: ClassLabel
    centralizer_order: int
    class_size: int


def _bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    return [
        (a, c)
        for k in range(n, -1, -1)
        for a in P.partitions(k)
        for c in P.partitions(n - k)
    ]


def _all_even(rho: Partition) -> bool:
    return all(p % 2 == 0 for p in rho)


class WeylGroup:
    """A classical Weyl group with its classes and character table."""

    def __init__(self, gtype: str, n: int):
        if gtype not in GROUP_TYPES:
            raise InvalidLabel(f"unknown group type {gtype!r}")
        if n < 0:
            raise RankTooSmall("rank must be non-negative")
        self.type = gtype
        self.n = n
        if gtype == "A":
            self.order = factorial(n)
        elif gtype == "BC":
            self.order = 2**n * factorial(n)
        else:
            self.order = max(1, 2 ** (n - 1) * factorial(n)) if n else 1
        data = [ClassData(c, z, self.order // z) for c, z in self._raw_classes()]
        data.sort(key=lambda d: d.label.sort_key())
        self.class_data: tuple[ClassData, ...] = tuple(data)
        self.classes: tuple[ClassLabel, ...] = tuple(d.label for d in data)
        self.index = {c: i for i, c in enumerate(self.classes)}
        self.centralizers = tuple(d.centralizer_order for d in data)
        self._chars: dict[IrrLabel, ClassFunction] = {}

    def __repr__(self) -> str:
        return f"WeylGroup({self.type!r}, {self.n})"

    def _raw_classes(self):
        n = self.n
        if self.type == "A":
            for rho in P.partitions(n):
                yield ClassLabel(rho), P.z(rho)
            return
        for rho, sigma in _bipartitions(n):
            zc = P.z(rho) * P.z(sigma) * 2 ** (len(rho) + len(sigma))
            if self.type == "BC":
                yield ClassLabel(rho, sigma), zc
            elif n == 0:
                yield ClassLabel((), ()), 1
            elif len(sigma) % 2 == 0:
                if not sigma and _all_even(rho):
                    yield ClassLabel(rho, (), "+"), zc
                    yield ClassLabel(rho, (), "-"), zc
                else:
                    yield ClassLabel(rho, sigma), zc // 2

    @property
    def identity(self) -> ClassLabel:
        if self.type == "A":
            return ClassLabel((1,) * self.n)
        return ClassLabel((1,) * self.n, ())

    def centralizer(self, c: ClassLabel) -> int:
        return self.centralizers[self.position(c)]

    def position(self, c: ClassLabel) -> int:
        try:
            return self.index[c]
        except KeyError:
            raise InvalidLabel(f"{c} is not a class of {self}") from None

    def normalize(self, c: ClassLabel) -> ClassLabel:
        """Accept a label given without a needed split marker only if unambiguous."""
        if c in self.index:
            return c
        raise InvalidLabel(f"{c} is not a class of {self}")

    # --- irreducibles ---------------------------------------------------

    @property
    def irreps(self) -> tuple[IrrLabel, ...]:
        return _irreps(self.type, self.n)

    def character(self, label: IrrLabel) -> ClassFunction:
        if label not in self._chars:
            if label not in _irrep_set(self.type, self.n):
                raise InvalidLabel(f"{label} is not an irreducible of {self}")
            self._chars[label] = ClassFunction(self, _char_values(self, label))
        return self._chars[label]

    def trivial(self) -> ClassFunction:
        return self.constant(1)

    def constant(self, c) -> ClassFunction:
        return ClassFunction(self, tuple(Fraction(c) for _ in self.classes))

    def zero(self) -> ClassFunction:
        return self.constant(0)

    def from_mapping(self, values: Mapping[ClassLabel, object]) -> ClassFunction:
        return ClassFunction(self, tuple(Fraction(values.get(c, 0)) for c in self.classes))

    def table(self) -> dict[IrrLabel, tuple[Fraction, ...]]:
        return {chi: self.character(chi).values for chi in self.irreps}


@cache
def weyl_group(gtype: str, n: int) -> WeylGroup:
    return WeylGroup(gtype, n)


def classes(gtype: str, n: int) -> list[ClassData]:
    """Public class list; type D needs rank at least 2."""
    gtype = group_type(gtype)
    if gtype == "D" and n < 2:
        raise RankTooSmall("type D needs n >= 2")
    return list(weyl_group(gtype, n).class_data)


@cache
def _irreps(gtype: str, n: int) -> tuple[IrrLabel, ...]:
    if gtype == "A":
        return tuple(IrrLabel("A", lam) for lam in P.partitions(n))
    if gtype == "BC":
        return tuple(IrrLabel("BC", a, c) for a, c in _bipartitions(n))
    if n == 0:
        return (IrrLabel.d((), ()),)
    out: list[IrrLabel] = []
    seen = set()
    for a, c in _bipartitions(n):
        key = IrrLabel.d(a, c)
        if key in seen:
            continue
        seen.add(key)
        if a == c:
            out += [IrrLabel.d(a, c, "+"), IrrLabel.d(a, c, "-")]
        else:
            out.append(key)
    return tuple(out)


@cache
def _irrep_set(gtype: str, n: int) -> frozenset:
    return frozenset(_irreps(gtype, n))


def _char_values(g: WeylGroup, label: IrrLabel) -> tuple[Fraction, ...]:
    if g.type == "A":
        return tuple(Fraction(S.character(label.alpha, c.rho)) for c in g.classes)
    if g.type == "BC":
        key = (label.alpha, label.beta)
        return tuple(Fraction(S._sf2_p(c.rho, c.sigma).get(key, 0)) for c in g.classes)
    if g.n == 0:
        return (Fraction(1),)
    key = (label.alpha, label.beta)
    base = [Fraction(S._sf2_p(c.rho, c.sigma).get(key, 0)) for c in g.classes]
    if label.split is None:
        return tuple(base)
    sgn = 1 if label.split == "+" else -1
    delta = difference_character(g, label.alpha)
    return tuple((v + sgn * d) / 2 for v, d in zip(base, delta.values))


def difference_character(g: WeylGroup, lam: Partition) -> ClassFunction:
    """``Delta_lam``: ``2**l(tau) * chi^lam(tau)`` on ``(2 tau, ())+``, negated
    on the ``-`` halves and zero elsewhere."""
    if g.type != "D" or g.n != 2 * P.size(lam):
        raise InvalidLabel(f"no difference character for {lam} in {g}")
    vals = []
    for c in g.classes:
        if c.split is None:
            vals.append(Fraction(0))
            continue
        tau = tuple(p // 2 for p in c.rho)
        v = 2 ** len(tau) * S.character(lam, tau)
        vals.append(Fraction(v if c.split == "+" else -v))
    return ClassFunction(g, tuple(vals))


def sym_char(mu: Partition, rho: Partition) -> int:
    return S.character(mu, rho)


def bc_char(alpha: Partition, beta: Partition) -> ClassFunction:
    n = P.size(alpha) + P.size(beta)
    return weyl_group("BC", n).character(IrrLabel("BC", tuple(alpha), tuple(beta)))


def d_char(label: IrrLabel) -> ClassFunction:
    n = P.size(label.alpha) + P.size(label.beta)
    if n < 2:
        raise RankTooSmall("type D needs n >= 2")
    return weyl_group("D", n).character(label)


# --- class functions -------------------------------------------------------------


class ClassFunction:
    """Exact rational-valued function on the classes of a Weyl group."""

    __slots__ = ("group", "values")

    def __init__(self, group: WeylGroup, values: Iterable):
        self.group = group
        self.values = tuple(Fraction(v) for v in values)
        if len(self.values) != len(group.classes):
            raise SizeMismatch("wrong number of class values")

    def __call__(self, c: ClassLabel) -> Fraction:
        return self.values[self.group.position(c)]

    def items(self):
        return zip(self.group.classes, self.values)

    def _check(self, other: ClassFunction):
        if self.group is not other.group:
            raise SizeMismatch(f"{self.group} and {other.group} differ")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.group, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.group, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> ClassFunction:
        return ClassFunction(self.group, (-a for a in self.values))

    def __mul__(self, c) -> ClassFunction:
        if isinstance(c, ClassFunction):
            self._check(c)
            return ClassFunction(self.group, (a * b for a, b in zip(self.values, c.values)))
        return ClassFunction(self.group, (a * c for a in self.values))

    __rmul__ = __mul__

    def __truediv__(self, c) -> ClassFunction:
        return ClassFunction(self.group, (a / c for a in self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash((self.group.type, self.group.n, self.values))

    def __repr__(self) -> str:
        return f"ClassFunction({self.group}, {[str(v) for v in self.values]})"

    @property
    def dimension(self) -> Fraction:
        return self(self.group.identity)

    def decompose(self) -> dict[IrrLabel, Fraction]:
        """Multiplicities of the irreducibles, zeros omitted, in label order."""
        out = {}
        for chi in self.group.irreps:
            m = inner(self, self.group.character(chi))
            if m:
                out[chi] = m
        return out


def inner(f: ClassFunction, g: ClassFunction) -> Fraction:
    f._check(g)
    G = f.group
    return sum(
        (a * b * Fraction(G.order // z, G.order) for a, b, z in zip(f.values, g.values, G.centralizers)),
        Fraction(0),
    )


def combine(terms: Mapping[IrrLabel, object], group: WeylGroup) -> ClassFunction:
    """``sum c * chi`` for a mapping irreducible -> coefficient."""
    acc = [Fraction(0)] * len(group.classes)
    for chi, c in terms.items():
        if c:
            for i, v in enumerate(group.character(chi).values):
                acc[i] += c * v
    return ClassFunction(group, acc)


# --- parabolic subgroups ----------------------------------------------------------


class Parabolic:
    """The subgroup ``S_k x W'`` of ``W``, with ``W'`` of the same type and rank ``n-k``.

    In type D with ``k == n`` and ``n`` even there are two non-conjugate
    choices ``S_n+`` and ``S_n-``, selected by ``which``.
    """

    def __init__(self, group: WeylGroup, k: int, which: str | None = None):
        n = group.n
        if not 1 <= k <= n:
            raise InvalidParabolic(f"k={k} out of range for {group}")
        if which is not None and not (group.type == "D" and k == n):
            raise InvalidParabolic("only S_n in type D takes a sign")
        if which not in (None, "+", "-"):
            raise InvalidParabolic(f"bad sign {which!r}")
        if group.type == "D" and k == n and n % 2 == 0 and which is None:
            raise InvalidParabolic("S_n in W(D_n), n even, needs a sign")
        self.group = group
        self.k = k
        self.which = which or "+"
        self.sub = weyl_group(group.type, n - k)
        self.left = weyl_group("A", k)
        self.order = factorial(k) * self.sub.order
        self.classes = [(tau, c) for tau in P.partitions(k) for c in self.sub.classes]
        self.centralizers = [P.z(tau) * self.sub.centralizer(c) for tau, c in self.classes]

    def fuse(self, tau: Partition, c: ClassLabel) -> ClassLabel:
        g = self.group
        if g.type == "A":
            return ClassLabel(P.union(tau, c.rho))
        rho = P.union(tau, c.rho)
        if g.type == "BC":
            return ClassLabel(rho, c.sigma)
        if c.sigma or not _all_even(rho):
            return ClassLabel(rho, c.sigma)
        return ClassLabel(rho, (), c.split or self.which)

    def product(self, right: ClassFunction | None = None,
                left: Callable[[Partition], object] | None = None) -> list[Fraction]:
        """Values of ``left x right`` on the classes of this subgroup."""
        out = []
        for tau, c in self.classes:
            a = Fraction(1) if left is None else Fraction(left(tau))
            b = Fraction(1) if right is None else right(c)
            out.append(a * b)
        return out


def parabolic(gtype: str, n: int, k: int, which: str | None = None) -> Parabolic:
    return Parabolic(weyl_group(group_type(gtype), n), k, which)


def induce(values: list[Fraction], par: Parabolic) -> ClassFunction:
    """Induce a class function of ``S_k x W'`` (values aligned to ``par.classes``)."""
    G = par.group
    acc = [Fraction(0)] * len(G.classes)
    for (tau, c), zh, v in zip(par.classes, par.centralizers, values):
        if v:
            i = G.position(par.fuse(tau, c))
            acc[i] += v / zh
    return ClassFunction(G, (a * z for a, z in zip(acc, G.centralizers)))


def induce_product(par: Parabolic, right: ClassFunction | None = None,
                   left: Callable[[Partition], object] | None = None) -> ClassFunction:
    return induce(par.product(right, left), par)


def restrict(f: ClassFunction, par: Parabolic) -> list[Fraction]:
    return [f(par.fuse(tau, c)) for tau, c in par.classes]


def restrict_coset(f: ClassFunction, k: int, which: str | None = None) -> ClassFunction:
    """``c*w' -> f(c w')`` on ``W'``, with ``c`` a ``k``-cycle of ``S_k``."""
    par = Parabolic(f.group, k, which)
    return ClassFunction(par.sub, (f(par.fuse((k,), c)) for c in par.sub.classes))


# --- Frobenius characteristics -----------------------------------------------------------


def frobenius_a(f: ClassFunction) -> S.SymFunc:
    g = f.group
    if g.type != "A":
        raise InvalidLabel("frobenius_a needs a symmetric group")
    out = S.SymFunc.zero(g.n)
    for c, v in f.items():
        if v:
            out = out + S.power_sum(c.rho) * IntPoly.const(v / P.z(c.rho))
    return out


def frobenius_a_inv(F: S.SymFunc) -> ClassFunction:
    g = weyl_group("A", F.degree)
    vals = []
    for c in g.classes:
        v = S.scalar(F, S.power_sum(c.rho))
        if v.degree > 0:
            raise ValueError("coefficients must be constant")
        vals.append(v.coeff(0))
    return ClassFunction(g, vals)


def frobenius_bc(f: ClassFunction) -> S.SymFunc2:
    g = f.group
    if g.type != "BC":
        raise InvalidLabel("frobenius_bc needs W(BC_n)")
    out = S.SymFunc2(g.n)
    for (c, v), z in zip(f.items(), g.centralizers):
        if v:
            out = out + S.sf2_p(c.rho, c.sigma) * IntPoly.const(v / z)
    return out


def frobenius_bc_inv(F: S.SymFunc2) -> ClassFunction:
    g = weyl_group("BC", F.degree)
    vals = []
    for c in g.classes:
        v = S.sf2_scalar(F, S.sf2_p(c.rho, c.sigma))
        if v.degree > 0:
            raise ValueError("coefficients must be constant")
        vals.append(v.coeff(0))
    return ClassFunction(g, vals)


def restrict_bc_to_d(f: ClassFunction) -> ClassFunction:
    """Restriction from ``W(BC_n)`` to ``W(D_n)``."""
    if f.group.type != "BC":
        raise InvalidLabel("expected a class function on W(BC_n)")
    d = weyl_group("D", f.group.n)
    return ClassFunction(d, (f(ClassLabel(c.rho, c.sigma)) for c in d.classes))
