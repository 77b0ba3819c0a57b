"""Integer polynomials in one variable ``t``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with exact coefficients, lowest degree first.

    The zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c: Scalar) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: Scalar = 1) -> IntPoly:
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> Scalar:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, c in enumerate(other.coeffs):
                    out[i + j] += a * c
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def reciprocal(self, d: int) -> IntPoly:
        """``t**d * p(1/t)``; requires ``d >= degree``."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds {d}")
        return IntPoly(tuple(reversed(self.coeffs + (0,) * (d + 1 - len(self.coeffs)))))

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> IntPoly:
        vals = []
        for s in data["coeffs"]:
            f = Fraction(s)
            vals.append(int(f) if f.denominator == 1 else f)
        return cls(tuple(vals))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, body in pieces[1:]:
            out += f" {s} {body}"
        return out


ZERO = IntPoly()
ONE = IntPoly.const(1)
T = IntPoly.monomial(1)
