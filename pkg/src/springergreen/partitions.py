"""Partition combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty partition is ``()``.  Every enumeration in this module yields
partitions in reverse lexicographic order, so ``(n,)`` comes first.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import EmptyShape, InvalidJordanType, PartNotPresent, SizeMismatch

Partition = tuple[int, ...]

LIE_TYPES = ("A", "B", "C", "D")


def make(parts: Iterable[int]) -> Partition:
    """Sort ``parts`` into a partition, dropping zeros."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def parse(text: str) -> Partition:
    """Parse ``"3,2,1"`` (or ``""``) into a partition."""
    text = text.strip()
    if not text or text in ("0", "()", "-"):
        return ()
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    return make(parts)


def fmt(lam: Partition) -> str:
    return ",".join(map(str, lam))


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def union(*parts: Partition) -> Partition:
    return make(x for p in parts for x in p)


def scale(lam: Partition, c: int) -> Partition:
    return tuple(c * p for p in lam)


def b(lam: Partition) -> int:
    """The statistic sum (i-1) * lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def z(lam: Partition) -> int:
    """Centralizer order of a permutation of cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def sign(lam: Partition) -> int:
    return -1 if b(lam) % 2 else 1


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether the diagram of ``mu`` fits inside that of ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order ``lam >= mu`` on partitions of the same size."""
    if size(lam) != size(mu):
        raise SizeMismatch(f"{lam} and {mu} have different sizes")
    a = c = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        c += mu[i] if i < len(mu) else 0
        if a < c:
            return False
    return True


def height(lam: Partition, mu: Partition) -> int:
    """Number of rows touched by the skew shape ``lam/mu``, minus one."""
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    rows = sum(1 for i, p in enumerate(lam) if p > (mu[i] if i < len(mu) else 0))
    if rows == 0:
        raise EmptyShape(f"{lam}/{mu} is empty")
    return rows - 1


def move_height(lam: Partition, i: int, j: int) -> int:
    """Parts strictly between ``j`` and ``i``: beads jumped when one part
    ``i`` slides to ``j`` on the abacus.

    This is the sign exponent attached to ``lam/lam<i->j>`` in restriction
    formulas; it is not the row count of that (possibly disconnected) strip.
    """
    if i not in lam:
        raise PartNotPresent(f"{i} is not a part of {lam}")
    lo, hi = min(i, j), max(i, j)
    return sum(1 for p in lam if lo < p < hi)


def replace(lam: Partition, old: Iterable[int], new: Iterable[int]) -> Partition:
    """Replace the parts ``old`` of ``lam`` by ``new``; zero parts vanish."""
    have = Counter(lam)
    need = Counter(old)
    if any(have[p] < c for p, c in need.items()):
        raise PartNotPresent(f"{tuple(old)} is not a sub-multiset of {lam}")
    have.subtract(need)
    return make(list(have.elements()) + [p for p in new if p])


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


# --- beta numbers, cores and quotients -------------------------------------


def beta_set(lam: Partition, m: int) -> list[int]:
    """First-column hook lengths ``lam_i + m - i`` with ``m >= len(lam)``."""
    if m < len(lam):
        raise ValueError("m too small")
    padded = list(lam) + [0] * (m - len(lam))
    return [p + m - 1 - i for i, p in enumerate(padded)]


def from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    return make(x - (m - 1 - i) for i, x in enumerate(beta))


def _even_length(lam: Partition) -> int:
    m = len(lam)
    return m + (m % 2)


def two_core(lam: Partition) -> Partition:
    """Remove dominoes until none is removable."""
    beta = set(beta_set(lam, _even_length(lam)))
    moved = True
    while moved:
        moved = False
        for x in sorted(beta):
            if x >= 2 and x - 2 not in beta:
                beta.remove(x)
                beta.add(x - 2)
                moved = True
                break
    return from_beta(beta)


def has_minimal_core(lam: Partition) -> bool:
    """True when the 2-core is empty (even size) or ``(1,)`` (odd size)."""
    return two_core(lam) == ((1,) if size(lam) % 2 else ())


def _halve(values: list[int]) -> Partition:
    s = len(values)
    return make(v - (s - 1 - i) for i, v in enumerate(sorted(values, reverse=True)))


def two_quotient(lam: Partition) -> tuple[Partition, Partition]:
    """The 2-quotient ``(q0, q1)`` read from the even and odd beta numbers.

    Uses the smallest even number of beta numbers that is at least the length.
    """
    beta = beta_set(lam, _even_length(lam))
    evens = [x // 2 for x in beta if x % 2 == 0]
    odds = [x // 2 for x in beta if x % 2 == 1]
    return _halve(evens), _halve(odds)


# --- border strips ---------------------------------------------------------


def add_border_strips(nu: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(mu, height)`` with ``mu/nu`` a border strip of size ``k``, reverse lex."""
    if k <= 0:
        raise ValueError("strip size must be positive")
    m = len(nu) + k
    beta = beta_set(nu, m)
    present = set(beta)
    out = []
    for x in beta:
        y = x + k
        if y in present:
            continue
        ht = sum(1 for v in beta if x < v < y)
        out.append((from_beta((present - {x}) | {y}), ht))
    return sorted(out, reverse=True)


def remove_border_strips(mu: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(nu, height)`` with ``mu/nu`` a border strip of size ``k``."""
    if k <= 0:
        raise ValueError("strip size must be positive")
    beta = beta_set(mu, len(mu))
    present = set(beta)
    out = []
    for x in beta:
        y = x - k
        if y < 0 or y in present:
            continue
        ht = sum(1 for v in beta if y < v < x)
        out.append((from_beta((present - {x}) | {y}), ht))
    return sorted(out, reverse=True)


def is_border_strip(lam: Partition, mu: Partition) -> bool:
    """Connected skew shape containing no 2x2 square."""
    if not contains(lam, mu) or lam == mu:
        return False
    k = size(lam) - size(mu)
    return any(nu == mu for nu, _ in remove_border_strips(lam, k))


# --- dominoes ---------------------------------------------------------------


def _cells(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return [
        (i, j)
        for i, p in enumerate(lam)
        for j in range(mu[i] if i < len(mu) else 0, p)
    ]


def domino_tilings(lam: Partition, mu: Partition = ()) -> Iterator[list[tuple]]:
    """Yield every domino tiling of ``lam/mu`` as a list of cell pairs."""
    cells = set(_cells(lam, mu))

    def go(free: frozenset, acc: list):
        if not free:
            yield list(acc)
            return
        i, j = min(free)
        for other in ((i, j + 1), (i + 1, j)):
            if other in free:
                acc.append(((i, j), other))
                yield from go(free - {(i, j), other}, acc)
                acc.pop()

    yield from go(frozenset(cells), [])


def two_sign(lam: Partition, mu: Partition = ()) -> int:
    """``(-1)**(#vertical dominoes)`` for any tiling of ``lam/mu``, else 0.

    The parity of vertical dominoes does not depend on the tiling chosen.
    """
    for tiling in domino_tilings(lam, mu):
        vertical = sum(1 for a, c in tiling if a[1] == c[1])
        return -1 if vertical % 2 else 1
    return 0


def yamanouchi_domino_count(lam: Partition, mu: Partition) -> int:
    """Yamanouchi domino tableaux of shape ``lam/mu`` and one-row weight.

    With a single label the lattice condition is automatic, so this counts
    tilings in which no column meets two different dominoes.
    """
    count = 0
    for tiling in domino_tilings(lam, mu):
        seen: set[int] = set()
        ok = True
        for a, c in tiling:
            cols = {a[1], c[1]}
            if cols & seen:
                ok = False
                break
            seen |= cols
        count += ok
    return count


def column_disjoint_domino_cover(lam: Partition, mu: Partition) -> bool:
    return yamanouchi_domino_count(lam, mu) == 1


# --- Jordan types ------------------------------------------------------------


def is_very_even(lam: Partition) -> bool:
    return all(p % 2 == 0 and m % 2 == 0 for p, m in Counter(lam).items())


def jordan_size(lie_type: str, n: int) -> int:
    """Size of the partitions labelling nilpotent orbits of rank ``n``."""
    if lie_type == "A":
        return n
    if lie_type == "B":
        return 2 * n + 1
    if lie_type in ("C", "D"):
        return 2 * n
    raise InvalidJordanType(f"unknown Lie type {lie_type!r}")


def jordan_type_violation(lie_type: str, n: int, lam: Partition) -> str | None:
    """Why ``lam`` is not a Jordan type of rank ``n``, or ``None`` if it is."""
    want = jordan_size(lie_type, n)
    if size(lam) != want:
        return f"{fmt(lam) or '()'} has size {size(lam)}, expected {want}"
    parity = {"C": 1, "B": 0, "D": 0}.get(lie_type)
    if parity is None:
        return None
    for p, m in sorted(Counter(lam).items()):
        if p % 2 == parity and m % 2:
            kind = "odd" if parity else "even"
            return f"{kind} part {p} has odd multiplicity {m} (type {lie_type} needs even)"
    return None


def is_valid_jordan_type(lie_type: str, n: int, lam: Partition) -> bool:
    return jordan_type_violation(lie_type, n, lam) is None


def jordan_types(lie_type: str, n: int) -> list[tuple[Partition, str | None]]:
    """Labels of nilpotent orbits: ``(lam, split)`` pairs.

    ``split`` is ``'+'`` or ``'-'`` for very even partitions in type D and
    ``None`` otherwise.
    """
    out: list[tuple[Partition, str | None]] = []
    for lam in partitions(jordan_size(lie_type, n)):
        if not is_valid_jordan_type(lie_type, n, lam):
            continue
        if lie_type == "D" and lam and is_very_even(lam):
            out += [(lam, "+"), (lam, "-")]
        else:
            out.append((lam, None))
    return out
