"""Brute-force reference implementations used only by the tests.

Each one recomputes a quantity from its definition, sharing no code with the
package beyond the tuple representation of partitions.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction
from functools import cache
from math import factorial, prod


@cache
def partitions(n: int, cap: int | None = None) -> tuple:
    cap = n if cap is None else min(cap, n)
    if n == 0:
        return ((),)
    return tuple((f,) + r for f in range(cap, 0, -1) for r in partitions(n - f, f))


def cells(lam, mu=()):
    return {(i, j) for i, p in enumerate(lam) for j in range(mu[i] if i < len(mu) else 0, p)}


def conjugate(lam):
    cs = cells(lam)
    return tuple(sorted(Counter(j for _, j in cs).values(), reverse=True))


def is_partition_cells(cs) -> bool:
    return all((i - 1, j) in cs or i == 0 for i, j in cs) and all((i, j - 1) in cs or j == 0 for i, j in cs)


def shape_of(cs):
    rows = Counter(i for i, _ in cs)
    return tuple(rows[i] for i in range(len(rows)))


def contains(lam, mu):
    return cells(mu) <= cells(lam)


def connected(cs) -> bool:
    if not cs:
        return False
    start = next(iter(cs))
    seen, todo = {start}, [start]
    while todo:
        i, j = todo.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == cs


def border_strips_add(nu, k):
    """``(mu, rows-1)`` for connected, 2x2-free skew shapes ``mu/nu`` of size k."""
    out = []
    for mu in partitions(sum(nu) + k):
        if not contains(mu, nu):
            continue
        skew = cells(mu) - cells(nu)
        if not connected(skew):
            continue
        if any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= skew for i, j in skew):
            continue
        out.append((mu, len({i for i, _ in skew}) - 1))
    return out


def two_core(lam):
    """Strip dominoes off the rim until none can be removed."""
    cs = set(cells(lam))
    changed = True
    while changed:
        changed = False
        for a in sorted(cs):
            for b in ((a[0] + 1, a[1]), (a[0], a[1] + 1)):
                rest = cs - {a, b}
                if b in cs and is_partition_cells(rest):
                    cs = rest
                    changed = True
                    break
            if changed:
                break
    return shape_of(cs)


def domino_tilings(lam, mu=()):
    def go(free):
        if not free:
            yield []
            return
        a = min(free)
        for b in ((a[0], a[1] + 1), (a[0] + 1, a[1])):
            if b in free:
                for rest in go(free - {a, b}):
                    yield [(a, b)] + rest

    yield from go(frozenset(cells(lam, mu)))


def yamanouchi_one_row(lam, mu) -> int:
    """Domino tableaux with every domino labelled 1: rows weak, columns strict."""
    count = 0
    for t in domino_tilings(lam, mu):
        label = {}
        for d, (a, b) in enumerate(t):
            label[a] = label[b] = d
        ok = all(
            (i + 1, j) not in label or label[(i + 1, j)] == label[(i, j)]
            for (i, j) in label
        )
        count += ok
    return count


def ssyt_count(shape, content) -> int:
    """Semistandard tableaux of ``shape`` and ``content``, by filling cells."""
    cs = sorted(cells(shape))
    need = list(content)
    count = 0
    fill = {}

    def go(idx):
        nonlocal count
        if idx == len(cs):
            count += 1
            return
        i, j = cs[idx]
        lo = 1
        if j > 0:
            lo = max(lo, fill[(i, j - 1)])
        if i > 0:
            lo = max(lo, fill[(i - 1, j)] + 1)
        for v in range(lo, len(need) + 1):
            if need[v - 1]:
                need[v - 1] -= 1
                fill[(i, j)] = v
                go(idx + 1)
                need[v - 1] += 1
        fill.pop((i, j), None)

    if sum(shape) != sum(content):
        return 0
    go(0)
    return count


def _polymul(a, c):
    out = defaultdict(int)
    for ea, ca in a.items():
        for ec, cc in c.items():
            out[tuple(x + y for x, y in zip(ea, ec))] += ca * cc
    return {e: v for e, v in out.items() if v}


@cache
def sym_character(lam, rho) -> int:
    """``chi^lam(rho)`` as the coefficient of ``x^(lam+delta)`` in ``a_delta p_rho``."""
    n = sum(lam)
    ell = max(len(lam), 1)
    poly = {}
    for perm in itertools.permutations(range(ell)):
        sgn = prod(-1 if perm[a] > perm[b] else 1 for a in range(ell) for b in range(a + 1, ell))
        e = tuple(ell - 1 - perm[i] for i in range(ell))
        poly[e] = poly.get(e, 0) + sgn
    for r in rho:
        poly = _polymul(poly, {tuple(r if v == i else 0 for v in range(ell)): 1 for i in range(ell)})
    target = tuple((lam[i] if i < len(lam) else 0) + ell - 1 - i for i in range(ell))
    if n == 0:
        return 1
    return poly.get(target, 0)


def z(rho) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def lr_coefficient(lam, mu, nu) -> Fraction:
    """``<s_mu s_nu, s_lam>`` through the power-sum expansions."""
    total = Fraction(0)
    for rho in partitions(sum(mu)):
        for sig in partitions(sum(nu)):
            tau = tuple(sorted(rho + sig, reverse=True))
            total += Fraction(sym_character(mu, rho) * sym_character(nu, sig) * sym_character(lam, tau),
                              z(rho) * z(sig))
    return total


def fake_degree(mu) -> dict:
    """``t^{b(mu')} [n]_t! / prod [h]_t`` as a coefficient dict."""
    n = sum(mu)
    conj = conjugate(mu)

    def qint(m):
        return [1] * m

    def mul(a, c):
        out = [0] * (len(a) + len(c) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(c):
                out[i + j] += x * y
        return out

    def div(a, c):
        a = list(a)
        q = [0] * (len(a) - len(c) + 1)
        for i in range(len(q) - 1, -1, -1):
            q[i] = a[i + len(c) - 1] // c[-1]
            for j, y in enumerate(c):
                a[i + j] -= q[i] * y
        assert not any(a)
        return q

    num = [1]
    for m in range(1, n + 1):
        num = mul(num, qint(m))
    for i, row in enumerate(mu):
        for j in range(row):
            h = row - j + conj[j] - i - 1
            num = div(num, qint(h))
    shift = sum(i * p for i, p in enumerate(conj))
    return {d + shift: c for d, c in enumerate(num) if c}


def fixed_points(lam, rho) -> int:
    """Number of ordered set partitions of type ``lam`` fixed by ``w_rho``."""
    count = 0
    for assign in itertools.product(range(len(lam)), repeat=len(rho)):
        load = [0] * len(lam)
        for cyc, blk in zip(rho, assign):
            load[blk] += cyc
        count += tuple(load) == tuple(lam)
    return count


# --- signed permutations ----------------------------------------------------------


def signed_perms(n: int, even_only: bool = False):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if even_only and signs.count(-1) % 2:
                continue
            yield tuple(s * (p + 1) for p, s in zip(perm, signs))


def compose(a, c):
    """``(a c)(i) = a(c(i))`` on signed permutations of 1..n."""
    out = []
    for x in c:
        y = a[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        out[abs(x) - 1] = i if x > 0 else -i
    return tuple(out)


def signed_cycle_type(a):
    n = len(a)
    seen = set()
    pos, neg = [], []
    for i in range(1, n + 1):
        if i in seen:
            continue
        length, sgn, x = 0, 1, i
        while x not in seen:
            seen.add(x)
            y = a[x - 1]
            sgn *= 1 if y > 0 else -1
            x = abs(y)
            length += 1
        (pos if sgn > 0 else neg).append(length)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def conjugacy_classes(n: int, even_only: bool = False):
    elems = list(signed_perms(n, even_only))
    left = set(elems)
    classes = []
    while left:
        g = next(iter(left))
        cl = {compose(compose(h, g), inverse(h)) for h in elems}
        left -= cl
        classes.append((signed_cycle_type(g), len(cl)))
    return classes
