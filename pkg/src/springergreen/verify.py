"""Verification suites: exhaustive exact checks of the identities relating
total Springer characters, Green polynomials and Kostka-Foulkes polynomials.

Every suite returns a :class:`Report`; failures are recorded as cases, never
raised.  Suites fan out over Jordan types and can run in a process pool.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import partitions as P
from . import symfunc as S
from . import springer as SP
from .springer import NilpotentLabel
from .weylchar import (
    ClassFunction,
    ClassLabel,
    IrrLabel,
    induce_product,
    inner,
    parabolic,
    restrict_coset,
    weyl_group,
)

SUITES = (
    "restriction",
    "induction",
    "main-consistency",
    "difference",
    "triangularity",
    "symfunc-identities",
    "orthogonality",
)


@dataclass
class Case:
    lam: str
    param: str
    passed: bool
    witness: str | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_json(self) -> dict:
        out = {"lambda": self.lam, "param": self.param, "pass": self.passed, "witness": self.witness}
        if not self.passed:
            out["lhs"], out["rhs"] = self.lhs, self.rhs
        return out


@dataclass
class Report:
    suite: str
    type: str
    n: int
    cases: list[Case] = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "type": self.type,
            "n": self.n,
            "cases": [c.to_json() for c in self.cases],
            "duration": round(self.duration, 3),
        }

    def summary(self) -> str:
        bad = len(self.failures)
        status = "PASS" if not bad else f"FAIL ({bad} failing)"
        return f"{self.suite} {self.type} n={self.n}: {len(self.cases)} cases, {status}"


def _fmt_lam(lam, split=None) -> str:
    return (P.fmt(lam) or "()") + (split or "")


def _compare(lam: str, param: str, lhs: ClassFunction, rhs: ClassFunction) -> Case:
    for c, a, b in zip(lhs.group.classes, lhs.values, rhs.values):
        if a != b:
            return Case(lam, param, False, str(c), str(a), str(b))
    return Case(lam, param, True)


def _equal(lam: str, param: str, lhs, rhs, witness: str | None = None) -> Case:
    if lhs == rhs:
        return Case(lam, param, True)
    return Case(lam, param, False, witness, str(lhs), str(rhs))


def _run(worker: Callable, items: list, jobs: int) -> list[Case]:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(worker, items))
    else:
        chunks = [worker(x) for x in items]
    return [c for chunk in chunks for c in chunk]


def _timed(suite: str, lie_type: str, n: int, fn: Callable[[], list[Case]]) -> Report:
    t0 = time.perf_counter()
    cases = fn()
    return Report(suite, lie_type, n, cases, time.perf_counter() - t0)


def labels(lie_type: str, n: int) -> list[NilpotentLabel]:
    return [NilpotentLabel(lie_type, n, lam, s) for lam, s in P.jordan_types(lie_type, n)]


# --- type D gate -----------------------------------------------------------------


def character_table_cases(gtype: str, n: int) -> list[Case]:
    """Orthogonality, integrality, dimension count and (type D) sign pinning."""
    g = weyl_group(gtype, n)
    chars = [g.character(c) for c in g.irreps]
    tag = f"{gtype}{n}"
    cases = []
    rows_ok, witness = True, None
    for i, a in enumerate(chars):
        for j, b in enumerate(chars[i:], i):
            if inner(a, b) != (1 if i == j else 0):
                rows_ok, witness = False, f"{g.irreps[i]} vs {g.irreps[j]}"
                break
        if not rows_ok:
            break
    cases.append(Case(tag, "row orthogonality", rows_ok, witness))
    cols_ok, witness = True, None
    for x in range(len(g.classes)):
        for y in range(x, len(g.classes)):
            s = sum(ch.values[x] * ch.values[y] for ch in chars)
            if s != (g.centralizers[x] if x == y else 0):
                cols_ok, witness = False, f"{g.classes[x]} vs {g.classes[y]}"
                break
        if not cols_ok:
            break
    cases.append(Case(tag, "column orthogonality", cols_ok, witness))
    integral = all(v.denominator == 1 for ch in chars for v in ch.values)
    cases.append(Case(tag, "integral values", integral))
    cases.append(_equal(tag, "sum of squared dimensions", sum(ch.dimension**2 for ch in chars), g.order))
    if gtype == "D" and n % 2 == 0 and n >= 2:
        ind = {w: induce_product(parabolic("D", n, n, w)) for w in "+-"}
        for lam in P.partitions(n // 2):
            for s, other in (("+", "-"), ("-", "+")):
                chi = g.character(IrrLabel.d(lam, lam, other))
                cases.append(_equal(tag, f"<Ind S_n{s} 1, chi^{{{_fmt_lam(lam)}}}{other}>",
                                    inner(ind[s], chi), 0))
    return cases


_GATE: dict[int, bool] = {}


def d_gate(n: int) -> bool:
    """Character-table health of ``W(D_m)`` for ``2 <= m <= n``; memoized."""
    if n not in _GATE:
        _GATE[n] = all(c.passed for m in range(2, n + 1) for c in character_table_cases("D", m))
    return _GATE[n]


def _gated(lie_type: str, n: int) -> list[Case]:
    if lie_type == "D" and not d_gate(n):
        return [Case("-", "type D character-table gate", False, "orthogonality or sign pinning")]
    return []


def verify_orthogonality(gtype: str, n: int, jobs: int = 1) -> Report:
    from .weylchar import group_type

    gt = group_type(gtype)
    return _timed("orthogonality", gt, n, lambda: character_table_cases(gt, n))


# --- restriction ----------------------------------------------------------------


def _restriction_worker(arg) -> list[Case]:
    lie_type, n, lam, split = arg
    tag = _fmt_lam(lam, split)
    cases = []
    if lie_type in ("B", "C"):
        f = SP.gue(lie_type, lam)
        for k in range(1, n + 1):
            rhs = weyl_group("BC", n - k).zero()
            for c, mu in SP.restriction_terms(lam, k):
                rhs = rhs + SP.gue(lie_type, mu) * c
            cases.append(_compare(tag, f"k={k}", restrict_coset(f, k), rhs))
        return cases
    nl = NilpotentLabel("D", n, lam, split)
    if split != "-":
        f = SP.ague(lam)
        for k in range(1, n + 1):
            for w in ("+", "-") if (k == n and n % 2 == 0) else (None,):
                rhs = weyl_group("D", n - k).zero()
                for c, mu in SP.restriction_terms(lam, k):
                    rhs = rhs + SP.ague(mu) * c
                cases.append(_compare(_fmt_lam(lam), f"averaged k={k}" + (w or ""),
                                      restrict_coset(f, k, w), rhs))
    f = SP.d_total(nl)
    for k in range(1, n - 1):
        rhs = weyl_group("D", n - k).zero()
        for c, m in SP.d_restriction_terms(nl, k):
            rhs = rhs + SP.d_total(m) * c
        cases.append(_compare(tag, f"k={k}", restrict_coset(f, k), rhs))
    cyc = ClassLabel((n - 1, 1), ())
    cases.append(_equal(tag, f"k={n - 1}", f(cyc), SP.d_cycle_value(nl), str(cyc)))
    for w in ("+", "-") if n % 2 == 0 else (None,):
        c = ClassLabel((n,), (), w)
        cases.append(_equal(tag, f"k={n}" + (w or ""), f(c), SP.d_cycle_value(nl, w or "+"), str(c)))
    return cases


def verify_restriction(lie_type: str, n: int, jobs: int = 1) -> Report:
    items = [(lie_type, n, lam, s) for lam, s in P.jordan_types(lie_type, n)]
    return _timed("restriction", lie_type, n,
                  lambda: _gated(lie_type, n) + _run(_restriction_worker, items, jobs))


# --- induction -----------------------------------------------------------------


def _induction_worker(arg) -> list[Case]:
    lie_type, n, k, lam = arg
    big = P.union(lam, (k, k))
    tag = _fmt_lam(big)
    if lie_type in ("B", "C"):
        rhs = induce_product(parabolic(lie_type, n, k), SP.gue(lie_type, lam))
        return [_compare(tag, f"k={k}", SP.gue(lie_type, big), rhs)]
    if k <= n - 2:
        rhs = induce_product(parabolic("D", n, k), SP.ague(lam))
    elif k == n - 1:
        rhs = induce_product(parabolic("D", n, k)) * 2
    else:
        ws = ("+", "-") if n % 2 == 0 else (None, None)
        rhs = induce_product(parabolic("D", n, n, ws[0])) + induce_product(parabolic("D", n, n, ws[1]))
    return [_compare(tag, f"k={k}", SP.ague(big), rhs)]


def verify_induction(lie_type: str, n: int, jobs: int = 1) -> Report:
    items = []
    for k in range(1, n + 1):
        for lam, s in P.jordan_types(lie_type, n - k):
            if s != "-":
                items.append((lie_type, n, k, lam))
    return _timed("induction", lie_type, n,
                  lambda: _gated(lie_type, n) + _run(_induction_worker, items, jobs))


# --- character values vs Green values --------------------------------------------


def _split_classes(lie_type: str, rho) -> tuple:
    if lie_type == "D" and rho and all(p % 2 == 0 for p in rho):
        return ("+", "-")
    return (None,)


def _consistency_worker(arg) -> list[Case]:
    lie_type, n, lam, split = arg
    nl = NilpotentLabel(lie_type, n, lam, split)
    tag = _fmt_lam(lam, split)
    f = SP.total_character(nl)
    cases = []
    for rho in P.partitions(n):
        for s in _split_classes(lie_type, rho):
            c = ClassLabel(rho, (), s)
            cases.append(_equal(tag, f"rho={c}", f(c), SP.green_value(nl, rho, s), str(c)))
    if lie_type == "D" and split == "+":
        lt = tuple(p // 2 for p in lam[::2])
        for tau in P.partitions(n // 2):
            lhs = sum(S.kostka_number(mt, lt) * 2 ** len(tau) * S.character(mt, tau)
                      for mt in P.partitions(n // 2))
            rhs = S.green_at(lam, P.scale(tau, 4), -1)
            cases.append(_equal(_fmt_lam(lam), f"difference tau={P.fmt(tau)}", lhs, rhs))
    return cases


def verify_main_consistency(lie_type: str, n: int, jobs: int = 1) -> Report:
    items = [(lie_type, n, lam, s) for lam, s in P.jordan_types(lie_type, n)]
    return _timed("main-consistency", lie_type, n,
                  lambda: _gated(lie_type, n) + _run(_consistency_worker, items, jobs))


def _structure_worker(arg) -> list[Case]:
    """Positivity, top-degree containment and dimension = Euler characteristic."""
    lie_type, n, lam, split = arg
    nl = NilpotentLabel(lie_type, n, lam, split)
    tag = _fmt_lam(lam, split)
    dec = SP.decomposition(nl)
    bad = [f"{chi}:{m}" for chi, m in dec.items() if m < 0 or m.denominator != 1]
    cases = [Case(tag, "nonnegative integer multiplicities", not bad, ", ".join(bad) or None)]
    top = SP.springer_label(nl)
    cases.append(Case(tag, "contains Springer representation", dec.get(top, 0) >= 1, str(top)))
    f = SP.total_character(nl)
    cases.append(_equal(tag, "dimension = Euler characteristic", f.dimension, SP.euler_characteristic(nl)))
    return cases


def _triangularity_worker(arg) -> list[Case]:
    lie_type, n, lam, split = arg
    nl = NilpotentLabel(lie_type, n, lam, split)
    owners: dict = {}
    for mu in P.partitions(P.size(lam)):
        splits = ("+", "-") if lie_type == "D" and mu and P.is_very_even(mu) else (None,)
        for s in splits:
            chi = SP.label_of(lie_type, mu, s)
            if chi:
                owners.setdefault(chi, []).append(mu)
    witness = []
    for chi in SP.decomposition(nl):
        for mu in owners.get(chi, []):
            if lam[0] > mu[0]:
                witness.append(f"{chi} via {P.fmt(mu)}")
    return [Case(_fmt_lam(lam, split), "lambda_1 <= mu_1", not witness, "; ".join(witness) or None)]


def verify_triangularity(lie_type: str, n: int, jobs: int = 1) -> Report:
    items = [(lie_type, n, lam, s) for lam, s in P.jordan_types(lie_type, n)]

    def body():
        return (_gated(lie_type, n) + _run(_triangularity_worker, items, jobs)
                + _run(_structure_worker, items, jobs))

    return _timed("triangularity", lie_type, n, body)


def verify_difference_pairing(n: int, jobs: int = 1) -> Report:
    def body():
        cases = _gated("D", n)
        if n % 2 or n < 2:
            return cases
        half = P.partitions(n // 2)
        diff = {}
        for lam in half:
            big = P.union(P.scale(lam, 2), P.scale(lam, 2))
            diff[lam] = (SP.d_total(NilpotentLabel("D", n, big, "+"))
                         - SP.d_total(NilpotentLabel("D", n, big, "-")))
        g = weyl_group("D", n)
        for lam in half:
            for mu in half:
                big = P.union(P.scale(mu, 2), P.scale(mu, 2))
                k = S.kostka_number(mu, lam)
                plus = inner(diff[lam], g.character(SP.label_of("D", big, "+")))
                minus = inner(diff[lam], g.character(SP.label_of("D", big, "-")))
                tag = P.fmt(lam)
                cases.append(_equal(tag, f"<D, chi^{P.fmt(big)}+> mu={P.fmt(mu)}", plus, k))
                cases.append(_equal(tag, f"<D, chi^{P.fmt(big)}-> mu={P.fmt(mu)}", minus, -k))
                hh = sum(S.kostka_number(nu, lam) * S.kostka_number(nu, mu) for nu in half)
                cases.append(_equal(tag, f"<D_lam, D_mu> mu={P.fmt(mu)}",
                                    inner(diff[lam], diff[mu]), 2 * hh))
        return cases

    return _timed("difference", "D", n, body)


# --- symmetric-function identities --------------------------------------------


def _qm1(lam) -> S.SymFunc:
    return S.qprime(lam).at(-1)


def llt_cases(bound: int) -> list[Case]:
    out = []
    for k in range(1, bound // 2 + 1):
        qkk = _qm1((k, k))
        for m in range(0, bound - 2 * k + 1):
            for lam in P.partitions(m):
                lhs = _qm1(P.union(lam, (k, k)))
                rhs = S.multiply(_qm1(lam), qkk)
                out.append(_equal(_fmt_lam(lam), f"LLT k={k}", lhs, rhs))
    return out


def qkk_cases(kmax: int) -> list[Case]:
    out = []
    for k in range(1, kmax + 1):
        rhs = S.plethysm_p2(S.SymFunc.schur((k,))) * (-1) ** k
        out.append(_equal(f"{k},{k}", "Q'_(k,k)(-1) = (-1)^k s_k[p_2]", _qm1((k, k)), rhs))
    return out


def domino_cases(bound: int) -> list[Case]:
    out = []
    for m in range(2, bound + 1):
        for nu in P.partitions(m):
            for k in range(1, m // 2 + 1):
                sk = S.plethysm_p2(S.SymFunc.schur((k,)))
                for mu in P.partitions(m - 2 * k):
                    if not P.contains(nu, mu):
                        continue
                    pair = S.scalar(S.multiply(sk, S.SymFunc.schur(mu)), S.SymFunc.schur(nu))(0)
                    lhs = P.two_sign(nu, mu) * pair
                    rhs = P.yamanouchi_domino_count(nu, mu)
                    out.append(_equal(f"{P.fmt(nu)}/{P.fmt(mu) or '()'}", f"domino pairing k={k}", lhs, rhs))
    return out


def _sum_terms(terms, fn, zero):
    acc = zero
    for c, mu in terms:
        acc = acc + fn(mu) * c
    return acc


def hlq_cases(bound: int, valid_only: bool = True) -> list[Case]:
    """``p_2k^*(eps(lam) Q'_lam(-1))`` against the three-sum expansion."""
    out = []
    for m in range(2, bound + 1):
        for lam in P.partitions(m):
            valid = _jordan_any(lam)
            if valid_only and not valid:
                continue
            for k in range(1, m // 2 + 1):
                lhs = S.skew_by_p(2 * k, _qm1(lam) * P.sign(lam))
                terms = SP.restriction_terms(lam, k, general=not valid)
                rhs = _sum_terms(terms, lambda mu: _qm1(mu) * P.sign(mu), S.SymFunc.zero(m - 2 * k))
                out.append(_equal(_fmt_lam(lam), f"skew k={k}", lhs, rhs))
    return out


def adjunction_cases(mmax: int) -> list[Case]:
    """``<f[p_2], g> = <f, phi(g)>`` and ``<Delta s_l, s_a(x)s_b(y)> = <s_l, s_a s_b>``."""
    out = []
    for m in range(0, mmax + 1):
        for f in P.partitions(m):
            image = S.plethysm_p2(S.SymFunc.schur(f))
            for g in P.partitions(2 * m):
                lhs = image.coeff(g)
                rhs = S.verschiebung(S.SymFunc.schur(g)).coeff(f)
                if lhs != rhs:
                    out.append(Case(P.fmt(f), f"Verschiebung g={P.fmt(g)}", False, None, str(lhs), str(rhs)))
        out.append(Case(str(m), "Frobenius/Verschiebung adjunction", True))
    for m in range(0, min(mmax, 8) + 1):
        for lam in P.partitions(m):
            delta = S.sf2_delta(S.SymFunc.schur(lam))
            ok = True
            for j in range(m + 1):
                for a in P.partitions(j):
                    for b_ in P.partitions(m - j):
                        prod_ = S.littlewood_richardson(a, b_).get(lam, 0)
                        if delta.coeff(a, b_)(0) != prod_:
                            ok = False
            out.append(Case(_fmt_lam(lam), "coproduct/product adjunction", ok))
    return out


def _jordan_any(lam) -> bool:
    m = P.size(lam)
    if m % 2:
        return P.is_valid_jordan_type("B", (m - 1) // 2, lam)
    return P.is_valid_jordan_type("C", m // 2, lam) or P.is_valid_jordan_type("D", m // 2, lam)


def _jordan_partitions(bound: int) -> Iterable:
    for m in range(1, bound + 1):
        for lam in P.partitions(m):
            if _jordan_any(lam):
                yield lam


def _recursion_worker(lam) -> list[Case]:
    m = P.size(lam)
    tag = _fmt_lam(lam)
    out = []
    for k in range(1, m // 2 + 1):
        terms = SP.restriction_terms(lam, k)
        ok, wit = True, None
        for rho in P.partitions(m - 2 * k):
            lhs = S.green_at(lam, P.union(rho, (2 * k,)), -1)
            rhs = sum(c * S.green_at(mu, rho, -1) for c, mu in terms)
            if lhs != rhs:
                ok, wit = False, f"rho={P.fmt(rho)} lhs={lhs} rhs={rhs}"
                break
        out.append(Case(tag, f"Green recursion k={k}", ok, wit))
        ok, wit = True, None
        for nu in P.partitions(m - 2 * k):
            lhs = P.sign(lam) * sum(
                (-1 if ht % 2 else 1) * S.kostka_foulkes(mu, lam)(-1)
                for mu, ht in P.add_border_strips(nu, 2 * k)
            )
            rhs = sum(c * P.sign(mu) * S.kostka_foulkes(nu, mu)(-1) for c, mu in terms)
            if lhs != rhs:
                ok, wit = False, f"nu={P.fmt(nu)} lhs={lhs} rhs={rhs}"
                break
        out.append(Case(tag, f"Kostka recursion k={k}", ok, wit))
    return out


def recursion_cases(bound: int, jobs: int = 1) -> list[Case]:
    return _run(_recursion_worker, list(_jordan_partitions(bound)), jobs)


def verify_symfunc_identities(bound: int, jobs: int = 1, lie_type: str = "-", n: int = 0) -> Report:
    """All symmetric-function identities with sizes up to ``bound``."""

    def body():
        return (
            llt_cases(bound)
            + qkk_cases(bound // 2)
            + domino_cases(bound)
            + hlq_cases(bound)
            + adjunction_cases(bound // 2)
            + recursion_cases(bound, jobs)
        )

    return _timed("symfunc-identities", lie_type, n or bound, body)


# --- dispatch ------------------------------------------------------------------


def run_suite(name: str, lie_type: str, n: int, jobs: int = 1) -> list[Report]:
    """Run one suite (or ``"all"``) for a Lie type and rank."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, lie_type, n, jobs)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "orthogonality":
        gt = "A" if lie_type == "A" else ("BC" if lie_type in ("B", "C", "BC") else "D")
        return [verify_orthogonality(gt, n)]
    if name == "symfunc-identities":
        bound = P.jordan_size(lie_type, n) if lie_type in P.LIE_TYPES else 2 * n
        return [verify_symfunc_identities(bound, jobs, lie_type, n)]
    if lie_type not in ("B", "C", "D"):
        raise ValueError(f"suite {name} needs type B, C or D")
    if name == "difference":
        if lie_type != "D":
            return []
        return [verify_difference_pairing(n, jobs)]
    fn = {
        "restriction": verify_restriction,
        "induction": verify_induction,
        "main-consistency": verify_main_consistency,
        "triangularity": verify_triangularity,
    }[name]
    return [fn(lie_type, n, jobs)]


# --- exploratory -------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureWitness:
    lam: tuple
    mu: tuple
    nu: tuple
    lhs: int
    rhs: int


def conjecture_scan(bound: int) -> tuple[int, list[ConjectureWitness]]:
    """Compare ``eps(mu) K_{mu,lam}(-1)`` and ``eps(nu) K_{nu,lam}(-1)`` for
    type-D Jordan types ``lam`` and pairs ``mu != nu`` with swapped 2-quotients.

    This is exploratory: returns the number of comparisons and every
    disagreement found.
    """
    checked = 0
    witnesses = []
    for m in range(2, bound + 1, 2):
        by_quot = {}
        for mu in P.partitions(m):
            if P.has_minimal_core(mu):
                by_quot[P.two_quotient(mu)] = mu
        pairs = []
        for (q0, q1), mu in by_quot.items():
            nu = by_quot.get((q1, q0))
            if nu is not None and mu < nu:
                pairs.append((mu, nu))
        for lam in P.partitions(m):
            if not P.is_valid_jordan_type("D", m // 2, lam):
                continue
            for mu, nu in pairs:
                a = P.sign(mu) * S.kostka_foulkes(mu, lam)(-1)
                b_ = P.sign(nu) * S.kostka_foulkes(nu, lam)(-1)
                checked += 1
                if a != b_:
                    witnesses.append(ConjectureWitness(lam, mu, nu, a, b_))
    return checked, witnesses
