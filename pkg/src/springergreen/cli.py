"""Command-line interface: ``springergreen <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import cache
from . import partitions as P
from . import springer as SP
from . import symfunc as S
from . import verify as V
from .errors import SpringerGreenError
from .weylchar import ClassLabel, group_type

EXIT_FAIL, EXIT_INPUT, EXIT_IO = 1, 2, 3


@dataclass
class Config:
    cache_dir: Path
    max_rank: int = 8
    output_format: str = "plain"
    parallelism: int = 1
    use_cache: bool = True

    def __post_init__(self):
        if self.max_rank < 1:
            raise ValueError("max_rank must be at least 1")


class InputError(Exception):
    pass


def _num(x) -> str:
    """Exact decimal string (``p/q`` for a non-integer rational)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else str(x)


def _partition(text: str) -> P.Partition:
    try:
        return P.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _jobs(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be positive or 'auto'")
    return n


def _check_rank(cfg: Config, n: int) -> None:
    if n < 0:
        raise InputError("rank must be non-negative")
    if n > cfg.max_rank:
        raise InputError(f"rank {n} exceeds --max-rank {cfg.max_rank}")


def _emit(cfg: Config, plain: str, obj, rows: list[list[str]] | None = None) -> str:
    if cfg.output_format == "json":
        return json.dumps(obj, indent=2)
    if cfg.output_format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows if rows is not None else [[plain]])
        return buf.getvalue().rstrip("\n")
    return plain


# --- kostka / green ------------------------------------------------------------


def _poly_or_value(cfg: Config, poly, at: str | None, head: dict) -> str:
    if at is not None:
        try:
            t = Fraction(at)
        except ValueError:
            raise InputError(f"bad evaluation point {at!r}") from None
        v = poly(t)
        return _emit(cfg, _num(v), {**head, "at": _num(t), "value": _num(v)}, [[_num(v)]])
    coeffs = [_num(c) for c in poly.coeffs]
    rows = [["degree", "coeff"]] + [[str(i), c] for i, c in enumerate(coeffs)]
    return _emit(cfg, str(poly), {**head, "coeffs": coeffs}, rows)


def cmd_kostka(args, cfg: Config) -> str:
    mu, lam = _partition(args.mu), _partition(args.lam)
    if P.size(mu) != P.size(lam):
        raise InputError(f"mu and lambda have different sizes ({P.size(mu)} vs {P.size(lam)})")
    poly = S.kostka_foulkes(mu, lam)
    return _poly_or_value(cfg, poly, args.at, {"mu": P.fmt(mu), "lambda": P.fmt(lam)})


def cmd_green(args, cfg: Config) -> str:
    lam, rho = _partition(args.lam), _partition(args.rho)
    if P.size(rho) != P.size(lam):
        raise InputError(f"lambda and rho have different sizes ({P.size(lam)} vs {P.size(rho)})")
    poly = S.green(lam, rho)
    return _poly_or_value(cfg, poly, args.at, {"lambda": P.fmt(lam), "rho": P.fmt(rho)})


# --- springer / euler -----------------------------------------------------------


def _nilpotent(args, cfg: Config) -> SP.NilpotentLabel:
    _check_rank(cfg, args.n)
    split = args.split.replace("−", "-") if args.split else None
    return SP.NilpotentLabel(args.type, args.n, _partition(args.lam), split)


def _irr_name(lie_type: str, n: int) -> dict:
    """Display names: B/C characters by the partition they come from."""
    if lie_type not in ("B", "C"):
        return {}
    names = {}
    for mu in P.partitions(P.jordan_size(lie_type, n)):
        chi = SP.label_of(lie_type, mu)
        if chi:
            names[chi] = f"({P.fmt(mu)})"
    return names


def _label_text(chi, names: dict) -> str:
    return names.get(chi, str(chi) if chi.kind != "A" else f"({P.fmt(chi.alpha)})")


def cmd_springer(args, cfg: Config) -> str:
    nl = _nilpotent(args, cfg)
    f = SP.total_character(nl)
    if args.cls is not None:
        try:
            c = f.group.normalize(ClassLabel.parse(args.cls))
        except SpringerGreenError as exc:
            raise InputError(str(exc)) from None
        v = f(c)
        obj = {"type": nl.type, "n": nl.n, "lambda": str(nl), "class": str(c), "value": _num(v)}
        return _emit(cfg, _num(v), obj, [["class", "value"], [str(c), _num(v)]])
    names = _irr_name(nl.type, nl.n)
    dec = SP.decomposition(nl)
    plain = " + ".join(f"{_num(m)} · χ^{{{_label_text(chi, names)}}}" for chi, m in dec.items()) or "0"
    values = list(f.items())
    plain += "\n" + "\n".join(f"{c}\t{_num(v)}" for c, v in values)
    obj = {
        "type": nl.type,
        "n": nl.n,
        "lambda": str(nl),
        "decomposition": [
            {"label": str(chi), "name": _label_text(chi, names), "multiplicity": _num(m)}
            for chi, m in dec.items()
        ],
        "values": [{"class": str(c), "value": _num(v)} for c, v in values],
    }
    rows = [["class", "value"]] + [[str(c), _num(v)] for c, v in values]
    return _emit(cfg, plain, obj, rows)


def cmd_euler(args, cfg: Config) -> str:
    nl = _nilpotent(args, cfg)
    v = SP.euler_characteristic(nl)
    obj = {"type": nl.type, "n": nl.n, "lambda": str(nl), "euler": _num(v)}
    return _emit(cfg, _num(v), obj, [[_num(v)]])


# --- chartable -------------------------------------------------------------------


def _table_text(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=1)
    rows = [
        ["class"] + payload["classes"],
        ["size"] + payload["class_sizes"],
        ["centralizer"] + payload["centralizers"],
    ] + [
        [chi] + vals for chi, vals in zip(payload["irreps"], payload["values"])
    ]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() for r in rows)


def cmd_chartable(args, cfg: Config) -> str:
    gtype = group_type(args.type)
    _check_rank(cfg, args.n)
    if gtype == "D" and args.n < 2:
        raise InputError("type D needs n >= 2")
    payload = cache.load_table(gtype, args.n, cfg.cache_dir, cfg.use_cache)
    text = _table_text(payload, cfg.output_format)
    if args.out:
        Path(args.out).write_text(text + "\n")
        return ""
    return text


# --- verify ---------------------------------------------------------------------


def cmd_verify(args, cfg: Config) -> tuple[str, int]:
    _check_rank(cfg, args.n)
    t = args.type
    if args.suite not in ("orthogonality", "symfunc-identities") and t not in ("B", "C", "D"):
        raise InputError(f"suite {args.suite} needs --type B, C or D")
    if t == "D" and args.n < 2 and args.suite != "symfunc-identities":
        raise InputError("type D needs n >= 2")
    suites = V.SUITES if args.suite == "all" else (args.suite,)
    if t == "A":
        suites = [s for s in suites if s in ("orthogonality", "symfunc-identities")]
    reports = [r for s in suites for r in V.run_suite(s, t, args.n, cfg.parallelism)]
    ok = all(r.ok for r in reports)
    lines = []
    for r in reports:
        lines.append(r.summary())
        for c in r.failures:
            lines.append(f"  FAIL lambda={c.lam} {c.param} witness={c.witness} lhs={c.lhs} rhs={c.rhs}")
    obj = [r.to_json() for r in reports]
    rows = [["suite", "type", "n", "lambda", "param", "pass", "witness"]] + [
        [r.suite, r.type, str(r.n), c.lam, c.param, str(c.passed).lower(), c.witness or ""]
        for r in reports
        for c in r.cases
    ]
    return _emit(cfg, "\n".join(lines), obj[0] if len(obj) == 1 else obj, rows), (0 if ok else EXIT_FAIL)


def cmd_conjecture_scan(args, cfg: Config) -> str:
    checked, found = V.conjecture_scan(args.bound)
    obj = {
        "bound": args.bound,
        "checked": checked,
        "counterexamples": [
            {"lambda": P.fmt(w.lam), "mu": P.fmt(w.mu), "nu": P.fmt(w.nu), "lhs": _num(w.lhs), "rhs": _num(w.rhs)}
            for w in found
        ],
    }
    lines = [f"checked {checked} pairs up to size {args.bound}; {len(found)} disagreements"]
    lines += [f"  lambda={P.fmt(w.lam)} mu={P.fmt(w.mu)} nu={P.fmt(w.nu)}: {w.lhs} vs {w.rhs}" for w in found]
    rows = [["lambda", "mu", "nu", "lhs", "rhs"]] + [
        [P.fmt(w.lam), P.fmt(w.mu), P.fmt(w.nu), str(w.lhs), str(w.rhs)] for w in found
    ]
    return _emit(cfg, "\n".join(lines), obj, rows)


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"cache directory (default ${cache.ENV_VAR} or ~/.cache/springergreen)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-rank", type=int, default=8)
    common.add_argument("--jobs", type=_jobs, default=1, help="worker processes, or 'auto'")

    p = argparse.ArgumentParser(prog="springergreen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kostka", parents=[common], help="Kostka-Foulkes polynomial K_{mu,lambda}(t)")
    k.add_argument("--mu", required=True)
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--at", help="evaluate at this rational t")

    g = sub.add_parser("green", parents=[common], help="Green polynomial gr^lambda_rho(t)")
    g.add_argument("--lambda", dest="lam", required=True)
    g.add_argument("--rho", required=True)
    g.add_argument("--at")

    for name, helptext in (("springer", "total Springer character"), ("euler", "Euler characteristic")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--type", choices=P.LIE_TYPES, required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--split", choices=("+", "-", "−"))
        if name == "springer":
            s.add_argument("--class", dest="cls", help='class label "rho;sigma[;+|-]"')

    c = sub.add_parser("chartable", parents=[common], help="character table")
    c.add_argument("--type", choices=("A", "B", "C", "BC", "D"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=V.SUITES + ("all",), required=True)
    v.add_argument("--type", choices=P.LIE_TYPES, required=True)
    v.add_argument("--n", type=int, required=True)

    cs = sub.add_parser("conjecture-scan", parents=[common],
                        help="exploratory scan of the type-D pairing conjecture")
    cs.add_argument("--bound", type=int, default=8)
    return p


COMMANDS = {
    "kostka": cmd_kostka,
    "green": cmd_green,
    "springer": cmd_springer,
    "euler": cmd_euler,
    "chartable": cmd_chartable,
    "verify": cmd_verify,
    "conjecture-scan": cmd_conjecture_scan,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(
            cache_dir=args.cache_dir or cache.default_dir(),
            max_rank=args.max_rank,
            output_format=args.format,
            parallelism=args.jobs,
            use_cache=not args.no_cache,
        )
        result = COMMANDS[args.command](args, cfg)
    except (InputError, SpringerGreenError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    code = 0
    if isinstance(result, tuple):
        result, code = result
    if result:
        print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
