"""
Command-line interface::

    demazure-weights char --type A1 --weight -1
    demazure-weights macdonald --type A1 --weight -1 --stage t
    demazure-weights predict --type A2 --lambda -1,-1 --all-mu --format csv
    demazure-weights verify --type G2 --radius 6

Exit codes: 0 ok, 1 budget, 2 parse, 3 domain, 4 internal invariant.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .affine_weyl import AffineWeylGroup, BudgetError, format_weight, parse_weight, weyl_group
from .demazure import demazure_character, weyl_character_oracle
from .exact_algebra import WeightSeries
from .geometry_report import (
    DomainError, PredictionRecord, predict, predict_irreducible, records_to_csv, records_to_json,
)
from .macdonald import ConventionError, DegenerateSpectrumError, E_limit_q, E_limit_t, macdonald_E
from .root_data import UnsupportedTypeError, build
from .verify import DEFAULT_RADIUS, run_verify

EXIT_OK, EXIT_BUDGET, EXIT_PARSE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3, 4

WEIGHT_FLAGS = ("--weight", "--lambda", "--mu")

log = logging.getLogger("demazure_weights")


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    type: str
    command: str
    weights: dict
    radius: int | None
    format: str
    out: str | None
    jobs: int


# -- rendering ---------------------------------------------------------------------------

def _monomial(mu: Sequence[int]) -> str:
    return "1" if not any(mu) else f"e^({format_weight(mu)})"


def _term(coeff: str, mu: Sequence[int]) -> str:
    mono = _monomial(mu)
    if coeff == "1":
        return mono
    if mono == "1":
        return coeff
    if " " in coeff or "/" in coeff:
        return f"({coeff})*{mono}"
    return f"{coeff}*{mono}"


def ordered_terms(group: AffineWeylGroup, series: WeightSeries) -> list:
    """Terms in a Bruhat-compatible order, ties broken lexicographically."""
    return sorted(series.items(), key=lambda kv: (group.orbit_data(kv[0]).length, kv[0]))


def render_series(group: AffineWeylGroup, series: WeightSeries, fmt: str, lam: Sequence[int] | None = None,
                  integer: bool = False) -> str:
    terms = ordered_terms(group, series)
    if fmt == "json":
        if integer:
            data = [{"weight": list(mu), "mult": int(c)} for mu, c in terms]
        else:
            data = {"lambda": list(lam), "terms": [{"weight": list(mu), "coeff": str(c)} for mu, c in terms]}
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "mult" if integer else "coeff"])
        for mu, c in terms:
            writer.writerow([format_weight(mu), str(c)])
        return buf.getvalue()
    if not terms:
        return "0\n"
    return " + ".join(_term(str(c), mu) for mu, c in terms) + "\n"


def render_records(records: Sequence[PredictionRecord], fmt: str) -> str:
    if fmt == "json":
        return records_to_json(records)
    if fmt == "csv":
        return records_to_csv(records)
    lines = []
    for r in records:
        vol = "-" if r.vol_poly is None else r.vol_poly.to_string(ascending=True)
        n = "-" if r.n is None else str(r.n)
        status = "pass" if r.checks_passed else "FAIL:" + ",".join(k for k, v in r.checks.items() if not v)
        extra = f" [{' '.join(r.flags)}]" if r.flags else ""
        lines.append(f"{r.type} lambda={format_weight(r.lam)} mu={format_weight(r.mu)} "
                     f"m={r.m} n={n} vol={vol} checks={status}{extra}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------------------

def _weight(text: str | None, rank: int, flag: str):
    if text is None:
        raise ParseError(f"{flag} is required")
    try:
        return parse_weight(text, rank)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _check_budget(group: AffineWeylGroup, lam) -> None:
    od = group.orbit_data(lam)
    if od.length > group.lower_set_budget:
        raise BudgetError(f"l(w_lambda) = {od.length} exceeds the budget {group.lower_set_budget}")


def cmd_char(group: AffineWeylGroup, lam, fmt: str) -> str:
    _check_budget(group, lam)
    return render_series(group, demazure_character(group, lam).series, fmt, lam, integer=True)


def cmd_macdonald(group: AffineWeylGroup, lam, stage: str, fmt: str) -> str:
    _check_budget(group, lam)
    if stage == "qt":
        return render_series(group, macdonald_E(group, lam).series, fmt, lam)
    if stage == "t":
        return render_series(group, E_limit_q(group, lam), fmt, lam)
    return render_series(group, E_limit_t(group, lam), fmt, lam, integer=True)


def _predict_one(args) -> PredictionRecord:
    type_name, lam, mu, irreducible = args
    if irreducible:
        return predict_irreducible(type_name, lam, mu)
    return predict(type_name, lam, mu)


def cmd_predict(group: AffineWeylGroup, lam, mu, all_mu: bool, irreducible: bool, fmt: str, jobs: int) -> str:
    type_name = str(group.rs.cartan_type)
    if irreducible:
        if any(c < 0 for c in lam):
            raise DomainError(f"{format_weight(lam)} is not dominant")
        _check_budget(group, group.rs.w0(lam))
        if all_mu:
            mus = [m for m, _ in ordered_terms(group, weyl_character_oracle(group, lam))]
        else:
            mus = [mu]
    else:
        _check_budget(group, lam)
        if all_mu:
            mus = group.sorted_lower_set(lam)
        else:
            if not group.bruhat_leq_weights(mu, lam):
                raise DomainError(
                    f"mu={format_weight(mu)} is not below lambda={format_weight(lam)} "
                    "in the Bruhat order on weights")
            mus = [mu]
    tasks = [(type_name, lam, m, irreducible) for m in mus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_predict_one, tasks))
    else:
        records = [_predict_one(t) for t in tasks]
    return render_records(records, fmt)


def cmd_verify(type_name: str, radius: int, fmt: str, jobs: int) -> tuple[str, bool]:
    report = run_verify(type_name, radius, jobs=jobs)
    text = report.to_json() if fmt == "json" else report.to_text()
    return text, report.ok


# -- argument handling -------------------------------------------------------------------------

def _join_negative_weights(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--weight -1,2`` as ``--weight=-1,2`` so argparse accepts it."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in WEIGHT_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure-weights",
        description="Exact Demazure weight multiplicities and nonsymmetric Macdonald limits.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--type", required=True, help="root system, e.g. A2, B3, G2")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="output file (default: standard output)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("char", help="Demazure character chi_lambda")
    common(p)
    p.add_argument("--weight", help="comma-separated weight in the fundamental-weight basis")

    p = sub.add_parser("macdonald", help="E_lambda(q,t), E_lambda(t) or its t-limit")
    common(p)
    p.add_argument("--weight")
    p.add_argument("--stage", choices=("qt", "t", "char"), default="t")

    p = sub.add_parser("predict", help="dimension and component-count predictions")
    common(p)
    p.add_argument("--lambda", dest="lam")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mu")
    group.add_argument("--all-mu", action="store_true")
    p.add_argument("--irreducible", action="store_true",
                   help="treat --lambda as a dominant highest weight of an irreducible module")

    p = sub.add_parser("verify", help="run the invariant suite over a ball of weights")
    common(p, formats=("text", "json"))
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS, help="max l(tau_lambda)")
    return parser


def _job_spec(args) -> JobSpec:
    weights = {k: getattr(args, k) for k in ("weight", "lam", "mu") if getattr(args, k, None) is not None}
    return JobSpec(args.type, args.command, weights, getattr(args, "radius", None),
                   args.format, args.out, args.jobs)


def run(spec: JobSpec, args) -> tuple[str, int]:
    try:
        rs = build(spec.type)
    except UnsupportedTypeError as exc:
        raise ParseError(str(exc)) from exc
    group = weyl_group(str(rs.cartan_type))
    n = rs.rank
    if spec.jobs < 1:
        raise ParseError("--jobs must be at least 1")
    if spec.command == "char":
        return cmd_char(group, _weight(args.weight, n, "--weight"), spec.format), EXIT_OK
    if spec.command == "macdonald":
        return cmd_macdonald(group, _weight(args.weight, n, "--weight"), args.stage, spec.format), EXIT_OK
    if spec.command == "predict":
        lam = _weight(args.lam, n, "--lambda")
        mu = None if args.all_mu else _weight(args.mu, n, "--mu")
        return cmd_predict(group, lam, mu, args.all_mu, args.irreducible, spec.format, spec.jobs), EXIT_OK
    text, ok = cmd_verify(str(rs.cartan_type), spec.radius, spec.format, spec.jobs)
    return text, EXIT_OK if ok else EXIT_INTERNAL


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_negative_weights(argv))
    spec = _job_spec(args)
    try:
        text, code = run(spec, args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConventionError, DegenerateSpectrumError, ArithmeticError, AssertionError) as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(text, spec.out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
