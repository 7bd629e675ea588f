"""
Invariant suite over a ball of weights ``{lam : l(tau_lam) <= radius}``.

Every check is exact.  Per-weight work is a pure function of
``(type_name, lam)`` so it can be fanned out over processes; results are
merged in ball order, making the report independent of scheduling.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .affine_weyl import AffineWeylGroup, BudgetError, format_weight, weyl_group
from .demazure import demazure_character, weyl_character_oracle
from .exact_algebra import LaurentT, limit_t_infinity
from .geometry_report import _volume_checks, denominator_identity_check, n_value
from .macdonald import ConventionError, DegenerateSpectrumError, E_limit_q, hecke_rep
from .root_data import Weight, build, parse_cartan_type

__all__ = [
    "CHECK_NAMES", "CheckResult", "VerifyReport", "radius_ceiling", "ball", "box",
    "length_checks", "hecke_axiom_checks", "y_operator_checks", "verify_weight", "run_verify",
]

DEFAULT_RADIUS = 8
MAX_FAILURES_SHOWN = 5

CHECK_NAMES = (
    "length_identity",
    "rho_length_bound",
    "finite_limits",
    "triangularity",
    "top_coefficient",
    "central_identity",
    "n_integral_nonnegative",
    "leading_coefficient",
    "volume_values",
    "denominator_identity",
    "oracle_agreement",
    "y_commute_triangular",
    "hecke_quadratic",
    "hecke_braid",
)


def radius_ceiling(type_name: str) -> int:
    return 12 if parse_cartan_type(type_name).rank <= 2 else 8


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    type: str
    radius: int
    weights: int
    pairs: int
    results: dict[str, CheckResult]
    n_zero_pairs: list[tuple[Weight, Weight]]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def to_text(self) -> str:
        lines = [f"verify type={self.type} radius={self.radius} weights={self.weights} pairs={self.pairs}"]
        for r in self.results.values():
            lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name} checked={r.checked} failed={r.failed}")
            for msg in r.failures[:MAX_FAILURES_SHOWN]:
                lines.append(f"  {msg}")
        lines.append(f"flagged n=0 pairs: {len(self.n_zero_pairs)}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "type": self.type,
            "radius": self.radius,
            "weights": self.weights,
            "pairs": self.pairs,
            "checks": [
                {"name": r.name, "checked": r.checked, "failed": r.failed, "failures": r.failures}
                for r in self.results.values()
            ],
            "n_zero_pairs": [[list(a), list(b)] for a, b in self.n_zero_pairs],
            "ok": self.ok,
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


# -- weight sets -----------------------------------------------------------------------

def box(rank: int, r: int) -> Iterable[Weight]:
    return itertools.product(range(-r, r + 1), repeat=rank)


def ball(group: AffineWeylGroup, radius: int) -> list[Weight]:
    """All weights with ``l(tau_lam) <= radius``, ordered by that length then coordinates.

    Each ``|lam_i| <= l(tau_lam)``, so the coordinate box of half-width
    ``radius`` contains the ball.
    """
    pts = [lam for lam in box(group.rank, radius) if group.translation_length(lam) <= radius]
    return sorted(pts, key=lambda lam: (group.translation_length(lam), lam))


# -- individual checks -------------------------------------------------------------------

def length_checks(group: AffineWeylGroup, lam: Weight) -> tuple[bool, bool]:
    """(length identity, rho bound) for one weight."""
    od = group.orbit_data(lam)
    total = od.length + od.ring_length
    tau = group.length(group.translation(lam))
    return (tau == total == group.translation_length(lam),
            group.rs.two_rho_pairing(lam) <= total)


def _scale_t(vec: dict, half_steps: int) -> dict:
    return {(mu, cm, e2 + half_steps): c for (mu, cm, e2), c in vec.items()}


def _combine(*vecs: dict) -> dict:
    out: dict = {}
    for vec in vecs:
        for key, c in vec.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key)
    return out


def _neg(vec: dict) -> dict:
    return {k: -c for k, c in vec.items()}


def affine_cartan(type_name: str) -> list[list[int]]:
    """``a_ij = (a_i, a_j^vee)`` for the affine simple roots, indices 0..n."""
    rep = hecke_rep(type_name)
    n = rep.n
    return [[rep.coroot_pairing(j, rep.simple[i][0]) for j in range(n + 1)] for i in range(n + 1)]


BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def hecke_axiom_checks(type_name: str, samples: int = 50, seed: int = 0) -> tuple[CheckResult, CheckResult]:
    """Quadratic and braid relations on seeded random monomials ``e^mu``."""
    rep = hecke_rep(type_name)
    n = rep.n
    rng = random.Random(seed)
    cartan = affine_cartan(type_name)
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)
             if cartan[i][j] * cartan[j][i] in BRAID_ORDER]
    quad = CheckResult("hecke_quadratic")
    braid = CheckResult("hecke_braid")
    for _ in range(samples):
        mu = tuple(rng.randint(-3, 3) for _ in range(n))
        vec = {(mu, 0, 0): 1}
        for i in range(n + 1):
            # (T - t^(1/2))(T + t^(-1/2)) = T^2 + (t^(-1/2) - t^(1/2)) T - 1
            tv = rep.apply_T(i, vec)
            ttv = rep.apply_T(i, tv)
            lhs = _combine(ttv, _scale_t(tv, -1), _neg(_scale_t(tv, 1)), _neg(vec))
            quad.checked += 1
            if lhs:
                quad.failures.append(f"T_{i} on e^{format_weight(mu)}")
            inv = rep.apply_T(i, tv, inverse=True)
            quad.checked += 1
            if inv != vec:
                quad.failures.append(f"T_{i}^-1 T_{i} on e^{format_weight(mu)}")
        for i, j in pairs:
            m = BRAID_ORDER[cartan[i][j] * cartan[j][i]]
            a, b = vec, vec
            for k in range(m):
                a = rep.apply_T(i if k % 2 == 0 else j, a)
                b = rep.apply_T(j if k % 2 == 0 else i, b)
            braid.checked += 1
            if a != b:
                braid.failures.append(f"braid ({i},{j}) on e^{format_weight(mu)}")
    return quad, braid


def y_operator_checks(type_name: str, mu: Weight) -> list[str]:
    """Commutation of the ``Y^{varpi_j}`` on ``e^mu`` and triangularity of their columns."""
    rep = hecke_rep(type_name)
    problems = []
    images = []
    for j in range(rep.n):
        try:
            col = rep.y_column(j, mu)
        except ConventionError as exc:
            problems.append(str(exc))
            continue
        if mu not in col:
            problems.append(f"Y^{{varpi_{j + 1}}} has zero diagonal at {format_weight(mu)}")
        images.append(rep.apply_Y(j, {(mu, 0, 0): 1}))
    if problems:
        return problems
    for i in range(rep.n):
        for j in range(i + 1, rep.n):
            if rep.apply_Y(i, images[j]) != rep.apply_Y(j, images[i]):
                problems.append(f"Y^{{varpi_{i + 1}}}, Y^{{varpi_{j + 1}}} do not commute on e^{format_weight(mu)}")
    return problems


def verify_weight(type_name: str, lam: Weight) -> dict:
    """All per-weight checks; returns ``{name: (checked, failures)}`` plus bookkeeping."""
    group = weyl_group(type_name)
    out: dict[str, tuple[int, list[str]]] = {}
    tag = format_weight(lam)

    def record(name: str, ok: bool, msg: str) -> None:
        checked, fails = out.get(name, (0, []))
        out[name] = (checked + 1, fails + ([] if ok else [msg]))

    length_ok, rho_ok = length_checks(group, lam)
    record("length_identity", length_ok, f"lambda={tag}")
    record("rho_length_bound", rho_ok, f"lambda={tag}")

    try:
        lower = group.lower_set(lam)
    except BudgetError as exc:
        record("triangularity", False, f"lambda={tag}: {exc}")
        return {"checks": out, "pairs": 0, "n_zero": [], "lower": []}

    chi = demazure_character(group, lam)
    record("top_coefficient", chi.multiplicity(lam) == 1, f"m_(lambda,lambda) != 1 at lambda={tag}")

    try:
        E_t = E_limit_q(group, lam)
    except (ConventionError, DegenerateSpectrumError) as exc:
        record("finite_limits", False, f"lambda={tag}: {exc}")
        return {"checks": out, "pairs": 0, "n_zero": [], "lower": sorted(lower)}
    record("finite_limits", True, "")

    support_ok = all(mu in lower for mu in E_t) and all(mu in lower for mu in chi.series)
    record("triangularity", support_ok and E_t.coefficient(lam) == 1,
           f"support or top coefficient of E_{tag}")

    try:
        limit = E_t.map_coefficients(limit_t_infinity)
        record("central_identity", limit == chi.series, f"lambda={tag}")
    except ArithmeticError as exc:
        record("central_identity", False, f"lambda={tag}: {exc}")

    if all(c <= 0 for c in lam):
        od = group.orbit_data(lam)
        oracle = weyl_character_oracle(group, od.lambda_plus)
        record("oracle_agreement", oracle == chi.series, f"lambda={tag}")

    n_zero = []
    for mu in sorted(lower):
        value = n_value(group, lam, mu)
        pair = f"lambda={tag} mu={format_weight(mu)}"
        ok = value.denominator == 1 and value >= 0
        record("n_integral_nonnegative", ok, f"{pair}: n={value}")
        record("denominator_identity", denominator_identity_check(group, lam, mu), pair)
        if not ok:
            continue
        n = int(value)
        if n == 0:
            n_zero.append((lam, mu))
        vol = E_t.coefficient(mu, LaurentT()).shift(2 * n)
        checks = _volume_checks(vol, n, chi.multiplicity(mu))
        record("leading_coefficient", checks["degree_le_n"] and checks["leading_coeff_eq_m"],
               f"{pair}: vol={vol}")
        record("volume_values", checks["polynomial"] and checks["values_nonneg_integers"],
               f"{pair}: vol={vol}")
    return {"checks": out, "pairs": len(lower), "n_zero": n_zero, "lower": sorted(lower)}


def _verify_weight_star(args):
    return verify_weight(*args)


def _y_star(args):
    return args[1], y_operator_checks(*args)


def run_verify(type_name: str, radius: int = DEFAULT_RADIUS, jobs: int = 1,
               hecke_samples: int = 50, seed: int = 0) -> VerifyReport:
    """Run the full suite; raises ``BudgetError`` if ``radius`` exceeds the ceiling."""
    type_name = str(build(type_name).cartan_type)
    ceiling = radius_ceiling(type_name)
    if radius < 0 or radius > ceiling:
        raise BudgetError(f"radius {radius} outside 0..{ceiling} for {type_name}")
    group = weyl_group(type_name)
    weights = ball(group, radius)

    results = {name: CheckResult(name) for name in CHECK_NAMES}
    pairs = 0
    n_zero: list[tuple[Weight, Weight]] = []
    lower_union: set[Weight] = set()

    def merge(partial: dict) -> None:
        nonlocal pairs
        for name, (checked, fails) in partial["checks"].items():
            results[name].checked += checked
            results[name].failures.extend(fails)
        pairs += partial["pairs"]
        n_zero.extend(partial["n_zero"])
        lower_union.update(partial["lower"])

    tasks = [(type_name, lam) for lam in weights]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for partial in pool.map(_verify_weight_star, tasks, chunksize=4):
                merge(partial)
            y_results = list(pool.map(_y_star, [(type_name, mu) for mu in sorted(lower_union)], chunksize=8))
    else:
        for task in tasks:
            merge(verify_weight(*task))
        y_results = [_y_star((type_name, mu)) for mu in sorted(lower_union)]

    y = results["y_commute_triangular"]
    for mu, problems in y_results:
        y.checked += 1
        y.failures.extend(problems)

    quad, braid = hecke_axiom_checks(type_name, hecke_samples, seed)
    results["hecke_quadratic"] = quad
    results["hecke_braid"] = braid
    return VerifyReport(type_name, radius, len(weights), pairs, results, n_zero)
