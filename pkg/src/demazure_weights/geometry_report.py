"""
Dimension and component-count predictions for the varieties M_{lam,mu}.

For ``mu <= lam`` the predicted dimension is

    n = l(w_lam)/2 - l(w_ring_lam)/2 + l(w_0) - <mu, rho>

and the predicted number of ``I``-cosets over ``F_t`` is the polynomial
``vol(t) = c_{lam,mu}(t) * t^n``, where ``c_{lam,mu}(t)`` is the coefficient of
``e^mu`` in ``E_lam(t)``.  Its coefficient of ``t^n`` should be the Demazure
multiplicity ``m_{lam,mu}``, i.e. the number of top-dimensional components.
Checks are recorded per record and never raised.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine_weyl import AffineWeylGroup, format_weight, weyl_group
from .demazure import demazure_character
from .exact_algebra import LaurentT, evaluate_t
from .macdonald import c_coeff
from .root_data import Weight

__all__ = [
    "DomainError", "PredictionRecord", "SAMPLE_PRIME_POWERS",
    "n_dim", "modular_exponent", "denominator_identity_check", "volume_poly",
    "predict", "predict_all", "predict_irreducible", "records_to_json", "records_to_csv",
]

log = logging.getLogger(__name__)

SAMPLE_PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)


class DomainError(ValueError):
    """The pair (lam, mu) is outside the domain of an operation."""


def _group(group_or_name) -> AffineWeylGroup:
    if isinstance(group_or_name, AffineWeylGroup):
        return group_or_name
    return weyl_group(str(group_or_name))


def _require_below(group: AffineWeylGroup, lam: Weight, mu: Weight) -> None:
    if not group.bruhat_leq_weights(mu, lam):
        raise DomainError(f"{format_weight(mu)} is not below {format_weight(lam)} in the Bruhat order")


def n_value(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Exact (unchecked) value of the dimension formula."""
    group = _group(group_or_name)
    od = group.orbit_data(tuple(lam))
    rs = group.rs
    return (Fraction(od.length - od.ring_length, 2) + rs.num_positive_roots
            - rs.rho_pairing(tuple(mu)))


def n_dim(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> int:
    group = _group(group_or_name)
    lam, mu = tuple(lam), tuple(mu)
    _require_below(group, lam, mu)
    value = n_value(group, lam, mu)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"n_{{{lam},{mu}}} = {value} is not a nonnegative integer")
    return int(value)


def modular_exponent(group_or_name, mu: Sequence[int]) -> int:
    """Exponent ``2<mu, rho>`` of the modular function at ``x^mu``."""
    return _group(group_or_name).rs.two_rho_pairing(tuple(mu))


def denominator_identity_check(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Exponent of ``j_lam(t) t^{l(w_0)} delta^{1/2}(x^{w_0 mu})`` equals ``n``."""
    group = _group(group_or_name)
    rs = group.rs
    lam, mu = tuple(lam), tuple(mu)
    od = group.orbit_data(lam)
    j_exp = Fraction(od.length - od.ring_length, 2)
    delta_half = Fraction(modular_exponent(group, rs.w0(mu)), 2)
    return j_exp + rs.num_positive_roots + delta_half == n_value(group, lam, mu)


def volume_poly(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> LaurentT:
    """``c_{lam,mu}(t) * t^{n_{lam,mu}}``."""
    group = _group(group_or_name)
    n = n_dim(group, lam, mu)
    return c_coeff(group, lam, mu).shift(2 * n)


@dataclass
class PredictionRecord:
    type: str
    lam: Weight
    mu: Weight
    m: int
    n: int | None
    vol_poly: LaurentT | None
    checks: dict[str, bool] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @property
    def checks_passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "m": self.m,
            "n": self.n,
            "vol_poly": None if self.vol_poly is None else self.vol_poly.to_string(ascending=True),
            "checks": dict(self.checks),
            "checks_passed": self.checks_passed,
            "flags": list(self.flags),
        }


def _volume_checks(vol: LaurentT, n: int, m: int) -> dict[str, bool]:
    checks = {}
    low = vol.low_degree()
    checks["polynomial"] = low is None or (low >= 0 and all(e % 2 == 0 for e, _ in vol.items()))
    deg = vol.degree()
    checks["degree_le_n"] = deg is None or deg <= n
    checks["leading_coeff_eq_m"] = vol.coefficient(2 * n) == m
    ok = True
    if checks["polynomial"]:
        for x in SAMPLE_PRIME_POWERS:
            value = evaluate_t(vol, x)
            ok = ok and value.denominator == 1 and value >= 0
    else:
        ok = False
    checks["values_nonneg_integers"] = ok
    return checks


def predict(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> PredictionRecord:
    group = _group(group_or_name)
    lam, mu = tuple(lam), tuple(mu)
    _require_below(group, lam, mu)
    type_name = str(group.rs.cartan_type)
    m = demazure_character(group, lam).multiplicity(mu)
    value = n_value(group, lam, mu)
    checks = {
        "n_integral": value.denominator == 1,
        "n_nonnegative": value >= 0,
        "denominator_identity": denominator_identity_check(group, lam, mu),
    }
    flags = []
    n = int(value) if value.denominator == 1 else None
    vol = None
    if n is not None:
        vol = c_coeff(group, lam, mu).shift(2 * n)
        checks.update(_volume_checks(vol, n, m))
        if n == 0:
            flags.append("n_zero")
            log.info("n = 0 for %s lambda=%s mu=%s", type_name, lam, mu)
    return PredictionRecord(type_name, lam, mu, m, n, vol, checks, flags)


def predict_all(group_or_name, lam: Sequence[int]) -> list[PredictionRecord]:
    """Records for every ``mu`` in the lower set of ``lam``, in Bruhat-compatible order."""
    group = _group(group_or_name)
    return [predict(group, lam, mu) for mu in group.sorted_lower_set(tuple(lam))]


def predict_irreducible(group_or_name, lam_plus: Sequence[int], mu: Sequence[int]) -> PredictionRecord:
    """Record for the weight ``mu`` of the irreducible module with highest weight ``lam_plus``.

    The module is the Demazure module of ``w_0(lam_plus)``; ``n`` and the
    volume are filled in from that pair when ``mu`` lies below it.
    """
    group = _group(group_or_name)
    lam_plus, mu = tuple(lam_plus), tuple(mu)
    if any(c < 0 for c in lam_plus):
        raise DomainError(f"{format_weight(lam_plus)} is not dominant")
    lam = group.rs.w0(lam_plus)
    if group.bruhat_leq_weights(mu, lam):
        rec = predict(group, lam, mu)
        rec.lam = lam_plus
        rec.flags.append(f"via_antidominant={format_weight(lam)}")
        return rec
    m = demazure_character(group, lam).multiplicity(mu)
    return PredictionRecord(str(group.rs.cartan_type), lam_plus, mu, m, None, None, {}, ["mu_not_below"])


def records_to_json(records: Sequence[PredictionRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, sort_keys=True) + "\n"


def records_to_csv(records: Sequence[PredictionRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["type", "lambda", "mu", "m", "n", "vol_poly", "checks_passed"])
    for r in records:
        writer.writerow([
            r.type, format_weight(r.lam), format_weight(r.mu), r.m,
            "" if r.n is None else r.n,
            "" if r.vol_poly is None else r.vol_poly.to_string(ascending=True),
            "true" if r.checks_passed else "false",
        ])
    return buf.getvalue()
