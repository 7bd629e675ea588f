"""
Nonsymmetric Macdonald polynomials through the affine Hecke algebra.

Polynomial representation
-------------------------
The extended affine Weyl group acts on affine weights ``mu + c delta`` by
``g(mu + c delta) = A mu + (c - (A mu, b)) delta`` for ``g: x -> A x + b``.
Group-algebra elements carry ``e^delta = q^{-1}``, so that ``q`` only ever
appears through powers of ``q^(1/m)``.  With affine simple roots
``a_i = alpha_i`` (i >= 1) and ``a_0 = delta - theta``, equal parameters and

    T_i = t^(1/2) s_i + (t^(1/2) - t^(-1/2)) (1 - e^{-a_i})^{-1} (1 - s_i),

the operators satisfy ``(T_i - t^(1/2))(T_i + t^(-1/2)) = 0`` and the braid
relations of the affine diagram.  For a fundamental weight ``w`` write
``tau_w = s_{i_1} ... s_{i_k} pi`` reduced, with ``pi`` of length zero; then

    Y^w = T_{i_1}^{-1} ... T_{i_k}^{-1} pi.

These commute and are triangular for the Bruhat order on weights.  ``E_lam``
is the joint eigenvector with coefficient 1 at ``e^lam``.

The two sign choices here (``e^delta = q^{-1}`` and inverse ``T``'s in ``Y``)
are the only ones for which both ``q -> infinity`` and ``t -> infinity``
limits of the coefficients are finite.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .affine_weyl import AffineWeylElt, AffineWeylGroup, weyl_group
from .exact_algebra import (
    LaurentT, LimitError, RatQT, WeightSeries, limit_q_infinity, limit_t_infinity,
)
from .root_data import Weight

__all__ = [
    "ConventionError", "DegenerateSpectrumError", "HeckeRep", "MacdonaldPoly", "YMatrices",
    "hecke_rep", "demazure_lusztig", "cherednik_Y_matrices", "macdonald_E", "check_eigenvector", "E_limit_q", "E_limit_t", "c_coeff", "j_factor",
]

log = logging.getLogger(__name__)

# e^{delta} = q^{Q_SIGN}
Q_SIGN = -1

# affine monomial key: (weight, m * delta-coefficient, doubled t-exponent)
Key = tuple[Weight, int, int]


class ConventionError(ArithmeticError):
    """A structural property (stability, finiteness of a limit) failed."""


class DegenerateSpectrumError(ArithmeticError):
    pass


def _add(out: dict, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class HeckeRep:
    """The polynomial representation for one root system.

    Internally a vector is a dict ``{(mu, cm, e2): int}`` standing for
    ``sum int * t^(e2/2) * e^(mu + (cm/m) delta)``.
    """

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self.rs = rs = group.rs
        self.m = rs.denom_m
        self.n = rs.rank
        theta = rs.theta
        # affine simple roots as (weight, m * delta-coefficient)
        self.simple = [(tuple(-x for x in theta), self.m)] + [(a, 0) for a in rs.simple_roots]
        self._pi_cache: dict = {}
        self.y_column = lru_cache(maxsize=None)(self._y_column)
        self.y_words = [group.reduced_word(group.translation(w)) for w in rs.fundamental_weights]

    # -- elementary operators on affine monomials ----------------------------------

    def coroot_pairing(self, i: int, mu: Weight) -> int:
        if i:
            return mu[i - 1]
        return -sum(a * b for a, b in zip(mu, self.rs.theta_coroot))

    def _t_monomial(self, i: int, key: Key, c: int, out: dict, inverse: bool) -> None:
        mu, cm, e2 = key
        k = self.coroot_pairing(i, mu)
        alpha, am = self.simple[i]
        # t^(1/2) s_i
        s_mu = tuple(x - k * a for x, a in zip(mu, alpha))
        _add(out, (s_mu, cm - k * am, e2 + 1), c)
        # (t^(1/2) - t^(-1/2)) (1 - s_i) / (1 - e^{-a_i})
        if k > 0:
            shifts = [(-j, c) for j in range(k)]
        elif k < 0:
            shifts = [(j, -c) for j in range(1, -k + 1)]
        else:
            shifts = []
        if inverse:
            shifts.append((0, -c))
        for j, d in shifts:
            nu = tuple(x + j * a for x, a in zip(mu, alpha))
            ncm = cm + j * am
            _add(out, (nu, ncm, e2 + 1), d)
            _add(out, (nu, ncm, e2 - 1), -d)

    def apply_T(self, i: int, vec: dict, inverse: bool = False) -> dict:
        out: dict = {}
        for key, c in vec.items():
            self._t_monomial(i, key, c, out, inverse)
        return out

    def apply_group(self, g: AffineWeylElt, vec: dict) -> dict:
        """Action of an extended affine Weyl group element (e.g. a length-zero pi)."""
        out: dict = {}
        rs, m = self.rs, self.m
        for (mu, cm, e2), c in vec.items():
            nu = g.act_linear(mu)
            shift = rs.form(nu, g.translation) * m
            assert shift.denominator == 1
            _add(out, (nu, cm - int(shift), e2), c)
        return out

    def apply_Y(self, j: int, vec: dict) -> dict:
        """``Y^{varpi_j}`` (0-based j)."""
        word, pi = self.y_words[j]
        vec = self.apply_group(pi, vec)
        for i in reversed(word):
            vec = self.apply_T(i, vec, inverse=True)
        return vec

    # -- conversion ----------------------------------------------------------------

    def to_series(self, vec: dict) -> WeightSeries:
        grouped: dict[Weight, dict] = {}
        for (mu, cm, e2), c in vec.items():
            terms = grouped.setdefault(mu, {})
            key = (Q_SIGN * cm, e2)
            terms[key] = terms.get(key, 0) + c
        return WeightSeries({mu: RatQT.from_terms(terms, self.m) for mu, terms in grouped.items()})

    def from_series(self, f: WeightSeries) -> list[tuple[RatQT, dict]]:
        return [(c, {(mu, 0, 0): 1}) for mu, c in f.items()]

    def _apply_to_series(self, f: WeightSeries, op) -> WeightSeries:
        total = WeightSeries()
        for c, vec in self.from_series(f):
            total = total + self.to_series(op(vec)).scale(c)
        return total

    def T(self, i: int, f: WeightSeries, inverse: bool = False) -> WeightSeries:
        return self._apply_to_series(f, lambda v: self.apply_T(i, v, inverse))

    def Y(self, j: int, f: WeightSeries) -> WeightSeries:
        return self._apply_to_series(f, lambda v: self.apply_Y(j, v))

    def act(self, g: AffineWeylElt, f: WeightSeries) -> WeightSeries:
        return self._apply_to_series(f, lambda v: self.apply_group(g, v))

    # -- Y columns -----------------------------------------------------------------

    def _y_column(self, j: int, mu: Weight) -> dict[Weight, RatQT]:
        """``Y^{varpi_j} e^mu`` as ``{nu: coefficient}``, checked against the lower set."""
        series = self.to_series(self.apply_Y(j, {(mu, 0, 0): 1}))
        allowed = self.group.lower_set(mu)
        for nu in series:
            if nu not in allowed:
                raise ConventionError(
                    f"Y^{{varpi_{j + 1}}} e^{mu} has a term at {nu}, outside the lower set of {mu}")
        return dict(series.items())


@lru_cache(maxsize=None)
def hecke_rep(type_name: str) -> HeckeRep:
    return HeckeRep(weyl_group(type_name))


def _rep(group_or_name) -> HeckeRep:
    if isinstance(group_or_name, HeckeRep):
        return group_or_name
    if isinstance(group_or_name, AffineWeylGroup):
        return hecke_rep(str(group_or_name.rs.cartan_type))
    return hecke_rep(str(group_or_name))


def demazure_lusztig(group_or_name, i: int, f: WeightSeries, inverse: bool = False) -> WeightSeries:
    """``T_i f`` (or ``T_i^{-1} f``) for an affine index ``0 <= i <= n``."""
    return _rep(group_or_name).T(i, f, inverse)


@dataclass(frozen=True)
class YMatrices:
    """Matrices of ``Y^{varpi_j}`` on ``span{e^mu : mu in basis}``.

    ``matrices[j][r][c]`` is the coefficient of ``e^{basis[r]}`` in
    ``Y^{varpi_j} e^{basis[c]}``; the basis is a linear extension of the
    Bruhat order, so the matrices are upper triangular.
    """
    basis: tuple[Weight, ...]
    matrices: tuple[tuple[tuple[RatQT, ...], ...], ...]


def cherednik_Y_matrices(group_or_name, lam: Sequence[int]) -> YMatrices:
    rep = _rep(group_or_name)
    basis = tuple(rep.group.sorted_lower_set(tuple(lam)))
    index = {mu: k for k, mu in enumerate(basis)}
    zero = RatQT.constant(0, rep.m)
    mats = []
    for j in range(rep.n):
        rows = [[zero] * len(basis) for _ in basis]
        for c, mu in enumerate(basis):
            for nu, val in rep.y_column(j, mu).items():
                rows[index[nu]][c] = val
        mats.append(tuple(tuple(r) for r in rows))
    return YMatrices(basis, tuple(mats))


@dataclass(frozen=True)
class MacdonaldPoly:
    lam: Weight
    series: WeightSeries      # coefficients in RatQT
    eigenvalues: tuple[RatQT, ...]


@lru_cache(maxsize=None)
def _macdonald(type_name: str, lam: Weight) -> MacdonaldPoly:
    rep = hecke_rep(type_name)
    group = rep.group
    basis = group.sorted_lower_set(lam)
    assert basis[-1] == lam
    columns = {mu: [rep.y_column(j, mu) for j in range(rep.n)] for mu in basis}
    eig = tuple(columns[lam][j][lam] for j in range(rep.n))
    diag = {mu: [columns[mu][j][mu] for j in range(rep.n)] for mu in basis}

    coeffs: dict[Weight, RatQT] = {lam: RatQT.constant(1, rep.m)}
    solved: list[Weight] = [lam]
    for nu in reversed(basis[:-1]):
        j = next((j for j in range(rep.n) if diag[nu][j] != eig[j]), None)
        if j is None:
            raise DegenerateSpectrumError(f"joint eigenvalue of e^{nu} equals that of e^{lam}")
        total = RatQT.constant(0, rep.m)
        for mu in solved:
            entry = columns[mu][j].get(nu)
            if entry is not None:
                total = total + entry * coeffs[mu]
        if total:
            coeffs[nu] = total / (eig[j] - diag[nu][j])
        solved.append(nu)
    return MacdonaldPoly(lam, WeightSeries(coeffs), eig)


def macdonald_E(group_or_name, lam: Sequence[int]) -> MacdonaldPoly:
    """Monic nonsymmetric Macdonald polynomial ``E_lam(q, t)``."""
    rep = _rep(group_or_name)
    return _macdonald(str(rep.rs.cartan_type), tuple(lam))


def check_eigenvector(group_or_name, E: MacdonaldPoly) -> bool:
    """Verify ``Y^{varpi_j} E = eigenvalue_j E`` for every j."""
    rep = _rep(group_or_name)
    for j in range(rep.n):
        image: dict[Weight, RatQT] = {}
        for mu, c in E.series.items():
            for nu, val in rep.y_column(j, mu).items():
                image[nu] = image[nu] + val * c if nu in image else val * c
        if WeightSeries(image) != E.series.scale(E.eigenvalues[j]):
            return False
    return True


@lru_cache(maxsize=None)
def _limit_q(type_name: str, lam: Weight) -> WeightSeries:
    E = _macdonald(type_name, lam)
    out = {}
    for mu, c in E.series.items():
        try:
            value = limit_q_infinity(c)
        except LimitError as exc:
            raise ConventionError(f"q-limit of the coefficient of e^{mu} in E_{lam}: {exc}") from exc
        if any(e > 0 or e % 2 for e, _ in value.items()):
            raise ConventionError(
                f"coefficient of e^{mu} in E_{lam}(t) is not a polynomial in t^-1: {value}")
        out[mu] = value
    return WeightSeries(out)


def E_limit_q(group_or_name, lam: Sequence[int]) -> WeightSeries:
    """``E_lam(t) = lim_{q -> infinity} E_lam(q, t)``, coefficients in ``LaurentT``."""
    rep = _rep(group_or_name)
    return _limit_q(str(rep.rs.cartan_type), tuple(lam))


def E_limit_t(group_or_name, lam: Sequence[int]) -> WeightSeries:
    """``lim_{t -> infinity} E_lam(t)`` with integer coefficients."""
    return E_limit_q(group_or_name, lam).map_coefficients(limit_t_infinity)


def c_coeff(group_or_name, lam: Sequence[int], mu: Sequence[int]) -> LaurentT:
    """Coefficient of ``e^mu`` in ``E_lam(t)``; zero (with a warning) when ``mu`` is not below ``lam``."""
    rep = _rep(group_or_name)
    lam, mu = tuple(lam), tuple(mu)
    if not rep.group.bruhat_leq_weights(mu, lam):
        log.warning("c_coeff: %s is not below %s in the Bruhat order", mu, lam)
        return LaurentT()
    return E_limit_q(rep, lam).coefficient(mu, LaurentT())


def j_factor(group_or_name, lam: Sequence[int]) -> LaurentT:
    """Normalization monomial ``t^((l(w_lam) - l(w_ring_lam))/2)``."""
    group = _rep(group_or_name).group if not isinstance(group_or_name, AffineWeylGroup) else group_or_name
    od = group.orbit_data(tuple(lam))
    return LaurentT.monomial(od.length - od.ring_length)
