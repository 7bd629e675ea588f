"""
Finite root systems of the supported Cartan types, with exact data.

Roots live in a standard ambient space with rational coordinates; the
scalar product on that space is scaled so that short roots have squared
length 2 (all roots count as short in simply-laced types).  Almost all
computation downstream is done in the basis of fundamental weights, where
a weight is a tuple of integers and ``(lam, alpha_i^vee) = lam[i]``.

>>> rs = build("A2")
>>> rs.positive_roots
((2, -1), (-1, 2), (1, 1))
>>> rs.theta, rs.lacing, rs.denom_m
((1, 1), 1, 3)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

__all__ = [
    "CartanType", "RootSystem", "Weight", "SUPPORTED_TYPES",
    "UnsupportedTypeError", "parse_cartan_type", "build", "dominance",
]

# integer coordinates on the fundamental weights
Weight = tuple[int, ...]

SUPPORTED_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2")


class UnsupportedTypeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_cartan_type(text: str | CartanType) -> CartanType:
    if isinstance(text, CartanType):
        ct = text
    else:
        match = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
        if match is None:
            raise UnsupportedTypeError(
                f"cannot parse Cartan type {text!r}; supported: {', '.join(SUPPORTED_TYPES)}")
        ct = CartanType(match.group(1).upper(), int(match.group(2)))
    if str(ct) not in SUPPORTED_TYPES:
        raise UnsupportedTypeError(
            f"unsupported Cartan type {ct}; supported: {', '.join(SUPPORTED_TYPES)}")
    return ct


def _unit(dim: int, *entries: tuple[int, int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    for pos, coeff in entries:
        v[pos] += coeff
    return tuple(v)


def _ambient_data(ct: CartanType) -> tuple[list[tuple[Fraction, ...]], int]:
    """Simple roots in standard coordinates (Bourbaki numbering) and the
    factor by which the standard dot product is scaled."""
    n = ct.rank
    if ct.family == "A":
        return [_unit(n + 1, (i, 1), (i + 1, -1)) for i in range(n)], 1
    if ct.family == "B":
        # e_i - e_{i+1} long, e_n short; doubled form gives the short root length 2
        roots = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        return roots + [_unit(n, (n - 1, 1))], 2
    if ct.family == "C":
        roots = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        return roots + [_unit(n, (n - 1, 2))], 1
    if ct.family == "D":
        roots = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        return roots + [_unit(n, (n - 2, 1), (n - 1, 1))], 1
    if ct.family == "G":
        return [_unit(3, (0, 1), (1, -1)), _unit(3, (0, -2), (1, 1), (2, 1))], 1
    raise UnsupportedTypeError(str(ct))


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan elimination; returns X with matrix @ X = rhs."""
    n = len(matrix)
    aug = [[Fraction(x) for x in matrix[i]] + [Fraction(x) for x in rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Exact tables for one finite root system.

    Roots are stored in fundamental-weight coordinates.  ``coroot_coeffs[k]``
    holds the coefficients of the k-th positive coroot on the simple
    coroots, so that ``(lam, beta^vee)`` is a dot product with ``lam``.
    """
    cartan_type: CartanType
    ambient_simple_roots: tuple[tuple[Fraction, ...], ...]
    form_scale: int
    cartan: tuple[tuple[int, ...], ...]          # cartan[i][j] = (alpha_i, alpha_j^vee)
    positive_roots: tuple[Weight, ...]
    root_coeffs: tuple[tuple[int, ...], ...]     # on the simple roots
    coroot_coeffs: tuple[tuple[int, ...], ...]   # on the simple coroots
    root_norms: tuple[int, ...]                  # (beta, beta) for each positive root
    weight_gram: tuple[tuple[Fraction, ...], ...]  # (varpi_i, varpi_j)
    theta: Weight
    theta_coroot: tuple[int, ...]
    lacing: int
    denom_m: int
    _index: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"

    # -- ambient data ---------------------------------------------------------

    def ambient_form(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return self.form_scale * sum((a * b for a, b in zip(u, v)), Fraction(0))

    @cached_property
    def ambient_fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        # varpi_i = sum_k (A^{-1})_{ik} alpha_k, A the Cartan matrix
        n = self.rank
        ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        inv = _solve(self.cartan, ident)
        dim = len(self.ambient_simple_roots[0])
        return tuple(
            tuple(sum((inv[i][k] * self.ambient_simple_roots[k][d] for k in range(n)), Fraction(0))
                  for d in range(dim))
            for i in range(n))

    def to_ambient(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        dim = len(self.ambient_simple_roots[0])
        fw = self.ambient_fundamental_weights
        return tuple(sum((c * fw[i][d] for i, c in enumerate(lam)), Fraction(0)) for d in range(dim))

    # -- weight-coordinate arithmetic -----------------------------------------

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.cartan

    @property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def form(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        g = self.weight_gram
        return sum((lam[i] * g[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank)
                    if lam[i] and mu[j]), Fraction(0))

    def root_index(self, beta: Weight) -> int:
        """Index of a positive root in ``positive_roots``."""
        return self._index[beta]

    def is_root(self, beta: Weight) -> bool:
        return beta in self._index or tuple(-x for x in beta) in self._index

    def pairing(self, lam: Sequence[int], beta: Weight) -> int:
        """``(lam, beta^vee)`` for a root ``beta`` (positive or negative)."""
        if beta in self._index:
            return _dot(lam, self.coroot_coeffs[self._index[beta]])
        neg = tuple(-x for x in beta)
        return -_dot(lam, self.coroot_coeffs[self._index[neg]])

    def is_short(self, beta: Weight) -> bool:
        if beta not in self._index:
            beta = tuple(-x for x in beta)
        return self.root_norms[self._index[beta]] == 2

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        """Simple reflection ``s_i`` (0-based index) on a weight."""
        c = lam[i]
        if c == 0:
            return tuple(lam)
        a = self.cartan[i]
        return tuple(x - c * y for x, y in zip(lam, a))

    def reflect_root(self, beta: Weight, lam: Sequence[int]) -> Weight:
        c = self.pairing(lam, beta)
        return tuple(x - c * y for x, y in zip(lam, beta))

    def two_rho_pairing(self, lam: Sequence[int]) -> int:
        """``2<lam, rho>`` with rho half the sum of the positive coroots."""
        return sum(_dot(lam, cc) for cc in self.coroot_coeffs)

    def rho_pairing(self, lam: Sequence[int]) -> Fraction:
        return Fraction(self.two_rho_pairing(lam), 2)

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """rho in ambient coordinates: half the sum of positive coroots."""
        dim = len(self.ambient_simple_roots[0])
        total = [Fraction(0)] * dim
        for beta, norm in zip(self.positive_roots, self.root_norms):
            v = self.to_ambient(beta)
            for d in range(dim):
                total[d] += Fraction(2, norm) * v[d]
        return tuple(x / 2 for x in total)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def longest_element_action(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of w_0 on weight coordinates (w_0(varpi_i) = -varpi_{i*})."""
        n = self.rank
        cols = []
        for i in range(n):
            lam = list(self.fundamental_weights[i])
            # walk to the antidominant chamber: result is w_0(varpi_i)
            while True:
                j = next((j for j in range(n) if lam[j] > 0), None)
                if j is None:
                    break
                lam = list(self.reflect(j, lam))
            cols.append(tuple(lam))
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def w0(self, lam: Sequence[int]) -> Weight:
        m = self.longest_element_action
        return tuple(_dot(row, lam) for row in m)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _lcm_denominators(values) -> int:
    m = 1
    for x in values:
        m = math.lcm(m, Fraction(x).denominator)
    return m


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    simple, scale = _ambient_data(ct)
    n = ct.rank

    def form(u, v):
        return scale * sum((a * b for a, b in zip(u, v)), Fraction(0))

    norms = [form(a, a) for a in simple]
    cartan = tuple(
        tuple(int(2 * form(simple[i], simple[j]) / norms[j]) for j in range(n)) for i in range(n))

    # close the simple roots under simple reflections, tracking simple-root coordinates
    def refl(i, coeffs):
        # s_i(beta) = beta - (beta, alpha_i^vee) alpha_i
        c = sum(coeffs[k] * cartan[k][i] for k in range(n))
        out = list(coeffs)
        out[i] -= c
        return tuple(out)

    start = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    roots = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = refl(i, beta)
                if gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positive = sorted((r for r in roots if all(c >= 0 for c in r)), key=lambda r: (sum(r), tuple(-c for c in r)))

    weight_coords, coroot_coeffs, root_norms = [], [], []
    for coeffs in positive:
        weight_coords.append(tuple(sum(coeffs[k] * cartan[k][j] for k in range(n)) for j in range(n)))
        norm = sum((coeffs[i] * coeffs[j] * form(simple[i], simple[j])
                    for i in range(n) for j in range(n)), Fraction(0))
        root_norms.append(int(norm))
        # beta^vee = 2 beta / (beta, beta) = sum_k c_k (|alpha_k|^2 / |beta|^2) alpha_k^vee
        cc = [Fraction(coeffs[k]) * norms[k] / norm for k in range(n)]
        assert all(x.denominator == 1 for x in cc)
        coroot_coeffs.append(tuple(int(x) for x in cc))

    # (varpi_i, varpi_j) = (A^{-1})_{ij} |alpha_j|^2 / 2
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    inv = _solve(cartan, ident)
    gram = tuple(tuple(inv[i][j] * norms[j] / 2 for j in range(n)) for i in range(n))

    # highest short root: the unique dominant short root
    short_dominant = [w for w, nm in zip(weight_coords, root_norms) if nm == 2 and all(c >= 0 for c in w)]
    assert len(short_dominant) == 1, short_dominant
    theta = short_dominant[0]
    theta_coroot = coroot_coeffs[weight_coords.index(theta)]

    lacing = max([1] + [abs(cartan[i][j]) for i in range(n) for j in range(n) if i != j])
    rs = RootSystem(
        cartan_type=ct,
        ambient_simple_roots=tuple(simple),
        form_scale=scale,
        cartan=cartan,
        positive_roots=tuple(weight_coords),
        root_coeffs=tuple(positive),
        coroot_coeffs=tuple(coroot_coeffs),
        root_norms=tuple(root_norms),
        weight_gram=gram,
        theta=theta,
        theta_coroot=theta_coroot,
        lacing=lacing,
        denom_m=1,
    )
    # exponents of q in the polynomial representation are pairings (lam, mu) of weights
    fw = rs.ambient_fundamental_weights
    values = [form(a, w) for a in simple for w in fw] + [g for row in gram for g in row]
    object.__setattr__(rs, "denom_m", _lcm_denominators(values))
    rs._index.update({beta: k for k, beta in enumerate(weight_coords)})
    return rs


def build(ct: str | CartanType) -> RootSystem:
    """Root system for a supported Cartan type given as e.g. ``"B2"``."""
    return _build(parse_cartan_type(ct))


def dominance(rs: RootSystem, lam: Sequence[int]) -> str:
    """One of ``"dominant"``, ``"antidominant"``, ``"neither"`` or ``"both-zero"``."""
    if len(lam) != rs.rank:
        raise ValueError(f"weight {tuple(lam)} has wrong length for {rs.cartan_type}")
    dom = all(c >= 0 for c in lam)
    anti = all(c <= 0 for c in lam)
    if dom and anti:
        return "both-zero"
    if dom:
        return "dominant"
    if anti:
        return "antidominant"
    return "neither"
