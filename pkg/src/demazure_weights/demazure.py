"""
Demazure characters via Demazure operators, and a Freudenthal oracle.

For an integral weight ``lam`` with dominant conjugate ``lam_plus``, the
character of the Demazure module ``D_lam`` is

    chi_lam = D_{i_1} ... D_{i_k} e^{lam_plus}

where ``s_{i_1} ... s_{i_k}`` is a reduced word of the shortest finite Weyl
group element carrying ``lam_plus`` to ``lam`` and

    D_i f = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}).

``weyl_character_oracle`` computes full irreducible characters with
Freudenthal's recursion, sharing nothing with the operator route except the
root data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .affine_weyl import AffineWeylGroup, weyl_group
from .exact_algebra import WeightSeries
from .root_data import RootSystem, Weight, build

__all__ = [
    "DemazureCharacter", "demazure_op", "demazure_op_word", "demazure_character",
    "weight_multiplicity", "weyl_character_oracle",
]


@dataclass(frozen=True)
class DemazureCharacter:
    lam: Weight
    series: WeightSeries

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.series.coefficient(tuple(mu))

    def to_json(self) -> list[dict]:
        return [{"weight": list(mu), "mult": int(c)} for mu, c in self.series.sorted_items()]


def _demazure_monomial(rs: RootSystem, i: int, mu: Weight) -> dict[Weight, int]:
    """``D_i e^mu`` for a 0-based simple index i."""
    k = mu[i]
    alpha = rs.simple_roots[i]
    out = {}
    if k >= 0:
        # e^mu + e^{mu - alpha} + ... + e^{s_i mu}
        for j in range(k + 1):
            out[tuple(x - j * a for x, a in zip(mu, alpha))] = 1
    elif k < -1:
        # -(e^{mu + alpha} + ... + e^{s_i mu - alpha})
        for j in range(1, -k):
            out[tuple(x + j * a for x, a in zip(mu, alpha))] = -1
    return out


def demazure_op(rs: RootSystem, i: int, f: WeightSeries) -> WeightSeries:
    """Apply the Demazure operator ``D_i`` (simple index 1..n)."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple index {i} out of range 1..{rs.rank}")
    out: dict[Weight, int] = {}
    for mu, c in f.items():
        for nu, d in _demazure_monomial(rs, i - 1, mu).items():
            out[nu] = out.get(nu, 0) + c * d
    return WeightSeries(out)


def demazure_op_word(rs: RootSystem, word: Sequence[int], f: WeightSeries) -> WeightSeries:
    """``D_{word[0]} ... D_{word[-1]} f``."""
    for i in reversed(word):
        f = demazure_op(rs, i, f)
    return f


@lru_cache(maxsize=4096)
def _character(type_name: str, lam: Weight) -> DemazureCharacter:
    group = weyl_group(type_name)
    rs = group.rs
    word = group.finite_word_to(lam, "dominant")
    lam_plus = lam
    for i in word:
        lam_plus = rs.reflect(i - 1, lam_plus)
    # word walks lam to lam_plus, so v = s_{word[0]} ... s_{word[-1]} has v(lam_plus) = lam
    series = demazure_op_word(rs, word, WeightSeries.monomial(lam_plus))
    return DemazureCharacter(lam, series)


def _type_name(group_or_rs) -> str:
    if isinstance(group_or_rs, AffineWeylGroup):
        return str(group_or_rs.rs.cartan_type)
    if isinstance(group_or_rs, RootSystem):
        return str(group_or_rs.cartan_type)
    return str(build(group_or_rs).cartan_type)


def demazure_character(group_or_rs, lam: Sequence[int]) -> DemazureCharacter:
    """Character of the Demazure module ``D_lam`` for any integral weight."""
    return _character(_type_name(group_or_rs), tuple(lam))


def weight_multiplicity(group_or_rs, lam: Sequence[int], mu: Sequence[int]) -> int:
    return demazure_character(group_or_rs, lam).multiplicity(mu)


def _dominant_conjugate(rs: RootSystem, mu: Weight) -> Weight:
    while True:
        i = next((i for i in range(rs.rank) if mu[i] < 0), None)
        if i is None:
            return mu
        mu = rs.reflect(i, mu)


def _in_positive_root_cone(rs: RootSystem, diff: Weight) -> bool:
    # diff is in weight coordinates; solve for simple-root coordinates
    coeffs = _root_coordinates(rs, diff)
    return all(c >= 0 and c.denominator == 1 for c in coeffs)


@lru_cache(maxsize=None)
def _inverse_cartan(type_name: str) -> tuple[tuple[Fraction, ...], ...]:
    from .root_data import _solve
    rs = build(type_name)
    n = rs.rank
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return tuple(tuple(row) for row in _solve(rs.cartan, ident))


def _root_coordinates(rs: RootSystem, lam: Weight) -> tuple[Fraction, ...]:
    # lam = sum_k c_k alpha_k with alpha_k = row k of the Cartan matrix
    inv = _inverse_cartan(str(rs.cartan_type))
    n = rs.rank
    return tuple(sum((lam[j] * inv[j][k] for j in range(n)), Fraction(0)) for k in range(n))


@lru_cache(maxsize=1024)
def _freudenthal(type_name: str, lam_plus: Weight) -> WeightSeries:
    rs = build(type_name)
    n = rs.rank
    # weights of V_lam: saturated set reached from lam_plus by subtracting simple roots
    weights = {lam_plus}
    frontier = [lam_plus]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(n):
                nu = tuple(x - a for x, a in zip(mu, rs.simple_roots[i]))
                if nu in weights:
                    continue
                dom = _dominant_conjugate(rs, nu)
                if _in_positive_root_cone(rs, tuple(a - b for a, b in zip(lam_plus, dom))):
                    weights.add(nu)
                    nxt.append(nu)
        frontier = nxt

    # Freudenthal uses the Weyl vector (half sum of positive roots) and any invariant form
    weyl_vector = (1,) * n

    def norm_shift(mu):
        v = tuple(a + b for a, b in zip(mu, weyl_vector))
        return rs.form(v, v)

    top = norm_shift(lam_plus)
    depth = {mu: sum(_root_coordinates(rs, tuple(a - b for a, b in zip(lam_plus, mu)))) for mu in weights}
    mult: dict[Weight, Fraction] = {lam_plus: Fraction(1)}
    for mu in sorted(weights, key=lambda w: (depth[w], w)):
        if mu == lam_plus:
            continue
        total = Fraction(0)
        for beta in rs.positive_roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                if nu not in weights:
                    break
                total += mult[nu] * rs.form(nu, beta)
                k += 1
        denom = top - norm_shift(mu)
        value = 2 * total / denom
        assert value.denominator == 1 and value >= 0, (mu, value)
        mult[mu] = value
    return WeightSeries({mu: int(c) for mu, c in mult.items()})


def weyl_character_oracle(group_or_rs, lam_plus: Sequence[int]) -> WeightSeries:
    """Character of the irreducible module with highest weight ``lam_plus``."""
    lam_plus = tuple(lam_plus)
    if any(c < 0 for c in lam_plus):
        raise ValueError(f"{lam_plus} is not dominant")
    return _freudenthal(_type_name(group_or_rs), lam_plus)
