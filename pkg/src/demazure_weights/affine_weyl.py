"""
Finite and extended affine Weyl groups acting on the weight lattice.

An element is stored as an affine map ``x -> A x + b`` on fundamental-weight
coordinates, with ``A`` an integer matrix from the finite Weyl group and
``b`` a weight.  The simple reflections are ``s_1..s_n`` (indices 1..n here)
and ``s_0``, which acts by ``x -> s_theta(x) + theta`` with theta the highest
short root.  The fundamental alcove is cut out by ``(x, alpha_i^vee) >= 0``
and ``(x, theta^vee) <= 1``.

Lengths are hyperplane counts: the affine hyperplanes are
``{x : (x, alpha^vee) = k}`` for roots alpha and integers k, and the length of
``g`` is the number of them separating the alcove from its image under g.
This makes sense for every element of the extended group, including
translations by weights outside the root lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .root_data import RootSystem, Weight, build

__all__ = [
    "AffineWeylElt", "OrbitData", "AffineWeylGroup", "BudgetError",
    "weyl_group", "parse_weight", "format_weight",
]

DEFAULT_LOWER_SET_BUDGET = 16

Matrix = tuple[tuple[int, ...], ...]


class BudgetError(RuntimeError):
    """Raised when a combinatorial enumeration would exceed its budget."""


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse ``"-1,2"`` into ``(-1, 2)``."""
    try:
        lam = tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc
    if rank is not None and len(lam) != rank:
        raise ValueError(f"weight {text!r} needs {rank} coordinates")
    return lam


def format_weight(lam: Sequence[int]) -> str:
    return ",".join(str(c) for c in lam)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@dataclass(frozen=True)
class AffineWeylElt:
    """The affine map ``x -> finite @ x + translation`` on weight coordinates."""
    finite: Matrix
    translation: Weight

    def act(self, x: Sequence[int]) -> Weight:
        return tuple(a + b for a, b in zip(_matvec(self.finite, x), self.translation))

    def act_linear(self, x: Sequence[int]) -> Weight:
        return _matvec(self.finite, x)

    def __mul__(self, other: AffineWeylElt) -> AffineWeylElt:
        return AffineWeylElt(
            _matmul(self.finite, other.finite),
            self.act(other.translation),
        )

    @property
    def is_finite(self) -> bool:
        return not any(self.translation)


# finite Weyl group elements are the affine ones with zero translation
FiniteWeylElt = AffineWeylElt


@dataclass(frozen=True)
class OrbitData:
    """Orbit bookkeeping for a weight ``lam``.

    ``w_lambda`` is the minimal element of W with ``w_lambda . lambda_tilde = lam``
    (``word`` multiplies out left to right to it); ``w_ring`` is the minimal
    element of the finite group with ``w_ring(lambda_minus) = lam``.
    """
    lam: Weight
    lambda_tilde: Weight
    w_lambda: AffineWeylElt
    word: tuple[int, ...]
    lambda_minus: Weight
    lambda_plus: Weight
    w_ring: AffineWeylElt
    ring_word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def ring_length(self) -> int:
        return len(self.ring_word)


class AffineWeylGroup:
    """Group operations, lengths and Bruhat order for one root system.

    All caches are ``lru_cache`` based, so an instance can be shared
    between threads.
    """

    def __init__(self, rs: RootSystem, lower_set_budget: int = DEFAULT_LOWER_SET_BUDGET):
        self.rs = rs
        self.rank = n = rs.rank
        self.lower_set_budget = lower_set_budget
        self.identity = AffineWeylElt(_identity(n), rs.zero)
        gens = [self._reflection_elt(rs.theta, rs.theta)]
        for i in range(n):
            gens.append(AffineWeylElt(self._reflection_matrix(rs.simple_roots[i]), rs.zero))
        self.generators = tuple(gens)
        # interior point of the alcove, scaled by _x0_scale to stay integral
        self._x0 = (1,) * n
        self._x0_scale = sum(rs.theta_coroot) + 1

        self.length = lru_cache(maxsize=None)(self._length)
        self.reduced_word = lru_cache(maxsize=None)(self._reduced_word)
        self.orbit_data = lru_cache(maxsize=None)(self._orbit_data)
        self.lower_set = lru_cache(maxsize=None)(self._lower_set)
        self._bruhat = lru_cache(maxsize=None)(self._bruhat_uncached)

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.rs.cartan_type})"

    # -- construction -----------------------------------------------------------

    def _reflection_matrix(self, beta: Weight) -> Matrix:
        n = self.rank
        cols = [self.rs.reflect_root(beta, e) for e in _identity(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def _reflection_elt(self, beta: Weight, shift: Weight) -> AffineWeylElt:
        return AffineWeylElt(self._reflection_matrix(beta), shift)

    def s(self, i: int) -> AffineWeylElt:
        return self.generators[i]

    def translation(self, lam: Sequence[int]) -> AffineWeylElt:
        return AffineWeylElt(self.identity.finite, tuple(lam))

    def from_word(self, word: Iterable[int]) -> AffineWeylElt:
        g = self.identity
        for i in word:
            g = g * self.generators[i]
        return g

    def inverse(self, g: AffineWeylElt) -> AffineWeylElt:
        # finite part is orthogonal but not necessarily symmetric in weight
        # coordinates; invert by walking the reduced word
        word, pi = self.reduced_word(g)
        inv = self._length_zero_inverse(pi)
        for i in reversed(word):
            inv = inv * self.generators[i]
        return inv

    def _length_zero_inverse(self, pi: AffineWeylElt) -> AffineWeylElt:
        g = pi
        prev = self.identity
        while g != self.identity:
            prev, g = g, g * pi
        return prev

    # -- affine action ------------------------------------------------------------

    def affine_act(self, g: AffineWeylElt, x: Sequence[int]) -> Weight:
        return g.act(x)

    def act_simple(self, i: int, x: Sequence[int]) -> Weight:
        """``s_i . x`` without building matrices."""
        rs = self.rs
        if i:
            return rs.reflect(i - 1, x)
        c = sum(a * b for a, b in zip(x, rs.theta_coroot)) - 1
        return tuple(a - c * b for a, b in zip(x, rs.theta))

    def wall_values(self, x: Sequence[int]) -> tuple[int, ...]:
        """``(x + Lambda_0, alpha_i^vee)`` for i = 0..n at level one."""
        return (1 - sum(a * b for a, b in zip(x, self.rs.theta_coroot)),) + tuple(x)

    def in_alcove(self, x: Sequence[int]) -> bool:
        return all(v >= 0 for v in self.wall_values(x))

    # -- lengths ------------------------------------------------------------------

    def _length(self, g: AffineWeylElt) -> int:
        rs = self.rs
        N = self._x0_scale
        y = tuple(a + N * b for a, b in zip(_matvec(g.finite, self._x0), g.translation))
        total = 0
        for cc in rs.coroot_coeffs:
            total += abs(math.floor(sum(a * b for a, b in zip(y, cc)) / N))
        return total

    def translation_length(self, lam: Sequence[int]) -> int:
        """``sum over positive roots of |(lam, alpha^vee)|``."""
        return sum(abs(sum(a * b for a, b in zip(lam, cc))) for cc in self.rs.coroot_coeffs)

    def is_left_descent(self, i: int, g: AffineWeylElt) -> bool:
        return self.length(self.generators[i] * g) < self.length(g)

    def is_right_descent(self, g: AffineWeylElt, i: int) -> bool:
        return self.length(g * self.generators[i]) < self.length(g)

    def _reduced_word(self, g: AffineWeylElt) -> tuple[tuple[int, ...], AffineWeylElt]:
        """``(word, pi)`` with ``g = s_word[0] ... s_word[-1] pi`` and pi of length zero."""
        word = []
        cur = g
        ell = self.length(cur)
        while ell:
            for i in range(self.rank + 1):
                nxt = self.generators[i] * cur
                ln = self.length(nxt)
                if ln < ell:
                    word.append(i)
                    cur, ell = nxt, ln
                    break
            else:  # pragma: no cover - lengths always admit a descent
                raise AssertionError("no descent found for positive length element")
        return tuple(word), cur

    def in_W(self, g: AffineWeylElt) -> bool:
        """Whether ``g`` lies in the (non-extended) affine Weyl group."""
        return self.reduced_word(g)[1] == self.identity

    # -- Bruhat order -------------------------------------------------------------

    def bruhat_leq(self, u: AffineWeylElt, w: AffineWeylElt) -> bool:
        if not (self.in_W(u) and self.in_W(w)):
            raise ValueError("Bruhat comparison is only defined on the non-extended group W")
        return self._bruhat(u, w)

    def _bruhat_uncached(self, u: AffineWeylElt, w: AffineWeylElt) -> bool:
        if u == w:
            return True
        lw, lu = self.length(w), self.length(u)
        if lu >= lw:
            return False
        if lu == 0:
            return True
        i = self.reduced_word(w)[0][0]
        sw = self.generators[i] * w
        su = self.generators[i] * u
        if self.length(su) < lu:
            return self._bruhat(su, sw)
        return self._bruhat(u, sw)

    # -- orbit data ---------------------------------------------------------------

    def _orbit_data(self, lam: Weight) -> OrbitData:
        lam = tuple(lam)
        rs = self.rs
        # affine descent walk to the alcove; smallest index first
        record = []
        x = lam
        while True:
            walls = self.wall_values(x)
            i = next((i for i, v in enumerate(walls) if v < 0), None)
            if i is None:
                break
            x = self.act_simple(i, x)
            record.append(i)
        lambda_tilde = x
        # lambda_tilde = s_{record[-1]} ... s_{record[0]} . lam, so w_lambda = s_{record[0]} ... s_{record[-1]}
        word = tuple(record)
        w_lambda = self.from_word(word)

        ring = []
        x = lam
        while True:
            i = next((i for i in range(rs.rank) if x[i] > 0), None)
            if i is None:
                break
            x = rs.reflect(i, x)
            ring.append(i + 1)
        lambda_minus = x
        ring_word = tuple(ring)
        return OrbitData(
            lam=lam,
            lambda_tilde=lambda_tilde,
            w_lambda=w_lambda,
            word=word,
            lambda_minus=lambda_minus,
            lambda_plus=rs.w0(lambda_minus),
            w_ring=self.from_word(ring_word),
            ring_word=ring_word,
        )

    def bruhat_leq_weights(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        """``mu <= lam`` in the Bruhat order on weights."""
        mu, lam = tuple(mu), tuple(lam)
        if mu == lam:
            return True
        om, ol = self.orbit_data(mu), self.orbit_data(lam)
        if om.lambda_tilde != ol.lambda_tilde:
            return False
        return self._bruhat(om.w_lambda, ol.w_lambda)

    def _lower_set(self, lam: Weight) -> frozenset[Weight]:
        od = self.orbit_data(tuple(lam))
        if od.length > self.lower_set_budget:
            raise BudgetError(
                f"l(w_lambda) = {od.length} exceeds the lower-set budget {self.lower_set_budget}")
        # subword products applied to lambda_tilde, rightmost letter first
        points = {od.lambda_tilde}
        for i in reversed(od.word):
            points |= {self.act_simple(i, x) for x in points}
        return frozenset(points)

    def sorted_lower_set(self, lam: Sequence[int]) -> list[Weight]:
        """Lower set in a linear extension of Bruhat order: by length, then coordinates."""
        return sorted(self.lower_set(tuple(lam)), key=lambda mu: (self.orbit_data(mu).length, mu))

    # -- finite group helpers -------------------------------------------------------

    def finite_word_to(self, lam: Sequence[int], target: str = "dominant") -> tuple[int, ...]:
        """Word (1-based) of the minimal finite v with ``v(lam_target) = lam``."""
        rs = self.rs
        x = tuple(lam)
        record = []
        while True:
            if target == "dominant":
                i = next((i for i in range(rs.rank) if x[i] < 0), None)
            else:
                i = next((i for i in range(rs.rank) if x[i] > 0), None)
            if i is None:
                return tuple(record)
            x = rs.reflect(i, x)
            record.append(i + 1)


@lru_cache(maxsize=None)
def weyl_group(type_name: str) -> AffineWeylGroup:
    return AffineWeylGroup(build(type_name))
