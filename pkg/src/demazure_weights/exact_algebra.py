"""
Exact scalars and weight-indexed series.

``LaurentT``
    Laurent polynomials in ``t^(1/2)`` with rational coefficients, keyed by
    doubled exponents.
``RatQT``
    Rational functions in ``q^(1/m)`` and ``t^(1/2)``; numerator and
    denominator are integer polynomials in ``Q = q^(1/m)`` and ``T = t^(1/2)``
    (python-flint ``fmpz_mpoly``), kept coprime with a positive leading
    coefficient of the denominator in lex order (Q before T).  That normal
    form is unique, so equality is structural.
``WeightSeries``
    Finite sums ``sum c_mu e^mu`` over weights with coefficients in any of
    the above or in the integers.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import flint

__all__ = [
    "LaurentT", "RatQT", "WeightSeries", "LimitError",
    "limit_q_infinity", "limit_t_infinity", "evaluate_t", "weyl_substitute",
    "parse_laurent",
]

_CTX = flint.fmpz_mpoly_ctx.get(("Q", "T"), "lex")
_Q, _T = _CTX.gens()
_ONE = _CTX.constant(1)


def _poly_terms(p) -> dict[tuple[int, int], int]:
    return {(int(a), int(b)): int(c) for (a, b), c in p.to_dict().items()}


class LimitError(ArithmeticError):
    """A symbolic limit does not exist in the expected ring."""


def _normalize_number(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _format_exponent(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _format_coeff_term(coeff, body: str) -> str:
    """Signed term like ``-3/2*t^{2}``; ``body`` empty for constants."""
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if not body:
        return f"{sign}{mag}"
    if mag == 1:
        return f"{sign}{body}"
    return f"{sign}{mag}*{body}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0][1:] if terms[0][0] == "+" else terms[0]
    for term in terms[1:]:
        out += f" {term[0]} {term[1:]}"
    return out


class LaurentT:
    """Laurent polynomial in ``t^(1/2)``; ``terms`` maps doubled exponents to rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = _normalize_number(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, half_exponent: int, coeff: Rational = 1) -> LaurentT:
        """``coeff * t^(half_exponent/2)``."""
        return cls({half_exponent: coeff})

    @classmethod
    def constant(cls, c: Rational) -> LaurentT:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Rational]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, half_exponent: int) -> Rational:
        return self._terms.get(half_exponent, 0)

    def exponents(self) -> list[Fraction]:
        return [Fraction(e, 2) for e in sorted(self._terms)]

    def degree(self) -> Fraction | None:
        return Fraction(max(self._terms), 2) if self._terms else None

    def low_degree(self) -> Fraction | None:
        return Fraction(min(self._terms), 2) if self._terms else None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentT):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> LaurentT:
        if isinstance(other, LaurentT):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentT({0: other})
        raise TypeError(f"cannot combine LaurentT with {type(other).__name__}")

    def __add__(self, other) -> LaurentT:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentT(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentT:
        return LaurentT({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentT:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentT:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentT:
        if isinstance(other, (int, Fraction)):
            return LaurentT({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[int, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentT(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentT:
        if k < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are invertible in LaurentT")
            (e, c), = self._terms.items()
            return LaurentT({e * k: Fraction(1) / Fraction(c) ** (-k)})
        out = LaurentT({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def shift(self, half_exponent: int) -> LaurentT:
        """Multiply by ``t^(half_exponent/2)``."""
        return LaurentT({e + half_exponent: c for e, c in self._terms.items()})

    def to_string(self, ascending: bool = False) -> str:
        terms = []
        for e, c in sorted(self._terms.items(), reverse=not ascending):
            x = Fraction(e, 2)
            if x == 0:
                body = ""
            elif x == 1:
                body = "t"
            else:
                body = f"t^{{{_format_exponent(x)}}}"
            terms.append(_format_coeff_term(c, body))
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentT({self.to_string()!r})"


_LAURENT_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?:\*?t(?:\^\{?(?P<exp>-?\d+(?:/\d+)?)\}?)?)?$")


def parse_laurent(text: str) -> LaurentT:
    """Inverse of ``LaurentT.to_string`` (either term order)."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentT()
    # split at + or - not inside braces
    pieces, depth, cur = [], 0, ""
    for ch in s:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch in "+-" and depth == 0 and cur not in ("", "+", "-"):
            pieces.append(cur)
            cur = ""
        cur += ch
    pieces.append(cur)
    out: dict[int, Fraction] = {}
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        match = _LAURENT_TERM.match(body)
        if not body or match is None:
            raise ValueError(f"cannot parse Laurent term {piece!r} in {text!r}")
        coef = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
        if "t" in body:
            exp = Fraction(match.group("exp")) if match.group("exp") else Fraction(1)
        else:
            exp = Fraction(0)
        if (2 * exp).denominator != 1:
            raise ValueError(f"exponent {exp} is not a half-integer")
        key = int(2 * exp)
        out[key] = out.get(key, 0) + sign * coef
    return LaurentT(out)


# -- rational functions in q^(1/m), t^(1/2) ----------------------------------------


def _laurent_to_fraction_pair(terms: Mapping[tuple[int, int], Rational]):
    """Numerator/denominator polynomials for a Laurent polynomial in Q, T."""
    if not terms:
        return _CTX.constant(0), _ONE
    qs = min(0, min(a for a, _ in terms))
    ts = min(0, min(b for _, b in terms))
    scale = 1
    for c in terms.values():
        scale = math.lcm(scale, Fraction(c).denominator)
    num = _CTX.from_dict({(a - qs, b - ts): int(Fraction(c) * scale) for (a, b), c in terms.items() if c})
    den = _CTX.from_dict({(-qs, -ts): scale})
    return num, den


class RatQT:
    """Element of the field of rational functions in ``q^(1/m)`` and ``t^(1/2)``."""

    __slots__ = ("num", "den", "m", "_hash")

    def __init__(self, num, den=None, m: int = 1, _reduced: bool = False):
        if den is None:
            den = _ONE
        if den.is_zero():
            raise ZeroDivisionError("RatQT with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = _ONE
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self.m = m
        self._hash = None

    # constructors --------------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], Rational], m: int) -> RatQT:
        """Laurent polynomial ``sum c Q^a T^b`` with integer exponent pairs (a, b)."""
        num, den = _laurent_to_fraction_pair(terms)
        return cls(num, den, m)

    @classmethod
    def constant(cls, c: Rational, m: int = 1) -> RatQT:
        c = Fraction(c)
        return cls(_CTX.constant(c.numerator), _CTX.constant(c.denominator), m, _reduced=True)

    @classmethod
    def from_laurent(cls, c: LaurentT, m: int = 1) -> RatQT:
        return cls.from_terms({(0, e): v for e, v in c.items()}, m)

    @classmethod
    def q_power(cls, q_exponent: Fraction, m: int) -> RatQT:
        a = Fraction(q_exponent) * m
        if a.denominator != 1:
            raise ValueError(f"q-exponent {q_exponent} is not a multiple of 1/{m}")
        return cls.from_terms({(int(a), 0): 1}, m)

    @classmethod
    def t_power(cls, half_exponent: int, m: int = 1) -> RatQT:
        return cls.from_terms({(0, half_exponent): 1}, m)

    # arithmetic ----------------------------------------------------------------

    def _coerce(self, other) -> RatQT:
        if isinstance(other, RatQT):
            if other.m != self.m:
                raise ValueError(f"mixing q^(1/{self.m}) and q^(1/{other.m}) fields")
            return other
        if isinstance(other, (int, Fraction)):
            return RatQT.constant(other, self.m)
        if isinstance(other, LaurentT):
            return RatQT.from_laurent(other, self.m)
        raise TypeError(f"cannot combine RatQT with {type(other).__name__}")

    def __add__(self, other) -> RatQT:
        other = self._coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatQT(self.num + other.num, self.den, self.m)
        g = self.den.gcd(other.den)
        if g.is_one():
            return RatQT(self.num * other.den + other.num * self.den, self.den * other.den, self.m,
                         _reduced=False)
        d1, d2 = self.den / g, other.den / g
        return RatQT(self.num * d2 + other.num * d1, d1 * other.den, self.m)

    __radd__ = __add__

    def __neg__(self) -> RatQT:
        return RatQT(-self.num, self.den, self.m, _reduced=True)

    def __sub__(self, other) -> RatQT:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatQT:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatQT:
        other = self._coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RatQT(_CTX.constant(0), _ONE, self.m, _reduced=True)
        # cross-cancel before multiplying
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num / g1, other.den / g1) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num / g2, self.den / g2) if not g2.is_one() else (other.num, self.den)
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQT(num, den, self.m, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatQT:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in RatQT")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQT(num, den, self.m, _reduced=True)

    def __truediv__(self, other) -> RatQT:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> RatQT:
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RatQT:
        base = self if k >= 0 else self.inverse()
        out = RatQT.constant(1, self.m)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentT)):
            other = self._coerce(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self.m == other.m and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, tuple(sorted(_poly_terms(self.num).items())),
                               tuple(sorted(_poly_terms(self.den).items()))))
        return self._hash

    # inspection ----------------------------------------------------------------

    def is_laurent(self) -> bool:
        """Whether the denominator is a monomial."""
        return len(_poly_terms(self.den)) == 1

    def laurent_terms(self) -> dict[tuple[int, int], Fraction]:
        """Terms ``{(a, b): c}`` of a Laurent element (``Q^a T^b``)."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        ((da, db), dc), = _poly_terms(self.den).items()
        return {(a - da, b - db): Fraction(int(c), int(dc)) for (a, b), c in _poly_terms(self.num).items()}

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        """Value at ``q^(1/m) = q`` and ``t^(1/2) = t`` (roots supplied directly)."""
        def ev(p):
            return sum((Fraction(int(c)) * Fraction(q) ** a * Fraction(t) ** b
                        for (a, b), c in _poly_terms(p).items()), Fraction(0))
        d = ev(self.den)
        if d == 0:
            raise ZeroDivisionError("pole at the evaluation point")
        return ev(self.num) / d

    def _poly_str(self, p) -> str:
        terms = []
        for (a, b), c in sorted(_poly_terms(p).items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            c = int(c)
            parts = []
            qe, te = Fraction(a, self.m), Fraction(b, 2)
            if qe:
                parts.append("q" if qe == 1 else f"q^{{{_format_exponent(qe)}}}")
            if te:
                parts.append("t" if te == 1 else f"t^{{{_format_exponent(te)}}}")
            terms.append(_format_coeff_term(c, "*".join(parts)))
        return _join_terms(terms)

    def __str__(self) -> str:
        if self.den.is_one():
            return self._poly_str(self.num)
        num = self._poly_str(self.num)
        den = self._poly_str(self.den)
        if len(_poly_terms(self.num)) > 1:
            num = f"({num})"
        if len(_poly_terms(self.den)) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatQT({self!s}, m={self.m})"


def _leading_q_part(p) -> tuple[int, dict[int, int]]:
    terms = _poly_terms(p)
    top = max(a for a, _ in terms)
    return top, {b: int(c) for (a, b), c in terms.items() if a == top}


def limit_q_infinity(c: RatQT) -> LaurentT:
    """``lim_{q -> infinity}`` of a rational function, as a Laurent polynomial in ``t^(1/2)``."""
    if not c:
        return LaurentT()
    dn, lead_num = _leading_q_part(c.num)
    dd, lead_den = _leading_q_part(c.den)
    if dn > dd:
        raise LimitError(f"limit diverges: q-degree {Fraction(dn, c.m)} > {Fraction(dd, c.m)} in {c}")
    if dn < dd:
        return LaurentT()
    ln = _CTX.from_dict({(0, b): v for b, v in lead_num.items()})
    ld = _CTX.from_dict({(0, b): v for b, v in lead_den.items()})
    g = ln.gcd(ld)
    ln, ld = ln / g, ld / g
    den_terms = _poly_terms(ld)
    if len(den_terms) != 1:
        raise LimitError(f"limit not Laurent: leading coefficient ratio ({ln})/({ld}) in {c}")
    ((_, shift), dc), = den_terms.items()
    return LaurentT({b - shift: Fraction(int(v), int(dc)) for (_, b), v in _poly_terms(ln).items()})


def limit_t_infinity(c: LaurentT) -> Rational:
    """``lim_{t -> infinity}`` of a polynomial in ``t^(-1/2)``: its constant term."""
    pos = [e for e, _ in c.items() if e > 0]
    if pos:
        raise LimitError(f"limit diverges: positive t-exponent {Fraction(max(pos), 2)} in {c}")
    return c.coefficient(0)


def evaluate_t(c: LaurentT, value: Rational) -> Fraction:
    """Exact value at ``t = value > 0``; half-integer powers need a rational square root."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError("evaluation point must be positive")
    root = None
    total = Fraction(0)
    for e, coeff in c.items():
        if e % 2 == 0:
            total += coeff * value ** (e // 2)
            continue
        if root is None:
            rn, rd = math.isqrt(value.numerator), math.isqrt(value.denominator)
            if rn * rn != value.numerator or rd * rd != value.denominator:
                raise ValueError(f"t^(1/2) at t = {value} is irrational")
            root = Fraction(rn, rd)
        total += coeff * root ** e
    return total


# -- weight series -------------------------------------------------------------------


class WeightSeries(Mapping):
    """Finite formal sum ``sum_mu c_mu e^mu``; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for mu, c in items:
            if c:
                clean[tuple(mu)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, mu: Sequence[int], coeff=1) -> WeightSeries:
        return cls({tuple(mu): coeff})

    def __getitem__(self, mu):
        return self._terms[tuple(mu)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mu: Sequence[int], default=0):
        return self._terms.get(tuple(mu), default)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def sorted_items(self, key: Callable | None = None) -> list:
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else (lambda kv: kv[0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightSeries):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: WeightSeries) -> WeightSeries:
        out = dict(self._terms)
        for mu, c in other._terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return WeightSeries(out)

    def __neg__(self) -> WeightSeries:
        return WeightSeries({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other: WeightSeries) -> WeightSeries:
        return self + (-other)

    def scale(self, c) -> WeightSeries:
        return WeightSeries({mu: c * v for mu, v in self._terms.items()})

    def __mul__(self, other: WeightSeries) -> WeightSeries:
        """Product in the group algebra: ``e^a e^b = e^(a+b)``."""
        out: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                mu = tuple(x + y for x, y in zip(a, b))
                out[mu] = out[mu] + ca * cb if mu in out else ca * cb
        return WeightSeries(out)

    def map_coefficients(self, fn: Callable) -> WeightSeries:
        return WeightSeries({mu: fn(c) for mu, c in self._terms.items()})

    def map_weights(self, fn: Callable) -> WeightSeries:
        out: dict = {}
        for mu, c in self._terms.items():
            nu = tuple(fn(mu))
            out[nu] = out[nu] + c if nu in out else c
        return WeightSeries(out)

    def __repr__(self) -> str:
        inner = ", ".join(f"{mu}: {c}" for mu, c in self.sorted_items())
        return f"WeightSeries({{{inner}}})"


def weyl_substitute(w, f: WeightSeries) -> WeightSeries:
    """``e^mu -> e^(w(mu))`` for a finite Weyl group element (linear part used)."""
    return f.map_weights(w.act_linear)
