from __future__ import annotations

from fractions import Fraction

import pytest

from demazure_weights.root_data import SUPPORTED_TYPES, UnsupportedTypeError, build, dominance

from conftest import ALL_TYPES

POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6}
LACING = {"A1": 1, "A2": 1, "A3": 1, "A4": 1, "B2": 2, "B3": 2, "C3": 2, "D4": 1, "G2": 3}


def test_supported_types():
    assert set(SUPPORTED_TYPES) == set(ALL_TYPES)


@pytest.mark.parametrize("bad", ["E8", "A0", "A5", "", "F4", "B1"])
def test_unsupported(bad):
    with pytest.raises(UnsupportedTypeError):
        build(bad)


def test_a1():
    rs = build("A1")
    assert rs.num_positive_roots == 1
    assert rs.theta == rs.simple_roots[0] == (2,)
    assert rs.lacing == 1
    # rho is half the coroot; <varpi, rho> = 1/2
    assert rs.rho_pairing((1,)) == Fraction(1, 2)


def test_a2_roots():
    rs = build("A2")
    a1, a2 = rs.simple_roots
    assert set(rs.positive_roots) == {a1, a2, tuple(x + y for x, y in zip(a1, a2))}


def test_g2_theta_is_highest_short_root():
    rs = build("G2")
    assert rs.num_positive_roots == 6
    assert rs.lacing == 3
    assert rs.is_short(rs.theta)
    short = [b for b in rs.positive_roots if rs.is_short(b)]
    assert len(short) == 3
    # theta dominant and every other short positive root lies below it
    assert all(c >= 0 for c in rs.theta)
    long_highest = max(rs.positive_roots, key=lambda b: rs.form(b, b) * 100 + rs.two_rho_pairing(b))
    assert long_highest != rs.theta


@pytest.mark.parametrize("name", ALL_TYPES)
def test_structure(name):
    rs = build(name)
    assert rs.num_positive_roots == POSITIVE_ROOT_COUNTS[name]
    assert len(rs.positive_roots) == rs.num_positive_roots
    assert rs.lacing == LACING[name]
    # short roots have squared length 2
    assert min(rs.form(b, b) for b in rs.positive_roots) == 2
    # theta is the unique dominant short root
    dominant_short = [b for b in rs.positive_roots if rs.is_short(b) and all(c >= 0 for c in b)]
    assert dominant_short == [rs.theta]
    # Cartan matrix entries
    for i, a in enumerate(rs.simple_roots):
        assert a[i] == 2
        assert all(a[j] <= 0 for j in range(rs.rank) if j != i)
    # root system closed under simple reflections
    roots = set(rs.positive_roots) | {tuple(-x for x in b) for b in rs.positive_roots}
    for i in range(rs.rank):
        assert {rs.reflect(i, b) for b in roots} == roots


@pytest.mark.parametrize("name", ALL_TYPES)
def test_pairing_and_rho(name):
    rs = build(name)
    for i, w in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            assert rs.pairing(w, a) == int(i == j)
        # <varpi_i, rho> > 0
        assert rs.rho_pairing(w) > 0
    assert rs.two_rho_pairing(rs.zero) == 0


@pytest.mark.parametrize("name", ALL_TYPES)
def test_w0(name):
    rs = build(name)
    for w in rs.fundamental_weights:
        image = rs.w0(w)
        assert all(c <= 0 for c in image)
        assert rs.w0(image) == w
        assert rs.form(image, image) == rs.form(w, w)


def test_dominance():
    assert dominance(build("A1"), (1,)) == "dominant"
    assert dominance(build("A1"), (-1,)) == "antidominant"
    assert dominance(build("A2"), (1, -1)) == "neither"
    assert dominance(build("A2"), (0, 0)) == "both-zero"


def test_denominator_m():
    assert build("A1").denom_m == 2
    assert build("A2").denom_m == 3
    assert build("G2").denom_m == 1
