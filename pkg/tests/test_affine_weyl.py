from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from demazure_weights.affine_weyl import (
    AffineWeylGroup, BudgetError, format_weight, parse_weight, weyl_group,
)
from demazure_weights.root_data import build

from conftest import ALL_TYPES


def test_parse_weight():
    assert parse_weight("-1,2") == (-1, 2)
    assert parse_weight(" 3 ") == (3,)
    assert format_weight((-1, 2)) == "-1,2"
    with pytest.raises(ValueError):
        parse_weight("1,x")
    with pytest.raises(ValueError):
        parse_weight("1,2", rank=3)


def test_length_examples():
    a1, a2 = weyl_group("A1"), weyl_group("A2")
    assert a1.length(a1.identity) == 0
    assert a1.length(a1.translation((1,))) == 1
    assert a2.length(a2.translation((1, 1))) == 4
    assert a1.translation_length((3,)) == 3
    assert a1.translation_length((0,)) == 0
    assert a2.translation_length((1, 0)) == 2


def test_generators_have_length_one():
    for name in ALL_TYPES:
        g = weyl_group(name)
        for s in g.generators:
            assert g.length(s) == 1
            assert s * s == g.identity


def test_orbit_examples():
    g = weyl_group("A1")
    od = g.orbit_data((1,))
    assert od.lambda_tilde == (1,) and od.word == () and od.ring_word == (1,) and od.lambda_minus == (-1,)
    od = g.orbit_data((-1,))
    assert od.lambda_tilde == (1,) and od.word == (1,) and od.ring_word == ()
    od = g.orbit_data((2,))
    assert od.lambda_tilde == (0,) and od.word == (0,) and od.ring_word == (1,)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_length_identity_and_rho_bound_box(name):
    g = weyl_group(name)
    rs = g.rs
    r = 3 if rs.rank <= 3 else 2
    for lam in itertools.product(range(-r, r + 1), repeat=rs.rank):
        od = g.orbit_data(lam)
        tau = g.translation(lam)
        assert g.length(tau) == g.translation_length(lam) == od.length + od.ring_length
        assert rs.two_rho_pairing(lam) <= od.length + od.ring_length
        # walk gives a reduced word and lands in the alcove
        assert g.length(od.w_lambda) == od.length
        assert g.in_alcove(od.lambda_tilde)
        assert od.w_lambda.act(od.lambda_tilde) == lam
        assert od.w_ring.act(od.lambda_minus) == lam
        assert g.length(od.w_ring) == od.ring_length


@pytest.mark.parametrize("name", ALL_TYPES)
def test_unique_alcove_representative(name):
    g = weyl_group(name)
    rng = random.Random(7)
    for _ in range(30):
        lam = tuple(rng.randint(-3, 3) for _ in range(g.rank))
        rep = g.orbit_data(lam).lambda_tilde
        # random affine images of lam reach the same representative
        x = lam
        for _ in range(8):
            x = g.act_simple(rng.randint(0, g.rank), x)
        assert g.orbit_data(x).lambda_tilde == rep
        # at most one nonzero coordinate of the alcove point, or zero
        assert sum(1 for c in rep if c) <= 1


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3"])
def test_inverse_and_reduced_word(name):
    g = weyl_group(name)
    rng = random.Random(3)
    for _ in range(25):
        lam = tuple(rng.randint(-2, 2) for _ in range(g.rank))
        word = [rng.randint(0, g.rank) for _ in range(rng.randint(0, 6))]
        h = g.from_word(word) * g.translation(lam)
        assert h * g.inverse(h) == g.identity
        rw, pi = g.reduced_word(h)
        assert len(rw) == g.length(h)
        assert g.from_word(rw) * pi == h
        assert g.length(pi) == 0


def test_bruhat_examples():
    g = weyl_group("A1")
    s0, s1 = g.s(0), g.s(1)
    assert g.bruhat_leq(g.identity, s0 * s1)
    assert g.bruhat_leq(s1, s0 * s1)
    assert not g.bruhat_leq(s0 * s1, s1)
    assert g.bruhat_leq(s0 * s1, s0 * s1)
    with pytest.raises(ValueError):
        g.bruhat_leq(g.translation((1,)), s1)


def test_bruhat_weights_examples():
    g = weyl_group("A1")
    assert g.bruhat_leq_weights((1,), (-1,))
    assert not g.bruhat_leq_weights((-1,), (1,))
    assert g.bruhat_leq_weights((5,), (5,))
    a2 = weyl_group("A2")
    # -varpi_2 = varpi_1 - theta shares the alcove representative varpi_1
    assert a2.orbit_data((0, -1)).lambda_tilde == (1, 0)
    assert a2.bruhat_leq_weights((1, 0), (0, -1))
    assert not a2.bruhat_leq_weights((0, -1), (1, 0))
    # distinct representatives: incomparable both ways
    assert not a2.bruhat_leq_weights((1, 0), (0, 1))
    assert not a2.bruhat_leq_weights((0, 1), (1, 0))
    assert not a2.bruhat_leq_weights((1, 0), (-1, 0))


def test_lower_set_examples():
    g = weyl_group("A1")
    assert g.lower_set((1,)) == {(1,)}
    assert g.lower_set((-1,)) == {(1,), (-1,)}
    for name in ALL_TYPES:
        h = weyl_group(name)
        assert h.lower_set(h.rs.zero) == {h.rs.zero}


def _subword_elements(g: AffineWeylGroup, word):
    elts = {g.identity}
    for i in word:
        elts |= {u * g.s(i) for u in elts}
    return elts


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_bruhat_matches_subword_property(name):
    g = weyl_group(name)
    rng = random.Random(11)
    for _ in range(12):
        w = g.from_word([rng.randint(0, g.rank) for _ in range(rng.randint(0, 7))])
        word, pi = g.reduced_word(w)
        if pi != g.identity:
            continue
        below = _subword_elements(g, word)
        for u in below:
            assert g.bruhat_leq(u, w)
        for _ in range(10):
            u = g.from_word([rng.randint(0, g.rank) for _ in range(rng.randint(0, 5))])
            assert g.bruhat_leq(u, w) == (u in below)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3"])
def test_lower_set_matches_definition_and_monotone(name):
    g = weyl_group(name)
    r = 2
    pts = list(itertools.product(range(-r, r + 1), repeat=g.rank))
    for lam in pts:
        if g.orbit_data(lam).length > 10:
            continue
        low = g.lower_set(lam)
        for mu in pts:
            assert (mu in low) == g.bruhat_leq_weights(mu, lam)
        for mu in low:
            assert g.lower_set(mu) <= low
            assert g.orbit_data(mu).length <= g.orbit_data(lam).length


def test_lower_set_budget():
    g = AffineWeylGroup(build("A1"), lower_set_budget=3)
    assert len(g.lower_set((-3,))) == 4
    with pytest.raises(BudgetError):
        g.lower_set((-4,))


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=2), st.lists(st.integers(0, 2), max_size=6))
def test_action_is_a_group_action(lam, word):
    g = weyl_group("A2")
    lam = tuple(lam)
    x = lam
    for i in reversed(word):
        x = g.act_simple(i, x)
    assert g.from_word(word).act(lam) == x
    # orbit invariant: same alcove representative
    assert g.orbit_data(x).lambda_tilde == g.orbit_data(lam).lambda_tilde


def test_finite_word_to():
    g = weyl_group("A2")
    lam = (-1, -1)
    word = g.finite_word_to(lam, "dominant")
    x = lam
    for i in word:
        x = g.rs.reflect(i - 1, x)
    assert x == (1, 1)
    assert len(word) == 3
