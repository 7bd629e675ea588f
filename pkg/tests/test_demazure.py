from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, strategies as st

from demazure_weights.affine_weyl import weyl_group
from demazure_weights.demazure import (
    DemazureCharacter, demazure_character, demazure_op, demazure_op_word, weight_multiplicity,
    weyl_character_oracle,
)
from demazure_weights.exact_algebra import WeightSeries
from demazure_weights.root_data import build

from conftest import ALL_TYPES

E = WeightSeries.monomial


def test_operator_examples():
    rs = build("A1")
    assert demazure_op(rs, 1, E((1,))) == E((1,)) + E((-1,))
    assert demazure_op(rs, 1, E((0,))) == E((0,))
    # (e^{-w} - e^{-a} e^{w}) / (1 - e^{-a}) vanishes
    assert demazure_op(rs, 1, E((-1,))) == WeightSeries()
    assert demazure_op(rs, 1, E((-3,))) == WeightSeries({(-1,): -1, (1,): -1})
    with pytest.raises(ValueError):
        demazure_op(rs, 2, E((0,)))


def _series_strategy(rank):
    return st.dictionaries(st.tuples(*[st.integers(-3, 3)] * rank), st.integers(-3, 3), max_size=4).map(WeightSeries)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
@given(data=st.data())
def test_idempotent_and_defining_quotient(name, data):
    rs = build(name)
    f = data.draw(_series_strategy(rs.rank))
    i = data.draw(st.integers(1, rs.rank))
    d = demazure_op(rs, i, f)
    assert demazure_op(rs, i, d) == d
    # (1 - e^{-a}) D_i f = f - e^{-a} s_i(f)
    a = rs.simple_roots[i - 1]
    neg_a = E(tuple(-x for x in a))
    s_f = f.map_weights(lambda mu: rs.reflect(i - 1, mu))
    assert d - neg_a * d == f - neg_a * s_f


def test_braid_relations_of_operators():
    rs = build("B2")
    f = WeightSeries({(2, -1): 1, (0, 1): 3, (-1, 0): -2})
    assert demazure_op_word(rs, [1, 2, 1, 2], f) == demazure_op_word(rs, [2, 1, 2, 1], f)


def test_character_examples():
    assert demazure_character("A1", (1,)).series == E((1,))
    assert demazure_character(build("A1"), (-1,)).series == E((1,)) + E((-1,))
    assert weight_multiplicity("A2", (-1, -1), (0, 0)) == 2
    assert weight_multiplicity("A1", (-1,), (1,)) == 1
    assert weight_multiplicity("A1", (1,), (-1,)) == 0


def test_oracle_examples():
    assert weyl_character_oracle("A1", (1,)) == E((1,)) + E((-1,))
    assert weyl_character_oracle("A1", (2,)) == E((2,)) + E((0,)) + E((-2,))
    adj = weyl_character_oracle("A2", (1, 1))
    assert sum(adj.values()) == 8 and adj.coefficient((0, 0)) == 2 and len(adj) == 7
    with pytest.raises(ValueError):
        weyl_character_oracle("A2", (1, -1))


WEYL_DIMENSIONS = {"A3": ((1, 0, 0), 4), "A4": ((0, 1, 0, 0), 10), "B2": ((1, 0), 5), "B3": ((1, 0, 0), 7),
                   "C3": ((1, 0, 0), 6), "D4": ((0, 1, 0, 0), 28), "G2": ((1, 0), 7)}


@pytest.mark.parametrize("name", sorted(WEYL_DIMENSIONS))
def test_oracle_dimensions(name):
    lam, dim = WEYL_DIMENSIONS[name]
    assert sum(weyl_character_oracle(name, lam).values()) == dim


@pytest.mark.parametrize("name", ALL_TYPES)
def test_antidominant_matches_oracle_and_invariance(name):
    g = weyl_group(name)
    rs = g.rs
    for lam_plus in itertools.product(range(3), repeat=rs.rank):
        if sum(lam_plus) > 2:
            continue
        oracle = weyl_character_oracle(name, lam_plus)
        assert demazure_character(name, rs.w0(lam_plus)).series == oracle
        for i in range(rs.rank):
            assert oracle.map_weights(lambda mu: rs.reflect(i, mu)) == oracle


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_character_invariants_and_filtration(name):
    g = weyl_group(name)
    for lam in itertools.product(range(-2, 3), repeat=2):
        if g.orbit_data(lam).length > 12:
            continue
        chi = demazure_character(name, lam).series
        assert chi.coefficient(lam) == 1
        assert all(c > 0 for c in chi.values())
        assert set(chi) <= g.lower_set(lam)
        # the Demazure filtration grows along the finite Weyl orbit
        for i in range(1, g.rank + 1):
            if lam[i - 1] > 0:
                bigger = g.rs.reflect(i - 1, lam)
                big = demazure_character(name, bigger).series
                assert big == demazure_op(g.rs, i, chi)
                assert all(big.coefficient(nu) >= c for nu, c in chi.items())


def test_json_round_trip():
    ch = demazure_character("A2", (-1, -1))
    text = json.dumps(ch.to_json())
    back = WeightSeries({tuple(t["weight"]): t["mult"] for t in json.loads(text)})
    assert back == ch.series
    assert isinstance(ch, DemazureCharacter)
