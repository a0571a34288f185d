import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from twopart.core import FamilyPair, GroundSplit, InvalidInputError, SetFamily, normalize_family
from twopart.properties import (
    PropertyId,
    TraceSide,
    delta_family,
    down_closure,
    find_cross_violation,
    find_violation,
    gkk_lym_sum,
    is_cross_sperner_pair,
    is_downward_closed,
    is_intersecting,
    is_sperner,
    join_family,
    meet_family,
    satisfies,
    trace_family,
    up_closure,
    violates,
)

TWO_PART = [PropertyId.TWO_I, PropertyId.TWO_I2S, PropertyId.ONE_I1S, PropertyId.TWO_PART_SPERNER]


def fam(n, *sets):
    return SetFamily.from_lists(sets, n)


def test_intersecting_modes():
    assert is_intersecting(fam(2, [], [0]), "lenient") is False
    assert is_intersecting(fam(2, []), "lenient") is True
    assert is_intersecting(fam(2, []), "strict") is False
    assert is_intersecting(fam(3, [0, 1], [1, 2]), "strict") is True


def test_sperner():
    assert is_sperner(fam(3, [0], [1, 2]))
    assert not is_sperner(fam(3, [0], [0, 2]))


def test_property_parse():
    assert PropertyId.parse("2i2s") is PropertyId.TWO_I2S
    assert PropertyId.parse("cross-sperner") is PropertyId.CROSS_SPERNER_PAIR
    with pytest.raises(InvalidInputError):
        PropertyId.parse("nope")


def test_one_i1s_disjoint_singletons_violate():
    split = GroundSplit(2, 1)
    assert find_violation(PropertyId.ONE_I1S, fam(2, [0], [1]), split) == (0b01, 0b10)


def test_violates_needs_distinct_sets():
    with pytest.raises(InvalidInputError):
        violates(PropertyId.TWO_I, 3, 3, GroundSplit(2, 1))


def test_trace_family_keeps_element_ids():
    split = GroundSplit(4, 2)
    f = fam(4, [0, 2], [0, 3], [1, 2])
    assert trace_family(f, split, TraceSide.ON_X2, 0b01).as_lists() == [[2], [3]]
    assert trace_family(f, split, TraceSide.ON_X1, 0b0100).as_lists() == [[0], [1]]


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n - 1), st.lists(st.integers(0, (1 << n) - 1), max_size=24))))
def test_predicates_match_definition_oracle(args):
    n, k, raw = args
    family = normalize_family(raw, n)
    split = GroundSplit(n, k)
    sets = oracles.to_sets(family)
    for p in TWO_PART:
        expected = oracles.two_part_ok(p.value, sets, k, n)
        assert satisfies(p, family, split, method="both") == expected, p


def test_pairwise_and_trace_agree_on_n10_samples():
    rng = random.Random(5)
    for _ in range(200):
        n, k = 10, rng.randint(1, 9)
        raw = [rng.randrange(1 << n) for _ in range(rng.randint(0, 40))]
        family = normalize_family(raw, n)
        for p in TWO_PART:
            satisfies(p, family, GroundSplit(n, k), method="both")


def test_pairwise_and_trace_agree_exhaustively_n3():
    for fmask in range(1 << 8):
        family = SetFamily(3, tuple(m for m in range(8) if fmask >> m & 1))
        for k in (1, 2):
            for p in TWO_PART:
                satisfies(p, family, GroundSplit(3, k), method="both")


def test_cross_sperner_inclusive_and_strict():
    shared = FamilyPair(fam(3, [0, 1]), fam(3, [0, 1]))
    assert not is_cross_sperner_pair(shared)
    nested = FamilyPair(fam(3, [0]), fam(3, [0, 1]))
    assert find_cross_violation(nested) is not None
    with_empty = FamilyPair(fam(3, []), fam(3, [0, 1]))
    assert not is_cross_sperner_pair(with_empty)
    ok = FamilyPair(fam(3, [0], [0, 1]), fam(3, [1, 2]))
    assert is_cross_sperner_pair(ok)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 15), max_size=8), st.lists(st.integers(0, 15), max_size=8))
def test_cross_sperner_matches_oracle(a, b):
    f, g = normalize_family(a, 4), normalize_family(b, 4)
    expected = oracles.cross_sperner(oracles.to_sets(f), oracles.to_sets(g))
    assert is_cross_sperner_pair(FamilyPair(f, g)) == expected


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 31), max_size=10), st.lists(st.integers(0, 31), max_size=10))
def test_lattice_operators_match_oracle(a, b):
    n = 5
    f, g = normalize_family(a, n), normalize_family(b, n)
    sf, sg = oracles.to_sets(f), oracles.to_sets(g)
    assert oracles.to_sets(delta_family(f)) == oracles.delta(sf)
    assert oracles.to_sets(meet_family(f, g)) == oracles.meet(sf, sg)
    assert oracles.to_sets(join_family(f, g)) == oracles.join(sf, sg)
    assert oracles.to_sets(up_closure(f, n)) == oracles.up(sf, n)
    assert oracles.to_sets(down_closure(f, n)) == oracles.down(sf, n)
    assert is_downward_closed(down_closure(f, n))


def test_gkk_sum_examples():
    binom = oracles.pascal(8)
    star = fam(4, [0, 1], [0, 2], [0, 3])
    assert gkk_lym_sum(star) == oracles.gkk(oracles.to_sets(star), 4, binom) == Fraction(3, 4)
    triangle = fam(3, [0, 1], [0, 2], [1, 2])
    assert gkk_lym_sum(triangle) == 1
    with pytest.raises(InvalidInputError):
        gkk_lym_sum(fam(3, [0], [1]))
    with pytest.raises(InvalidInputError):
        gkk_lym_sum(fam(3, [0], [0, 1]))
