from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import pascal
from twopart.core import (
    ClassSizeProfile,
    FamilyPair,
    GroundSplit,
    InvalidInputError,
    LabeledPartition,
    ResourceLimitError,
    SetFamily,
    binomial,
    elements_of,
    family_from_fmask,
    fmask_of,
    format_ratio,
    mask_of,
    masks_of_size,
    normalize_family,
    popcount,
    require_materializable,
)

PASCAL = pascal(128)


def test_binomial_matches_pascal_triangle():
    for n, row in enumerate(PASCAL):
        for k, v in enumerate(row):
            assert binomial(n, k) == v


def test_binomial_row_sums():
    for n in range(129):
        assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("n,k", [(5, -1), (5, 6), (0, 1), (-1, 0)])
def test_binomial_zero_outside_range(n, k):
    assert binomial(n, k) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_masks_of_size_matches_combinations(n):
    for size in range(n + 1):
        got = list(masks_of_size(n, size))
        expected = sorted(mask_of(c) for c in combinations(range(n), size))
        assert got == expected


def test_mask_roundtrip_and_popcount():
    for m in range(256):
        assert mask_of(elements_of(m)) == m
        assert popcount(m) == len(elements_of(m))


def test_ground_split_parts():
    split = GroundSplit(5, 2)
    assert split.x1 == 0b00011 and split.x2 == 0b11100 and split.size2 == 3
    assert split.parts(0b10110) == (0b10, 0b10100)
    with pytest.raises(InvalidInputError):
        GroundSplit(3, 4)


@given(st.lists(st.integers(0, 63), max_size=30))
def test_normalize_is_idempotent(raw):
    fam = normalize_family(raw, 6)
    assert normalize_family(fam, 6) == fam
    assert list(fam.masks) == sorted(set(raw))


def test_setfamily_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        SetFamily(3, (2, 1))
    with pytest.raises(InvalidInputError):
        SetFamily(3, (1, 1))
    with pytest.raises(InvalidInputError):
        normalize_family([8], 3)


def test_setfamily_helpers():
    fam = SetFamily.from_lists([[0], [1, 2], []], 3)
    assert fam.masks == (0, 1, 6)
    assert fam.as_lists() == [[], [0], [1, 2]]
    assert fam.shifted(1, 4).masks == (0, 2, 12)
    other = SetFamily(3, (1, 7))
    assert fam.union(other).masks == (0, 1, 6, 7)
    assert fam.difference(other).masks == (0, 6)
    assert SetFamily(3, (1,)).issubset(fam)
    assert family_from_fmask(fmask_of(fam), 3) == fam


def test_pair_and_partition():
    a, b = SetFamily(2, (1,)), SetFamily(2, (2,))
    assert FamilyPair(a, b).total == 2
    part = LabeledPartition(2, (("a", SetFamily(2, (0, 1))), ("b", SetFamily(2, (2, 3)))))
    assert part.sizes() == [2, 2] and part.labels == ["a", "b"]
    assert part.profile().values == [2, 2]
    with pytest.raises(InvalidInputError):
        LabeledPartition(2, (("a", SetFamily(2, (0, 1))), ("b", SetFamily(2, (1, 3)))))
    with pytest.raises(InvalidInputError):
        LabeledPartition(2, (("a", SetFamily(2, (0, 1))),))
    LabeledPartition(2, (("a", SetFamily(2, (0, 1))),), complete=False)


def test_profile_total():
    prof = ClassSizeProfile.from_values([3, 2, 2], 3)
    assert prof.total == 7 and len(prof) == 3


def test_format_ratio():
    assert format_ratio(Fraction(6, 4)) == "3/2"
    assert format_ratio(Fraction(4, 2)) == "2"


def test_materialization_guard(monkeypatch):
    monkeypatch.setenv("TWOPART_MAX_N", "5")
    require_materializable(5)
    with pytest.raises(ResourceLimitError):
        require_materializable(6)
