"""Partitions of the cube and the product constructions built from them.

Partitions live on a local ground set ``[0, y)``.  ``product_family`` places
the first partition on ``X1 = [0, k)`` and shifts the second onto
``X2 = [k, n)``, then takes ``A ∪ B`` over matched class pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ClassSizeProfile,
    FamilyPair,
    GroundSplit,
    InvalidInputError,
    LabeledPartition,
    SetFamily,
    binomial,
    full_mask,
    masks_of_size,
    popcount,
    require_materializable,
)

UNUSED = "UNUSED"


@dataclass(frozen=True)
class Matching:
    """Injective pairing of class indices of two partitions."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        left = [a for a, _ in self.pairs]
        right = [b for _, b in self.pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise InvalidInputError("matching must use each class at most once per side")
        if any(a < 0 or b < 0 for a, b in self.pairs):
            raise InvalidInputError("matching indices must be nonnegative")

    @classmethod
    def identity(cls, m: int) -> "Matching":
        return cls(tuple((i, i) for i in range(m)))

    def value(self, sizes_a: ClassSizeProfile, sizes_b: ClassSizeProfile) -> int:
        va, vb = sizes_a.values, sizes_b.values
        return sum(va[a] * vb[b] for a, b in self.pairs)


def product_family(
    pa: LabeledPartition, pb: LabeledPartition, matching: Matching, split: GroundSplit
) -> SetFamily:
    if pa.n != split.k or pb.n != split.size2:
        raise InvalidInputError(
            f"partitions on {pa.n} and {pb.n} elements do not fit split n={split.n}, k={split.k}"
        )
    require_materializable(split.n)
    for a, b in matching.pairs:
        if a >= len(pa) or b >= len(pb):
            raise InvalidInputError(f"matching pair {(a, b)} out of range")
    k = split.k
    out: list[int] = []
    for a, b in matching.pairs:
        left = pa.classes[a][1].masks
        right = [m << k for m in pb.classes[b][1].masks]
        out.extend(x | y for x in left for y in right)
    # classes are disjoint, so the products are too
    return SetFamily(split.n, tuple(sorted(out)))


def descending_match(
    sizes_a: ClassSizeProfile, sizes_b: ClassSizeProfile, exclude: tuple[str, ...] = (UNUSED,)
) -> tuple[Matching, int]:
    """Pair the largest class with the largest, second with second, and so on.

    Ties keep the original order.  Classes whose label is in ``exclude`` are
    never matched.
    """

    def ranked(profile: ClassSizeProfile) -> list[int]:
        idx = [i for i, (label, _) in enumerate(profile.sizes) if label not in exclude]
        return sorted(idx, key=lambda i: -profile.sizes[i][1])

    ra, rb = ranked(sizes_a), ranked(sizes_b)
    matching = Matching(tuple(zip(ra, rb)))
    return matching, matching.value(sizes_a, sizes_b)


def chain_partition(y: int) -> LabeledPartition:
    """``A_i`` = subsets of ``{i-1, ..., y-1}`` containing ``i-1``, then ``{∅}``.

    Class sizes are ``2**(y-1), ..., 2, 1, 1``.
    """
    if y < 0:
        raise InvalidInputError("chain_partition needs y >= 0")
    require_materializable(y, "partition")
    classes = []
    for i in range(y):
        rest = full_mask(y) & ~((1 << (i + 1)) - 1)
        members = []
        sub = rest
        while True:
            members.append(sub | (1 << i))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        classes.append((f"A_{i + 1}", SetFamily(y, tuple(sorted(members)))))
    classes.append((f"A_{y + 1}", SetFamily(y, (0,))))
    return LabeledPartition(y, tuple(classes), complete=True)


def _half_up(y: int) -> int:
    # ceil((y + 1) / 2)
    return (y + 2) // 2


def canonical_partition(y: int) -> LabeledPartition:
    """Split ``2**[0, y)`` into uniform intersecting Sperner classes.

    Order: full levels ``Y_k`` for ``k = y`` down to ``ceil((y+1)/2)``, then
    ``Y_{i,j}`` (``i``-sets whose smallest element is ``j-1``) for increasing
    ``i`` and ``j``, then the leftovers ``Y*_l`` for increasing ``l``.
    """
    if y < 1:
        raise InvalidInputError("canonical_partition needs y >= 1")
    require_materializable(y, "partition")
    top = _half_up(y)
    classes: list[tuple[str, SetFamily]] = []
    for k in range(y, top - 1, -1):
        classes.append((f"Y_{k}", SetFamily(y, tuple(masks_of_size(y, k)))))
    leftovers: dict[int, list[int]] = {}
    for i in range(1, top):
        by_min: dict[int, list[int]] = {}
        rest = []
        last_j = y - 2 * i + 1
        for m in masks_of_size(y, i):
            j = (m & -m).bit_length()  # 1-based index of the smallest element
            if j <= last_j:
                by_min.setdefault(j, []).append(m)
            else:
                rest.append(m)
        for j in range(1, last_j + 1):
            classes.append((f"Y_{i},{j}", SetFamily(y, tuple(by_min.get(j, ())))))
        leftovers[i] = rest
    classes.append(("Y*_0", SetFamily(y, (0,))))
    for ell in range(1, top):
        classes.append((f"Y*_{ell}", SetFamily(y, tuple(leftovers[ell]))))
    return LabeledPartition(y, tuple(classes), complete=True)


def canonical_class_sizes(y: int) -> ClassSizeProfile:
    """Class sizes of :func:`canonical_partition` from closed forms only."""
    if y < 1:
        raise InvalidInputError("canonical_class_sizes needs y >= 1")
    top = _half_up(y)
    sizes: list[tuple[str, int]] = []
    for k in range(y, top - 1, -1):
        sizes.append((f"Y_{k}", binomial(y, k)))
    for i in range(1, top):
        for j in range(1, y - 2 * i + 2):
            sizes.append((f"Y_{i},{j}", binomial(y - j, i - 1)))
    sizes.append(("Y*_0", 1))
    for ell in range(1, top):
        sizes.append((f"Y*_{ell}", binomial(2 * ell - 1, ell)))
    return ClassSizeProfile(y, tuple(sizes))


def two_i_singleton(n: int) -> SetFamily:
    """2I family on ``X1 = {0}`` of size ``3/8 * 2**n``.

    ``{0} x {B : 1 ∈ B}`` plus ``∅ x {B : 1 ∉ B, 2 ∈ B}``.
    """
    if n < 3:
        raise InvalidInputError("two_i_singleton needs n >= 3")
    require_materializable(n)
    out = []
    for b in range(0, 1 << n, 2):  # subsets of X2 = [1, n)
        if b & 0b10:
            out.append(b | 1)
        elif b & 0b100:
            out.append(b)
    return SetFamily(n, tuple(sorted(out)))


def two_i_equal(n: int) -> SetFamily:
    """Product of the chain partitions of both halves; size ``(2**n + 2) / 3``."""
    if n % 2 or n < 0:
        raise InvalidInputError("two_i_equal needs an even n")
    half = n // 2
    part = chain_partition(half)
    return product_family(part, part, Matching.identity(len(part)), GroundSplit(n, half))


def ff_pair(y: int, i: int) -> FamilyPair:
    """Two disjoint ``i``-uniform intersecting families on ``[0, y)``.

    With ``Y1 = [0, y/2)`` and ``Y2`` the rest, the first holds the ``i``-sets
    meeting ``Y1`` in more than ``y/4`` elements, the second the remaining
    ``i``-sets meeting ``Y2`` in more than ``y/4`` elements.
    """
    if y % 2:
        raise InvalidInputError("ff_pair needs an even y")
    if not 1 <= i <= y:
        raise InvalidInputError("ff_pair needs 1 <= i <= y")
    require_materializable(y)
    y1 = (1 << (y // 2)) - 1
    y2 = full_mask(y) ^ y1
    g1, g2 = [], []
    for m in masks_of_size(y, i):
        if 4 * popcount(m & y1) > y:
            g1.append(m)
        elif 4 * popcount(m & y2) > y:
            g2.append(m)
    return FamilyPair(SetFamily(y, tuple(g1)), SetFamily(y, tuple(g2)))


def ff_pair_sizes(y: int, i: int) -> tuple[int, int]:
    if y % 2:
        raise InvalidInputError("ff_pair needs an even y")
    half = y // 2
    g1 = g2 = 0
    for a in range(0, i + 1):
        count = binomial(half, a) * binomial(half, i - a)
        if 4 * a > y:
            g1 += count
        elif 4 * (i - a) > y:
            g2 += count
    return g1, g2


def replaced_levels(y: int, beta: Fraction) -> list[int]:
    """Levels ``1 <= i <= y/2`` with ``y/2 - i <= beta/(2*sqrt 2) * sqrt(y)``.

    Compared exactly as ``(y/2 - i)**2 <= beta**2 * y / 8``.
    """
    beta = Fraction(beta)
    if beta < 0:
        raise InvalidInputError("beta must be nonnegative")
    bound = beta * beta * y / 8
    return [i for i in range(1, y // 2 + 1) if Fraction(y, 2) - i >= 0 and (Fraction(y, 2) - i) ** 2 <= bound]


def modified_canonical_partition(y: int, beta: Fraction) -> LabeledPartition:
    """Canonical partition with the level-``i`` classes swapped for an FF pair.

    For every replaced level both ``Y_{i,j}`` and ``Y*_i`` go away; the
    ``i``-sets outside the pair land in a single ``UNUSED`` class.
    """
    if y % 2:
        raise InvalidInputError("modified_canonical_partition needs an even y")
    base = canonical_partition(y)
    levels = set(replaced_levels(y, beta))
    classes: list[tuple[str, SetFamily]] = []
    unused: list[int] = []
    inserted: set[int] = set()
    for label, fam in base.classes:
        level = _class_level(label)
        if level is None or level not in levels:
            classes.append((label, fam))
            continue
        if level not in inserted:
            inserted.add(level)
            pair = ff_pair(y, level)
            classes.append((f"G1^{level}", pair.first))
            classes.append((f"G2^{level}", pair.second))
            taken = pair.first.as_set() | pair.second.as_set()
            unused.extend(m for m in masks_of_size(y, level) if m not in taken)
    if unused:
        classes.append((UNUSED, SetFamily(y, tuple(sorted(unused)))))
    return LabeledPartition(y, tuple(classes), complete=False)


def modified_class_sizes(y: int, beta: Fraction) -> ClassSizeProfile:
    """Sizes of :func:`modified_canonical_partition` without materializing it."""
    if y % 2:
        raise InvalidInputError("modified_canonical_partition needs an even y")
    levels = set(replaced_levels(y, beta))
    sizes: list[tuple[str, int]] = []
    unused = 0
    inserted: set[int] = set()
    for label, size in canonical_class_sizes(y).sizes:
        level = _class_level(label)
        if level is None or level not in levels:
            sizes.append((label, size))
            continue
        if level not in inserted:
            inserted.add(level)
            g1, g2 = ff_pair_sizes(y, level)
            sizes.append((f"G1^{level}", g1))
            sizes.append((f"G2^{level}", g2))
            unused += binomial(y, level) - g1 - g2
    if unused:
        sizes.append((UNUSED, unused))
    return ClassSizeProfile(y, tuple(sizes))


def _class_level(label: str) -> int | None:
    """Level of a ``Y_{i,j}`` or ``Y*_l`` class; ``None`` for full levels."""
    if label.startswith("Y*_"):
        return int(label[3:])
    if label.startswith("Y_") and "," in label:
        return int(label[2:].split(",")[0])
    return None


def two_i2s_smallpart(split: GroundSplit) -> SetFamily:
    """Canonical classes of ``X1`` (largest first) times levels ``x2/2 + i`` of ``X2``."""
    k, x2 = split.k, split.size2
    if k < 1:
        raise InvalidInputError("two_i2s_smallpart needs k >= 1")
    if x2 % 2:
        raise InvalidInputError("two_i2s_smallpart needs an even |X2|")
    require_materializable(split.n)
    part = canonical_partition(k)
    order = sorted(range(len(part)), key=lambda c: -len(part.classes[c][1]))
    m = min(len(order), x2 // 2)
    out: list[int] = []
    for i in range(1, m + 1):
        cls = part.classes[order[i - 1]][1]
        level = [b << k for b in masks_of_size(x2, x2 // 2 + i)]
        out.extend(a | b for a in cls for b in level)
    return SetFamily(split.n, tuple(sorted(out)))


def two_i2s_smallpart_count(split: GroundSplit) -> int:
    k, x2 = split.k, split.size2
    if k < 1 or x2 % 2:
        raise InvalidInputError("two_i2s_smallpart needs k >= 1 and an even |X2|")
    sizes = sorted(canonical_class_sizes(k).values, reverse=True)
    m = min(len(sizes), x2 // 2)
    return sum(sizes[i - 1] * binomial(x2, x2 // 2 + i) for i in range(1, m + 1))


def _check_mod4(n: int) -> None:
    if n < 4 or n % 4:
        raise InvalidInputError("equal-part 2I2S construction needs n divisible by 4")


def two_i2s_equal(n: int, modified: bool = False, beta: Fraction = Fraction(1)) -> SetFamily:
    _check_mod4(n)
    half = n // 2
    part = modified_canonical_partition(half, beta) if modified else canonical_partition(half)
    prof = part.profile()
    matching, _ = descending_match(prof, prof)
    return product_family(part, part, matching, GroundSplit(n, half))


def two_i2s_equal_count(
    n: int, modified: bool = False, beta: Fraction = Fraction(1), include_empty: bool = True
) -> int:
    """Size of :func:`two_i2s_equal` by formula.

    Unmodified it is the three-term sum over full levels, ``Y_{i,j}``
    classes and ``Y*_i`` classes; ``include_empty`` adds the ``∅ x ∅``
    product that the three sums leave out.
    """
    _check_mod4(n)
    half = n // 2
    if modified:
        prof = modified_class_sizes(half, beta)
        _, value = descending_match(prof, prof)
        return value if include_empty else value - 1
    quarter = n // 4
    full_levels = sum(binomial(half, i) ** 2 for i in range(quarter + 1, half + 1))
    min_classes = 0
    for i in range(1, quarter + 1):
        min_classes += sum(binomial(half - 1 - k, i - 1) ** 2 for k in range(0, half - 2 * i + 1))
    leftovers = sum(binomial(2 * i - 1, i) ** 2 for i in range(1, quarter + 1))
    return full_levels + min_classes + leftovers + (1 if include_empty else 0)


class CrossVariant(enum.Enum):
    STAR_EMPTY = "star-empty"
    TWO_STARS = "two-stars"
    THRESHOLD = "threshold"


def cross_sperner_pair_example(n: int, variant: CrossVariant, k: int | None = None) -> FamilyPair:
    """Cross-Sperner intersecting pairs with ``|F| + |G| = 2**(n-1)``.

    Element 0 plays the role of the distinguished point (and 1 the second
    one for ``TWO_STARS``).
    """
    require_materializable(n)
    full = 1 << n
    if variant is CrossVariant.STAR_EMPTY:
        if n < 1:
            raise InvalidInputError("STAR_EMPTY needs n >= 1")
        f = tuple(m for m in range(full) if m & 1)
        return FamilyPair(SetFamily(n, f), SetFamily.empty(n))
    if variant is CrossVariant.TWO_STARS:
        if n < 2:
            raise InvalidInputError("TWO_STARS needs n >= 2")
        f = tuple(m for m in range(full) if m & 0b11 == 0b01)
        g = tuple(m for m in range(full) if m & 0b11 == 0b10)
        return FamilyPair(SetFamily(n, f), SetFamily(n, g))
    if k is None or not (n <= 2 * k and k <= n) or n < 1:
        raise InvalidInputError("THRESHOLD needs n/2 <= k <= n")
    f = tuple(m for m in range(full) if m & 1 and popcount(m) <= k)
    g = tuple(m for m in range(full) if not m & 1 and popcount(m) >= k)
    return FamilyPair(SetFamily(n, f), SetFamily(n, g))


def one_i1s_product(split: GroundSplit, star_a: int | None = None, star_b: int | None = None) -> SetFamily:
    """Star on ``X1`` times star on ``X2``; size ``2**(n-2)``."""
    k, n = split.k, split.n
    if k < 1 or n - k < 1:
        raise InvalidInputError("one_i1s_product needs both parts nonempty")
    star_a = 0 if star_a is None else star_a
    star_b = k if star_b is None else star_b
    if not 0 <= star_a < k or not k <= star_b < n:
        raise InvalidInputError("star elements must lie in X1 and X2 respectively")
    require_materializable(n)
    ta, tb = 1 << star_a, 1 << star_b
    return SetFamily(n, tuple(m for m in range(1 << n) if m & ta and m & tb))

