"""Ground sets, bitmask families, partitions and exact counting helpers.

A subset of the ground set ``[0, n)`` is an ``int`` whose bit ``i`` is set
when element ``i`` belongs to it.  Part ``X1`` is always the prefix
``{0, ..., k-1}`` and ``X2`` the rest.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

BigCount = int
BigRatio = Fraction

DEFAULT_MAX_N = 24
WORD_BITS = 62


class TwoPartError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(TwoPartError, ValueError):
    """Arguments violate a documented precondition."""


class ResourceLimitError(TwoPartError):
    """The request is outside the sizes this package will materialize."""


class SearchTimeoutError(TwoPartError):
    """An exact search did not finish inside its time budget."""


def max_materialized_n() -> int:
    raw = os.environ.get("TWOPART_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"TWOPART_MAX_N must be an integer, got {raw!r}") from exc


def require_materializable(n: int, what: str = "family") -> None:
    limit = min(max_materialized_n(), WORD_BITS)
    if n > limit:
        raise ResourceLimitError(f"refusing to materialize a {what} over n={n} > {limit} elements")


def binomial(n: int, k: int) -> BigCount:
    """Exact ``C(n, k)``, zero whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def popcount(x: int) -> int:
    return bin(x).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise InvalidInputError(f"negative element id {e}")
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def masks_of_size(n: int, size: int) -> Iterator[int]:
    """All ``size``-subsets of ``[0, n)`` in increasing mask order (Gosper's hack)."""
    if size < 0 or size > n:
        return
    if size == 0:
        yield 0
        return
    m = (1 << size) - 1
    limit = 1 << n
    while m < limit:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


def check_mask(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise InvalidInputError(f"mask {mask:#x} has bits outside [0, {n})")


@dataclass(frozen=True)
class GroundSplit:
    """Ground set ``[0, n)`` with ``X1 = [0, k)`` and ``X2 = [k, n)``."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise InvalidInputError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def x1(self) -> int:
        return (1 << self.k) - 1

    @property
    def x2(self) -> int:
        return full_mask(self.n) ^ self.x1

    @property
    def size2(self) -> int:
        return self.n - self.k

    def parts(self, mask: int) -> tuple[int, int]:
        return mask & self.x1, mask & self.x2


@dataclass(frozen=True)
class SetFamily:
    """Sorted, duplicate-free tuple of subset masks over ``[0, n)``.

    Build one with :func:`normalize_family` unless the masks are already
    strictly increasing.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = -1
        for m in self.masks:
            if m <= prev:
                raise InvalidInputError("family masks must be strictly increasing")
            check_mask(m, self.n)
            prev = m

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, mask: object) -> bool:
        return mask in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.masks)

    def as_set(self) -> frozenset[int]:
        return self._members

    def as_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.masks]

    def shifted(self, offset: int, n: int) -> "SetFamily":
        return SetFamily(n, tuple(m << offset for m in self.masks))

    def union(self, other: "SetFamily") -> "SetFamily":
        _same_n(self, other)
        return normalize_family(list(self.masks) + list(other.masks), self.n)

    def difference(self, other: "SetFamily") -> "SetFamily":
        _same_n(self, other)
        drop = other.as_set()
        return SetFamily(self.n, tuple(m for m in self.masks if m not in drop))

    def issubset(self, other: "SetFamily") -> bool:
        return self.as_set() <= other.as_set()

    @classmethod
    def from_lists(cls, sets: Iterable[Iterable[int]], n: int) -> "SetFamily":
        return normalize_family([mask_of(s) for s in sets], n)

    @classmethod
    def empty(cls, n: int) -> "SetFamily":
        return cls(n, ())


def _same_n(a: SetFamily, b: SetFamily) -> None:
    if a.n != b.n:
        raise InvalidInputError(f"ground sizes differ: {a.n} vs {b.n}")


def normalize_family(raw: Iterable[int], n: int) -> SetFamily:
    """Sort and deduplicate ``raw``; every mask must fit in ``n`` bits."""
    masks = set()
    for m in raw:
        check_mask(m, n)
        masks.add(m)
    return SetFamily(n, tuple(sorted(masks)))


def family_from_fmask(fmask: int, n: int) -> SetFamily:
    """Decode a family given as a bitset over the ``2**n`` subsets."""
    return SetFamily(n, tuple(elements_of(fmask)))


def fmask_of(family: SetFamily) -> int:
    return mask_of(family.masks)


@dataclass(frozen=True)
class FamilyPair:
    first: SetFamily
    second: SetFamily

    def __post_init__(self) -> None:
        _same_n(self.first, self.second)

    @property
    def n(self) -> int:
        return self.first.n

    @property
    def total(self) -> int:
        return len(self.first) + len(self.second)


@dataclass(frozen=True)
class LabeledPartition:
    """Ordered, pairwise disjoint labelled classes of subsets of ``[0, n)``.

    ``complete`` asserts that the classes cover the whole power set.
    """

    n: int
    classes: tuple[tuple[str, SetFamily], ...]
    complete: bool = True

    def __post_init__(self) -> None:
        seen: set[int] = set()
        total = 0
        for label, fam in self.classes:
            if fam.n != self.n:
                raise InvalidInputError(f"class {label!r} lives on n={fam.n}, expected {self.n}")
            seen.update(fam.masks)
            total += len(fam)
        if len(seen) != total:
            raise InvalidInputError("partition classes are not pairwise disjoint")
        if self.complete and total != 1 << self.n:
            raise InvalidInputError(f"complete partition covers {total} of {1 << self.n} subsets")

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.classes]

    @property
    def families(self) -> list[SetFamily]:
        return [fam for _, fam in self.classes]

    def sizes(self) -> list[int]:
        return [len(fam) for _, fam in self.classes]

    def profile(self) -> "ClassSizeProfile":
        return ClassSizeProfile(self.n, tuple((label, len(fam)) for label, fam in self.classes))


@dataclass(frozen=True)
class ClassSizeProfile:
    n: int
    sizes: tuple[tuple[str, BigCount], ...] = field(default_factory=tuple)

    @property
    def values(self) -> list[BigCount]:
        return [s for _, s in self.sizes]

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.sizes]

    @property
    def total(self) -> BigCount:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.sizes)

    @classmethod
    def from_values(cls, values: Sequence[int], n: int = 0) -> "ClassSizeProfile":
        return cls(n, tuple((f"c{i + 1}", v) for i, v in enumerate(values)))


def ratio(num: int, den: int) -> BigRatio:
    return Fraction(num, den)


def format_ratio(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def ratio_decimal(r: Fraction, digits: int = 12) -> str:
    # display only
    return f"{float(r):.{digits}g}"
