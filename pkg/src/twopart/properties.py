"""Property predicates, trace families and lattice operators on set families.

Two readings of "intersecting" coexist.  ``lenient`` only looks at pairs of
distinct members, so ``{∅}`` and any one-member family pass; trace families
and partition classes are checked this way.  ``strict`` also forbids the
empty set, which is what the union/LYM theorems about intersecting families
need.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal

from .core import (
    FamilyPair,
    GroundSplit,
    InvalidInputError,
    SetFamily,
    binomial,
    check_mask,
    full_mask,
    normalize_family,
    popcount,
)

IntersectMode = Literal["lenient", "strict"]


class PropertyId(enum.Enum):
    INTERSECTING_LENIENT = "intersecting-lenient"
    INTERSECTING_STRICT = "intersecting-strict"
    SPERNER = "sperner"
    TWO_PART_SPERNER = "2PS"
    TWO_I = "2I"
    TWO_I2S = "2I2S"
    ONE_I1S = "1I1S"
    CROSS_SPERNER_PAIR = "cross-sperner"

    @property
    def two_part(self) -> bool:
        return self in TWO_PART_PROPERTIES

    @classmethod
    def parse(cls, text: str) -> "PropertyId":
        key = text.strip().lower().replace("_", "-")
        for p in cls:
            if key in (p.value.lower(), p.name.lower().replace("_", "-")):
                return p
        raise InvalidInputError(f"unknown property {text!r}")


TWO_PART_PROPERTIES = frozenset(
    {PropertyId.TWO_PART_SPERNER, PropertyId.TWO_I, PropertyId.TWO_I2S, PropertyId.ONE_I1S}
)


class TraceSide(enum.Enum):
    ON_X1 = "x1"
    ON_X2 = "x2"


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def _nested(a: int, b: int) -> bool:
    return a & ~b == 0 or b & ~a == 0


def is_intersecting(family: SetFamily | Iterable[int], mode: IntersectMode = "lenient") -> bool:
    masks = list(family)
    if mode == "strict":
        if 0 in masks:
            return False
    elif mode != "lenient":
        raise InvalidInputError(f"unknown intersecting mode {mode!r}")
    for a, b in combinations(masks, 2):
        if a & b == 0:
            return False
    return True


def is_sperner(family: SetFamily | Iterable[int]) -> bool:
    masks = sorted(set(family), key=popcount)
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a & ~b == 0:
                return False
    return True


def trace_family(family: SetFamily, split: GroundSplit, side: TraceSide, fixed: int) -> SetFamily:
    """Traces on ``side`` of the members whose trace on the other part is ``fixed``.

    Traces keep the original element ids, so ``F_A`` for ``A ⊆ X1`` is a family
    of subsets of ``X2`` over the full ground set.
    """
    if family.n != split.n:
        raise InvalidInputError(f"family on n={family.n} but split has n={split.n}")
    if side is TraceSide.ON_X2:
        fixed_part, keep = split.x1, split.x2
    else:
        fixed_part, keep = split.x2, split.x1
    if fixed & ~fixed_part:
        raise InvalidInputError(f"fixed trace {fixed:#x} is not inside the fixed part")
    return normalize_family((m & keep for m in family if m & fixed_part == fixed), split.n)


def trace_families(family: SetFamily, split: GroundSplit, side: TraceSide) -> dict[int, list[int]]:
    """All non-empty trace families on ``side`` keyed by the fixed trace."""
    if side is TraceSide.ON_X2:
        fixed_part, keep = split.x1, split.x2
    else:
        fixed_part, keep = split.x2, split.x1
    out: dict[int, list[int]] = defaultdict(list)
    for m in family:
        out[m & fixed_part].append(m & keep)
    return out


def violates(p: PropertyId, s: int, t: int, split: GroundSplit) -> bool:
    """True when the distinct sets ``s`` and ``t`` cannot both belong to a ``p`` family."""
    if s == t:
        raise InvalidInputError("violates() needs two distinct sets")
    x1 = split.x1
    x2 = split.x2
    s1, s2 = s & x1, s & x2
    t1, t2 = t & x1, t & x2
    if p is PropertyId.TWO_I:
        return (s1 == t1 and s2 & t2 == 0) or (s2 == t2 and s1 & t1 == 0)
    if p is PropertyId.TWO_PART_SPERNER:
        if s1 == t1 or s2 == t2:
            return _subset(s, t) or _subset(t, s)
        return False
    if p is PropertyId.TWO_I2S:
        # equal traces on one part; on the other they are distinct here
        if s1 == t1:
            return s2 & t2 == 0 or _nested(s2, t2)
        if s2 == t2:
            return s1 & t1 == 0 or _nested(s1, t1)
        return False
    if p is PropertyId.ONE_I1S:
        return (s1 & t1 == 0 and _nested(s2, t2)) or (s2 & t2 == 0 and _nested(s1, t1))
    raise InvalidInputError(f"{p} is not a two-part property")


def find_violation(p: PropertyId, family: SetFamily, split: GroundSplit) -> tuple[int, int] | None:
    """First violating pair in mask order, or ``None``."""
    if p.two_part:
        masks = family.masks
        for i, s in enumerate(masks):
            for t in masks[i + 1 :]:
                if violates(p, s, t, split):
                    return s, t
        return None
    if p in (PropertyId.INTERSECTING_LENIENT, PropertyId.INTERSECTING_STRICT):
        if p is PropertyId.INTERSECTING_STRICT and 0 in family:
            return 0, 0
        for a, b in combinations(family.masks, 2):
            if a & b == 0:
                return a, b
        return None
    if p is PropertyId.SPERNER:
        for a, b in combinations(family.masks, 2):
            if _nested(a, b):
                return a, b
        return None
    raise InvalidInputError(f"{p} applies to family pairs, use is_cross_sperner_pair")


def _satisfies_pairwise(p: PropertyId, family: SetFamily, split: GroundSplit) -> bool:
    return find_violation(p, family, split) is None


def satisfies_by_traces(p: PropertyId, family: SetFamily, split: GroundSplit) -> bool:
    """Evaluate a two-part property through its trace families.

    ``2I``/``2I2S``/``2PS`` test every ``F_A`` and ``F_B`` directly.  ``1I1S``
    is not a per-trace condition, so the trace families ``F_A, F_A'`` are
    compared blockwise: disjoint ``A, A'`` force cross-Sperner blocks, nested
    ``A, A'`` force cross-intersecting blocks.
    """
    if family.n != split.n:
        raise InvalidInputError(f"family on n={family.n} but split has n={split.n}")
    on_x2 = trace_families(family, split, TraceSide.ON_X2)
    if p is PropertyId.ONE_I1S:
        keys = list(on_x2)
        for i, a in enumerate(keys):
            for b in keys[i:]:
                fa, fb = on_x2[a], on_x2[b]
                if a & b == 0 and not _cross_sperner_blocks(fa, fb, a == b):
                    return False
                if _nested(a, b) and not _cross_intersecting_blocks(fa, fb, a == b):
                    return False
        return True
    on_x1 = trace_families(family, split, TraceSide.ON_X1)
    for traces in list(on_x2.values()) + list(on_x1.values()):
        if p is PropertyId.TWO_I:
            ok = is_intersecting(traces, "lenient")
        elif p is PropertyId.TWO_I2S:
            ok = is_intersecting(traces, "lenient") and is_sperner(traces)
        elif p is PropertyId.TWO_PART_SPERNER:
            ok = is_sperner(traces)
        else:
            raise InvalidInputError(f"{p} is not a two-part property")
        if not ok:
            return False
    return True


def _cross_sperner_blocks(fa: list[int], fb: list[int], same: bool) -> bool:
    if same:
        return is_sperner(fa)
    return not any(_nested(x, y) for x in fa for y in fb)


def _cross_intersecting_blocks(fa: list[int], fb: list[int], same: bool) -> bool:
    if same:
        return is_intersecting(fa, "lenient")
    return all(x & y for x in fa for y in fb)


def satisfies(
    p: PropertyId,
    family: SetFamily,
    split: GroundSplit | None = None,
    method: Literal["pairwise", "traces", "both"] = "pairwise",
) -> bool:
    """Whether ``family`` has property ``p``.

    With ``method="both"`` the pairwise and trace evaluations are run and a
    disagreement raises ``AssertionError``.
    """
    if p is PropertyId.CROSS_SPERNER_PAIR:
        raise InvalidInputError("cross-Sperner is a property of a FamilyPair")
    if not p.two_part:
        return find_violation(p, family, split or GroundSplit(family.n, 0)) is None
    if split is None:
        raise InvalidInputError(f"{p.value} needs a GroundSplit")
    if method == "pairwise":
        return _satisfies_pairwise(p, family, split)
    if method == "traces":
        return satisfies_by_traces(p, family, split)
    a = _satisfies_pairwise(p, family, split)
    b = satisfies_by_traces(p, family, split)
    if a != b:
        raise AssertionError(f"pairwise ({a}) and trace ({b}) evaluations disagree for {p.value}")
    return a


def is_cross_sperner_pair(pair: FamilyPair) -> bool:
    """Both families strict-intersecting and no member of one contains a member of the other.

    Containment is inclusive, so a set shared by both families is forbidden.
    """
    return find_cross_violation(pair) is None


def find_cross_violation(pair: FamilyPair) -> tuple[int, int] | None:
    for fam in (pair.first, pair.second):
        bad = find_violation(PropertyId.INTERSECTING_STRICT, fam, GroundSplit(fam.n, 0))
        if bad is not None:
            return bad
    for f in pair.first:
        for g in pair.second:
            if _nested(f, g):
                return f, g
    return None


def delta_family(family: SetFamily) -> SetFamily:
    """All differences ``F \\ F'`` over ordered pairs of members (``F = F'`` included)."""
    masks = family.masks
    return normalize_family((a & ~b for a in masks for b in masks), family.n)


def meet_family(f: SetFamily, g: SetFamily) -> SetFamily:
    _check_same(f, g)
    return normalize_family((a & b for a in f for b in g), f.n)


def join_family(f: SetFamily, g: SetFamily) -> SetFamily:
    _check_same(f, g)
    return normalize_family((a | b for a in f for b in g), f.n)


def _check_same(f: SetFamily, g: SetFamily) -> None:
    if f.n != g.n:
        raise InvalidInputError(f"ground sizes differ: {f.n} vs {g.n}")


def up_closure(family: SetFamily | Iterable[int], n: int) -> SetFamily:
    """Every subset of ``[0, n)`` containing some member."""
    full = full_mask(n)
    out: set[int] = set()
    for m in family:
        check_mask(m, n)
        if m in out:
            continue
        rest = full & ~m
        sub = rest
        while True:
            out.add(m | sub)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return SetFamily(n, tuple(sorted(out)))


def down_closure(family: SetFamily | Iterable[int], n: int) -> SetFamily:
    """Every subset of some member."""
    out: set[int] = set()
    for m in family:
        check_mask(m, n)
        if m in out:
            continue
        sub = m
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return SetFamily(n, tuple(sorted(out)))


def is_downward_closed(family: SetFamily) -> bool:
    members = family.as_set()
    for m in family:
        rest = m
        while rest:
            low = rest & -rest
            if m & ~low not in members:
                return False
            rest ^= low
    return True


def gkk_lym_sum(family: SetFamily, n: int | None = None) -> Fraction:
    """Weighted sum bounded by 1 for intersecting Sperner families.

    Members with ``|F| <= n/2`` weigh ``1/C(n, |F|-1)``, larger ones
    ``1/C(n, |F|)``.
    """
    n = family.n if n is None else n
    if not is_intersecting(family, "strict") or not is_sperner(family):
        raise InvalidInputError("gkk_lym_sum needs an intersecting (strict) Sperner family")
    total = Fraction(0)
    for m in family:
        size = popcount(m)
        if 2 * size <= n:
            total += Fraction(1, binomial(n, size - 1))
        else:
            total += Fraction(1, binomial(n, size))
    return total
