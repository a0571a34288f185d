"""Slow reference implementations on frozensets, written straight from the definitions.

Nothing here touches the package's bitmask code, so agreement with it is
evidence rather than tautology.
"""

from __future__ import annotations

from itertools import chain, combinations
from fractions import Fraction


def powerset(ground):
    ground = list(ground)
    return [frozenset(c) for c in chain.from_iterable(combinations(ground, r) for r in range(len(ground) + 1))]


def to_sets(family):
    """Package SetFamily (or iterable of masks) -> set of frozensets of element ids."""
    out = set()
    for m in family:
        out.add(frozenset(i for i in range(m.bit_length()) if m >> i & 1))
    return out


def pascal(limit):
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        rows.append([1] + [prev[j - 1] + prev[j] for j in range(1, n)] + [1])
    return rows


def intersecting(fam, strict=False):
    fam = list(fam)
    if strict and frozenset() in fam:
        return False
    return all(a & b for a, b in combinations(fam, 2))


def sperner(fam):
    fam = list(fam)
    return not any(a <= b or b <= a for a, b in combinations(fam, 2))


def trace_blocks(fam, fixed_part, keep_part):
    blocks = {}
    for s in fam:
        blocks.setdefault(s & fixed_part, set()).add(s & keep_part)
    return blocks


def two_part_ok(prop, fam, k, n):
    """2I, 2I2S, 2PS straight from the trace-family definitions; 1I1S from its pair condition."""
    x1 = frozenset(range(k))
    x2 = frozenset(range(k, n))
    fam = set(fam)
    if prop == "1I1S":
        for s, t in combinations(fam, 2):
            a, b = s & x1, t & x1
            c, d = s & x2, t & x2
            if not (a & b) and (c <= d or d <= c):
                return False
            if not (c & d) and (a <= b or b <= a):
                return False
        return True
    for fixed, keep in ((x1, x2), (x2, x1)):
        for block in trace_blocks(fam, fixed, keep).values():
            if prop in ("2I", "2I2S") and not intersecting(block):
                return False
            if prop in ("2I2S", "2PS") and not sperner(block):
                return False
    return True


def cross_sperner(f, g):
    if not (intersecting(f, strict=True) and intersecting(g, strict=True)):
        return False
    return not any(a <= b or b <= a for a in f for b in g)


def delta(fam):
    return {a - b for a in fam for b in fam}


def meet(f, g):
    return {a & b for a in f for b in g}


def join(f, g):
    return {a | b for a in f for b in g}


def up(fam, n):
    return {s for s in powerset(range(n)) if any(a <= s for a in fam)}


def down(fam, n):
    return {s for s in powerset(range(n)) if any(s <= a for a in fam)}


def gkk(fam, n, binom):
    total = Fraction(0)
    for s in fam:
        size = len(s)
        total += Fraction(1, binom[n][size - 1] if 2 * size <= n else binom[n][size])
    return total


def best_family(prop, n, k):
    """Largest family with the two-part property, by trying every family (n <= 3)."""
    sets = powerset(range(n))
    best = 0
    for mask in range(1 << len(sets)):
        fam = [sets[i] for i in range(len(sets)) if mask >> i & 1]
        if len(fam) > best and two_part_ok(prop, fam, k, n):
            best = len(fam)
    return best
