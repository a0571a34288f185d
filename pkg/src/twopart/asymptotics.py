"""Exact finite-n evaluation of the ratio sequences behind the equal-part 2I2S bound.

Everything here is integer or :class:`fractions.Fraction` arithmetic; the
limits (1/3, 1/2, 2/3) are only ever approached, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .constructions import ff_pair_sizes, two_i2s_equal_count
from .core import InvalidInputError, binomial


@dataclass
class RatioSeries:
    name: str
    params: dict
    terms: list[tuple[int, Fraction]] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def values(self) -> list[Fraction]:
        return [t for _, t in self.terms]

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def _check_ni(n: int, i: int) -> None:
    if n < 4 or n % 4:
        raise InvalidInputError("n must be a positive multiple of 4")
    if not 1 <= i <= n // 4:
        raise InvalidInputError(f"need 1 <= i <= n/4, got i={i}")


def s_profile(n: int, i: int) -> tuple[int, Fraction]:
    """``S_i`` (squared sizes of the level-``i`` canonical classes) and ``S_i / C(n/2, i)**2``."""
    _check_ni(n, i)
    half = n // 2
    s = binomial(2 * i - 1, i) ** 2
    s += sum(binomial(half - 1 - k, i - 1) ** 2 for k in range(0, half - 2 * i + 1))
    return s, Fraction(s, binomial(half, i) ** 2)


def rd_sequences(n: int, i: int) -> RatioSeries:
    """Level-``i`` class ratios ``r_l`` and successive quotients ``d_l``.

    ``r_l = C(n/2 - l, i - 1) / C(n/2, i)`` for ``l = 1 .. n/2 - 2i + 1``
    and a last term ``C(2i - 1, i) / C(n/2, i)``.  ``extra["d"]`` maps ``l``
    to ``r_l / r_{l-1}``; the closed form ``(n/2 - l - i + 2) / (n/2 - l + 1)``
    is checked exactly for every ``l`` and a mismatch raises.
    """
    _check_ni(n, i)
    half = n // 2
    denom = binomial(half, i)
    last = half - 2 * i + 1
    series = RatioSeries("r", {"n": n, "i": i})
    for ell in range(1, last + 1):
        series.terms.append((ell, Fraction(binomial(half - ell, i - 1), denom)))
    series.terms.append((last + 1, Fraction(binomial(2 * i - 1, i), denom)))
    d = {}
    for ell in range(2, last + 1):
        q = series.terms[ell - 1][1] / series.terms[ell - 2][1]
        if q != d_closed_form(n, i, ell):
            raise AssertionError(f"d_{ell} closed form fails at n={n}, i={i}")
        d[ell] = q
    series.extra["d"] = d
    return series


def d_closed_form(n: int, i: int, ell: int) -> Fraction:
    half = n // 2
    return Fraction(half - ell - i + 2, half - ell + 1)


def d_shifted_form(n: int, i: int, ell: int) -> Fraction:
    """``1/2 + (m - l/2 + 3/2) / (n/2 - l + 1)`` with ``m = n/4 - i``."""
    m = n // 4 - i
    return Fraction(1, 2) + (m - Fraction(ell, 2) + Fraction(3, 2)) / (n // 2 - ell + 1)


def f1_profile(n: int) -> tuple[int, Fraction, bool]:
    """Products of full levels above ``n/4``: size, share of ``C(n, n/2)``, Vandermonde check.

    The check is ``2 * F1 + C(n/2, n/4)**2 == C(n, n/2)``.
    """
    if n < 4 or n % 4:
        raise InvalidInputError("n must be a positive multiple of 4")
    half, quarter = n // 2, n // 4
    f1 = sum(binomial(half, i) ** 2 for i in range(quarter + 1, half + 1))
    middle = binomial(n, half)
    return f1, Fraction(f1, middle), 2 * f1 + binomial(half, quarter) ** 2 == middle


def fact3_ratio(a: Sequence[Fraction]) -> Fraction:
    """Sum of squares of a nonincreasing positive sequence summing to 1."""
    vals = [Fraction(x) for x in a]
    if not vals:
        raise InvalidInputError("sequence must be nonempty")
    if any(x <= 0 for x in vals):
        raise InvalidInputError("terms must be positive")
    if any(later > earlier for earlier, later in zip(vals, vals[1:])):
        raise InvalidInputError("terms must be nonincreasing")
    if sum(vals) != 1:
        raise InvalidInputError("terms must sum to 1")
    return sum((x * x for x in vals), Fraction(0))


def coverage_fraction(y: int, K: int) -> Fraction:
    """Share of ``2**y`` made of levels ``s >= ceil(y/2) - K*floor(sqrt(y))``."""
    if y < 1 or K < 0:
        raise InvalidInputError("need y >= 1 and K >= 0")
    low = max(0, (y + 1) // 2 - K * math.isqrt(y))
    covered = sum(binomial(y, s) for s in range(low, y + 1))
    return Fraction(covered, 1 << y)


def ff_coverage(y: int, i: int) -> Fraction:
    g1, g2 = ff_pair_sizes(y, i)
    total = binomial(y, i)
    if total == 0:
        raise InvalidInputError(f"no {i}-subsets of a {y}-set")
    return Fraction(g1 + g2, total)


def construction_ratio_series(
    ns: Iterable[int], modified: bool = False, beta: Fraction = Fraction(1)
) -> RatioSeries:
    series = RatioSeries("construction", {"modified": modified, "beta": Fraction(beta)})
    for n in sorted(ns):
        count = two_i2s_equal_count(n, modified, beta, include_empty=True)
        series.terms.append((n, Fraction(count, binomial(n, n // 2))))
    return series


def s_window(n: int) -> tuple[int, int]:
    """Integer levels ``i`` with ``n/4 - n**(2/3) <= i <= n/4 - ln n``, clipped to ``[1, n/4]``."""
    quarter = n // 4
    c = round(n ** (2 / 3))  # floor(n**(2/3)), fixed up exactly below
    while c ** 3 > n * n:
        c -= 1
    while (c + 1) ** 3 <= n * n:
        c += 1
    lo = max(1, quarter - c)
    hi = min(quarter, quarter - math.ceil(math.log(n)))
    return lo, hi
