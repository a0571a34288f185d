"""Exact maximum searches and exhaustive theorem scans.

Every "largest family with property P" question is phrased as a maximum
independent set in a conflict graph whose vertices are subsets (or
``(subset, label)`` pairs when several families are chosen at once) and
whose edges join vertices that cannot coexist.  The independent set is
found as a maximum clique of the complement graph by the kernels in
:mod:`twopart.kernels`.
"""

from __future__ import annotations

import enum
import math
import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .core import (
    FamilyPair,
    GroundSplit,
    InvalidInputError,
    ResourceLimitError,
    SearchTimeoutError,
    SetFamily,
    binomial,
    elements_of,
    family_from_fmask,
    popcount,
)
from .properties import (
    PropertyId,
    down_closure,
    find_violation,
    is_cross_sperner_pair,
    is_intersecting,
    is_sperner,
    join_family,
    meet_family,
    satisfies,
    up_closure,
)

MAX_GRAPH_N = 12
MAX_VERTICES = 4096


@dataclass(frozen=True)
class ConflictGraph:
    """Symmetric, irreflexive graph; ``rows[v]`` is the bitset of neighbours of ``v``."""

    n_vertices: int
    rows: tuple[int, ...]
    property: PropertyId | None = None
    split: GroundSplit | None = None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n_vertices) for v in elements_of(self.rows[u]) if u < v]


@dataclass
class SearchResult:
    problem: str
    optimum: int
    witness: SetFamily | FamilyPair
    nodes_explored: int
    property: PropertyId | None = None
    split: GroundSplit | None = None
    exact: bool = True
    extremal_count: int | None = None
    parts: tuple[SetFamily, ...] = ()
    backend: str = kernels.BACKEND
    seconds: float = 0.0


class ScanSuite(enum.Enum):
    MARICA_SCHONHEIM = "ms"
    AHLSWEDE_DAYKIN = "ad"
    DOWNCLOSED_INTERSECTING = "dc"
    GKK_LYM = "gkk"
    CROSS_SPERNER_INTERNALS = "cross"

    @classmethod
    def parse(cls, text: str) -> "ScanSuite":
        key = text.strip().lower().replace("-", "_")
        for s in cls:
            if key in (s.value, s.name.lower()):
                return s
        raise InvalidInputError(f"unknown scan suite {text!r}")


@dataclass
class ScanReport:
    suite: ScanSuite
    n: int
    instances_scanned: int
    violations: list = field(default_factory=list)
    extremal_count: int = 0
    exhaustive: bool = True
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.violations


# conflict graphs ----------------------------------------------------------


def conflict_graph(p: PropertyId, split: GroundSplit, method: str = "vectorized") -> ConflictGraph:
    """Graph on all ``2**n`` subsets with an edge for every violating pair."""
    if not p.two_part:
        raise InvalidInputError(f"{p.value} has no pairwise two-part conflict graph")
    if split.n > MAX_GRAPH_N:
        raise ResourceLimitError(f"conflict graphs are limited to n <= {MAX_GRAPH_N}")
    if method == "pairwise":
        return _conflict_graph_pairwise(p, split)
    size = 1 << split.n
    s = np.arange(size, dtype=np.int64)
    s1 = s & split.x1
    s2 = s & split.x2
    rows = []
    for v in range(size):
        v1, v2 = v & split.x1, v & split.x2
        mask = _violation_vector(p, v1, v2, s1, s2)
        mask[v] = False
        rows.append(int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little"))
    return ConflictGraph(size, tuple(rows), p, split)


def _violation_vector(p: PropertyId, v1: int, v2: int, s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    eq1 = s1 == v1
    eq2 = s2 == v2
    dis1 = (s1 & v1) == 0
    dis2 = (s2 & v2) == 0
    # nested = one contains the other
    nest1 = ((s1 & ~v1) == 0) | ((v1 & ~s1) == 0)
    nest2 = ((s2 & ~v2) == 0) | ((v2 & ~s2) == 0)
    if p is PropertyId.TWO_I:
        return (eq1 & dis2) | (eq2 & dis1)
    if p is PropertyId.TWO_PART_SPERNER:
        return (eq1 & nest2) | (eq2 & nest1)
    if p is PropertyId.TWO_I2S:
        return (eq1 & (dis2 | nest2)) | (eq2 & (dis1 | nest1))
    if p is PropertyId.ONE_I1S:
        return (dis1 & nest2) | (dis2 & nest1)
    raise InvalidInputError(f"{p} is not a two-part property")


def _conflict_graph_pairwise(p: PropertyId, split: GroundSplit) -> ConflictGraph:
    from .properties import violates

    size = 1 << split.n
    rows = [0] * size
    for s in range(size):
        for t in range(s + 1, size):
            if violates(p, s, t, split):
                rows[s] |= 1 << t
                rows[t] |= 1 << s
    return ConflictGraph(size, tuple(rows), p, split)


def _labeled_graph(
    vertices: Sequence[tuple[int, int]], conflict: Callable[[tuple[int, int], tuple[int, int]], bool]
) -> list[int]:
    rows = [0] * len(vertices)
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            if conflict(vertices[a], vertices[b]):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return rows


# exact independent set ------------------------------------------------------


class _Shared:
    def __init__(self, best: int):
        self.best = best
        self.vertices: list[int] | None = None
        self.order = -1
        self.nodes = 0
        self.lock = threading.Lock()


def _complement_sorted(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Complement graph relabelled so vertex 0 has the largest degree."""
    nv = len(rows)
    full = (1 << nv) - 1
    comp = [full & ~rows[v] & ~(1 << v) for v in range(nv)]
    order = sorted(range(nv), key=lambda v: (-popcount(comp[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    relabelled = []
    for v in order:
        row = 0
        for u in elements_of(comp[v]):
            row |= 1 << pos[u]
        relabelled.append(row)
    return relabelled, order


def _deadline(timeout: float | None) -> float | None:
    return None if timeout is None else time.monotonic() + timeout


def solve_mis(
    rows: Sequence[int],
    threads: int = 1,
    timeout: float | None = None,
    backend: str | None = None,
) -> tuple[int, list[int], int]:
    """Maximum independent set of the graph given by neighbour bitsets.

    Returns ``(size, vertices, nodes)``.  With ``threads > 1`` the root
    branches run on a thread pool sharing the best size found so far; the
    size is the same for any thread count.
    """
    nv = len(rows)
    if nv > MAX_VERTICES:
        raise ResourceLimitError(f"independent-set search limited to {MAX_VERTICES} vertices")
    if nv == 0:
        return 0, [], 0
    comp, order = _complement_sorted(rows)
    kernel = kernels.backend_module(backend).CliqueKernel(comp)
    deadline = _deadline(timeout)
    full = (1 << nv) - 1
    if threads <= 1:
        best, clique, nodes, timed_out = kernel.max_clique(full, 0, 0, deadline)
        if timed_out:
            raise SearchTimeoutError(f"independent-set search exceeded {timeout} s after {nodes} nodes")
        return best, sorted(order[v] for v in clique or []), nodes

    root_order, colors = kernels.color_order(comp, full)
    shared = _Shared(0)
    tasks = []
    remaining = full
    for idx in range(len(root_order) - 1, -1, -1):
        v = root_order[idx]
        tasks.append((idx, v, remaining & comp[v], colors[idx]))
        remaining &= ~(1 << v)

    def run(task: tuple[int, int, int, int]) -> bool:
        idx, v, cand, bound = task
        with shared.lock:
            lower = shared.best
        if bound <= lower:
            return False
        best, clique, nodes, timed_out = kernel.max_clique(cand, 1, lower, deadline)
        with shared.lock:
            shared.nodes += nodes + 1
            if clique is not None and (best > shared.best or (best == shared.best and idx > shared.order)):
                shared.best = best
                shared.vertices = [v] + clique
                shared.order = idx
        return timed_out

    with ThreadPoolExecutor(max_workers=threads) as pool:
        timed = list(pool.map(run, tasks))
    if any(timed):
        raise SearchTimeoutError(f"independent-set search exceeded {timeout} s")
    vertices = shared.vertices or []
    return shared.best, sorted(order[v] for v in vertices), shared.nodes


def count_mis(
    rows: Sequence[int], target: int, timeout: float | None = None, backend: str | None = None
) -> tuple[int, int]:
    """Number of independent sets of exactly ``target`` vertices, and nodes explored."""
    nv = len(rows)
    if nv > MAX_VERTICES:
        raise ResourceLimitError(f"independent-set search limited to {MAX_VERTICES} vertices")
    if nv == 0:
        return int(target == 0), 0
    comp, _ = _complement_sorted(rows)
    kernel = kernels.backend_module(backend).CliqueKernel(comp)
    count, nodes, timed_out = kernel.count_cliques((1 << nv) - 1, target, 0, _deadline(timeout))
    if timed_out:
        raise SearchTimeoutError(f"counting search exceeded {timeout} s")
    return count, nodes


def max_independent_set(
    g: ConflictGraph, threads: int = 1, timeout: float | None = None, backend: str | None = None
) -> SearchResult:
    start = time.perf_counter()
    size, vertices, nodes = solve_mis(g.rows, threads, timeout, backend)
    n = g.split.n if g.split is not None else max(1, (g.n_vertices - 1).bit_length())
    witness = SetFamily(n, tuple(vertices))
    if g.property is not None and g.split is not None:
        if not satisfies(g.property, witness, g.split):
            raise AssertionError("search witness failed independent re-validation")
    if len(witness) != size:
        raise AssertionError("witness size does not match the optimum")
    return SearchResult(
        problem=f"max-{g.property.value}" if g.property else "max-independent-set",
        optimum=size,
        witness=witness,
        nodes_explored=nodes,
        property=g.property,
        split=g.split,
        backend=backend or kernels.BACKEND,
        seconds=time.perf_counter() - start,
    )


def max_property_family(
    p: PropertyId, split: GroundSplit, threads: int = 1, timeout: float | None = None, backend: str | None = None
) -> SearchResult:
    return max_independent_set(conflict_graph(p, split), threads, timeout, backend)


# labelling searches --------------------------------------------------------


def cross_sperner_graph(n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Vertices ``(set, side)`` with side 0 for F and 1 for G; the empty set is excluded."""
    vertices = [(s, side) for side in (0, 1) for s in range(1, 1 << n)]

    def conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
        (s, ls), (t, lt) = a, b
        if ls == lt:
            return s & t == 0
        return s & ~t == 0 or t & ~s == 0

    return vertices, _labeled_graph(vertices, conflict)


def max_cross_sperner_sum(
    n: int, count_extremal: bool = True, timeout: float | None = None, backend: str | None = None
) -> SearchResult:
    """Largest ``|F| + |G|`` over cross-Sperner pairs of intersecting families."""
    if n < 1:
        raise InvalidInputError("max_cross_sperner_sum needs n >= 1")
    if n > 4:
        raise ResourceLimitError("max_cross_sperner_sum is exhaustive only for n <= 4")
    start = time.perf_counter()
    vertices, rows = cross_sperner_graph(n)
    size, chosen, nodes = solve_mis(rows, timeout=timeout, backend=backend)
    f = SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen if vertices[v][1] == 0)))
    g = SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen if vertices[v][1] == 1)))
    pair = FamilyPair(f, g)
    if not is_cross_sperner_pair(pair) or pair.total != size:
        raise AssertionError("cross-Sperner witness failed re-validation")
    extremal = None
    if count_extremal:
        extremal, more = count_mis(rows, size, timeout=timeout, backend=backend)
        nodes += more
    return SearchResult(
        problem="max-cross-sperner-sum",
        optimum=size,
        witness=pair,
        nodes_explored=nodes,
        property=PropertyId.CROSS_SPERNER_PAIR,
        extremal_count=extremal,
        backend=backend or kernels.BACKEND,
        seconds=time.perf_counter() - start,
    )


def max_union_intersecting(
    n: int, m: int, timeout: float | None = None, backend: str | None = None
) -> SearchResult:
    """Largest union of ``m`` intersecting (strict) families on ``[0, n)``."""
    if n < 1 or m < 1:
        raise InvalidInputError("max_union_intersecting needs n >= 1 and m >= 1")
    if n > 4 or m > 3:
        raise ResourceLimitError("max_union_intersecting is limited to n <= 4, m <= 3")
    start = time.perf_counter()
    vertices = [(s, c) for c in range(m) for s in range(1, 1 << n)]

    def conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
        (s, cs), (t, ct) = a, b
        if cs == ct:
            return s & t == 0
        return s == t

    rows = _labeled_graph(vertices, conflict)
    size, chosen, nodes = solve_mis(rows, timeout=timeout, backend=backend)
    parts = tuple(
        SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen if vertices[v][1] == c))) for c in range(m)
    )
    union = SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen)))
    if len(union) != size or not all(is_intersecting(f, "strict") for f in parts):
        raise AssertionError("union witness failed re-validation")
    return SearchResult(
        problem=f"max-union-of-{m}-intersecting",
        optimum=size,
        witness=union,
        nodes_explored=nodes,
        parts=parts,
        backend=backend or kernels.BACKEND,
        seconds=time.perf_counter() - start,
    )


def max_union_isp_pair(n: int, timeout: float | None = None, backend: str | None = None) -> SearchResult:
    """Largest ``|F ∪ G|`` for two intersecting (strict) Sperner families, ``n`` odd."""
    if n < 1 or n % 2 == 0:
        raise InvalidInputError("max_union_isp_pair needs an odd n")
    if n > 5:
        raise ResourceLimitError("max_union_isp_pair is limited to n <= 5")
    start = time.perf_counter()
    vertices = [(s, c) for c in (0, 1) for s in range(1, 1 << n)]

    def conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
        (s, cs), (t, ct) = a, b
        if cs == ct:
            return s & t == 0 or s & ~t == 0 or t & ~s == 0
        return s == t

    rows = _labeled_graph(vertices, conflict)
    size, chosen, nodes = solve_mis(rows, timeout=timeout, backend=backend)
    f = SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen if vertices[v][1] == 0)))
    g = SetFamily(n, tuple(sorted(vertices[v][0] for v in chosen if vertices[v][1] == 1)))
    for fam in (f, g):
        if not (is_intersecting(fam, "strict") and is_sperner(fam)):
            raise AssertionError("pair witness failed re-validation")
    if len(f.union(g)) != size:
        raise AssertionError("pair witness size mismatch")
    return SearchResult(
        problem="max-union-intersecting-sperner-pair",
        optimum=size,
        witness=FamilyPair(f, g),
        nodes_explored=nodes,
        backend=backend or kernels.BACKEND,
        seconds=time.perf_counter() - start,
    )


# brute-force oracle -------------------------------------------------------


def brute_force_max(p: PropertyId, split: GroundSplit) -> int:
    """Largest family found by trying all ``2**(2**n)`` families; ``n <= 3`` only."""
    if split.n > 3:
        raise ResourceLimitError("brute force is limited to n <= 3")
    size = 1 << split.n
    best = 0
    for fmask in range(1 << size):
        count = popcount(fmask)
        if count <= best:
            continue
        if find_violation(p, family_from_fmask(fmask, split.n), split) is None:
            best = count
    return best


# theorem scans -------------------------------------------------------------


_SCAN_LIMITS = {
    ScanSuite.MARICA_SCHONHEIM: 4,
    ScanSuite.AHLSWEDE_DAYKIN: 6,
    ScanSuite.DOWNCLOSED_INTERSECTING: 4,
    ScanSuite.GKK_LYM: 5,
    ScanSuite.CROSS_SPERNER_INTERNALS: 4,
}


def run_theorem_scan(
    suite: ScanSuite | str, n: int, samples: int = 20000, seed: int = 0
) -> ScanReport:
    """Check one classical inequality on every instance over ``[0, n)``.

    The Ahlswede-Daykin suite is exhaustive for ``n <= 3`` and draws
    ``samples`` random pairs (seeded) for ``4 <= n <= 6``.
    """
    if isinstance(suite, str):
        suite = ScanSuite.parse(suite)
    if n < 1:
        raise InvalidInputError("scans need n >= 1")
    if n > _SCAN_LIMITS[suite]:
        raise ResourceLimitError(f"{suite.name} scan is limited to n <= {_SCAN_LIMITS[suite]}")
    if suite is ScanSuite.MARICA_SCHONHEIM:
        return _scan_marica_schonheim(n)
    if suite is ScanSuite.AHLSWEDE_DAYKIN:
        return _scan_ahlswede_daykin(n, samples, seed)
    if suite is ScanSuite.DOWNCLOSED_INTERSECTING:
        return _scan_downclosed(n)
    if suite is ScanSuite.GKK_LYM:
        return _scan_gkk(n)
    return scan_cross_sperner_internals(n)


def _scan_marica_schonheim(n: int) -> ScanReport:
    report = ScanReport(ScanSuite.MARICA_SCHONHEIM, n, 0)
    for fmask in range(1 << (1 << n)):
        d = popcount(kernels.delta_fmask(fmask, n))
        f = popcount(fmask)
        report.instances_scanned += 1
        if d < f:
            report.violations.append(fmask)
        elif d == f:
            report.extremal_count += 1
    return report


def _scan_ahlswede_daykin(n: int, samples: int, seed: int) -> ScanReport:
    families = 1 << (1 << n)
    exhaustive = n <= 3
    report = ScanReport(ScanSuite.AHLSWEDE_DAYKIN, n, 0, exhaustive=exhaustive)
    if exhaustive:
        pairs = ((f, g) for f in range(families) for g in range(families))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(families), rng.randrange(families)) for _ in range(samples))
        report.details["seed"] = seed
    for f, g in pairs:
        meet, join = kernels.meet_join_fmask(f, g, n)
        lhs = popcount(f) * popcount(g)
        rhs = popcount(meet) * popcount(join)
        report.instances_scanned += 1
        if lhs > rhs:
            report.violations.append((f, g))
        elif lhs == rhs:
            report.extremal_count += 1
    return report


def downward_closed_fmasks(n: int) -> list[int]:
    """All downward-closed families on ``[0, n)`` as subset bitsets (the empty family included)."""
    size = 1 << n
    # below[s] = bitset of the sets s minus one element
    below = [sum(1 << (s & ~(1 << e)) for e in range(n) if s >> e & 1) for s in range(size)]
    out = []
    for fmask in range(1 << size):
        ok = True
        rest = fmask
        while rest:
            low = rest & -rest
            s = low.bit_length() - 1
            if below[s] & ~fmask:
                ok = False
                break
            rest ^= low
        if ok:
            out.append(fmask)
    return out


def _intersecting_subfamily_sizes(members: list[int]) -> list[int]:
    """Sizes of all intersecting (strict) subfamilies of ``members``, empty one included."""
    members = [m for m in members if m]
    k = len(members)
    compat = [0] * k
    for a in range(k):
        for b in range(k):
            if a != b and members[a] & members[b]:
                compat[a] |= 1 << b
    sizes = []

    def walk(cand: int, size: int) -> None:
        sizes.append(size)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            walk(cand & compat[v], size + 1)

    walk((1 << k) - 1, 0)
    return sizes


def _scan_downclosed(n: int) -> ScanReport:
    report = ScanReport(ScanSuite.DOWNCLOSED_INTERSECTING, n, 0)
    checked = 0
    for dmask in downward_closed_fmasks(n):
        members = elements_of(dmask)
        d = len(members)
        sizes = _intersecting_subfamily_sizes(members)
        checked += len(sizes)
        report.instances_scanned += 1
        biggest = max(sizes)
        if 2 * biggest > d:
            report.violations.append(dmask)
        report.extremal_count += sum(1 for s in sizes if 2 * s == d)
    report.details["subfamilies_checked"] = checked
    return report


def _scan_gkk(n: int) -> ScanReport:
    """Every intersecting (strict) Sperner family, LYM sum kept as integers over a common denominator."""
    report = ScanReport(ScanSuite.GKK_LYM, n, 0)
    sets = list(range(1, 1 << n))
    denominators = {}
    for s in sets:
        size = popcount(s)
        denominators[s] = binomial(n, size - 1) if 2 * size <= n else binomial(n, size)
    common = math.lcm(*denominators.values())
    weight = [common // denominators[s] for s in sets]
    k = len(sets)
    compat = [0] * k
    for a in range(k):
        for b in range(k):
            s, t = sets[a], sets[b]
            if a != b and s & t and s & ~t and t & ~s:
                compat[a] |= 1 << b

    def walk(cand: int, total: int, chosen: list[int]) -> None:
        report.instances_scanned += 1
        if total > common:
            report.violations.append(tuple(chosen))
        elif total == common:
            report.extremal_count += 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(sets[v])
            walk(cand & compat[v], total + weight[v], chosen)
            chosen.pop()

    walk((1 << k) - 1, 0, [])
    report.details["denominator"] = common
    return report


def scan_cross_sperner_internals(n: int) -> ScanReport:
    """Walk every cross-Sperner intersecting pair and check the closure facts.

    With ``U'``/``D'`` the up/down closures of ``F ∪ G`` minus ``F ∪ G``:
    ``F ∧ G ⊆ D'``, ``F ∨ G ⊆ U'``, the four systems are pairwise disjoint,
    ``|F|, |G| <= |D'|`` and ``|F| + |G| <= 2**(n-1)``.  Failures are
    tallied per fact in ``details["failures_by_fact"]``.
    """
    if n > 4:
        raise ResourceLimitError("cross-Sperner internals scan is limited to n <= 4")
    report = ScanReport(ScanSuite.CROSS_SPERNER_INTERNALS, n, 0)
    vertices, rows = cross_sperner_graph(n)
    nv = len(vertices)
    full = (1 << nv) - 1
    comp = [full & ~rows[v] & ~(1 << v) for v in range(nv)]
    bound = 1 << (n - 1)

    failures = {name: 0 for name in CROSS_FACTS}

    def check(chosen: int) -> None:
        f = SetFamily(n, tuple(sorted(vertices[v][0] for v in elements_of(chosen) if vertices[v][1] == 0)))
        g = SetFamily(n, tuple(sorted(vertices[v][0] for v in elements_of(chosen) if vertices[v][1] == 1)))
        failed = [name for name, ok in cross_sperner_facts(f, g).items() if not ok]
        report.instances_scanned += 1
        for name in failed:
            failures[name] += 1
        if failed:
            report.violations.append((f.masks, g.masks, tuple(failed)))
        if len(f) + len(g) == bound:
            report.extremal_count += 1

    def walk(cand: int, chosen: int) -> None:
        check(chosen)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            walk(cand & comp[v], chosen | low)

    walk(full, 0)
    report.details["failures_by_fact"] = failures
    return report


CROSS_FACTS = (
    "meet_in_D'",
    "join_in_U'",
    "F_G_disjoint",
    "U'_D'_disjoint",
    "F_le_D'",
    "G_le_D'",
    "sum_le_half_cube",
)


def cross_sperner_facts(f: SetFamily, g: SetFamily) -> dict[str, bool]:
    """Truth value of each closure fact for one cross-Sperner intersecting pair.

    ``F`` and ``U'``, ``D'`` are disjoint by definition, as are ``G`` and
    ``U'``, ``D'``; the remaining disjointness (``F``/``G`` and
    ``U'``/``D'``) is reported separately.
    """
    n = f.n
    both = f.union(g)
    u_prime = up_closure(both, n).difference(both)
    d_prime = down_closure(both, n).difference(both)
    return {
        "meet_in_D'": meet_family(f, g).issubset(d_prime),
        "join_in_U'": join_family(f, g).issubset(u_prime),
        "F_G_disjoint": not (f.as_set() & g.as_set()),
        "U'_D'_disjoint": not (u_prime.as_set() & d_prime.as_set()),
        "F_le_D'": len(f) <= len(d_prime),
        "G_le_D'": len(g) <= len(d_prime),
        "sum_le_half_cube": len(f) + len(g) <= 1 << (n - 1),
    }


__all__ = [
    "ConflictGraph",
    "ScanReport",
    "ScanSuite",
    "SearchResult",
    "brute_force_max",
    "conflict_graph",
    "count_mis",
    "cross_sperner_facts",
    "cross_sperner_graph",
    "downward_closed_fmasks",
    "max_cross_sperner_sum",
    "max_independent_set",
    "max_property_family",
    "max_union_intersecting",
    "max_union_isp_pair",
    "run_theorem_scan",
    "scan_cross_sperner_internals",
    "solve_mis",
]
