"""Pure-Python bitset kernels; the reference the compiled backend must match.

Graph rows are Python ints used as bitsets over vertex ids.  The clique
search is a coloring-bounded branch and bound: vertices of the candidate
set are greedily colored (each color class pairwise non-adjacent), then
branched on in reverse coloring order so the color number bounds the
clique that can still be added.
"""

from __future__ import annotations

import time
from typing import Sequence

_CHECK_EVERY = 1024


def color_order(adj: Sequence[int], candidates: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    q = candidates
    k = 0
    while q:
        k += 1
        qk = q
        while qk:
            low = qk & -qk
            v = low.bit_length() - 1
            q ^= low
            qk ^= low
            qk &= ~adj[v]
            order.append(v)
            colors.append(k)
    return order, colors


class CliqueKernel:
    backend = "python"

    def __init__(self, adj_rows: Sequence[int]):
        self.adj = list(adj_rows)
        self.nv = len(self.adj)

    def max_clique(
        self, candidates: int, base_size: int = 0, lower: int = 0, deadline: float | None = None
    ) -> tuple[int, list[int] | None, int, bool]:
        """Largest clique inside ``candidates`` whose size plus ``base_size`` beats ``lower``.

        Returns ``(best, vertices, nodes, timed_out)``; ``vertices`` is None
        when nothing better than ``lower`` exists.
        """
        adj = self.adj
        best = lower
        best_clique: list[int] | None = None
        clique: list[int] = []
        nodes = 0
        timed_out = False

        def expand(p: int, size: int) -> None:
            nonlocal best, best_clique, nodes, timed_out
            order, colors = color_order(adj, p)
            for idx in range(len(order) - 1, -1, -1):
                if size + colors[idx] <= best:
                    return
                nodes += 1
                if deadline is not None and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
                    timed_out = True
                    return
                v = order[idx]
                clique.append(v)
                np_ = p & adj[v]
                if np_:
                    expand(np_, size + 1)
                elif size + 1 > best:
                    best = size + 1
                    best_clique = list(clique)
                clique.pop()
                if timed_out:
                    return
                p &= ~(1 << v)

        if candidates:
            expand(candidates, base_size)
        elif base_size > best:
            best, best_clique = base_size, []
        return best, best_clique, nodes, timed_out

    def count_cliques(
        self, candidates: int, target: int, base_size: int = 0, deadline: float | None = None
    ) -> tuple[int, int, bool]:
        """Number of cliques of exactly ``target - base_size`` vertices inside ``candidates``."""
        adj = self.adj
        count = 0
        nodes = 0
        timed_out = False
        if target <= base_size:
            return int(target == base_size), 0, False

        def expand(p: int, size: int) -> None:
            nonlocal count, nodes, timed_out
            order, colors = color_order(adj, p)
            for idx in range(len(order) - 1, -1, -1):
                if size + colors[idx] < target:
                    return
                nodes += 1
                if deadline is not None and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
                    timed_out = True
                    return
                v = order[idx]
                if size + 1 == target:
                    count += 1
                else:
                    np_ = p & adj[v]
                    if np_:
                        expand(np_, size + 1)
                if timed_out:
                    return
                p &= ~(1 << v)

        expand(candidates, base_size)
        return count, nodes, timed_out


def delta_fmask(fmask: int, n: int) -> int:
    """Difference family of a family encoded as a bitset over the ``2**n`` subsets."""
    members = _bits(fmask)
    out = 0
    for a in members:
        for b in members:
            out |= 1 << (a & ~b)
    return out


def meet_join_fmask(f: int, g: int, n: int) -> tuple[int, int]:
    fa = _bits(f)
    gb = _bits(g)
    meet = 0
    join = 0
    for a in fa:
        for b in gb:
            meet |= 1 << (a & b)
            join |= 1 << (a | b)
    return meet, join


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out
