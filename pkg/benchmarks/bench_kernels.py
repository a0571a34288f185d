"""Compare the compiled and pure-Python kernels on the searches the package runs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from twopart import kernels
from twopart.core import GroundSplit
from twopart.properties import PropertyId
from twopart.search import conflict_graph, cross_sperner_graph, solve_mis


def random_rows(nv: int, density: float, seed: int) -> list[int]:
    rng = random.Random(seed)
    rows = [0] * nv
    for u in range(nv):
        for v in range(u + 1, nv):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def workloads() -> list[tuple[str, list[int]]]:
    return [
        ("2I n=6 k=3", conflict_graph(PropertyId.TWO_I, GroundSplit(6, 3)).rows),
        ("2I n=6 k=1", conflict_graph(PropertyId.TWO_I, GroundSplit(6, 1)).rows),
        ("2I2S n=6 k=3", conflict_graph(PropertyId.TWO_I2S, GroundSplit(6, 3)).rows),
        ("1I1S n=6 k=3", conflict_graph(PropertyId.ONE_I1S, GroundSplit(6, 3)).rows),
        ("2I2S n=7 k=3", conflict_graph(PropertyId.TWO_I2S, GroundSplit(7, 3)).rows),
        ("cross-Sperner n=4", cross_sperner_graph(4)[1]),
        ("random 90 v, p=0.3", random_rows(90, 0.3, 1)),
        ("random 120 v, p=0.6", random_rows(120, 0.6, 2)),
    ]


def time_fmask(backend: str, repeat: int) -> float:
    mod = kernels.backend_module(backend)
    rng = random.Random(0)
    fams = [rng.getrandbits(64) for _ in range(2000)]
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for f in fams:
            mod.delta_fmask(f, 6)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':<22}{'optimum':>8}" + "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for name, rows in workloads():
        times = {}
        opt = None
        for backend in backends:
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                size, _, _ = solve_mis(rows, backend=backend)
                best = min(best, time.perf_counter() - start)
            times[backend] = best
            if opt is not None and size != opt:
                raise SystemExit(f"backends disagree on {name}: {opt} vs {size}")
            opt = size
        speed = times["python"] / times["cython"] if len(times) == 2 else float("nan")
        print(f"{name:<22}{opt:>8}" + "".join(f"{times[b]:>12.4f}" for b in backends) + f"{speed:>9.1f}x")
    ftimes = {b: time_fmask(b, args.repeat) for b in backends}
    speed = ftimes["python"] / ftimes["cython"] if len(ftimes) == 2 else float("nan")
    print(f"{'delta_fmask x2000':<22}{'-':>8}" + "".join(f"{ftimes[b]:>12.4f}" for b in backends) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
