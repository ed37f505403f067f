"""Compiled versus numpy grid evaluator.

    python benchmarks/bench_polygrid.py [--repeat N]

Only the grid scan is timed. Row extraction and the exact re-check of each
hit are shared by both backends and run once per case. Hit lists must agree.
"""
from __future__ import annotations

import argparse
import time

from hompoisson import catalog, polygrid
from hompoisson.solver import SearchSpec, grid_system

CASES = [
    ("chybe nonab2 {-1,0,1}^4", SearchSpec("chybe", catalog.nonab2(), (-1, 0, 1))),
    ("hpybe p3 {-1,0,1}^9", SearchSpec("hpybe", catalog.p3(), (-1, 0, 1))),
    ("rota-baxter p3 w=-1 {-1,0,1}^9", SearchSpec("rota-baxter", catalog.p3(), (-1, 0, 1), weight=-1)),
    ("rota-baxter p3 w=0 {-2..2}^9", SearchSpec("rota-baxter", catalog.p3(), (-2, -1, 0, 1, 2), weight=0)),
    ("hpybe centroid-nonab2 {-2..2}^9", SearchSpec("hpybe", catalog.centroid_nonab2(), (-2, -1, 0, 1, 2))),
]


def best_of(system, backend, repeat):
    times, hits = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        hits = system.zero_points(backend)
        times.append(time.perf_counter() - t)
    return min(times), [int(h) for h in hits]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = ["python"] + (["compiled"] if polygrid.BACKEND == "compiled" else [])
    if len(backends) == 1:
        print("compiled evaluator not built; timing the numpy fallback only")
    print(f"{'case':<34} {'points':>9} {'sols':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for label, spec in CASES:
        system = grid_system(spec)
        timings, sols = [], None
        for b in backends:
            dt, hits = best_of(system, b, args.repeat)
            timings.append(dt)
            assert sols is None or hits == sols, f"{label}: backends disagree"
            sols = hits
        speed = f"{timings[0] / timings[-1]:8.1f}x" if len(timings) > 1 else "       -"
        cols = " ".join(f"{t:9.3f}s" for t in timings)
        print(f"{label:<34} {system.total:>9} {len(sols):>6} {cols}  {speed}")


if __name__ == "__main__":
    main()
