#!/usr/bin/env python3
"""Benchmark the pure-Python grid kernel against the compiled one.

Generates a fixed corpus of random pages, then times overlap detection,
compaction, and push-down on each implementation. Run from the repo root:

    python benchmarks/bench_gridkernel.py [--pages N] [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dashforge.gridkernel import _pure  # noqa: E402

try:
    from dashforge.gridkernel import _cgrid
except ImportError:
    _cgrid = None


def make_pages(n_pages: int, seed: int = 20240811):
    rng = random.Random(seed)
    pages = []
    for _ in range(n_pages):
        rects = []
        for _ in range(rng.randint(4, 24)):
            w = rng.randint(1, 6)
            h = rng.randint(1, 5)
            rects.append((rng.randint(0, 12 - w), rng.randint(0, 30), w, h))
        pages.append(rects)
    return pages


def run(impl, pages, repeat: int) -> dict[str, float]:
    timings = {}
    for name, fn in (
        ("overlapping_pairs", lambda r: impl.overlapping_pairs(r)),
        ("compact", lambda r: impl.compact(r)),
        ("push_down", lambda r: impl.push_down(r, 0)),
    ):
        start = time.perf_counter()
        for _ in range(repeat):
            for rects in pages:
                fn(rects)
        timings[name] = time.perf_counter() - start
    return timings


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pages", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pages = make_pages(args.pages)
    calls = args.pages * args.repeat

    impls = [("pure", _pure)]
    if _cgrid is not None:
        impls.append(("cython", _cgrid))
    else:
        print("note: compiled kernel not built; timing pure only")

    results = {name: run(impl, pages, args.repeat) for name, impl in impls}

    if _cgrid is not None:
        sample = pages[: min(200, len(pages))]
        for rects in sample:
            assert _pure.compact(rects) == _cgrid.compact(rects)
            assert _pure.overlapping_pairs(rects) == _cgrid.overlapping_pairs(rects)
            assert _pure.push_down(rects, 0) == _cgrid.push_down(rects, 0)
        print(f"parity check on {len(sample)} pages: ok")

    print(f"\nworkload: {args.pages} pages x {args.repeat} repeats "
          f"({calls} calls per kernel)\n")
    header = f"{'kernel':<18}" + "".join(f"{name:>12}" for name in results)
    print(header)
    ops = ["overlapping_pairs", "compact", "push_down"]
    for op in ops:
        row = f"{op:<18}"
        for name in results:
            per_call_us = results[name][op] / calls * 1e6
            row += f"{per_call_us:>10.2f}us"
        print(row)
    if _cgrid is not None:
        print()
        for op in ops:
            ratio = results["pure"][op] / results["cython"][op]
            print(f"{op:<18}{'':>12}{ratio:>11.1f}x speedup")


if __name__ == "__main__":
    main()
