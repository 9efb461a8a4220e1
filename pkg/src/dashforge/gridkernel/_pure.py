"""Pure-Python grid kernels (reference implementation).

The compiled kernel in ``_cgrid.pyx`` mirrors this module exactly; any
behavioural change here must be ported there.
"""

from __future__ import annotations

from typing import Sequence

Rect = tuple[int, int, int, int]


def _intersects(ax: int, ay: int, aw: int, ah: int,
                bx: int, by: int, bw: int, bh: int) -> bool:
    return ax < bx + bw and bx < ax + aw and ay < by + bh and by < ay + ah


def overlapping_pairs(rects: Sequence[Rect]) -> list[tuple[int, int]]:
    """All index pairs (i < j) whose rects intersect."""
    out: list[tuple[int, int]] = []
    n = len(rects)
    for i in range(n):
        ax, ay, aw, ah = rects[i]
        for j in range(i + 1, n):
            bx, by, bw, bh = rects[j]
            if _intersects(ax, ay, aw, ah, bx, by, bw, bh):
                out.append((i, j))
    return out


def has_overlap(rects: Sequence[Rect]) -> bool:
    """Early-exit variant of :func:`overlapping_pairs`."""
    n = len(rects)
    for i in range(n):
        ax, ay, aw, ah = rects[i]
        for j in range(i + 1, n):
            bx, by, bw, bh = rects[j]
            if _intersects(ax, ay, aw, ah, bx, by, bw, bh):
                return True
    return False


def _min_free_y(x: int, w: int, h: int, floor: int, settled: list[Rect]) -> int:
    # The minimal feasible y is either the floor or the bottom edge of a
    # settled rect: if y-1 is blocked and y is free, the blocker's bottom
    # edge is exactly y. Scanning candidates ascending finds it.
    candidates = [floor]
    for sx, sy, sw, sh in settled:
        if sy + sh >= floor:
            candidates.append(sy + sh)
    for y in sorted(set(candidates)):
        free = True
        for sx, sy, sw, sh in settled:
            if _intersects(x, y, w, h, sx, sy, sw, sh):
                free = False
                break
        if free:
            return y
    raise AssertionError("unreachable: below all settled rects is always free")


def compact(rects: Sequence[Rect]) -> list[Rect]:
    """Move each rect to the smallest collision-free y, x unchanged.

    Rects are settled in (y, x) order of the input state; output preserves
    input index order. Idempotent on overlap-free input.
    """
    n = len(rects)
    order = sorted(range(n), key=lambda i: (rects[i][1], rects[i][0]))
    out: list[Rect] = list(rects)
    settled: list[Rect] = []
    for i in order:
        x, y, w, h = rects[i]
        ny = _min_free_y(x, w, h, 0, settled)
        out[i] = (x, ny, w, h)
        settled.append(out[i])
    return out


def push_down(rects: Sequence[Rect], anchor: int) -> list[Rect]:
    """Resolve collisions against a fixed anchor by pushing rects down.

    The anchor keeps its rect; every other rect, visited in (y, x) order,
    is moved straight down to the nearest y at or below its current row
    where it no longer intersects anything already placed. Cascades are
    handled by the visit order.
    """
    n = len(rects)
    out: list[Rect] = list(rects)
    placed: list[Rect] = [out[anchor]]
    order = sorted(
        (i for i in range(n) if i != anchor),
        key=lambda i: (rects[i][1], rects[i][0]),
    )
    for i in order:
        x, y, w, h = out[i]
        blocked = False
        for sx, sy, sw, sh in placed:
            if _intersects(x, y, w, h, sx, sy, sw, sh):
                blocked = True
                break
        if blocked:
            y = _min_free_y(x, w, h, y, placed)
        out[i] = (x, y, w, h)
        placed.append(out[i])
    return out
