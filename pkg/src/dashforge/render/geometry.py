"""Shared chart math: arcs, scales, treemap tiling, baselines.

Everything here is exact-arithmetic or plain float math with no hidden
state, so renderings stay byte-identical across runs and platforms.
"""

from __future__ import annotations

from typing import Sequence


class AllZeroError(ValueError):
    """Every value is zero; arcs would be undefined."""


class DegenerateDomainError(ValueError):
    """Linear scale over an empty domain."""


class NonPositiveValueError(ValueError):
    """Treemap tiles require strictly positive areas."""


class EmptySeriesError(ValueError):
    """Baseline over an empty series."""


def arc_angles(values: Sequence[float]) -> list[float]:
    """Angles (degrees) proportional to values, summing to exactly 360.

    Rounded to millidegrees with largest-remainder apportionment, so the
    sum is 360.000 without float drift. Ties go to the earlier index.
    """
    if not values or all(v == 0 for v in values):
        raise AllZeroError("at least one value must be positive")
    if any(v < 0 for v in values):
        raise ValueError("arc values must be non-negative")
    total = sum(values)
    # Work in integer millidegrees: 360 degrees = 360_000 units.
    raw = [v / total * 360_000 for v in values]
    floors = [int(r) for r in raw]
    shortfall = 360_000 - sum(floors)
    remainders = sorted(
        range(len(values)), key=lambda i: (-(raw[i] - floors[i]), i)
    )
    for i in remainders[:shortfall]:
        floors[i] += 1
    return [f / 1000 for f in floors]


def scale_linear(domain_min: float, domain_max: float,
                 range_min: float, range_max: float, v: float) -> float:
    """Affine map of ``v`` from [domain_min, domain_max] to [range_min, range_max]."""
    if domain_max == domain_min:
        raise DegenerateDomainError(f"domain [{domain_min}, {domain_max}] is empty")
    t = (v - domain_min) / (domain_max - domain_min)
    return range_min + t * (range_max - range_min)


def treemap_slice_dice(
    values: Sequence,
    rect: tuple[float, float, float, float],
    depth: int = 0,
) -> list[tuple[float, float, float, float]]:
    """Slice-and-dice treemap: areas proportional to values, tiling ``rect``.

    Even depths slice along x (vertical cuts), odd depths along y. A nested
    sequence recurses with the alternated direction; the returned leaf
    rectangles appear in value order.
    """
    flat_weights = [_subtree_weight(v) for v in values]
    if not flat_weights:
        raise NonPositiveValueError("treemap requires at least one value")
    total = sum(flat_weights)
    x, y, w, h = rect
    out: list[tuple[float, float, float, float]] = []
    offset = 0.0
    for value, weight in zip(values, flat_weights):
        share = weight / total
        if depth % 2 == 0:
            sub = (x + offset * w, y, share * w, h)
        else:
            sub = (x, y + offset * h, w, share * h)
        if isinstance(value, (list, tuple)):
            out.extend(treemap_slice_dice(value, sub, depth + 1))
        else:
            out.append(sub)
        offset += share
    return out


def _subtree_weight(value) -> float:
    if isinstance(value, (list, tuple)):
        return sum(_subtree_weight(v) for v in value)
    if not value > 0:
        raise NonPositiveValueError(f"treemap values must be > 0; got {value!r}")
    return value


def moving_average_baseline(series: Sequence[float], window: int) -> list[float]:
    """Trailing moving average; leading entries average what is available."""
    if not series:
        raise EmptySeriesError("cannot average an empty series")
    if window < 1:
        raise ValueError(f"window must be >= 1; got {window}")
    out = []
    for i in range(len(series)):
        start = max(0, i - window + 1)
        chunk = series[start:i + 1]
        out.append(sum(chunk) / len(chunk))
    return out


def deviation_baseline(series: Sequence[float]) -> list[float]:
    """Per-point deviation from the series mean; sums to ~0."""
    if not series:
        raise EmptySeriesError("cannot take deviations of an empty series")
    mean = sum(series) / len(series)
    return [v - mean for v in series]


def gauge_needle_angle(value: float, lo: float = 0.0, hi: float = 100.0) -> float:
    """Needle angle over a half-circle gauge, clamped to [0, 180] degrees."""
    if hi == lo:
        raise DegenerateDomainError(f"gauge range [{lo}, {hi}] is empty")
    angle = 180.0 * (value - lo) / (hi - lo)
    return min(180.0, max(0.0, angle))
