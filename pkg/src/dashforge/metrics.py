"""Metric series: the data bound to widgets, plus a seeded generator.

Series are either time-stamped (epoch milliseconds, strictly increasing)
or categorical (unique labels). The generator is a 64-bit linear
congruential PRNG (Knuth's MMIX multiplier) over fixed-width integer
arithmetic, so identical inputs produce byte-identical series on every
platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import isfinite
from typing import Any, Iterable

# Timestamps for generated time series start at 2024-01-01T00:00:00Z and
# advance one minute per point.
EPOCH_BASE_MS = 1_704_067_200_000
STEP_MS = 60_000

_MASK64 = (1 << 64) - 1
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407


class SeriesKind(Enum):
    TIME_SERIES = "timeSeries"
    CATEGORICAL = "categorical"


class InvalidSpecError(ValueError):
    """Generator range is empty (lo > hi)."""


class SeriesNotFoundError(KeyError):
    def __init__(self, series_id: str):
        super().__init__(series_id)
        self.series_id = series_id


@dataclass(frozen=True)
class MetricSeries:
    id: str
    name: str
    kind: SeriesKind
    points: tuple[tuple[Any, float], ...]
    unit: str | None = None

    def labels(self) -> tuple[Any, ...]:
        return tuple(p[0] for p in self.points)

    def values(self) -> tuple[float, ...]:
        return tuple(p[1] for p in self.points)


class SeriesError(ValueError):
    pass


def check_series(s: MetricSeries) -> None:
    """Enforce storage invariants; query results may be empty, stored series not."""
    if not s.id:
        raise SeriesError("series id must be non-empty")
    if not s.points:
        raise SeriesError("stored series must have at least one point")
    for label, value in s.points:
        if not isfinite(value):
            raise SeriesError(f"series {s.id!r} has non-finite value {value!r}")
    if s.kind is SeriesKind.TIME_SERIES:
        stamps = [p[0] for p in s.points]
        if any(b <= a for a, b in zip(stamps, stamps[1:])):
            raise SeriesError(f"series {s.id!r} timestamps must be strictly increasing")
    else:
        labels = [p[0] for p in s.points]
        if len(set(labels)) != len(labels):
            raise SeriesError(f"series {s.id!r} labels must be unique")


class Lcg64:
    """64-bit linear congruential generator; the one PRNG in the package."""

    def __init__(self, seed: int):
        self._state = (seed ^ _LCG_INC) & _MASK64
        self.next_u64()  # decorrelate adjacent seeds

    def next_u64(self) -> int:
        self._state = (self._state * _LCG_MULT + _LCG_INC) & _MASK64
        return self._state

    def next_unit(self) -> float:
        # Top 53 bits -> [0, 1) double, exactly representable.
        return (self.next_u64() >> 11) / float(1 << 53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_unit()


def generate_series(
    seed: int,
    kind: SeriesKind,
    n: int,
    lo: float,
    hi: float,
    series_id: str = "generated",
    name: str | None = None,
    unit: str | None = None,
) -> MetricSeries:
    """Deterministic synthetic series for demos, placeholders, and tests.

    Time series take a bounded random walk clamped to [lo, hi]; categorical
    series draw independent uniform values. Values are rounded to 6 decimal
    places so serialized output is stable.
    """
    if n < 1:
        raise InvalidSpecError(f"need at least one point; got n={n}")
    if hi < lo:
        raise InvalidSpecError(f"empty range [{lo}, {hi}]")
    rng = Lcg64(seed)
    points: list[tuple[Any, float]] = []
    if kind is SeriesKind.TIME_SERIES:
        span = hi - lo
        value = lo + span / 2
        for i in range(n):
            step = rng.uniform(-span / 20, span / 20) if span else 0.0
            value = min(hi, max(lo, value + step))
            points.append((EPOCH_BASE_MS + i * STEP_MS, round(value, 6)))
    else:
        for i in range(n):
            label = f"cat-{i + 1:02d}"
            points.append((label, round(rng.uniform(lo, hi), 6)))
    return MetricSeries(
        id=series_id,
        name=name if name is not None else series_id,
        kind=kind,
        points=tuple(points),
        unit=unit,
    )


def placeholder_series(
    widget_id: str,
    categories: Iterable[str] | None,
    seed: int,
    equal_weights: bool = False,
) -> MetricSeries:
    """Series for widgets with no metric binding.

    Pie and ring widgets get equal weights (each category 1.0) so unbound
    slices reflect category count only; other categorical widgets get
    seeded uniform values; widgets without categories get a time series.
    The widget id perturbs the seed so sibling placeholders differ.
    """
    local_seed = seed
    for ch in widget_id:
        local_seed = (local_seed * 31 + ord(ch)) & _MASK64
    labels = tuple(categories) if categories else ()
    if labels:
        if equal_weights:
            points = tuple((label, 1.0) for label in labels)
            return MetricSeries(
                id=f"placeholder:{widget_id}", name="sample",
                kind=SeriesKind.CATEGORICAL, points=points,
            )
        base = generate_series(
            local_seed, SeriesKind.CATEGORICAL, len(labels), 10, 100,
            series_id=f"placeholder:{widget_id}", name="sample",
        )
        points = tuple((label, p[1]) for label, p in zip(labels, base.points))
        return MetricSeries(
            id=base.id, name=base.name, kind=base.kind, points=points,
        )
    return generate_series(
        local_seed, SeriesKind.TIME_SERIES, 24, 0, 100,
        series_id=f"placeholder:{widget_id}", name="sample",
    )


def query_series(
    store: "SeriesStore",
    series_id: str,
    window: tuple[float, float] | None = None,
) -> MetricSeries:
    """Fetch a series, optionally restricted to [from, to] inclusive.

    A window that covers nothing yields a zero-point series; that is valid
    for query results even though stored series must be non-empty.
    """
    series = store.get(series_id)
    if series is None:
        raise SeriesNotFoundError(series_id)
    if window is None:
        return series
    lo, hi = window
    kept = tuple(p for p in series.points if _in_window(p[0], lo, hi))
    return MetricSeries(
        id=series.id, name=series.name, kind=series.kind,
        points=kept, unit=series.unit,
    )


def _in_window(label: Any, lo: float, hi: float) -> bool:
    if not isinstance(label, (int, float)) or isinstance(label, bool):
        return True  # categorical labels are not time-filtered
    return lo <= label <= hi


class SeriesStore:
    """Minimal in-memory series store; the file-backed store wraps this."""

    def __init__(self, series: Iterable[MetricSeries] = ()):
        self._by_id = {s.id: s for s in series}

    def get(self, series_id: str) -> MetricSeries | None:
        return self._by_id.get(series_id)

    def put(self, series: MetricSeries) -> None:
        check_series(series)
        self._by_id[series.id] = series

    def ids(self) -> tuple[str, ...]:
        return tuple(sorted(self._by_id))


# --------------------------------------------------------------------------
# Wire format
# --------------------------------------------------------------------------

def series_to_wire(s: MetricSeries) -> dict[str, Any]:
    doc: dict[str, Any] = {"id": s.id, "name": s.name, "kind": s.kind.value}
    if s.unit is not None:
        doc["unit"] = s.unit
    doc["points"] = [[label, value] for label, value in s.points]
    return doc


def series_from_wire(doc: Any) -> MetricSeries:
    if not isinstance(doc, dict):
        raise SeriesError(f"expected object, got {type(doc).__name__}")
    try:
        kind = SeriesKind(doc["kind"])
    except (KeyError, ValueError):
        raise SeriesError(f"kind must be one of {[k.value for k in SeriesKind]}")
    raw_points = doc.get("points")
    if not isinstance(raw_points, list):
        raise SeriesError("points must be an array of [label, value] pairs")
    points = []
    for entry in raw_points:
        if not isinstance(entry, list) or len(entry) != 2:
            raise SeriesError(f"bad point {entry!r}: expected [label, value]")
        label, value = entry
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SeriesError(f"bad point value {value!r}")
        points.append((label, float(value)))
    if not isinstance(doc.get("id"), str) or not isinstance(doc.get("name"), str):
        raise SeriesError("series id and name must be strings")
    unit = doc.get("unit")
    if unit is not None and not isinstance(unit, str):
        raise SeriesError("unit must be a string when present")
    return MetricSeries(
        id=doc["id"], name=doc["name"], kind=kind,
        points=tuple(points), unit=unit,
    )


def serialize_series(s: MetricSeries) -> str:
    return json.dumps(series_to_wire(s), indent=2, ensure_ascii=False) + "\n"


def parse_series(text: str) -> MetricSeries:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SeriesError(f"invalid JSON: {exc}") from exc
    return series_from_wire(doc)
