from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dashforge.render.geometry import (
    AllZeroError,
    DegenerateDomainError,
    EmptySeriesError,
    NonPositiveValueError,
    arc_angles,
    deviation_baseline,
    gauge_needle_angle,
    moving_average_baseline,
    scale_linear,
    treemap_slice_dice,
)


class TestArcAngles:
    def test_four_equal_quarters(self):
        assert arc_angles([1, 1, 1, 1]) == [90, 90, 90, 90]

    def test_single_value_full_circle(self):
        assert arc_angles([3]) == [360]

    def test_proportional(self):
        # 2/10, 3/10, 5/10 of 360.
        assert arc_angles([2, 3, 5]) == [72, 108, 180]

    def test_all_zero_rejected(self):
        with pytest.raises(AllZeroError):
            arc_angles([0, 0, 0])
        with pytest.raises(AllZeroError):
            arc_angles([])

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            arc_angles([1, -1])

    def test_zero_entries_get_zero_angle(self):
        assert arc_angles([0, 1, 0, 1]) == [0, 180, 0, 180]

    @given(st.lists(st.integers(min_value=0, max_value=10_000), min_size=1,
                    max_size=20).filter(lambda v: any(v)))
    def test_sum_is_exactly_360(self, values):
        angles = arc_angles(values)
        # Millidegree arithmetic is integral, so the sum is exact.
        assert math.isclose(sum(angles), 360.0, abs_tol=1e-9)
        assert all(a >= 0 for a in angles)

    @given(st.lists(st.integers(min_value=0, max_value=10_000), min_size=1,
                    max_size=20).filter(lambda v: any(v)))
    def test_largest_remainder_is_within_one_unit(self, values):
        angles = arc_angles(values)
        total = sum(values)
        for angle, value in zip(angles, values):
            exact = Fraction(value, total) * 360
            assert abs(Fraction(angle).limit_denominator(10**9) - exact) <= Fraction(1, 1000)


class TestScaleLinear:
    def test_midpoint(self):
        assert scale_linear(0, 10, 0, 100, 5) == 50

    def test_domain_min_maps_to_range_min(self):
        assert scale_linear(0, 10, 0, 100, 0) == 0

    def test_affine(self):
        assert scale_linear(2, 8, 10, 40, 5) == 25

    def test_degenerate_domain(self):
        with pytest.raises(DegenerateDomainError):
            scale_linear(3, 3, 0, 1, 3)

    @given(
        st.floats(-1e6, 1e6), st.floats(-1e6, 1e6),
        st.floats(-1e6, 1e6), st.floats(-1e6, 1e6),
    )
    def test_endpoints(self, d0, d1, r0, r1):
        if d0 == d1:
            return
        assert math.isclose(scale_linear(d0, d1, r0, r1, d0), r0, abs_tol=1e-6)
        assert math.isclose(scale_linear(d0, d1, r0, r1, d1), r1, abs_tol=1e-6)


class TestTreemap:
    def test_single_value_fills_rect(self):
        assert treemap_slice_dice([1], (0, 0, 1, 1)) == [(0, 0, 1, 1)]

    def test_two_equal_half_slabs(self):
        tiles = treemap_slice_dice([1, 1], (0, 0, 1, 1))
        assert tiles == [(0, 0, 0.5, 1), (0.5, 0, 0.5, 1)]

    def test_proportional_widths(self):
        tiles = treemap_slice_dice([1, 2, 1], (0, 0, 4, 1))
        assert [t[2] for t in tiles] == [1, 2, 1]
        assert [t[0] for t in tiles] == [0, 1, 3]

    def test_nested_alternates_direction(self):
        tiles = treemap_slice_dice([[1, 1], 2], (0, 0, 2, 2))
        # Outer slice along x; inner pair splits its slab along y.
        assert tiles[0] == (0, 0, 1, 1)
        assert tiles[1] == (0, 1, 1, 1)
        assert tiles[2] == (1, 0, 1, 2)

    def test_non_positive_rejected(self):
        with pytest.raises(NonPositiveValueError):
            treemap_slice_dice([1, 0], (0, 0, 1, 1))
        with pytest.raises(NonPositiveValueError):
            treemap_slice_dice([], (0, 0, 1, 1))

    @given(st.lists(st.integers(1, 1000), min_size=1, max_size=12))
    def test_tiles_are_proportional_and_tile_exactly(self, values):
        rect = (3.0, 5.0, 40.0, 20.0)
        tiles = treemap_slice_dice(values, rect)
        total_area = rect[2] * rect[3]
        total_value = sum(values)
        for tile, value in zip(tiles, values):
            area = tile[2] * tile[3]
            assert math.isclose(
                area / total_area, value / total_value, rel_tol=1e-9, abs_tol=1e-12
            )
        assert math.isclose(sum(t[2] * t[3] for t in tiles), total_area, rel_tol=1e-9)
        # Slabs are contiguous left-to-right at depth 0.
        for a, b in zip(tiles, tiles[1:]):
            assert math.isclose(a[0] + a[2], b[0], rel_tol=1e-9)


class TestBaselines:
    def test_constant_series_is_fixed_point(self):
        assert moving_average_baseline([5, 5, 5], 2) == [5, 5, 5]

    def test_window_one_is_identity(self):
        assert moving_average_baseline([1, 3], 1) == [1, 3]

    def test_trailing_window(self):
        # Leading partial window: [2], then means of pairs.
        assert moving_average_baseline([2, 4, 6, 8], 2) == [2, 3, 5, 7]

    def test_empty_series(self):
        with pytest.raises(EmptySeriesError):
            moving_average_baseline([], 3)
        with pytest.raises(EmptySeriesError):
            deviation_baseline([])

    def test_bad_window(self):
        with pytest.raises(ValueError):
            moving_average_baseline([1], 0)

    @given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=100))
    def test_deviation_sums_to_zero(self, series):
        out = deviation_baseline(series)
        mean = sum(series) / len(series)
        assert len(out) == len(series)
        assert abs(sum(out)) <= 1e-9 * len(series) * max(1.0, abs(mean))

    @given(
        st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=50),
        st.integers(1, 10),
    )
    def test_moving_average_stays_within_bounds(self, series, window):
        out = moving_average_baseline(series, window)
        assert len(out) == len(series)
        lo, hi = min(series), max(series)
        assert all(lo - 1e-9 <= v <= hi + 1e-9 for v in out)


class TestGaugeNeedle:
    def test_min_mid_max(self):
        assert gauge_needle_angle(0) == 0
        assert gauge_needle_angle(50) == 90
        assert gauge_needle_angle(100) == 180

    def test_clamped(self):
        assert gauge_needle_angle(-12) == 0
        assert gauge_needle_angle(140) == 180

    def test_custom_range(self):
        assert gauge_needle_angle(15, lo=10, hi=20) == 90

    def test_degenerate_range(self):
        with pytest.raises(DegenerateDomainError):
            gauge_needle_angle(1, lo=5, hi=5)
