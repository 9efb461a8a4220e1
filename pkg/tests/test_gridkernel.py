"""Kernel unit behaviour plus pure/compiled parity.

The compiled kernel must match the pure one element-for-element on any
input; both must match the cell-occupancy oracle for overlap detection.
"""

from __future__ import annotations

import random

import pytest

from _support import compact_oracle, occupancy_pairs, random_rects
from dashforge import gridkernel
from dashforge.gridkernel import _pure

try:
    from dashforge.gridkernel import _cgrid
except ImportError:
    _cgrid = None

IMPLS = [("pure", _pure)] + ([("cython", _cgrid)] if _cgrid else [])


@pytest.fixture(params=IMPLS, ids=[name for name, _ in IMPLS])
def impl(request):
    return request.param[1]


def test_selected_implementation_is_exposed():
    assert gridkernel.IMPLEMENTATION in ("pure", "cython")
    assert callable(gridkernel.compact)


class TestOverlap:
    def test_disjoint(self, impl):
        assert impl.overlapping_pairs([(0, 0, 2, 2), (2, 0, 2, 2), (0, 2, 2, 2)]) == []
        assert not impl.has_overlap([(0, 0, 2, 2), (2, 0, 2, 2)])

    def test_identical(self, impl):
        assert impl.overlapping_pairs([(1, 1, 2, 2), (1, 1, 2, 2)]) == [(0, 1)]
        assert impl.has_overlap([(1, 1, 2, 2), (1, 1, 2, 2)])

    def test_touching_edges_do_not_overlap(self, impl):
        assert impl.overlapping_pairs([(0, 0, 4, 2), (0, 2, 4, 8)]) == []

    def test_empty(self, impl):
        assert impl.overlapping_pairs([]) == []
        assert not impl.has_overlap([])

    def test_matches_occupancy_oracle(self, impl):
        rng = random.Random(7)
        for _ in range(200):
            rects = [
                (rng.randint(0, 8), rng.randint(0, 8), rng.randint(1, 4), rng.randint(1, 4))
                for _ in range(rng.randint(0, 10))
            ]
            assert impl.overlapping_pairs(rects) == occupancy_pairs(rects)
            assert impl.has_overlap(rects) == bool(occupancy_pairs(rects))


class TestCompact:
    def test_single_widget_drops_to_top(self, impl):
        assert impl.compact([(0, 5, 4, 2)]) == [(0, 0, 4, 2)]

    def test_gap_free_page_unchanged(self, impl):
        rects = [(0, 0, 4, 2), (0, 2, 4, 8)]
        assert impl.compact(rects) == rects

    def test_gap_removed_below_blocker(self, impl):
        assert impl.compact([(0, 0, 4, 2), (0, 6, 4, 2)]) == [(0, 0, 4, 2), (0, 2, 4, 2)]

    def test_idempotent_and_matches_oracle(self, impl):
        rng = random.Random(99)
        for _ in range(150):
            rects = random_rects(rng)
            once = impl.compact(rects)
            assert once == compact_oracle(rects)
            assert impl.compact(once) == once

    def test_preserves_index_order(self, impl):
        rects = [(0, 9, 2, 1), (4, 3, 2, 1), (8, 0, 2, 1)]
        out = impl.compact(rects)
        assert [r[0] for r in out] == [0, 4, 8]
        assert all(r[1] == 0 for r in out)


class TestPushDown:
    def test_no_collision_keeps_everything(self, impl):
        rects = [(0, 0, 4, 2), (4, 0, 4, 2)]
        assert impl.push_down(rects, 0) == rects

    def test_anchor_displaces_overlapping_rect(self, impl):
        # Anchor moved onto the other rect's rows: it must slide below.
        rects = [(0, 2, 4, 2), (0, 2, 4, 2)]
        out = impl.push_down(rects, 0)
        assert out[0] == (0, 2, 4, 2)
        assert out[1] == (0, 4, 4, 2)

    def test_cascade(self, impl):
        rects = [(0, 0, 4, 4), (0, 2, 4, 2), (0, 4, 4, 2)]
        out = impl.push_down(rects, 0)
        assert out[0] == (0, 0, 4, 4)
        assert not impl.has_overlap(out)
        # Pushed rects keep their column and never move up.
        assert out[1][0] == 0 and out[1][1] >= 2
        assert out[2][0] == 0 and out[2][1] >= 4

    def test_result_is_overlap_free(self, impl):
        rng = random.Random(41)
        for _ in range(150):
            rects = random_rects(rng)
            if not rects:
                continue
            anchor = rng.randrange(len(rects))
            x, y, w, h = rects[anchor]
            rects[anchor] = (
                rng.randint(0, 12 - w), max(0, y + rng.randint(-3, 3)), w, h,
            )
            out = impl.push_down(rects, anchor)
            assert out[anchor] == rects[anchor]
            assert not impl.has_overlap(out)


@pytest.mark.skipif(_cgrid is None, reason="compiled kernel not built")
class TestParity:
    def test_full_parity_on_random_input(self):
        rng = random.Random(20240811)
        for trial in range(400):
            rects = [
                (rng.randint(0, 8), rng.randint(0, 10), rng.randint(1, 4), rng.randint(1, 4))
                for _ in range(rng.randint(0, 12))
            ]
            assert _pure.overlapping_pairs(rects) == _cgrid.overlapping_pairs(rects)
            assert _pure.has_overlap(rects) == _cgrid.has_overlap(rects)
            assert _pure.compact(rects) == _cgrid.compact(rects)
            if rects:
                anchor = rng.randrange(len(rects))
                assert _pure.push_down(rects, anchor) == _cgrid.push_down(rects, anchor)
