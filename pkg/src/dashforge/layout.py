"""Grid layout engine: placement, vertical compaction, move and resize.

All operations are pure functions over immutable pages. Collision policy
for move/resize is "push down, then compact": the edited widget claims its
rectangle, anything it hits is pushed straight down (cascading), and the
page is then vertically compacted in (y, x) order. Rows are unbounded
downward; pages scroll.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from . import gridkernel
from .model import GRID_COLUMNS, LayoutRect, Page, Widget


class LayoutError(Exception):
    pass


class LayoutConflictError(LayoutError):
    """A page with overlapping widgets reached the layout engine."""


class UnknownWidgetError(LayoutError):
    def __init__(self, widget_id: str):
        super().__init__(f"no widget with id {widget_id!r} on this page")
        self.widget_id = widget_id


class OutOfBoundsError(LayoutError):
    pass


@dataclass(frozen=True)
class OccupancyGrid:
    """Cell-level view of a page; cells map (column, row) -> widget id."""

    columns: int
    cells: Mapping[tuple[int, int], str]

    def widget_at(self, column: int, row: int) -> str | None:
        return self.cells.get((column, row))


def _rects(page: Page) -> list[tuple[int, int, int, int]]:
    return [(w.layout.x, w.layout.y, w.layout.w, w.layout.h) for w in page.widgets]


def _with_rects(page: Page, rects: list[tuple[int, int, int, int]]) -> Page:
    widgets = tuple(
        replace(w, layout=replace(w.layout, x=r[0], y=r[1], w=r[2], h=r[3]))
        for w, r in zip(page.widgets, rects)
    )
    return replace(page, widgets=widgets)


def place_all(page: Page) -> OccupancyGrid:
    """Fill the occupancy grid from widget rectangles.

    Expects an overlap-free page (validation runs first); an overlap here
    indicates a caller bug and raises :class:`LayoutConflictError`.
    """
    rects = _rects(page)
    pairs = gridkernel.overlapping_pairs(rects)
    if pairs:
        i, j = pairs[0]
        raise LayoutConflictError(
            f"widgets {page.widgets[i].id!r} and {page.widgets[j].id!r} overlap"
        )
    cells: dict[tuple[int, int], str] = {}
    for widget in page.widgets:
        rect = widget.layout
        for col in range(rect.x, rect.x + rect.w):
            for row in range(rect.y, rect.y + rect.h):
                cells[(col, row)] = widget.id
    return OccupancyGrid(columns=GRID_COLUMNS, cells=cells)


def compact(page: Page) -> Page:
    """Remove vertical gaps; idempotent and deterministic."""
    return _with_rects(page, gridkernel.compact(_rects(page)))


def move_widget(page: Page, widget_id: str, new_x: int, new_y: int) -> Page:
    """Relocate a widget; colliding widgets are pushed down, then compacted.

    Compaction may lift the moved widget above ``new_y`` when the rows
    above it are free; the grid is always gap-free afterwards.
    """
    idx = _widget_index(page, widget_id)
    rect = page.widgets[idx].layout
    if new_x < 0 or new_y < 0 or new_x + rect.w > GRID_COLUMNS:
        raise OutOfBoundsError(
            f"cannot move {widget_id!r} to ({new_x}, {new_y}): "
            f"x + w must stay within {GRID_COLUMNS} columns"
        )
    rects = _rects(page)
    rects[idx] = (new_x, new_y, rect.w, rect.h)
    rects = gridkernel.push_down(rects, idx)
    return _with_rects(page, gridkernel.compact(rects))


def resize_widget(page: Page, widget_id: str, new_w: int, new_h: int) -> Page:
    """Change a widget's extent; same push-down-then-compact policy."""
    idx = _widget_index(page, widget_id)
    rect = page.widgets[idx].layout
    if new_w < 1 or new_h < 1:
        raise OutOfBoundsError(f"cannot resize {widget_id!r} below 1x1")
    if rect.x + new_w > GRID_COLUMNS:
        raise OutOfBoundsError(
            f"cannot resize {widget_id!r} to w={new_w}: "
            f"x + w must stay within {GRID_COLUMNS} columns"
        )
    rects = _rects(page)
    rects[idx] = (rect.x, rect.y, new_w, new_h)
    rects = gridkernel.push_down(rects, idx)
    return _with_rects(page, gridkernel.compact(rects))


def bottom_insert_y(page: Page) -> int:
    """First row below every widget; where newly added widgets land."""
    return max((w.layout.y + w.layout.h for w in page.widgets), default=0)


def _widget_index(page: Page, widget_id: str) -> int:
    for i, w in enumerate(page.widgets):
        if w.id == widget_id:
            return i
    raise UnknownWidgetError(widget_id)
