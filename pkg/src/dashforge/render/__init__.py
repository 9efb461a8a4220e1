"""Deterministic widget rendering: geometry helpers, themes, SVG output."""

from .geometry import (
    AllZeroError,
    DegenerateDomainError,
    EmptySeriesError,
    NonPositiveValueError,
    arc_angles,
    deviation_baseline,
    moving_average_baseline,
    scale_linear,
    treemap_slice_dice,
)
from .themes import DARK, LIGHT, ThemePalette, palette_for
from .widgets import MissingDataError, WidgetNode, error_panel, render_widget

__all__ = [
    "AllZeroError",
    "DegenerateDomainError",
    "EmptySeriesError",
    "NonPositiveValueError",
    "arc_angles",
    "deviation_baseline",
    "moving_average_baseline",
    "scale_linear",
    "treemap_slice_dice",
    "ThemePalette",
    "LIGHT",
    "DARK",
    "palette_for",
    "WidgetNode",
    "MissingDataError",
    "error_panel",
    "render_widget",
]
