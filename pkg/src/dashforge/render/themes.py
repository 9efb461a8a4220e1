"""Light and dark theme palettes.

Both themes share the categorical series colors and differ only in the
background/surface/text/axis roles, so switching theme never changes chart
geometry, only palette-derived bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import Theme

# One fixed 10-color categorical cycle, shared by both themes.
CATEGORICAL_COLOURS: tuple[str, ...] = (
    "#82b365",
    "#9673a6",
    "#6c8ec0",
    "#d6b656",
    "#b85450",
    "#4a7f8c",
    "#8f7bbf",
    "#5d9b64",
    "#c27ba0",
    "#7f7f7f",
)


@dataclass(frozen=True)
class ThemePalette:
    name: str
    background: str
    surface: str
    text: str
    axis: str
    categorical: tuple[str, ...] = CATEGORICAL_COLOURS

    def colour(self, index: int, override: tuple[str, ...] | None = None) -> str:
        """Categorical color for a series index; explicit lists cycle."""
        cycle = override if override else self.categorical
        return cycle[index % len(cycle)]


LIGHT = ThemePalette(
    name="light",
    background="#ffffff",
    surface="#f7f7f7",
    text="#1f1f1f",
    axis="#8c8c8c",
)

DARK = ThemePalette(
    name="dark",
    background="#141414",
    surface="#1f1f1f",
    text="#e8e8e8",
    axis="#737373",
)


def palette_for(theme: Theme) -> ThemePalette:
    return DARK if theme is Theme.DARK else LIGHT
