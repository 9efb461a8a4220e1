"""dashforge: model-driven dashboard engine.

Parse and validate dashboard models, compose them into render trees and
self-contained HTML, serve them over HTTP with optimistic concurrency,
apply GUI-style customizations as model transformations, and score how
faithfully one model reproduces another's design decisions.
"""

from .model import (
    DashboardModel,
    InteractionType,
    Page,
    ParseError,
    Theme,
    VisType,
    Widget,
    parse_model,
    serialize_model,
)
from .validation import ValidationReport, Violation, validate_model

__version__ = "0.1.0"

__all__ = [
    "DashboardModel",
    "Page",
    "Widget",
    "Theme",
    "VisType",
    "InteractionType",
    "ParseError",
    "parse_model",
    "serialize_model",
    "validate_model",
    "ValidationReport",
    "Violation",
    "__version__",
]
