"""Design-decision extraction and reproduction-rate scoring.

A dashboard model is decomposed into countable decisions in three
categories: major (visualization technique and data binding, one per
widget), minor (theme, layout rectangles, colour lists, display names),
and interaction (one per widget/interaction pair, detail targets
included). Two models are compared by exact key matching within each
category, each replica decision usable at most once, and matches are
capped by the original's count.

Matching is stricter than a human side-by-side comparison on purpose:
colours match on exact hex values and layouts on compacted-grid equality,
which tolerates pure vertical-gap differences but nothing else.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from . import layout as layout_engine
from .model import DashboardModel, InteractionType, VisType


class DecisionCategory(Enum):
    MAJOR = "major"
    MINOR = "minor"
    INTERACTION = "interaction"


@dataclass(frozen=True)
class DesignDecision:
    category: DecisionCategory
    key: str
    source_path: str


@dataclass(frozen=True)
class CategoryScore:
    original: int
    matched: int

    @property
    def rate(self) -> float:
        # An empty category is trivially reproduced.
        if self.original == 0:
            return 1.0
        return self.matched / self.original


@dataclass(frozen=True)
class DecisionReport:
    major: CategoryScore
    minor: CategoryScore
    interaction: CategoryScore

    def score(self, category: DecisionCategory) -> CategoryScore:
        return getattr(self, category.value)


def extract_decisions(m: DashboardModel) -> list[DesignDecision]:
    """Deterministic decision list for one model."""
    out: list[DesignDecision] = []
    out.append(_minor("theme:" + m.theme.value, "theme"))
    out.append(_minor("name:dashboard:" + m.name, "name"))

    for pi, page in enumerate(m.pages):
        ppath = f"pages[{pi}]"
        out.append(_minor("name:page:" + page.name, f"{ppath}.name"))
        compacted = layout_engine.compact(page)
        for wi, widget in enumerate(page.widgets):
            wpath = f"{ppath}.widgets[{wi}]"
            vistype = widget.properties.vistype

            major_key = "vis:" + vistype.value
            if widget.metric_ids:
                major_key += ";metrics:" + ",".join(widget.metric_ids)
            out.append(DesignDecision(DecisionCategory.MAJOR, major_key, wpath))

            rect = compacted.widgets[wi].layout
            out.append(_minor(
                f"layout:{rect.x},{rect.y},{rect.w},{rect.h}", f"{wpath}.layout"
            ))
            if widget.name is not None:
                out.append(_minor("name:widget:" + widget.name, f"{wpath}.name"))
            if vistype is VisType.TITLE and widget.properties.title is not None:
                out.append(_minor(
                    "name:title:" + widget.properties.title,
                    f"{wpath}.properties.title",
                ))
            if widget.visconfig is not None and widget.visconfig.colour is not None:
                out.append(_minor(
                    "colour:" + ",".join(c.lower() for c in widget.visconfig.colour),
                    f"{wpath}.visconfig.colour",
                ))

            if widget.interaction is not None:
                for itype in widget.interaction.interactions:
                    key = "interaction:" + itype.value
                    if (
                        itype is InteractionType.DETAIL_ON_DEMAND
                        and widget.interaction.detail is not None
                    ):
                        key += ";target:" + widget.interaction.detail.target
                    out.append(DesignDecision(
                        DecisionCategory.INTERACTION, key, f"{wpath}.interaction"
                    ))
    return out


def match_decisions(
    original: list[DesignDecision], replica: list[DesignDecision]
) -> DecisionReport:
    """Greedy exact-key matching per category; never exceeds the original."""
    scores = {}
    for category in DecisionCategory:
        orig_keys = Counter(d.key for d in original if d.category is category)
        repl_keys = Counter(d.key for d in replica if d.category is category)
        overlap = orig_keys & repl_keys
        scores[category] = CategoryScore(
            original=sum(orig_keys.values()),
            matched=sum(overlap.values()),
        )
    return DecisionReport(
        major=scores[DecisionCategory.MAJOR],
        minor=scores[DecisionCategory.MINOR],
        interaction=scores[DecisionCategory.INTERACTION],
    )


def compare_models(original: DashboardModel, replica: DashboardModel) -> DecisionReport:
    return match_decisions(extract_decisions(original), extract_decisions(replica))


def report_to_wire(report: DecisionReport) -> dict:
    return {
        category.value: {
            "original": report.score(category).original,
            "matched": report.score(category).matched,
            "rate": report.score(category).rate,
        }
        for category in DecisionCategory
    }


def format_report(report: DecisionReport) -> str:
    lines = []
    for category in DecisionCategory:
        score = report.score(category)
        lines.append(
            f"{category.value:<12} {score.matched}/{score.original} "
            f"matched  rate {score.rate:.4f}"
        )
    return "\n".join(lines) + "\n"


def _minor(key: str, path: str) -> DesignDecision:
    return DesignDecision(DecisionCategory.MINOR, key, path)
