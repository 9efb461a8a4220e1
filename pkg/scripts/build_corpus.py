#!/usr/bin/env python3
"""Regenerate the bundled dashboard corpus and its metric series.

Models are built programmatically so they are valid by construction, then
written in canonical form to src/dashforge/corpus/. Run from the repo root:

    python scripts/build_corpus.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from dashforge.compose import compose_page  # noqa: E402
from dashforge.corpus import EXPECTED_LAYOUT_CLASSES, layout_class  # noqa: E402
from dashforge.html_export import export_html  # noqa: E402
from dashforge.metrics import SeriesKind, generate_series, serialize_series  # noqa: E402
from dashforge.model import (  # noqa: E402
    Baseline,
    DashboardModel,
    DetailConfig,
    DetailMethod,
    InteractionSpec,
    InteractionType,
    LayoutRect,
    LegendPosition,
    Page,
    Theme,
    VisConfig,
    VisProperties,
    VisType,
    Widget,
)
from dashforge.validation import validate_model  # noqa: E402

OUT_MODELS = ROOT / "src" / "dashforge" / "corpus" / "models"
OUT_METRICS = ROOT / "src" / "dashforge" / "corpus" / "metrics"


def w(wid, vistype, x, y, ww, hh, name=None, title=None, children=None,
      colour=None, legend_disabled=None, legend_position=None, baseline=None,
      font_size=None, axis_label_disabled=None, interactions=None,
      detail=None, metric=None):
    visconfig = None
    if any(v is not None for v in (colour, legend_disabled, legend_position,
                                   baseline, font_size, axis_label_disabled)):
        visconfig = VisConfig(
            colour=tuple(colour) if colour else None,
            legend_disabled=legend_disabled,
            legend_position=legend_position,
            baseline=baseline,
            font_size=font_size,
            axis_label_disabled=axis_label_disabled,
        )
    interaction = None
    if interactions:
        interaction = InteractionSpec(interactions=tuple(interactions), detail=detail)
    return Widget(
        id=wid,
        name=name,
        properties=VisProperties(
            vistype=vistype, title=title,
            childrenname=tuple(children) if children else None,
        ),
        layout=LayoutRect(x=x, y=y, w=ww, h=hh),
        visconfig=visconfig,
        interaction=interaction,
        metric_id=metric,
    )


I = InteractionType
V = VisType


def ops_overview() -> DashboardModel:
    page = Page(id="0", name="Overview", widgets=(
        w("w1", V.SINGLE_VALUE, 0, 0, 4, 4, name="Open Incidents", title="17",
          font_size=44),
        w("w2", V.GAUGE, 4, 0, 4, 4, name="Risk Index",
          colour=["#b85450"], interactions=[I.REFRESH]),
        w("w3", V.RING, 8, 0, 4, 4, name="Alert Severity",
          children=["low", "medium", "high"],
          colour=["#5d9b64", "#d6b656", "#b85450"]),
        w("w4", V.COLUMN, 0, 4, 4, 4, name="Events per Hour"),
        w("w5", V.AREA, 4, 4, 4, 4, name="Traffic Trend",
          interactions=[I.ZOOM]),
        w("w6", V.PIE, 8, 4, 4, 4, name="Source Mix",
          children=["internal", "external"],
          legend_position=LegendPosition.RIGHT),
    ))
    return DashboardModel(
        id="ops-overview", name="Operations Overview",
        theme=Theme.LIGHT, pages=(page,),
    )


def threat_monitor() -> DashboardModel:
    main = Page(id="main", name="Threat Monitor", widgets=(
        w("w1", V.TITLE, 0, 0, 12, 2, title="Threat Monitoring Wall"),
        w("w2", V.TABLE, 0, 2, 8, 6, name="Recent Detections",
          interactions=[I.FILTER]),
        w("w3", V.WORD_CLOUD, 8, 2, 4, 6, name="Hot Keywords",
          interactions=[I.SHARE]),
        w("w4", V.SANKEY, 0, 8, 6, 6, name="Attack Flow",
          children=["phishing", "malware", "insider"],
          colour=["#4a7f8c", "#8f7bbf", "#c27ba0"],
          interactions=[I.DETAIL_ON_DEMAND],
          detail=DetailConfig(target="detail", method=DetailMethod.PURE)),
        w("w5", V.RADAR, 6, 8, 6, 6, name="Coverage Radar",
          children=["network", "endpoint", "cloud", "identity", "email"]),
    ))
    detail = Page(id="detail", name="Flow Detail", widgets=(
        w("w6", V.LINE, 0, 0, 12, 6, name="Flow Volume Over Time"),
    ))
    return DashboardModel(
        id="threat-monitor", name="Threat Monitor",
        theme=Theme.DARK, pages=(main, detail),
    )


def network_map() -> DashboardModel:
    page = Page(id="0", name="Network", widgets=(
        w("w1", V.MAP, 0, 0, 4, 6, name="Node Locations",
          interactions=[I.NAVIGATION]),
        w("w2", V.BAR, 0, 6, 4, 4, name="Top Talkers",
          interactions=[I.PRINT]),
        w("w3", V.SCATTER, 4, 0, 4, 4, name="Latency vs Load"),
        w("w4", V.TREEMAP, 4, 4, 4, 6, name="Traffic by Subnet",
          children=["10.0.0/24", "10.0.1/24", "10.0.2/24", "dmz"],
          colour=["#6c8ec0", "#82b365", "#9673a6", "#d6b656"]),
        w("w5", V.RADIAL_TREE, 8, 0, 4, 10, name="Topology"),
    ))
    return DashboardModel(
        id="network-map", name="Network Map",
        theme=Theme.DARK, pages=(page,),
    )


def exec_summary() -> DashboardModel:
    page = Page(id="0", name="Summary", widgets=(
        w("w1", V.TITLE, 0, 0, 6, 2, title="Quarterly Security Posture"),
        w("w2", V.BULLET, 7, 1, 5, 3, name="Budget Burn",
          colour=["#4a7f8c"], interactions=[I.CUSTOMIZATION]),
        w("w3", V.COMPOSITE, 0, 3, 5, 6, name="Incidents vs Resolution"),
        w("w4", V.LINE, 6, 5, 6, 4, name="Patch Cadence",
          baseline=Baseline.MOVING_AVERAGE, interactions=[I.SHARE]),
    ))
    return DashboardModel(
        id="exec-summary", name="Executive Summary",
        theme=Theme.LIGHT, pages=(page,),
    )


def soc_live() -> DashboardModel:
    main = Page(id="main", name="SOC Live", widgets=(
        w("w1", V.SINGLE_VALUE, 0, 0, 3, 4, name="Risk Score",
          metric="risk-score", font_size=40),
        w("w2", V.GAUGE, 3, 0, 3, 4, name="CPU Saturation",
          metric="cpu-load", colour=["#d6b656"]),
        w("w3", V.LINE, 6, 0, 6, 4, name="CPU Load",
          metric=("cpu-load", "mem-load"),
          baseline=Baseline.MOVING_AVERAGE,
          legend_position=LegendPosition.BOTTOM,
          interactions=[I.DETAIL_ON_DEMAND],
          detail=DetailConfig(target="drill", method=DetailMethod.FULL)),
        w("w4", V.COLUMN, 0, 4, 12, 6, name="Alerts by Category",
          metric="alert-counts", baseline=Baseline.DEVIATION,
          axis_label_disabled=True, colour=["#b85450", "#d6b656", "#5d9b64"]),
    ))
    drill = Page(id="drill", name="Load Drilldown", widgets=(
        w("w5", V.AREA, 0, 0, 12, 8, name="Resource Saturation",
          metric="mem-load", interactions=[I.NAVIGATION]),
    ))
    return DashboardModel(
        id="soc-live", name="SOC Live Board", theme=Theme.DARK,
        base_data_model="security-metrics", pages=(main, drill),
    )


def compliance_report() -> DashboardModel:
    page = Page(id="0", name="Compliance", widgets=(
        w("w1", V.TABLE, 0, 0, 6, 8, name="Control Status",
          interactions=[I.PRINT]),
        w("w2", V.PIE, 0, 8, 6, 6, name="Finding Categories",
          children=["policy", "technical", "process"],
          legend_disabled=True, colour=["#9673a6", "#6c8ec0", "#82b365"],
          interactions=[I.FILTER]),
        w("w3", V.BULLET, 6, 0, 6, 4, name="Audit Progress"),
        w("w4", V.SINGLE_VALUE, 6, 4, 6, 4, name="Days to Audit",
          title="23", font_size=24),
        w("w5", V.RING, 6, 8, 6, 6, name="Evidence Freshness",
          children=["fresh", "stale"], legend_position=LegendPosition.RIGHT),
    ))
    return DashboardModel(
        id="compliance-report", name="Compliance Report",
        theme=Theme.LIGHT, pages=(page,),
    )


def incident_wall() -> DashboardModel:
    page = Page(id="0", name="Incidents", widgets=(
        w("w1", V.COMPOSITE, 0, 0, 6, 5, name="Load vs Memory",
          metric=("cpu-load", "mem-load"), colour=["#6c8ec0", "#b85450"],
          interactions=[I.ZOOM]),
        w("w2", V.AREA, 6, 0, 6, 5, name="Queue Depth",
          interactions=[I.REFRESH]),
        w("w3", V.SCATTER, 0, 5, 6, 5, name="Dwell Time Spread"),
        w("w4", V.WORD_CLOUD, 6, 5, 6, 5, name="Ticket Topics"),
    ))
    return DashboardModel(
        id="incident-wall", name="Incident Wall",
        theme=Theme.DARK, pages=(page,),
    )


def risk_posture() -> DashboardModel:
    page = Page(id="0", name="Risk Posture", widgets=(
        w("w1", V.TREEMAP, 0, 0, 5, 5, name="Risk by Business Unit",
          children=["retail", "corporate", "platform"],
          colour=["#8f7bbf", "#5d9b64", "#c27ba0"],
          interactions=[I.CUSTOMIZATION]),
        w("w2", V.RADAR, 5, 0, 4, 6, name="Control Maturity",
          children=["detect", "protect", "respond", "recover"]),
        w("w3", V.GAUGE, 9, 0, 3, 3, name="Exposure"),
        w("w4", V.SANKEY, 0, 5, 4, 6, name="Risk Transfers",
          children=["accepted", "mitigated", "transferred"]),
        w("w5", V.RING, 9, 3, 3, 4, name="Open vs Closed",
          children=["open", "closed"]),
        w("w6", V.RADIAL_TREE, 5, 6, 4, 5, name="Asset Tree"),
    ))
    return DashboardModel(
        id="risk-posture", name="Risk Posture",
        theme=Theme.LIGHT, pages=(page,),
    )


BUILDERS = {
    "ops-overview": ops_overview,
    "threat-monitor": threat_monitor,
    "network-map": network_map,
    "exec-summary": exec_summary,
    "soc-live": soc_live,
    "compliance-report": compliance_report,
    "incident-wall": incident_wall,
    "risk-posture": risk_posture,
}

SERIES_SPECS = [
    # (id, name, kind, seed, n, lo, hi, unit)
    ("cpu-load", "CPU Load", SeriesKind.TIME_SERIES, 101, 48, 0, 100, "%"),
    ("mem-load", "Memory Load", SeriesKind.TIME_SERIES, 202, 48, 0, 100, "%"),
    ("alert-counts", "Alerts by Category", SeriesKind.CATEGORICAL, 303, 6, 0, 40, "alerts"),
    ("risk-score", "Risk Score", SeriesKind.TIME_SERIES, 404, 24, 0, 100, None),
]


def main() -> None:
    from dashforge.metrics import MetricSeries  # local: provider below
    from dashforge.model import serialize_model

    OUT_MODELS.mkdir(parents=True, exist_ok=True)
    OUT_METRICS.mkdir(parents=True, exist_ok=True)

    series_by_id: dict[str, MetricSeries] = {}
    for sid, name, kind, seed, n, lo, hi, unit in SERIES_SPECS:
        series = generate_series(seed, kind, n, lo, hi, series_id=sid,
                                 name=name, unit=unit)
        series_by_id[sid] = series
        (OUT_METRICS / f"{sid}.json").write_text(
            serialize_series(series), encoding="utf-8"
        )
        print(f"metric  {sid}: {n} points")

    for name, builder in BUILDERS.items():
        model = builder()
        report = validate_model(model)
        if not report.ok:
            raise SystemExit(f"{name}: invalid model: {report.rules()}")
        derived = layout_class(model.pages[0])
        expected = EXPECTED_LAYOUT_CLASSES[name]
        if derived != expected:
            raise SystemExit(f"{name}: layout classifies as {derived}, wanted {expected}")
        # Every page must compose and export cleanly with the bundled data.
        for page in model.pages:
            tree = compose_page(model, page.id, series_by_id.get, seed=1)
            export_html(tree)
            for placed in tree.frame:
                if placed.node.error:
                    raise SystemExit(f"{name}/{page.id}: {placed.node.error}")
        (OUT_MODELS / f"{name}.json").write_text(
            serialize_model(model), encoding="utf-8"
        )
        print(f"model   {name}: {sum(len(p.widgets) for p in model.pages)} widgets, "
              f"{derived}, theme {model.theme.value}")


if __name__ == "__main__":
    main()
