from __future__ import annotations

import random
from dataclasses import replace

import pytest

from _support import occupancy_pairs, random_model, random_rects
from dashforge import validation as V
from dashforge.model import (
    Baseline,
    DashboardModel,
    DetailConfig,
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
from dashforge.validation import validate_model


def _widget(wid="w1", x=0, y=0, w=2, h=2, **kwargs) -> Widget:
    defaults = dict(
        properties=VisProperties(vistype=VisType.LINE),
        layout=LayoutRect(x=x, y=y, w=w, h=h),
    )
    defaults.update(kwargs)
    return Widget(id=wid, **defaults)


def _model(widgets=(), pages=None, **kwargs) -> DashboardModel:
    if pages is None:
        pages = (Page(id="0", name="Main", widgets=tuple(widgets)),)
    defaults = dict(id="d", name="D", pages=pages)
    defaults.update(kwargs)
    return DashboardModel(**defaults)


def test_sample_model_is_clean(sample_model):
    assert validate_model(sample_model).ok


def test_identical_rectangles_overlap():
    report = validate_model(_model([
        _widget("a", x=0, y=0, w=2, h=2),
        _widget("b", x=0, y=0, w=2, h=2),
    ]))
    assert report.rules() == (V.OVERLAP,)
    assert "'a'" in report.violations[0].message
    assert "'b'" in report.violations[0].message


def test_dangling_detail_target():
    widget = _widget(interaction=InteractionSpec(
        interactions=(InteractionType.DETAIL_ON_DEMAND,),
        detail=DetailConfig(target="99"),
    ))
    report = validate_model(_model([widget]))
    assert report.rules() == (V.DANGLING_TARGET,)


# One injection per rule; each must produce exactly that single violation.
INJECTIONS = {
    V.DASHBOARD_ID_EMPTY: lambda: _model(id=""),
    V.THEME_INVALID: lambda: _model(theme="mauve"),
    V.NO_PAGES: lambda: _model(pages=()),
    V.DUP_PAGE_ID: lambda: _model(pages=(
        Page(id="0", name="A"), Page(id="0", name="B"),
    )),
    V.NEGATIVE_REVISION: lambda: _model(revision=-1),
    V.PAGE_NAME_EMPTY: lambda: _model(pages=(Page(id="0", name=""),)),
    V.DUP_WIDGET_ID: lambda: _model([
        _widget("w", x=0, y=0), _widget("w", x=4, y=0),
    ]),
    V.VISTYPE_INVALID: lambda: _model([
        _widget(properties=VisProperties(vistype="pie")),
    ]),
    V.LAYOUT_BOUNDS: lambda: _model([_widget(w=0)]),
    V.LAYOUT_OVERFLOW: lambda: _model([_widget(x=9, w=4)]),
    V.CHILDRENNAME_EMPTY: lambda: _model([
        _widget(properties=VisProperties(vistype=VisType.PIE, childrenname=())),
    ]),
    V.COLOUR_FORMAT: lambda: _model([
        _widget(visconfig=VisConfig(colour=("#12ab3", ))),
    ]),
    V.FONTSIZE_INVALID: lambda: _model([
        _widget(visconfig=VisConfig(font_size=0)),
    ]),
    V.LEGEND_POSITION_INVALID: lambda: _model([
        _widget(visconfig=VisConfig(legend_position="middle")),
    ]),
    V.BASELINE_INVALID: lambda: _model([
        _widget(visconfig=VisConfig(baseline="median")),
    ]),
    V.DETAIL_REQUIRED: lambda: _model([
        _widget(interaction=InteractionSpec(
            interactions=(InteractionType.DETAIL_ON_DEMAND,), detail=None,
        )),
    ]),
    V.DANGLING_TARGET: lambda: _model([
        _widget(interaction=InteractionSpec(
            interactions=(InteractionType.ZOOM,),
            detail=DetailConfig(target="missing"),
        )),
    ]),
    V.OVERLAP: lambda: _model([
        _widget("a", x=0, y=0, w=3, h=3), _widget("b", x=2, y=2, w=3, h=3),
    ]),
}


@pytest.mark.parametrize("rule", V.ALL_RULES)
def test_single_injection_yields_single_rule(rule):
    report = validate_model(INJECTIONS[rule]())
    assert report.rules() == (rule,), f"{rule}: got {report.rules()}"


def test_every_rule_has_an_injection():
    assert set(INJECTIONS) == set(V.ALL_RULES)


def test_violations_carry_paths():
    report = validate_model(_model([_widget(x=9, w=4)]))
    assert report.violations[0].path == "pages[0].widgets[0].layout"


def test_valid_colours_pass():
    report = validate_model(_model([
        _widget(visconfig=VisConfig(colour=("#82B365", "#9673a6"))),
    ]))
    assert report.ok


def test_hex_colour_case_insensitive():
    from dashforge.model import is_valid_colour

    assert is_valid_colour("#82B365")
    assert is_valid_colour("#82b365")
    assert not is_valid_colour("82b365")
    assert not is_valid_colour("#82b36")
    assert not is_valid_colour("#82b3650")


class TestOverlapOracle:
    def test_pairwise_agrees_with_occupancy_grid(self):
        rng = random.Random(20240811)
        for trial in range(300):
            # Half the trials force overlaps by ignoring the rejection step.
            rects = random_rects(rng)
            if trial % 2 and rects:
                x, y, w, h = rects[0]
                rects.append((x, y, max(1, w - 1), max(1, h - 1)))
            widgets = tuple(
                _widget(f"w{i}", x=r[0], y=r[1], w=r[2], h=r[3])
                for i, r in enumerate(rects)
            )
            report = validate_model(_model(widgets))
            got = sorted(
                tuple(int(w.strip("w'")) for w in v.message.split(" overlap")[0]
                      .replace("widgets ", "").split(" and "))
                for v in report.violations if v.rule == V.OVERLAP
            )
            assert got == occupancy_pairs(rects), f"trial {trial}"

    def test_generated_models_validate_clean(self):
        for seed in range(100):
            report = validate_model(random_model(seed))
            assert report.ok, f"seed {seed}: {report.rules()}"
