from __future__ import annotations

import re

from dashforge.compose import compose_page
from dashforge.html_export import export_html
from dashforge.model import parse_model
from dashforge.render import DARK


def test_sample_export_contents(sample_model):
    html = export_html(compose_page(sample_model, "0"))
    for needle in (
        "Sample Dashboard", "Sample Page", "Sample Title Widget", "Sample Pie Widget",
    ):
        assert needle in html
    slices = re.findall(r'class="pie-slice"[^>]*fill="(#[0-9a-f]{6})"', html)
    assert slices == ["#82b365", "#9673a6", "#6c8ec0"]
    assert 'href="/page/0?mode=pure"' in html


def test_export_is_byte_deterministic(sample_model):
    a = export_html(compose_page(sample_model, "0", seed=3))
    b = export_html(compose_page(sample_model, "0", seed=3))
    assert a == b


def test_dark_theme_background(sample_text):
    model = parse_model(sample_text.replace('"light"', '"dark"'))
    html = export_html(compose_page(model, "0"))
    assert f"background: {DARK.background};" in html


def test_self_contained(sample_model):
    html = export_html(compose_page(sample_model, "0"))
    assert "<script" not in html
    # No network fetches: the only URLs are local hrefs and the SVG namespace.
    for url in re.findall(r'(?:src|href)="([^"]+)"', html):
        assert url.startswith("/"), url
    assert html.startswith("<!DOCTYPE html>")
    assert html.count("<svg ") == 2


def test_pure_mode_omits_menu(sample_model):
    full = export_html(compose_page(sample_model, "0", mode="full"))
    pure = export_html(compose_page(sample_model, "0", mode="pure"))
    assert "<nav" in full
    assert "<nav" not in pure
    assert "Sample Pie Widget" in pure


def test_widgets_positioned_absolutely(sample_model):
    html = export_html(compose_page(sample_model, "0"))
    assert 'style="left:0px;top:0px;width:400px;height:80px"' in html
    assert 'style="left:0px;top:80px;width:400px;height:320px"' in html


def test_legend_chips(sample_model):
    html = export_html(compose_page(sample_model, "0"))
    assert '<span class="chip" style="background:#82b365"></span>Value1' in html
