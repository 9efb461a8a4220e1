"""Command-line interface.

Exit codes: 0 success, 1 validation or runtime failure, 2 usage errors.
"""

from __future__ import annotations

import json

import click

from .compare import compare_models, format_report, report_to_wire
from .compose import MODES, compose_page
from .edits import EditScriptError, apply_edit_script, script_from_json
from .html_export import export_html
from .metrics import (
    InvalidSpecError,
    SeriesKind,
    generate_series,
    serialize_series,
)
from .model import (
    DashboardModel,
    Page,
    ParseError,
    parse_model,
    serialize_model,
)
from .service import PortInUseError, ServiceConfig, serve
from .validation import validate_model


@click.group()
def main():
    """Model-driven dashboard toolkit."""


def _load_model(path: str) -> DashboardModel:
    try:
        with open(path, encoding="utf-8") as handle:
            model = parse_model(handle.read())
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}")
    except ParseError as exc:
        raise click.ClickException(f"{path}: {exc}")
    report = validate_model(model)
    if not report.ok:
        for violation in report:
            click.echo(
                f"{violation.rule} {violation.path} {violation.message}", err=True
            )
        raise SystemExit(1)
    return model


@main.command()
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
def validate(model_file):
    """Check a model file; print one line per violation."""
    try:
        with open(model_file, encoding="utf-8") as handle:
            model = parse_model(handle.read())
    except ParseError as exc:
        click.echo(f"PARSE {exc.path} {exc.message}", err=True)
        raise SystemExit(1)
    report = validate_model(model)
    for violation in report:
        click.echo(f"{violation.rule} {violation.path} {violation.message}", err=True)
    raise SystemExit(0 if report.ok else 1)


@main.command()
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
@click.option("--page", default=None, help="Page id (defaults to the first page).")
@click.option("--mode", default="full", type=click.Choice(MODES))
@click.option("--seed", default=0, type=int, help="Seed for placeholder data.")
def render(model_file, out, page, mode, seed):
    """Export one page as a self-contained HTML file."""
    model = _load_model(model_file)
    page_ref = page if page is not None else model.pages[0].id
    if model.page(page_ref) is None:
        raise click.BadParameter(f"no page with id {page_ref!r}", param_hint="--page")
    tree = compose_page(model, page_ref, None, mode=mode, seed=seed)
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(export_html(tree))
    click.echo(f"wrote {out}")


@main.command(name="serve")
@click.option("--port", default=8632, type=int)
@click.option("--host", default="127.0.0.1")
@click.option("--data-dir", default="./data", type=click.Path(file_okay=False))
@click.option("--cors-origin", default=None)
def serve_cmd(port, host, data_dir, cors_origin):
    """Run the HTTP service over a file-backed store."""
    config = ServiceConfig(
        port=port, host=host, data_dir=data_dir, cors_origin=cors_origin
    )
    try:
        serve(config)
    except PortInUseError as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--script", "script_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON array of edit commands.")
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def edit(model_file, script_file, out):
    """Apply an edit script to a model and write the result."""
    model = _load_model(model_file)
    with open(script_file, encoding="utf-8") as handle:
        try:
            commands = script_from_json(handle.read())
        except Exception as exc:
            raise click.ClickException(f"{script_file}: {exc}")
    try:
        edited = apply_edit_script(model, commands)
    except EditScriptError as exc:
        raise click.ClickException(str(exc))
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(serialize_model(edited))
    click.echo(f"wrote {out} (revision {edited.revision})")


@main.command()
@click.argument("original", type=click.Path(exists=True, dir_okay=False))
@click.argument("replica", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]))
def diff(original, replica, fmt):
    """Score how well REPLICA reproduces ORIGINAL's design decisions."""
    report = compare_models(_load_model(original), _load_model(replica))
    if fmt == "json":
        click.echo(json.dumps(report_to_wire(report), indent=2))
    else:
        click.echo(format_report(report), nl=False)


@main.command()
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
@click.option("--id", "model_id", default="dashboard")
@click.option("--name", default="New Dashboard")
def new(out, model_id, name):
    """Scaffold a minimal valid model."""
    model = DashboardModel(
        id=model_id,
        name=name,
        pages=(Page(id="0", name="Page 1"),),
    )
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(serialize_model(model))
    click.echo(f"wrote {out}")


@main.command(name="gen-data")
@click.option("--seed", required=True, type=int)
@click.option("--kind", required=True,
              type=click.Choice([k.value for k in SeriesKind]))
@click.option("--n", "count", required=True, type=int)
@click.option("--lo", default=0.0, type=float)
@click.option("--hi", default=100.0, type=float)
@click.option("--id", "series_id", default="generated")
@click.option("--name", default=None)
@click.option("--unit", default=None)
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def gen_data(seed, kind, count, lo, hi, series_id, name, unit, out):
    """Generate a reproducible synthetic metric series."""
    try:
        series = generate_series(
            seed, SeriesKind(kind), count, lo, hi,
            series_id=series_id, name=name, unit=unit,
        )
    except InvalidSpecError as exc:
        raise click.BadParameter(str(exc))
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(serialize_series(series))
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
