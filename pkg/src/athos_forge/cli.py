"""Command-line front door: scaffold, validate, export, serve.

Exit codes: 0 success, 1 I/O or parse failure, 2 validation errors.
Diagnostics go to stdout (they are the product); fatal errors go to stderr.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .codegen import CodegenOptions, generate_csharp
from .document import FormDocument, ParseError, parse_form, serialize_form
from .docx import BadImage, DocxOptions, generate_docx
from .model import Diagnostic, FormSpec, Severity, default_registry, validate
from .svg import RenderOptions, render_svg

DEFAULT_FORM_WIDTH = 600
DEFAULT_FORM_HEIGHT = 400


def _fail(message: str) -> None:
    click.echo(f"athos: {message}", err=True)
    sys.exit(1)


def _load_document(path: str) -> FormDocument:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror or exc}")
    try:
        return parse_form(data)
    except ParseError as exc:
        _fail(f"{path}: {exc}")


def _write_bytes(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        _fail(f"cannot write {path}: {exc.strerror or exc}")


def _print_diagnostics(diagnostics: list[Diagnostic]) -> None:
    for d in diagnostics:
        click.echo(f"{d.severity.value.upper()} {d.code} {d.path}: {d.message}")


def _check_exportable(form: FormSpec) -> None:
    diagnostics = validate(form, default_registry())
    if any(d.severity is Severity.ERROR for d in diagnostics):
        _print_diagnostics(diagnostics)
        sys.exit(2)


@click.group()
def main():
    """Design-form toolchain: validate documents, generate C#, render SVG
    mockups, export Word review documents, or run the HTTP service."""


@main.command()
@click.argument("name")
@click.option("-o", "--output", default=None, help="Output path (default <name>.athos.json).")
def new(name: str, output: str | None):
    """Write a canonical empty form document named NAME."""
    form = FormSpec(name=name, title=name,
                    width=DEFAULT_FORM_WIDTH, height=DEFAULT_FORM_HEIGHT)
    _check_exportable(form)
    doc = FormDocument(athos_version=1, form=form)
    _write_bytes(output or f"{name}.athos.json", serialize_form(doc))


@main.command("validate")
@click.argument("file", type=click.Path())
def validate_cmd(file: str):
    """Print all findings for FILE, one per line."""
    doc = _load_document(file)
    diagnostics = validate(doc.form, default_registry())
    _print_diagnostics(diagnostics)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        sys.exit(2)


@main.command("gen-cs")
@click.argument("file", type=click.Path())
@click.option("-o", "--output", default=None, help="Output path (default <FormName>.cs).")
@click.option("--namespace", "namespace_name", default="AthosGenerated",
              help="Namespace for the generated class.")
@click.option("--no-comments", is_flag=True, help="Leave control comments out of the source.")
def gen_cs(file: str, output: str | None, namespace_name: str, no_comments: bool):
    """Generate the C# form class for FILE."""
    doc = _load_document(file)
    _check_exportable(doc.form)
    source = generate_csharp(doc.form, default_registry(),
                             CodegenOptions(namespace_name=namespace_name,
                                            emit_comments=not no_comments))
    _write_bytes(output or source.filename, source.content.encode("utf-8"))


@main.command()
@click.argument("file", type=click.Path())
@click.option("-o", "--output", default=None, help="Output path (default <FormName>.svg).")
@click.option("--no-badges", is_flag=True, help="Hide the red comment badges.")
def render(file: str, output: str | None, no_badges: bool):
    """Render FILE as an SVG mockup."""
    doc = _load_document(file)
    _check_exportable(doc.form)
    svg = render_svg(doc.form, default_registry(), RenderOptions(show_badges=not no_badges))
    _write_bytes(output or f"{doc.form.name}.svg", svg)


@main.command()
@click.argument("file", type=click.Path())
@click.option("-o", "--output", default=None, help="Output path (default <FormName>.docx).")
@click.option("--image", "image_path", default=None,
              help="PNG file to embed as the form picture.")
def doc(file: str, output: str | None, image_path: str | None):
    """Export FILE as a Word document with the property table and comments."""
    document = _load_document(file)
    _check_exportable(document.form)
    embed = None
    if image_path is not None:
        try:
            embed = Path(image_path).read_bytes()
        except OSError as exc:
            _fail(f"cannot read {image_path}: {exc.strerror or exc}")
    try:
        package = generate_docx(document.form, default_registry(),
                                DocxOptions(embed_image=embed))
    except BadImage as exc:
        _fail(f"{image_path}: {exc}")
    _write_bytes(output or f"{document.form.name}.docx", package.bytes)


@main.command()
@click.option("--port", default=8553, show_default=True, help="Port to listen on.")
@click.option("--data-dir", default=None,
              help="Form storage directory (default $ATHOS_DATA_DIR or ./athos-data).")
def serve(port: int, data_dir: str | None):
    """Run the HTTP service until interrupted."""
    import uvicorn

    from .server import create_app, load_config

    app = create_app(load_config(data_dir))
    uvicorn.run(app, host="127.0.0.1", port=port)
