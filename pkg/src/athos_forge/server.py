"""HTTP service exposing form storage, validation and the three exporters.

All document logic stays in the core modules; handlers parse the raw body
with the strict document parser, so the wire format and the file format are
the same thing. Stored bytes are always canonical.
"""

from __future__ import annotations

import json
import os
import subprocess
import tempfile
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .codegen import CodegenOptions, generate_csharp
from .docx import MEDIA_TYPE as DOCX_MEDIA_TYPE, DocxOptions, generate_docx
from .document import FormDocument, ParseError, parse_form
from .model import Diagnostic, Severity, ValidationFailed, default_registry, validate
from .store import FormStore, NotFound, resolve_data_dir
from .svg import MEDIA_TYPE as SVG_MEDIA_TYPE, RenderOptions, render_svg

DEFAULT_PORT = 8553


@dataclass
class ServerConfig:
    data_dir: Path
    static_dir: Optional[Path] = None
    rasterizer: Optional[list[str]] = None


def load_config(data_dir: Optional[str] = None) -> ServerConfig:
    """Build the config from CLI/env: optional JSON file via ATHOS_CONFIG."""
    config = ServerConfig(data_dir=resolve_data_dir(data_dir))
    config_path = os.environ.get("ATHOS_CONFIG")
    if config_path:
        raw = json.loads(Path(config_path).read_text(encoding="utf-8"))
        if raw.get("static_dir"):
            config.static_dir = Path(raw["static_dir"])
        if raw.get("rasterizer"):
            config.rasterizer = [str(part) for part in raw["rasterizer"]]
    if config.static_dir is None and os.environ.get("ATHOS_STATIC_DIR"):
        config.static_dir = Path(os.environ["ATHOS_STATIC_DIR"])
    return config


class FormSummary(BaseModel):
    id: str
    name: str
    updated_at: datetime


class CreatedForm(BaseModel):
    id: str


class DiagnosticOut(BaseModel):
    severity: str
    code: str
    path: str
    message: str


def _diag_out(diagnostics: list[Diagnostic]) -> list[dict]:
    return [
        {"severity": d.severity.value, "code": d.code, "path": d.path, "message": d.message}
        for d in diagnostics
    ]


def _api_error(status: int, code: str, message: str,
               diagnostics: Optional[list[Diagnostic]] = None) -> JSONResponse:
    body = {"status": status, "code": code, "message": message}
    if diagnostics is not None:
        body["diagnostics"] = _diag_out(diagnostics)
    return JSONResponse(status_code=status, content=body)


def rasterize(command: list[str], svg: bytes) -> bytes:
    """Run the configured external rasterizer: {svg} and {png} in the command
    are replaced with temp file paths; the command must produce the PNG."""
    with tempfile.TemporaryDirectory(prefix="athos-raster-") as tmp:
        svg_path = Path(tmp) / "form.svg"
        png_path = Path(tmp) / "form.png"
        svg_path.write_bytes(svg)
        argv = [arg.replace("{svg}", str(svg_path)).replace("{png}", str(png_path))
                for arg in command]
        subprocess.run(argv, check=True, capture_output=True)
        return png_path.read_bytes()


def create_app(config: Optional[ServerConfig] = None) -> FastAPI:
    if config is None:
        config = load_config()
    store = FormStore(config.data_dir)
    registry = default_registry()
    app = FastAPI(title="athos-forge", version="0.1.0")

    @app.exception_handler(NotFound)
    async def _not_found(request: Request, exc: NotFound):
        return _api_error(404, "not_found", str(exc))

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError):
        return _api_error(400, "parse_error", str(exc))

    @app.exception_handler(ValidationFailed)
    async def _validation_failed(request: Request, exc: ValidationFailed):
        return _api_error(422, "validation_failed", str(exc), exc.diagnostics)

    def _checked(doc: FormDocument) -> FormDocument:
        diagnostics = validate(doc.form, registry)
        if any(d.severity is Severity.ERROR for d in diagnostics):
            raise ValidationFailed(diagnostics)
        return doc

    @app.post("/api/forms", status_code=201, response_model=CreatedForm)
    async def create_form(request: Request):
        doc = _checked(parse_form(await request.body()))
        form_id = store.new_id()
        store.put(form_id, doc)
        return {"id": form_id}

    @app.get("/api/forms", response_model=list[FormSummary])
    def list_forms():
        return [
            {"id": s.id, "name": s.doc.form.name, "updated_at": s.updated_at}
            for s in store.list()
        ]

    @app.get("/api/forms/{form_id}")
    def get_form(form_id: str):
        return Response(content=store.get_bytes(form_id), media_type="application/json")

    @app.put("/api/forms/{form_id}", response_model=CreatedForm)
    async def replace_form(form_id: str, request: Request):
        body = await request.body()
        if not store.exists(form_id):
            raise NotFound(form_id)
        store.put(form_id, _checked(parse_form(body)))
        return {"id": form_id}

    @app.delete("/api/forms/{form_id}", status_code=204)
    def delete_form(form_id: str):
        store.delete(form_id)
        return Response(status_code=204)

    @app.post("/api/forms/{form_id}/validate", response_model=list[DiagnosticOut])
    def validate_form(form_id: str):
        stored = store.get(form_id)
        return _diag_out(validate(stored.doc.form, registry))

    def _attachment(filename: str) -> dict[str, str]:
        return {"Content-Disposition": f'attachment; filename="{filename}"'}

    @app.get("/api/forms/{form_id}/export/csharp")
    def export_csharp(form_id: str):
        form = store.get(form_id).doc.form
        source = generate_csharp(form, registry, CodegenOptions())
        return Response(
            content=source.content.encode("utf-8"),
            media_type="text/plain; charset=utf-8",
            headers=_attachment(source.filename),
        )

    @app.get("/api/forms/{form_id}/export/svg")
    def export_svg(form_id: str):
        form = store.get(form_id).doc.form
        return Response(
            content=render_svg(form, registry, RenderOptions()),
            media_type=SVG_MEDIA_TYPE,
            headers=_attachment(f"{form.name}.svg"),
        )

    @app.get("/api/forms/{form_id}/export/docx")
    def export_docx(form_id: str, image: int = 0):
        form = store.get(form_id).doc.form
        embed = None
        if image and config.rasterizer:
            svg = render_svg(form, registry, RenderOptions())
            try:
                embed = rasterize(config.rasterizer, svg)
            except (OSError, subprocess.CalledProcessError) as exc:
                return _api_error(500, "rasterizer_failed", str(exc))
        package = generate_docx(form, registry, DocxOptions(embed_image=embed))
        return Response(
            content=package.bytes,
            media_type=DOCX_MEDIA_TYPE,
            headers=_attachment(f"{form.name}.docx"),
        )

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
