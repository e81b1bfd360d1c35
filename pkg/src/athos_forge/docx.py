"""Minimal OOXML (.docx) export: title, optional form image, one property
table (header + one row per control) and the attached comments.

The package is emitted directly with the stdlib zip writer; no Office or
third-party dependency. Entries are stored uncompressed with zeroed
timestamps in a fixed order so identical inputs give identical bytes.
"""

from __future__ import annotations

import io
import zipfile
from dataclasses import dataclass
from typing import Optional

from .model import (
    AthosError,
    ControlKindRegistry,
    ControlSpec,
    FontSpec,
    FormSpec,
    Severity,
    ValidationFailed,
    has_comment,
    validate,
)

MEDIA_TYPE = "application/vnd.openxmlformats-officedocument.wordprocessingml.document"

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
EMU_PER_PIXEL = 9525
TABLE_SPACING_AFTER = 120  # twentieths of a point (6 pt)
TITLE_HALF_POINTS = 32

TABLE_HEADERS = ("Name", "Kind", "Text", "X", "Y", "Width", "Height", "Font", "Comment")

_NS_W = "http://schemas.openxmlformats.org/wordprocessingml/2006/main"
_NS_R = "http://schemas.openxmlformats.org/officeDocument/2006/relationships"
_NS_WP = "http://schemas.openxmlformats.org/drawingml/2006/wordprocessingDrawing"
_NS_A = "http://schemas.openxmlformats.org/drawingml/2006/main"
_NS_PIC = "http://schemas.openxmlformats.org/drawingml/2006/picture"

_XML_DECL = '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'


class BadImage(AthosError):
    def __init__(self):
        super().__init__("embed_image is not a PNG (bad signature)")


@dataclass(frozen=True)
class DocxOptions:
    embed_image: Optional[bytes] = None
    title_override: Optional[str] = None


@dataclass(frozen=True)
class DocxPackage:
    bytes: bytes
    part_names: list[str]


def pt_to_twentieths(points: float) -> int:
    """Points to OOXML twentieths of a point."""
    return round(points * 20)


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _minimal(value: float) -> str:
    return str(int(value)) if value.is_integer() else repr(value)


def font_summary(font: FontSpec) -> str:
    """One-line font description for the property table."""
    parts = [font.family, f"{_minimal(font.size_pt)} pt", font.color]
    if font.bold:
        parts.append("bold")
    if font.italic:
        parts.append("italic")
    return ", ".join(parts)


def _run(text: str, props: str = "") -> str:
    rpr = f"<w:rPr>{props}</w:rPr>" if props else ""
    return f'<w:r>{rpr}<w:t xml:space="preserve">{_esc(text)}</w:t></w:r>'


def _table_paragraph(text: str, header: bool) -> str:
    ppr = f'<w:pPr><w:spacing w:after="{TABLE_SPACING_AFTER}"/></w:pPr>'
    if not text and not header:
        return f"<w:p>{ppr}</w:p>"
    return f"<w:p>{ppr}{_run(text, '<w:b/><w:i/>' if header else '')}</w:p>"


def _table_row(cells: list[str], header: bool) -> str:
    tcs = "".join(f"<w:tc>{_table_paragraph(text, header)}</w:tc>" for text in cells)
    return f"<w:tr>{tcs}</w:tr>"


def _control_cells(control: ControlSpec) -> list[str]:
    return [
        control.name,
        control.kind,
        control.text,
        str(control.x),
        str(control.y),
        str(control.width),
        str(control.height),
        font_summary(control.font),
        control.comment or "",
    ]


def _image_paragraph(width_px: int, height_px: int) -> str:
    cx = width_px * EMU_PER_PIXEL
    cy = height_px * EMU_PER_PIXEL
    return (
        "<w:p><w:r><w:drawing>"
        '<wp:inline distT="0" distB="0" distL="0" distR="0">'
        f'<wp:extent cx="{cx}" cy="{cy}"/>'
        '<wp:docPr id="1" name="form.png"/>'
        "<a:graphic>"
        '<a:graphicData uri="http://schemas.openxmlformats.org/drawingml/2006/picture">'
        "<pic:pic>"
        '<pic:nvPicPr><pic:cNvPr id="1" name="form.png"/><pic:cNvPicPr/></pic:nvPicPr>'
        '<pic:blipFill><a:blip r:embed="rId1"/><a:stretch><a:fillRect/></a:stretch></pic:blipFill>'
        '<pic:spPr><a:xfrm><a:off x="0" y="0"/>'
        f'<a:ext cx="{cx}" cy="{cy}"/></a:xfrm>'
        '<a:prstGeom prst="rect"><a:avLst/></a:prstGeom></pic:spPr>'
        "</pic:pic></a:graphicData></a:graphic></wp:inline></w:drawing></w:r></w:p>"
    )


def _document_xml(form: FormSpec, opts: DocxOptions) -> str:
    title = opts.title_override if opts.title_override is not None else form.title
    body: list[str] = [
        f'<w:p><w:r><w:rPr><w:b/><w:sz w:val="{TITLE_HALF_POINTS}"/></w:rPr>'
        f'<w:t xml:space="preserve">{_esc(title)}</w:t></w:r></w:p>'
    ]
    if opts.embed_image is not None:
        body.append(_image_paragraph(form.width, form.height))

    borders = "".join(
        f'<w:{edge} w:val="single" w:sz="4" w:space="0" w:color="auto"/>'
        for edge in ("top", "left", "bottom", "right", "insideH", "insideV")
    )
    rows = [_table_row(list(TABLE_HEADERS), header=True)]
    rows.extend(_table_row(_control_cells(c), header=False) for c in form.controls)
    body.append(
        "<w:tbl>"
        f'<w:tblPr><w:tblW w:w="0" w:type="auto"/><w:tblBorders>{borders}</w:tblBorders></w:tblPr>'
        f"<w:tblGrid>{'<w:gridCol/>' * len(TABLE_HEADERS)}</w:tblGrid>"
        f"{''.join(rows)}</w:tbl>"
    )
    body.extend(f"<w:p>{_run(f'{c.name}: {c.comment}')}</w:p>"
                for c in form.controls if has_comment(c))

    return (
        _XML_DECL
        + f'<w:document xmlns:w="{_NS_W}" xmlns:r="{_NS_R}" xmlns:wp="{_NS_WP}" '
        + f'xmlns:a="{_NS_A}" xmlns:pic="{_NS_PIC}">'
        + f"<w:body>{''.join(body)}</w:body></w:document>"
    )


def _content_types(with_image: bool) -> str:
    png = '<Default Extension="png" ContentType="image/png"/>' if with_image else ""
    return (
        _XML_DECL
        + '<Types xmlns="http://schemas.openxmlformats.org/package/2006/content-types">'
        + '<Default Extension="rels" ContentType="application/vnd.openxmlformats-package.relationships+xml"/>'
        + '<Default Extension="xml" ContentType="application/xml"/>'
        + png
        + '<Override PartName="/word/document.xml" ContentType="application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml"/>'
        + "</Types>"
    )


_ROOT_RELS = (
    _XML_DECL
    + '<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">'
    + f'<Relationship Id="rId1" Type="{_NS_R}/officeDocument" Target="word/document.xml"/>'
    + "</Relationships>"
)


def _document_rels(with_image: bool) -> str:
    image = (f'<Relationship Id="rId1" Type="{_NS_R}/image" Target="media/form.png"/>'
             if with_image else "")
    return (
        _XML_DECL
        + '<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">'
        + image
        + "</Relationships>"
    )


def generate_docx(form: FormSpec, reg: ControlKindRegistry,
                  opts: DocxOptions = DocxOptions()) -> DocxPackage:
    """Build the .docx package. The form must validate with no errors."""
    diagnostics = validate(form, reg)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        raise ValidationFailed(diagnostics)
    if opts.embed_image is not None and not opts.embed_image.startswith(PNG_SIGNATURE):
        raise BadImage()

    with_image = opts.embed_image is not None
    parts: list[tuple[str, bytes]] = [
        ("[Content_Types].xml", _content_types(with_image).encode("utf-8")),
        ("_rels/.rels", _ROOT_RELS.encode("utf-8")),
        ("word/document.xml", _document_xml(form, opts).encode("utf-8")),
        ("word/_rels/document.xml.rels", _document_rels(with_image).encode("utf-8")),
    ]
    if with_image:
        parts.append(("word/media/form.png", opts.embed_image))

    buf = io.BytesIO()
    with zipfile.ZipFile(buf, "w", zipfile.ZIP_STORED) as zf:
        for name, data in parts:
            info = zipfile.ZipInfo(name, date_time=(1980, 1, 1, 0, 0, 0))
            zf.writestr(info, data)
    return DocxPackage(bytes=buf.getvalue(), part_names=[name for name, _ in parts])
