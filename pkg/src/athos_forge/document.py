"""Canonical on-disk format for form documents (`.athos.json`).

Parsing is strict: unknown keys, wrong types, duplicate keys and unsupported
versions are all rejected, so a document that parses today re-serializes to
the same content tomorrow. Serialization is canonical to the byte: fixed key
order, 2-space indent, LF endings, one trailing LF, minimal-digit numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from .model import AthosError, ControlSpec, DEFAULT_FONT, FontSpec, FormSpec

FORMAT_VERSION = 1


class ParseErrorKind(str, Enum):
    SYNTAX = "syntax"
    SCHEMA = "schema"
    VERSION = "version"


class ParseError(AthosError):
    def __init__(self, kind: ParseErrorKind, message: str, path: str = "",
                 line: Optional[int] = None, column: Optional[int] = None):
        location = path or (f"line {line}, column {column}" if line else "")
        super().__init__(f"{kind.value} error{': ' + location if location else ''}: {message}")
        self.kind = kind
        self.path = path
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class FormDocument:
    athos_version: int
    form: FormSpec


def _schema_error(path: str, message: str) -> ParseError:
    return ParseError(ParseErrorKind.SCHEMA, message, path=path)


class _DuplicateKey(Exception):
    def __init__(self, key: str):
        self.key = key


def _pairs_to_dict(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    d: dict[str, Any] = {}
    for key, value in pairs:
        if key in d:
            raise _DuplicateKey(key)
        d[key] = value
    return d


def _reject_constant(token: str) -> Any:
    raise ValueError(f"{token} is not allowed")


def _expect_dict(value: Any, path: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise _schema_error(path, "expected an object")
    return value


def _expect_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise _schema_error(path, "expected a string")
    try:
        value.encode("utf-8")
    except UnicodeEncodeError:
        raise _schema_error(path, "string contains unpaired surrogates") from None
    return value


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _schema_error(path, "expected an integer")
    return value


def _expect_bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise _schema_error(path, "expected a boolean")
    return value


def _expect_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _schema_error(path, "expected a number")
    return float(value)


def _require(obj: dict[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise _schema_error(f"{path}/{key}" if path else key, "missing required key")
    return obj[key]


def _reject_unknown(obj: dict[str, Any], allowed: tuple[str, ...], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise _schema_error(f"{path}/{key}" if path else key, "unknown key")


def _parse_font(value: Any, path: str) -> FontSpec:
    obj = _expect_dict(value, path)
    font = FontSpec(
        family=_expect_str(_require(obj, "family", path), f"{path}/family"),
        size_pt=_expect_number(_require(obj, "size_pt", path), f"{path}/size_pt"),
        color=_expect_str(_require(obj, "color", path), f"{path}/color"),
        bold=_expect_bool(_require(obj, "bold", path), f"{path}/bold"),
        italic=_expect_bool(_require(obj, "italic", path), f"{path}/italic"),
    )
    _reject_unknown(obj, ("family", "size_pt", "color", "bold", "italic"), path)
    return font


def _parse_extra(value: Any, path: str) -> dict[str, Any]:
    obj = _expect_dict(value, path)
    extra: dict[str, Any] = {}
    for key, item in obj.items():
        _expect_str(key, path)
        if isinstance(item, bool) or isinstance(item, int):
            extra[key] = item
        elif isinstance(item, str):
            extra[key] = _expect_str(item, f"{path}/{key}")
        else:
            raise _schema_error(f"{path}/{key}", "expected a boolean, integer or string")
    return extra


_CONTROL_KEYS = ("name", "kind", "text", "x", "y", "width", "height",
                 "font", "comment", "extra")


def _parse_control(value: Any, path: str) -> ControlSpec:
    obj = _expect_dict(value, path)
    control = ControlSpec(
        name=_expect_str(_require(obj, "name", path), f"{path}/name"),
        kind=_expect_str(_require(obj, "kind", path), f"{path}/kind"),
        text=_expect_str(_require(obj, "text", path), f"{path}/text"),
        x=_expect_int(_require(obj, "x", path), f"{path}/x"),
        y=_expect_int(_require(obj, "y", path), f"{path}/y"),
        width=_expect_int(_require(obj, "width", path), f"{path}/width"),
        height=_expect_int(_require(obj, "height", path), f"{path}/height"),
        font=_parse_font(obj["font"], f"{path}/font") if "font" in obj else DEFAULT_FONT,
        comment=_expect_str(obj["comment"], f"{path}/comment") if "comment" in obj else None,
        extra=_parse_extra(obj["extra"], f"{path}/extra") if "extra" in obj else {},
    )
    _reject_unknown(obj, _CONTROL_KEYS, path)
    return control


def parse_form(data: bytes) -> FormDocument:
    """Parse document bytes; raises ParseError and nothing else."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(ParseErrorKind.SYNTAX, f"not valid UTF-8: {exc.reason}") from None
    try:
        raw = json.loads(text, object_pairs_hook=_pairs_to_dict,
                         parse_constant=_reject_constant)
    except _DuplicateKey as exc:
        raise _schema_error(exc.key, "duplicate key") from None
    except (json.JSONDecodeError, ValueError, RecursionError) as exc:
        line = getattr(exc, "lineno", None)
        column = getattr(exc, "colno", None)
        raise ParseError(ParseErrorKind.SYNTAX, getattr(exc, "msg", str(exc)),
                         line=line, column=column) from None

    top = _expect_dict(raw, "")
    version = _expect_int(_require(top, "athos_version", ""), "athos_version")
    if version != FORMAT_VERSION:
        raise ParseError(ParseErrorKind.VERSION,
                         f"unsupported athos_version {version} (expected {FORMAT_VERSION})",
                         path="athos_version")
    form_obj = _expect_dict(_require(top, "form", ""), "form")
    _reject_unknown(top, ("athos_version", "form"), "")

    name = _expect_str(_require(form_obj, "name", "form"), "form/name")
    title = _expect_str(_require(form_obj, "title", "form"), "form/title")
    width = _expect_int(_require(form_obj, "width", "form"), "form/width")
    height = _expect_int(_require(form_obj, "height", "form"), "form/height")
    controls_raw = _require(form_obj, "controls", "form")
    if not isinstance(controls_raw, list):
        raise _schema_error("form/controls", "expected an array")
    _reject_unknown(form_obj, ("name", "title", "width", "height", "controls"), "form")
    controls = tuple(
        _parse_control(item, f"form/controls/{i}") for i, item in enumerate(controls_raw)
    )
    form = FormSpec(name=name, title=title, width=width, height=height, controls=controls)
    return FormDocument(athos_version=version, form=form)


def _minimal_number(value: float):
    # 8.25 stays 8.25; 12.0 becomes 12. Non-integral floats use Python's
    # shortest round-trip repr via json.
    return int(value) if value.is_integer() else value


def _font_fields(font: FontSpec) -> dict[str, Any]:
    return {
        "family": font.family,
        "size_pt": _minimal_number(font.size_pt),
        "color": font.color,
        "bold": font.bold,
        "italic": font.italic,
    }


def _control_fields(control: ControlSpec) -> dict[str, Any]:
    fields: dict[str, Any] = {
        "name": control.name,
        "kind": control.kind,
        "text": control.text,
        "x": control.x,
        "y": control.y,
        "width": control.width,
        "height": control.height,
        "font": _font_fields(control.font),
    }
    if control.comment is not None:
        fields["comment"] = control.comment
    if control.extra:
        fields["extra"] = dict(control.extra)
    return fields


def serialize_form(doc: FormDocument) -> bytes:
    """Canonical bytes for the document; the inverse of parse_form."""
    payload = {
        "athos_version": doc.athos_version,
        "form": {
            "name": doc.form.name,
            "title": doc.form.title,
            "width": doc.form.width,
            "height": doc.form.height,
            "controls": [_control_fields(c) for c in doc.form.controls],
        },
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
