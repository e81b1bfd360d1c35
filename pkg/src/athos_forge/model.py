"""Form/control data model, control-kind registry, validation and edit operations.

Everything here is an immutable value: edit operations return a new
``FormSpec`` and never touch their input. The validator reports findings as
``Diagnostic`` values drawn from a closed set of codes; an empty error list
means the form is safe to hand to the exporters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Union

from .keywords import CSHARP_KEYWORDS

IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
COLOR_RE = re.compile(r"^#[0-9A-F]{6}$")
KIND_ID_RE = re.compile(r"^[a-z][a-z0-9_]*$")

SCALAR_TYPES = ("bool", "int", "string", "color")

ExtraValue = Union[bool, int, str]


class AthosError(Exception):
    """Base for all errors raised by the toolchain."""


class UnknownKind(AthosError):
    def __init__(self, kind_id: str):
        super().__init__(f'unknown control kind "{kind_id}"')
        self.kind_id = kind_id


class UnknownControl(AthosError):
    def __init__(self, name: str):
        super().__init__(f'no control named "{name}"')
        self.name = name


class DuplicateKind(AthosError):
    def __init__(self, kind_id: str):
        super().__init__(f'control kind "{kind_id}" is already registered')
        self.kind_id = kind_id


class InvalidKindDef(AthosError):
    pass


class InvalidValue(AthosError):
    def __init__(self, path: str, message: str = ""):
        super().__init__(message or f"invalid value for {path}")
        self.path = path


class ValidationFailed(AthosError):
    """Raised by exporters when a form still has error-severity findings."""

    def __init__(self, diagnostics: list[Diagnostic]):
        errors = [d for d in diagnostics if d.severity is Severity.ERROR]
        super().__init__(f"form has {len(errors)} validation error(s)")
        self.diagnostics = diagnostics


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    path: str
    message: str


@dataclass(frozen=True)
class FontSpec:
    family: str
    size_pt: float
    color: str
    bold: bool
    italic: bool


#: Default font for freshly placed controls (stock designer look).
DEFAULT_FONT = FontSpec(
    family="Microsoft Sans Serif",
    size_pt=8.25,
    color="#000000",
    bold=False,
    italic=False,
)


@dataclass(frozen=True)
class ControlSpec:
    """One placed control. ``extra`` holds kind-specific properties; only keys
    present in the document are present here (no implied defaults)."""

    name: str
    kind: str
    text: str
    x: int
    y: int
    width: int
    height: int
    font: FontSpec = DEFAULT_FONT
    comment: Optional[str] = None
    extra: dict[str, ExtraValue] = field(default_factory=dict)


@dataclass(frozen=True)
class FormSpec:
    name: str
    title: str
    width: int
    height: int
    controls: tuple[ControlSpec, ...] = ()


@dataclass(frozen=True)
class ExtraPropDef:
    """One kind-specific property: model name, scalar type, default, and the
    C# property it maps to."""

    name: str
    type: str
    default: ExtraValue
    csharp_name: str


@dataclass(frozen=True)
class ControlKindDef:
    kind_id: str
    display_name: str
    csharp_type: str
    default_width: int
    default_height: int
    extra_schema: tuple[ExtraPropDef, ...] = ()


@dataclass(frozen=True)
class ControlKindRegistry:
    """Ordered map of kind_id -> ControlKindDef. Extend via register_kind."""

    kinds: dict[str, ControlKindDef]

    def get(self, kind_id: str) -> Optional[ControlKindDef]:
        return self.kinds.get(kind_id)

    def __contains__(self, kind_id: str) -> bool:
        return kind_id in self.kinds


def default_registry() -> ControlKindRegistry:
    """The three built-in kinds: label, textbox, button."""
    return ControlKindRegistry(kinds={
        "label": ControlKindDef(
            kind_id="label",
            display_name="Label",
            csharp_type="System.Windows.Forms.Label",
            default_width=100,
            default_height=23,
            extra_schema=(
                ExtraPropDef("autosize", "bool", True, "AutoSize"),
            ),
        ),
        "textbox": ControlKindDef(
            kind_id="textbox",
            display_name="TextBox",
            csharp_type="System.Windows.Forms.TextBox",
            default_width=100,
            default_height=20,
            extra_schema=(
                ExtraPropDef("multiline", "bool", False, "Multiline"),
                ExtraPropDef("readonly", "bool", False, "ReadOnly"),
            ),
        ),
        "button": ControlKindDef(
            kind_id="button",
            display_name="Button",
            csharp_type="System.Windows.Forms.Button",
            default_width=75,
            default_height=23,
            extra_schema=(),
        ),
    })


def _check_kind_def(kind_def: ControlKindDef) -> None:
    if not KIND_ID_RE.match(kind_def.kind_id):
        raise InvalidKindDef(f'kind_id "{kind_def.kind_id}" must be lowercase [a-z][a-z0-9_]*')
    if not kind_def.csharp_type:
        raise InvalidKindDef("csharp_type must not be empty")
    if kind_def.default_width < 1 or kind_def.default_height < 1:
        raise InvalidKindDef("default size must be at least 1x1")
    seen: set[str] = set()
    for prop in kind_def.extra_schema:
        if prop.name in seen:
            raise InvalidKindDef(f'duplicate extra property "{prop.name}"')
        seen.add(prop.name)
        if prop.type not in SCALAR_TYPES:
            raise InvalidKindDef(f'extra property "{prop.name}" has unknown type "{prop.type}"')
        if not IDENTIFIER_RE.match(prop.csharp_name):
            raise InvalidKindDef(f'extra property "{prop.name}" maps to invalid C# name "{prop.csharp_name}"')
        if not _extra_value_matches(prop.type, prop.default):
            raise InvalidKindDef(f'default for "{prop.name}" does not match type "{prop.type}"')


def register_kind(reg: ControlKindRegistry, kind_def: ControlKindDef) -> ControlKindRegistry:
    """Return a registry extended with ``kind_def``; the input is unchanged."""
    _check_kind_def(kind_def)
    if kind_def.kind_id in reg.kinds:
        raise DuplicateKind(kind_def.kind_id)
    kinds = dict(reg.kinds)
    kinds[kind_def.kind_id] = kind_def
    return ControlKindRegistry(kinds=kinds)


def _extra_value_matches(scalar_type: str, value: ExtraValue) -> bool:
    if scalar_type == "bool":
        return isinstance(value, bool)
    if scalar_type == "int":
        return isinstance(value, int) and not isinstance(value, bool)
    # Both "string" and "color" are carried as strings; color format is a
    # separate check so it can get its own diagnostic code.
    return isinstance(value, str)


def has_comment(control: ControlSpec) -> bool:
    """True when a non-empty comment is attached; drives the red badge."""
    return bool(control.comment)


def _check_name(name: str, path: str, out: list[Diagnostic]) -> None:
    if not IDENTIFIER_RE.match(name):
        out.append(Diagnostic(Severity.ERROR, "E_BAD_IDENT", path,
                              f'"{name}" is not a valid identifier'))
    elif name in CSHARP_KEYWORDS:
        out.append(Diagnostic(Severity.ERROR, "E_RESERVED_WORD", path,
                              f'"{name}" is a reserved C# keyword'))


def _in_bounds(control: ControlSpec, form: FormSpec) -> bool:
    return (0 <= control.x and 0 <= control.y
            and control.x + control.width <= form.width
            and control.y + control.height <= form.height)


def _rects_overlap(a: ControlSpec, b: ControlSpec) -> bool:
    return (a.x < b.x + b.width and b.x < a.x + a.width
            and a.y < b.y + b.height and b.y < a.y + a.height)


def validate(form: FormSpec, reg: ControlKindRegistry) -> list[Diagnostic]:
    """Report every finding in the form, sorted by (path, code).

    An empty list (or warnings only) means the form is exportable. Error
    codes: E_BAD_IDENT, E_RESERVED_WORD, E_DUP_NAME, E_UNKNOWN_KIND,
    E_BAD_EXTRA, E_BAD_COLOR, E_NONPOSITIVE_SIZE. Warning codes:
    W_OUT_OF_BOUNDS, W_OVERLAP.
    """
    out: list[Diagnostic] = []
    _check_name(form.name, "name", out)
    if form.width < 1:
        out.append(Diagnostic(Severity.ERROR, "E_NONPOSITIVE_SIZE", "width",
                              "form width must be at least 1"))
    if form.height < 1:
        out.append(Diagnostic(Severity.ERROR, "E_NONPOSITIVE_SIZE", "height",
                              "form height must be at least 1"))

    seen_names = {form.name}
    for i, control in enumerate(form.controls):
        base = f"controls/{i}"
        _check_name(control.name, f"{base}/name", out)
        if control.name in seen_names:
            origin = "form name" if control.name == form.name else "another control"
            out.append(Diagnostic(Severity.ERROR, "E_DUP_NAME", f"{base}/name",
                                  f'name "{control.name}" collides with {origin}'))
        seen_names.add(control.name)

        kind = reg.get(control.kind)
        if kind is None:
            out.append(Diagnostic(Severity.ERROR, "E_UNKNOWN_KIND", f"{base}/kind",
                                  f'unknown control kind "{control.kind}"'))
        if control.width < 1:
            out.append(Diagnostic(Severity.ERROR, "E_NONPOSITIVE_SIZE", f"{base}/width",
                                  "control width must be at least 1"))
        if control.height < 1:
            out.append(Diagnostic(Severity.ERROR, "E_NONPOSITIVE_SIZE", f"{base}/height",
                                  "control height must be at least 1"))
        if control.font.size_pt <= 0:
            out.append(Diagnostic(Severity.ERROR, "E_NONPOSITIVE_SIZE", f"{base}/font/size_pt",
                                  "font size must be positive"))
        if not COLOR_RE.match(control.font.color):
            out.append(Diagnostic(Severity.ERROR, "E_BAD_COLOR", f"{base}/font/color",
                                  f'"{control.font.color}" is not a #RRGGBB color'))
        if kind is not None:
            schema = {p.name: p for p in kind.extra_schema}
            for key, value in control.extra.items():
                path = f"{base}/extra/{key}"
                prop = schema.get(key)
                if prop is None:
                    out.append(Diagnostic(Severity.ERROR, "E_BAD_EXTRA", path,
                                          f'"{key}" is not a property of kind "{control.kind}"'))
                elif not _extra_value_matches(prop.type, value):
                    out.append(Diagnostic(Severity.ERROR, "E_BAD_EXTRA", path,
                                          f'"{key}" expects a {prop.type} value'))
                elif prop.type == "color" and not COLOR_RE.match(value):
                    out.append(Diagnostic(Severity.ERROR, "E_BAD_COLOR", path,
                                          f'"{value}" is not a #RRGGBB color'))

        if not _in_bounds(control, form):
            out.append(Diagnostic(Severity.WARNING, "W_OUT_OF_BOUNDS", base,
                                  f'"{control.name}" extends outside the form client area'))
        for j in range(i):
            other = form.controls[j]
            if _rects_overlap(other, control):
                out.append(Diagnostic(Severity.WARNING, "W_OVERLAP", base,
                                      f'"{control.name}" overlaps "{other.name}"'))

    out.sort(key=lambda d: (d.path, d.code))
    return out


def _find_control(form: FormSpec, name: str) -> int:
    for i, control in enumerate(form.controls):
        if control.name == name:
            return i
    raise UnknownControl(name)


def _replace_control(form: FormSpec, index: int, control: ControlSpec) -> FormSpec:
    controls = form.controls[:index] + (control,) + form.controls[index + 1:]
    return replace(form, controls=controls)


def add_control(form: FormSpec, kind_id: str, reg: ControlKindRegistry,
                at: tuple[int, int]) -> FormSpec:
    """Append a fresh control of the given kind at ``at``.

    The name is the kind id plus the smallest positive integer that collides
    with neither the form name nor any existing control.
    """
    kind = reg.get(kind_id)
    if kind is None:
        raise UnknownKind(kind_id)
    taken = {c.name for c in form.controls}
    taken.add(form.name)
    n = 1
    while f"{kind_id}{n}" in taken:
        n += 1
    control = ControlSpec(
        name=f"{kind_id}{n}",
        kind=kind_id,
        text=f"{kind.display_name}{n}",
        x=at[0],
        y=at[1],
        width=kind.default_width,
        height=kind.default_height,
        font=DEFAULT_FONT,
        comment=None,
        extra={p.name: p.default for p in kind.extra_schema},
    )
    return replace(form, controls=form.controls + (control,))


def move_control(form: FormSpec, name: str, to: tuple[int, int]) -> FormSpec:
    i = _find_control(form, name)
    return _replace_control(form, i, replace(form.controls[i], x=to[0], y=to[1]))


def resize_control(form: FormSpec, name: str, to: tuple[int, int]) -> FormSpec:
    i = _find_control(form, name)
    if to[0] < 1:
        raise InvalidValue("width", "control width must be at least 1")
    if to[1] < 1:
        raise InvalidValue("height", "control height must be at least 1")
    return _replace_control(form, i, replace(form.controls[i], width=to[0], height=to[1]))


def set_form_size(form: FormSpec, width: int, height: int) -> FormSpec:
    if width < 1:
        raise InvalidValue("width", "form width must be at least 1")
    if height < 1:
        raise InvalidValue("height", "form height must be at least 1")
    return replace(form, width=width, height=height)


def set_text(form: FormSpec, name: str, text: str) -> FormSpec:
    i = _find_control(form, name)
    return _replace_control(form, i, replace(form.controls[i], text=text))


def set_font(form: FormSpec, name: str, font: FontSpec) -> FormSpec:
    i = _find_control(form, name)
    return _replace_control(form, i, replace(form.controls[i], font=font))


def set_extra(form: FormSpec, name: str, key: str, value: ExtraValue,
              reg: ControlKindRegistry) -> FormSpec:
    i = _find_control(form, name)
    control = form.controls[i]
    kind = reg.get(control.kind)
    if kind is None:
        raise UnknownKind(control.kind)
    prop = next((p for p in kind.extra_schema if p.name == key), None)
    if prop is None:
        raise InvalidValue(f"extra/{key}", f'"{key}" is not a property of kind "{control.kind}"')
    if not _extra_value_matches(prop.type, value):
        raise InvalidValue(f"extra/{key}", f'"{key}" expects a {prop.type} value')
    if prop.type == "color" and not COLOR_RE.match(value):
        raise InvalidValue(f"extra/{key}", f'"{value}" is not a #RRGGBB color')
    extra = dict(control.extra)
    extra[key] = value
    return _replace_control(form, i, replace(control, extra=extra))


def set_comment(form: FormSpec, name: str, comment: Optional[str]) -> FormSpec:
    """Attach a note to a control, verbatim. None or "" clears it."""
    i = _find_control(form, name)
    return _replace_control(form, i, replace(form.controls[i], comment=comment or None))
