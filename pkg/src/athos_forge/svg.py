"""Deterministic SVG mockup of a form's client area.

Glyph styling approximates stock Windows widgets; geometry comes straight
from the model, so the exported image matches the designer surface. Controls
with a comment get a red badge circle at their top-right corner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    ControlKindRegistry,
    ControlSpec,
    FormSpec,
    Severity,
    ValidationFailed,
    has_comment,
    validate,
)

BACKGROUND_FILL = "#F0F0F0"
TEXTBOX_STROKE = "#7A7A7A"
BUTTON_FILL = "#E1E1E1"
BUTTON_STROKE = "#ADADAD"
BADGE_FILL = "#FF0000"
FALLBACK_STROKE = "#808080"

MEDIA_TYPE = "image/svg+xml"


@dataclass(frozen=True)
class RenderOptions:
    show_badges: bool = True


def pt_to_px(size_pt: float) -> float:
    """Points to CSS pixels at the 96 dpi convention (x 4/3)."""
    return size_pt * 4 / 3


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _num(value) -> str:
    """Minimal-digit rendering: drop the fraction when integral."""
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() else repr(value)
    return str(value)


def _tenths(tenths: int) -> str:
    # Exact rendering of a value held in tenths, avoiding float noise.
    sign = "-" if tenths < 0 else ""
    whole, frac = divmod(abs(tenths), 10)
    return f"{sign}{whole}" if frac == 0 else f"{sign}{whole}.{frac}"


def _halves(halves: int) -> str:
    sign = "-" if halves < 0 else ""
    whole, frac = divmod(abs(halves), 2)
    return f"{sign}{whole}" if frac == 0 else f"{sign}{whole}.5"


def _text_attrs(control: ControlSpec) -> str:
    font = control.font
    attrs = (f'font-family="{_esc(font.family)}" '
             f'font-size="{_num(pt_to_px(font.size_pt))}"')
    if font.bold:
        attrs += ' font-weight="bold"'
    if font.italic:
        attrs += ' font-style="italic"'
    return f'{attrs} fill="{_esc(font.color)}"'


def _baseline(control: ControlSpec) -> str:
    # Baseline sits at 0.8 of the control height, computed in exact tenths.
    return _tenths(10 * control.y + 8 * control.height)


def _rect(control: ControlSpec, fill: str, stroke: str) -> str:
    return (f'<rect x="{control.x}" y="{control.y}" width="{control.width}" '
            f'height="{control.height}" fill="{fill}" stroke="{stroke}" stroke-width="1"/>')


def _glyph(control: ControlSpec) -> list[str]:
    if control.kind == "label":
        return [f'<text x="{control.x}" y="{_baseline(control)}" {_text_attrs(control)}>'
                f"{_esc(control.text)}</text>"]
    if control.kind == "textbox":
        clip_id = f"clip-{control.name}"
        return [
            f'<clipPath id="{clip_id}">'
            f'<rect x="{control.x}" y="{control.y}" width="{control.width}" '
            f'height="{control.height}"/></clipPath>',
            _rect(control, "#FFFFFF", TEXTBOX_STROKE),
            f'<text x="{control.x + 3}" y="{_baseline(control)}" {_text_attrs(control)} '
            f'clip-path="url(#{clip_id})">{_esc(control.text)}</text>',
        ]
    if control.kind == "button":
        cx = _halves(2 * control.x + control.width)
        cy = _halves(2 * control.y + control.height)
        return [
            _rect(control, BUTTON_FILL, BUTTON_STROKE),
            f'<text x="{cx}" y="{cy}" {_text_attrs(control)} '
            f'text-anchor="middle" dominant-baseline="central">{_esc(control.text)}</text>',
        ]
    # Registered-but-unstyled kinds render as an outlined rect labeled with
    # the control name.
    return [
        _rect(control, "#FFFFFF", FALLBACK_STROKE),
        f'<text x="{control.x + 3}" y="{_baseline(control)}" {_text_attrs(control)}>'
        f"{_esc(control.name)}</text>",
    ]


def render_svg(form: FormSpec, reg: ControlKindRegistry,
               opts: RenderOptions = RenderOptions()) -> bytes:
    """Render the form as a standalone SVG document (UTF-8 bytes)."""
    diagnostics = validate(form, reg)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        raise ValidationFailed(diagnostics)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{form.width}" '
        f'height="{form.height}" viewBox="0 0 {form.width} {form.height}">',
        f'  <rect x="0" y="0" width="{form.width}" height="{form.height}" '
        f'fill="{BACKGROUND_FILL}"/>',
    ]
    for control in form.controls:
        lines.append(f'  <g data-name="{_esc(control.name)}">')
        lines.extend(f"    {part}" for part in _glyph(control))
        if opts.show_badges and has_comment(control):
            lines.append(f'    <circle cx="{control.x + control.width - 5}" '
                         f'cy="{control.y + 5}" r="4" fill="{BADGE_FILL}"/>')
        lines.append("  </g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
