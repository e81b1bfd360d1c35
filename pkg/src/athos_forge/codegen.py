"""Compile a validated form into a single compilable C# WinForms class.

Output is deterministic to the byte: fixed header (no timestamp), LF line
endings, 4-space indents, one trailing newline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .keywords import CSHARP_KEYWORDS
from .model import (
    IDENTIFIER_RE,
    ControlKindRegistry,
    ControlSpec,
    FormSpec,
    InvalidValue,
    Severity,
    ValidationFailed,
    validate,
)

HEADER = "// Generated by athos-forge. Do not edit."

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\r": "\\r", "\n": "\\n", "\t": "\\t"}


def escape_csharp_string(text: str) -> str:
    """Escape backslash, quote, CR, LF and TAB; everything else passes through."""
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def _float_literal(value: float) -> str:
    if value.is_integer():
        return f"{int(value)}F"
    return f"{value!r}F"


def _font_style(bold: bool, italic: bool) -> str:
    flags = [name for name, on in (("Bold", bold), ("Italic", italic)) if on]
    if not flags:
        return "System.Drawing.FontStyle.Regular"
    return " | ".join(f"System.Drawing.FontStyle.{f}" for f in flags)


def _extra_literal(scalar_type: str, value) -> str:
    if scalar_type == "bool":
        return "true" if value else "false"
    if scalar_type == "int":
        return str(value)
    if scalar_type == "color":
        return f'System.Drawing.ColorTranslator.FromHtml("{escape_csharp_string(value)}")'
    return f'"{escape_csharp_string(value)}"'


@dataclass(frozen=True)
class CodegenOptions:
    namespace_name: str = "AthosGenerated"
    emit_comments: bool = True

    def __post_init__(self):
        for segment in self.namespace_name.split("."):
            if not IDENTIFIER_RE.match(segment) or segment in CSHARP_KEYWORDS:
                raise InvalidValue("namespace_name",
                                   f'"{self.namespace_name}" is not a valid namespace name')


@dataclass(frozen=True)
class SourceFile:
    filename: str
    content: str


def _control_block(control: ControlSpec, reg: ControlKindRegistry,
                   emit_comments: bool) -> list[str]:
    kind = reg.get(control.kind)
    this = f"this.{control.name}"
    lines = [f"// {control.name}"]
    if emit_comments and control.comment:
        lines.extend(f"// {line}" for line in control.comment.splitlines())
    lines.extend([
        f'{this}.Name = "{escape_csharp_string(control.name)}";',
        f'{this}.Text = "{escape_csharp_string(control.text)}";',
        f"{this}.Location = new System.Drawing.Point({control.x}, {control.y});",
        f"{this}.Size = new System.Drawing.Size({control.width}, {control.height});",
        f'{this}.Font = new System.Drawing.Font("{escape_csharp_string(control.font.family)}", '
        f"{_float_literal(control.font.size_pt)}, "
        f"{_font_style(control.font.bold, control.font.italic)});",
        f'{this}.ForeColor = System.Drawing.ColorTranslator.FromHtml("{control.font.color}");',
    ])
    schema = {p.name: p for p in kind.extra_schema}
    for key, value in control.extra.items():
        prop = schema[key]
        lines.append(f"{this}.{prop.csharp_name} = {_extra_literal(prop.type, value)};")
    return lines


def generate_csharp(form: FormSpec, reg: ControlKindRegistry,
                    opts: CodegenOptions = CodegenOptions()) -> SourceFile:
    """Generate `<form.name>.cs`. The form must validate with no errors."""
    diagnostics = validate(form, reg)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        raise ValidationFailed(diagnostics)

    body: list[str] = [f"this.{c.name} = new {reg.get(c.kind).csharp_type}();"
                       for c in form.controls]
    for control in form.controls:
        body.extend(_control_block(control, reg, opts.emit_comments))
    body.extend(f"this.Controls.Add(this.{c.name});" for c in form.controls)
    body.extend([
        f"this.ClientSize = new System.Drawing.Size({form.width}, {form.height});",
        f'this.Text = "{escape_csharp_string(form.title)}";',
        f'this.Name = "{escape_csharp_string(form.name)}";',
    ])

    lines = [
        HEADER,
        f"namespace {opts.namespace_name}",
        "{",
        f"    public partial class {form.name} : System.Windows.Forms.Form",
        "    {",
    ]
    if form.controls:
        lines.extend(f"        private {reg.get(c.kind).csharp_type} {c.name};"
                     for c in form.controls)
        lines.append("")
    lines.extend([
        f"        public {form.name}()",
        "        {",
        "            InitializeComponent();",
        "        }",
        "",
        "        private void InitializeComponent()",
        "        {",
    ])
    lines.extend(f"            {line}" for line in body)
    lines.extend([
        "        }",
        "    }",
        "}",
    ])
    return SourceFile(filename=f"{form.name}.cs", content="\n".join(lines) + "\n")
