"""athos-forge: declarative form documents compiled to C# source, SVG
mockups and Word review documents, with an HTTP designer backend."""

from .codegen import CodegenOptions, SourceFile, generate_csharp
from .document import (
    FormDocument,
    ParseError,
    ParseErrorKind,
    parse_form,
    serialize_form,
)
from .docx import BadImage, DocxOptions, DocxPackage, generate_docx, pt_to_twentieths
from .model import (
    DEFAULT_FONT,
    AthosError,
    ControlKindDef,
    ControlKindRegistry,
    ControlSpec,
    Diagnostic,
    DuplicateKind,
    ExtraPropDef,
    FontSpec,
    FormSpec,
    InvalidKindDef,
    InvalidValue,
    Severity,
    UnknownControl,
    UnknownKind,
    ValidationFailed,
    add_control,
    default_registry,
    has_comment,
    move_control,
    register_kind,
    resize_control,
    set_comment,
    set_extra,
    set_font,
    set_form_size,
    set_text,
    validate,
)
from .store import FormStore, NotFound, StoredForm
from .svg import RenderOptions, pt_to_px, render_svg

__version__ = "0.1.0"
