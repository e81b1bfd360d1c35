/** Pure edit operations on the mirrored document.
 * Same semantics as the server's model: auto-naming, verbatim comments with
 * "" meaning none, extras only present when set. Every function returns a
 * new object; nothing is mutated in place.
 */

import {
  ControlData,
  DEFAULT_FONT,
  ExtraValue,
  FontData,
  FormData,
  FormDocumentData,
  kindMeta,
} from "./types";

const IDENTIFIER_RE = /^[A-Za-z_][A-Za-z0-9_]*$/;

// The reserved C# keywords; names colliding with these fail server-side
// validation, so the rename editor pre-checks them.
const CSHARP_KEYWORDS = new Set([
  "abstract", "as", "base", "bool", "break", "byte", "case", "catch",
  "char", "checked", "class", "const", "continue", "decimal", "default",
  "delegate", "do", "double", "else", "enum", "event", "explicit",
  "extern", "false", "finally", "fixed", "float", "for", "foreach",
  "goto", "if", "implicit", "in", "int", "interface", "internal", "is",
  "lock", "long", "namespace", "new", "null", "object", "operator",
  "out", "override", "params", "private", "protected", "public",
  "readonly", "ref", "return", "sbyte", "sealed", "short", "sizeof",
  "stackalloc", "static", "string", "struct", "switch", "this", "throw",
  "true", "try", "typeof", "uint", "ulong", "unchecked", "unsafe",
  "ushort", "using", "virtual", "void", "volatile", "while",
]);

export function isValidIdentifier(name: string): boolean {
  return IDENTIFIER_RE.test(name) && !CSHARP_KEYWORDS.has(name);
}

export function identifierProblem(form: FormData, name: string, current?: string): string | null {
  if (!IDENTIFIER_RE.test(name)) return "must match [A-Za-z_][A-Za-z0-9_]*";
  if (CSHARP_KEYWORDS.has(name)) return "is a reserved C# keyword";
  if (name === form.name && name !== current) return "collides with the form name";
  if (form.controls.some((c) => c.name === name && c.name !== current)) {
    return "collides with another control";
  }
  return null;
}

export function hasComment(control: ControlData): boolean {
  return control.comment !== undefined && control.comment !== "";
}

export function findControl(form: FormData, name: string): ControlData | undefined {
  return form.controls.find((c) => c.name === name);
}

export function emptyDocument(name: string): FormDocumentData {
  return {
    athos_version: 1,
    form: { name, title: name, width: 600, height: 400, controls: [] },
  };
}

function replaceControl(form: FormData, name: string,
                        update: (c: ControlData) => ControlData): FormData {
  return {
    ...form,
    controls: form.controls.map((c) => (c.name === name ? update(c) : c)),
  };
}

export function addControl(form: FormData, kindId: string, x: number, y: number): FormData {
  const meta = kindMeta(kindId);
  if (!meta) throw new Error(`unknown kind ${kindId}`);
  const taken = new Set(form.controls.map((c) => c.name));
  taken.add(form.name);
  let n = 1;
  while (taken.has(`${kindId}${n}`)) n += 1;
  const control: ControlData = {
    name: `${kindId}${n}`,
    kind: kindId,
    text: `${meta.label}${n}`,
    x,
    y,
    width: meta.width,
    height: meta.height,
    font: { ...DEFAULT_FONT },
  };
  if (meta.extras.length > 0) {
    control.extra = Object.fromEntries(meta.extras.map((p) => [p.name, p.default]));
  }
  return { ...form, controls: [...form.controls, control] };
}

export function removeControl(form: FormData, name: string): FormData {
  return { ...form, controls: form.controls.filter((c) => c.name !== name) };
}

export function moveControl(form: FormData, name: string, x: number, y: number): FormData {
  return replaceControl(form, name, (c) => ({ ...c, x, y }));
}

export function resizeControl(form: FormData, name: string,
                              width: number, height: number): FormData {
  return replaceControl(form, name, (c) => ({
    ...c,
    width: Math.max(1, width),
    height: Math.max(1, height),
  }));
}

export function renameControl(form: FormData, from: string, to: string): FormData {
  return replaceControl(form, from, (c) => ({ ...c, name: to }));
}

export function setText(form: FormData, name: string, text: string): FormData {
  return replaceControl(form, name, (c) => ({ ...c, text }));
}

export function setFont(form: FormData, name: string, font: Partial<FontData>): FormData {
  return replaceControl(form, name, (c) => ({ ...c, font: { ...c.font, ...font } }));
}

export function setExtra(form: FormData, name: string, key: string,
                         value: ExtraValue): FormData {
  return replaceControl(form, name, (c) => ({
    ...c,
    extra: { ...(c.extra ?? {}), [key]: value },
  }));
}

/** Verbatim comment; empty or undefined clears (badge predicate off). */
export function setComment(form: FormData, name: string,
                           comment: string | undefined): FormData {
  return replaceControl(form, name, (c) => {
    const next = { ...c };
    if (comment) next.comment = comment;
    else delete next.comment;
    return next;
  });
}

export function setFormProps(form: FormData, props: {
  name?: string; title?: string; width?: number; height?: number;
}): FormData {
  return {
    ...form,
    name: props.name ?? form.name,
    title: props.title ?? form.title,
    width: Math.max(1, props.width ?? form.width),
    height: Math.max(1, props.height ?? form.height),
  };
}

/** Rebuild the document with exactly the schema's keys (and key order), so
 * the strict server parser never sees an invented or leftover field. */
export function toWire(doc: FormDocumentData): FormDocumentData {
  const form = doc.form;
  return {
    athos_version: 1,
    form: {
      name: form.name,
      title: form.title,
      width: form.width,
      height: form.height,
      controls: form.controls.map((c) => {
        const control: ControlData = {
          name: c.name,
          kind: c.kind,
          text: c.text,
          x: c.x,
          y: c.y,
          width: c.width,
          height: c.height,
          font: {
            family: c.font.family,
            size_pt: c.font.size_pt,
            color: c.font.color,
            bold: c.font.bold,
            italic: c.font.italic,
          },
        };
        if (c.comment !== undefined) control.comment = c.comment;
        if (c.extra && Object.keys(c.extra).length > 0) control.extra = { ...c.extra };
        return control;
      }),
    },
  };
}
