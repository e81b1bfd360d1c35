/** Properties panel (control or form) and the comment dialog. The extra
 * property editors are generated from the kind schema, so registry
 * extensions appear automatically. */

import {
  findControl,
  hasComment,
  identifierProblem,
  renameControl,
  resizeControl,
  setComment,
  setExtra,
  setFont,
  setFormProps,
  setText,
  moveControl,
} from "../doc";
import { EditorState } from "../state";
import { ControlData, ExtraPropMeta, kindMeta } from "../types";

function field(labelText: string, input: HTMLElement): HTMLElement {
  const row = document.createElement("label");
  row.className = "prop-row";
  const caption = document.createElement("span");
  caption.className = "prop-label";
  caption.textContent = labelText;
  row.append(caption, input);
  return row;
}

function textInput(value: string, onCommit: (v: string) => void): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "text";
  input.value = value;
  input.addEventListener("change", () => onCommit(input.value));
  return input;
}

function intInput(value: number, onCommit: (v: number) => void): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "number";
  input.value = String(value);
  input.addEventListener("change", () => {
    const parsed = Math.round(Number(input.value));
    if (Number.isFinite(parsed)) onCommit(parsed);
    else input.value = String(value);
  });
  return input;
}

function checkbox(value: boolean, onCommit: (v: boolean) => void): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "checkbox";
  input.checked = value;
  input.addEventListener("change", () => onCommit(input.checked));
  return input;
}

export class PropertiesPanel {
  private panel: HTMLElement;

  constructor(
    host: HTMLElement,
    private state: EditorState,
    private openComment: (name: string) => void,
  ) {
    this.panel = document.createElement("div");
    this.panel.className = "props";
    host.appendChild(this.panel);
    state.subscribe(() => this.render());
    this.render();
  }

  focus(): void {
    this.panel.querySelector("input")?.focus();
  }

  render(): void {
    this.panel.textContent = "";
    const control = this.state.selected
      ? findControl(this.state.form, this.state.selected)
      : undefined;
    if (control) this.renderControl(control);
    else this.renderForm();
  }

  private heading(text: string): void {
    const h = document.createElement("div");
    h.className = "props-heading";
    h.textContent = text;
    this.panel.appendChild(h);
  }

  private renderForm(): void {
    const form = this.state.form;
    this.heading("Form");
    const nameError = document.createElement("div");
    nameError.className = "inline-error";
    const nameBox = textInput(form.name, (value) => {
      const problem = identifierProblem(form, value, form.name);
      if (problem && value !== form.name) {
        nameError.textContent = `name ${problem}`;
        return;
      }
      nameError.textContent = "";
      this.state.apply((f) => setFormProps(f, { name: value }));
    });
    this.panel.append(
      field("Name", nameBox),
      nameError,
      field("Title", textInput(form.title, (v) =>
        this.state.apply((f) => setFormProps(f, { title: v })))),
      field("Width", intInput(form.width, (v) =>
        this.state.apply((f) => setFormProps(f, { width: v })))),
      field("Height", intInput(form.height, (v) =>
        this.state.apply((f) => setFormProps(f, { height: v })))),
    );
  }

  private renderControl(control: ControlData): void {
    const name = control.name;
    this.heading(`${control.kind} — ${name}`);

    const nameError = document.createElement("div");
    nameError.className = "inline-error";
    const nameBox = textInput(name, (value) => {
      if (value === name) return;
      const problem = identifierProblem(this.state.form, value, name);
      if (problem) {
        nameError.textContent = `name ${problem}`;
        return;
      }
      nameError.textContent = "";
      const wasSelected = this.state.selected === name;
      this.state.apply((f) => renameControl(f, name, value));
      if (wasSelected) this.state.select(value);
    });

    this.panel.append(
      field("Name", nameBox),
      nameError,
      field("Text", textInput(control.text, (v) =>
        this.state.apply((f) => setText(f, name, v)))),
      field("X", intInput(control.x, (v) =>
        this.state.apply((f) => moveControl(f, name, v, control.y)))),
      field("Y", intInput(control.y, (v) =>
        this.state.apply((f) => moveControl(f, name, control.x, v)))),
      field("Width", intInput(control.width, (v) =>
        this.state.apply((f) => resizeControl(f, name, v, control.height)))),
      field("Height", intInput(control.height, (v) =>
        this.state.apply((f) => resizeControl(f, name, control.width, v)))),
    );

    this.heading("Font");
    const font = control.font;
    const colorBox = textInput(font.color, (v) => {
      if (/^#[0-9A-F]{6}$/.test(v)) this.state.apply((f) => setFont(f, name, { color: v }));
    });
    this.panel.append(
      field("Family", textInput(font.family, (v) =>
        this.state.apply((f) => setFont(f, name, { family: v })))),
      field("Size (pt)", (() => {
        const input = document.createElement("input");
        input.type = "number";
        input.step = "0.25";
        input.value = String(font.size_pt);
        input.addEventListener("change", () => {
          const parsed = Number(input.value);
          if (Number.isFinite(parsed) && parsed > 0) {
            this.state.apply((f) => setFont(f, name, { size_pt: parsed }));
          } else input.value = String(font.size_pt);
        });
        return input;
      })()),
      field("Color", colorBox),
      field("Bold", checkbox(font.bold, (v) =>
        this.state.apply((f) => setFont(f, name, { bold: v })))),
      field("Italic", checkbox(font.italic, (v) =>
        this.state.apply((f) => setFont(f, name, { italic: v })))),
    );

    const meta = kindMeta(control.kind);
    if (meta && meta.extras.length > 0) {
      this.heading("Properties");
      for (const prop of meta.extras) {
        this.panel.appendChild(this.extraField(control, prop));
      }
    }

    this.heading("Comment");
    const commentButton = document.createElement("button");
    commentButton.type = "button";
    commentButton.className = "comment-button";
    commentButton.textContent = hasComment(control) ? "Edit comment…" : "Add comment…";
    commentButton.addEventListener("click", () => this.openComment(name));
    this.panel.appendChild(commentButton);
  }

  private extraField(control: ControlData, prop: ExtraPropMeta): HTMLElement {
    const name = control.name;
    const current = control.extra?.[prop.name] ?? prop.default;
    if (prop.type === "bool") {
      return field(prop.name, checkbox(Boolean(current), (v) =>
        this.state.apply((f) => setExtra(f, name, prop.name, v))));
    }
    if (prop.type === "int") {
      return field(prop.name, intInput(Number(current), (v) =>
        this.state.apply((f) => setExtra(f, name, prop.name, v))));
    }
    return field(prop.name, textInput(String(current), (v) =>
      this.state.apply((f) => setExtra(f, name, prop.name, v))));
  }
}

export function openCommentDialog(state: EditorState, name: string): HTMLElement {
  const control = findControl(state.form, name);
  const overlay = document.createElement("div");
  overlay.className = "dialog-overlay";
  const dialog = document.createElement("div");
  dialog.className = "dialog";

  const title = document.createElement("div");
  title.className = "dialog-title";
  title.textContent = `Comment on ${name}`;

  const textarea = document.createElement("textarea");
  textarea.value = control?.comment ?? "";
  textarea.rows = 6;

  const buttons = document.createElement("div");
  buttons.className = "dialog-buttons";
  const make = (label: string, action: () => void) => {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = label;
    button.addEventListener("click", () => {
      action();
      overlay.remove();
    });
    buttons.appendChild(button);
    return button;
  };
  make("Save", () => state.apply((f) => setComment(f, name, textarea.value)));
  make("Clear", () => state.apply((f) => setComment(f, name, undefined)));
  make("Cancel", () => undefined);

  dialog.append(title, textarea, buttons);
  overlay.appendChild(dialog);
  document.body.appendChild(overlay);
  textarea.focus();
  return overlay;
}
