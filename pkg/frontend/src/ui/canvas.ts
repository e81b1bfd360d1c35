/** The work surface: the form's client area with its controls, selection
 * handles, drag-to-move, drag-to-resize and the red comment badges. */

import { hasComment, moveControl, removeControl, resizeControl } from "../doc";
import { EditorState } from "../state";
import { ControlData } from "../types";
import { showMenu } from "./menus";

export interface CanvasActions {
  openComment: (name: string) => void;
  openProperties: (name: string | null) => void;
}

type ResizeEdge = "e" | "s" | "se";

export function surfacePoint(surface: HTMLElement, clientX: number, clientY: number) {
  const rect = surface.getBoundingClientRect();
  return { x: Math.round(clientX - rect.left), y: Math.round(clientY - rect.top) };
}

export class Canvas {
  readonly surface: HTMLElement;

  constructor(
    host: HTMLElement,
    private state: EditorState,
    private actions: CanvasActions,
  ) {
    this.surface = document.createElement("div");
    this.surface.className = "surface";
    host.appendChild(this.surface);

    this.surface.addEventListener("mousedown", (evt) => {
      if (evt.target === this.surface && evt.button === 0) this.state.select(null);
    });
    this.surface.addEventListener("contextmenu", (evt) => {
      if (evt.target !== this.surface) return;
      evt.preventDefault();
      this.state.select(null);
      showMenu(evt.clientX, evt.clientY, [
        { label: "Form properties…", action: () => this.actions.openProperties(null) },
      ]);
    });

    state.subscribe(() => this.render());
    this.render();
  }

  render(): void {
    const form = this.state.form;
    this.surface.style.width = `${form.width}px`;
    this.surface.style.height = `${form.height}px`;
    this.surface.textContent = "";
    for (const control of form.controls) {
      this.surface.appendChild(this.renderControl(control));
    }
  }

  private renderControl(control: ControlData): HTMLElement {
    const el = document.createElement("div");
    el.className = `ctl ctl-${control.kind}`;
    el.dataset.name = control.name;
    el.style.left = `${control.x}px`;
    el.style.top = `${control.y}px`;
    el.style.width = `${control.width}px`;
    el.style.height = `${control.height}px`;
    el.style.fontFamily = control.font.family;
    el.style.fontSize = `${control.font.size_pt * 4 / 3}px`;
    el.style.color = control.font.color;
    if (control.font.bold) el.style.fontWeight = "bold";
    if (control.font.italic) el.style.fontStyle = "italic";

    const text = document.createElement("span");
    text.className = "ctl-text";
    text.textContent = control.kind === "label" || control.kind === "textbox"
      || control.kind === "button" ? control.text : control.name;
    el.appendChild(text);

    if (hasComment(control)) {
      const badge = document.createElement("span");
      badge.className = "badge";
      badge.title = control.comment ?? "";
      el.appendChild(badge);
    }

    if (this.state.selected === control.name) {
      el.classList.add("selected");
      for (const edge of ["e", "s", "se"] as ResizeEdge[]) {
        const handle = document.createElement("span");
        handle.className = `handle handle-${edge}`;
        handle.dataset.edge = edge;
        handle.addEventListener("mousedown", (evt) => {
          evt.stopPropagation();
          evt.preventDefault();
          this.startResize(control.name, edge, evt);
        });
        el.appendChild(handle);
      }
    }

    el.addEventListener("mousedown", (evt) => {
      if (evt.button !== 0 || (evt.target as HTMLElement).classList.contains("handle")) return;
      evt.preventDefault();
      this.state.select(control.name);
      this.startMove(control.name, evt);
    });
    el.addEventListener("contextmenu", (evt) => {
      evt.preventDefault();
      evt.stopPropagation();
      this.state.select(control.name);
      showMenu(evt.clientX, evt.clientY, [
        { label: "Properties…", action: () => this.actions.openProperties(control.name) },
        { label: "Comment…", action: () => this.actions.openComment(control.name) },
        { label: "Delete", action: () => this.state.apply((f) => removeControl(f, control.name)) },
      ]);
    });
    return el;
  }

  private startMove(name: string, down: MouseEvent): void {
    const control = this.state.form.controls.find((c) => c.name === name);
    if (!control) return;
    const offsetX = down.clientX - control.x;
    const offsetY = down.clientY - control.y;
    let moved = false;
    const onMove = (move: MouseEvent) => {
      moved = true;
      const x = Math.round(move.clientX - offsetX);
      const y = Math.round(move.clientY - offsetY);
      this.state.apply((f) => moveControl(f, name, x, y));
    };
    const onUp = (up: MouseEvent) => {
      document.removeEventListener("mousemove", onMove);
      document.removeEventListener("mouseup", onUp);
      if (moved) {
        const x = Math.round(up.clientX - offsetX);
        const y = Math.round(up.clientY - offsetY);
        this.state.apply((f) => moveControl(f, name, x, y));
      }
    };
    document.addEventListener("mousemove", onMove);
    document.addEventListener("mouseup", onUp);
  }

  private startResize(name: string, edge: ResizeEdge, down: MouseEvent): void {
    const control = this.state.form.controls.find((c) => c.name === name);
    if (!control) return;
    const startW = control.width;
    const startH = control.height;
    const fromX = down.clientX;
    const fromY = down.clientY;
    const resize = (evt: MouseEvent) => {
      const dx = evt.clientX - fromX;
      const dy = evt.clientY - fromY;
      const width = edge === "s" ? startW : startW + dx;
      const height = edge === "e" ? startH : startH + dy;
      this.state.apply((f) => resizeControl(f, name, Math.round(width), Math.round(height)));
    };
    const onUp = (evt: MouseEvent) => {
      document.removeEventListener("mousemove", resize);
      document.removeEventListener("mouseup", onUp);
      resize(evt);
    };
    document.addEventListener("mousemove", resize);
    document.addEventListener("mouseup", onUp);
  }
}
