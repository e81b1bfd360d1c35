/** Composition root: builds the editor layout and wires state, surface,
 * toolbox, panels and export buttons together. */

import { downloadExport, ExportKind } from "./api";
import { addControl } from "./doc";
import { EditorState } from "./state";
import { FormDocumentData } from "./types";
import { renderStatusBar } from "./ui/banners";
import { Canvas, surfacePoint } from "./ui/canvas";
import { openCommentDialog, PropertiesPanel } from "./ui/panels";
import { renderToolbox } from "./ui/toolbox";

export interface App {
  state: EditorState;
  canvas: Canvas;
  panel: PropertiesPanel;
  root: HTMLElement;
}

const EXPORTS: [string, ExportKind][] = [
  ["C#", "csharp"],
  ["Image", "svg"],
  ["Word", "docx"],
];

export function createApp(root: HTMLElement, doc: FormDocumentData,
                          serverId: string | null): App {
  const state = new EditorState(doc, serverId);
  root.classList.add("app");
  root.textContent = "";

  const header = document.createElement("header");
  const brand = document.createElement("div");
  brand.className = "brand";
  brand.textContent = "Athos Designer";
  const toolboxHost = document.createElement("div");
  const actionsHost = document.createElement("div");
  actionsHost.className = "actions";
  header.append(brand, toolboxHost, actionsHost);

  const mainArea = document.createElement("main");
  const surfaceWrap = document.createElement("div");
  surfaceWrap.className = "surface-wrap";
  const panelHost = document.createElement("aside");
  panelHost.className = "panel-host";
  mainArea.append(surfaceWrap, panelHost);

  const footer = document.createElement("footer");
  root.append(header, mainArea, footer);

  const panel = new PropertiesPanel(panelHost, state,
                                    (name) => openCommentDialog(state, name));
  const canvas = new Canvas(surfaceWrap, state, {
    openComment: (name) => openCommentDialog(state, name),
    openProperties: (name) => {
      state.select(name);
      panel.focus();
    },
  });

  renderToolbox(toolboxHost, (kindId, clientX, clientY) => {
    const surfaceRect = canvas.surface.getBoundingClientRect();
    const inside = clientX >= surfaceRect.left && clientY >= surfaceRect.top
      && (surfaceRect.width === 0 || clientX <= surfaceRect.right)
      && (surfaceRect.height === 0 || clientY <= surfaceRect.bottom);
    if (!inside) return;
    const point = surfacePoint(canvas.surface, clientX, clientY);
    let created = "";
    state.apply((form) => {
      const next = addControl(form, kindId, point.x, point.y);
      created = next.controls[next.controls.length - 1]!.name;
      return next;
    });
    state.select(created);
  });

  const saveButton = document.createElement("button");
  saveButton.type = "button";
  saveButton.textContent = "Save";
  saveButton.addEventListener("click", () => void state.flush());
  actionsHost.appendChild(saveButton);

  for (const [label, kind] of EXPORTS) {
    const button = document.createElement("button");
    button.type = "button";
    button.dataset.export = kind;
    button.textContent = `Export ${label}`;
    button.addEventListener("click", () => {
      if (state.serverId) downloadExport(state.serverId, kind);
    });
    actionsHost.appendChild(button);
  }

  renderStatusBar(footer, state);
  return { state, canvas, panel, root };
}
