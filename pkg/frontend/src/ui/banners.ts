/** Footer area: network-failure banner, save state, and the diagnostics
 * list from the last save/validate round-trip. */

import { EditorState } from "../state";

export function renderStatusBar(host: HTMLElement, state: EditorState): void {
  const banner = document.createElement("div");
  banner.className = "net-banner";
  const saveState = document.createElement("div");
  saveState.className = "save-state";
  const list = document.createElement("div");
  list.className = "diagnostics";
  host.append(banner, saveState, list);

  const render = () => {
    banner.textContent = state.networkError ?? "";
    banner.style.display = state.networkError ? "block" : "none";
    saveState.textContent = state.dirty ? "Unsaved changes…" : "Saved";
    list.textContent = "";
    for (const d of state.diagnostics) {
      const row = document.createElement("div");
      row.className = `diag diag-${d.severity}`;
      row.textContent = `${d.severity.toUpperCase()} ${d.code} ${d.path}: ${d.message}`;
      list.appendChild(row);
    }
  };
  state.subscribe(render);
  render();
}
