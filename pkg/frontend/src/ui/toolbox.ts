/** Toolbox strip: one entry per registered kind; drag an entry onto the
 * surface to place a control at the drop point. */

import { KINDS } from "../types";

export function renderToolbox(
  host: HTMLElement,
  onDrop: (kindId: string, clientX: number, clientY: number) => void,
): void {
  host.classList.add("toolbox");
  for (const kind of KINDS) {
    const item = document.createElement("div");
    item.className = "toolbox-item";
    item.dataset.kind = kind.id;
    item.textContent = kind.label;
    item.addEventListener("mousedown", (down) => {
      down.preventDefault();
      const ghost = document.createElement("div");
      ghost.className = "drag-ghost";
      ghost.textContent = kind.label;
      document.body.appendChild(ghost);

      const onMove = (move: MouseEvent) => {
        ghost.style.left = `${move.clientX + 4}px`;
        ghost.style.top = `${move.clientY + 4}px`;
      };
      const onUp = (up: MouseEvent) => {
        document.removeEventListener("mousemove", onMove);
        document.removeEventListener("mouseup", onUp);
        ghost.remove();
        onDrop(kind.id, up.clientX, up.clientY);
      };
      document.addEventListener("mousemove", onMove);
      document.addEventListener("mouseup", onUp);
    });
    host.appendChild(item);
  }
}
