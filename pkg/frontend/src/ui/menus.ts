/** Minimal context menu: one floating list, closed by any click elsewhere. */

export interface MenuItem {
  label: string;
  action: () => void;
}

let openMenu: HTMLElement | null = null;

export function closeMenu(): void {
  openMenu?.remove();
  openMenu = null;
}

export function showMenu(x: number, y: number, items: MenuItem[]): HTMLElement {
  closeMenu();
  const menu = document.createElement("div");
  menu.className = "ctx-menu";
  menu.style.left = `${x}px`;
  menu.style.top = `${y}px`;
  for (const item of items) {
    const entry = document.createElement("button");
    entry.type = "button";
    entry.className = "ctx-menu-item";
    entry.textContent = item.label;
    entry.addEventListener("click", (evt) => {
      evt.stopPropagation();
      closeMenu();
      item.action();
    });
    menu.appendChild(entry);
  }
  document.body.appendChild(menu);
  openMenu = menu;
  setTimeout(() => {
    document.addEventListener("click", closeMenu, { once: true });
  }, 0);
  return menu;
}
