import { createForm, loadForm } from "./api";
import { emptyDocument } from "./doc";
import { createApp } from "./app";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  try {
    let id = window.location.hash.replace(/^#/, "");
    let doc;
    if (id) {
      doc = await loadForm(id);
    } else {
      doc = emptyDocument("MainForm");
      id = await createForm(doc);
      window.location.hash = id;
    }
    createApp(root, doc, id);
  } catch (err) {
    root.textContent = `Failed to start the designer: ${err instanceof Error ? err.message : err}`;
    root.className = "boot-error";
  }
}

void boot();
