/** DOM-level end-to-end tests: the real editor code driven by synthetic
 * mouse events against the mock service (no browser automation available
 * in this environment, so happy-dom plays the browser). */

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { createApp, App } from "../src/app";
import { addControl, renameControl } from "../src/doc";
import { emptyDocument } from "../src/doc";
import { MockServer } from "./mockserver";

let server: MockServer;
let app: App;
const FORM_ID = "000000000001";

beforeEach(async () => {
  server = new MockServer();
  server.install();
  document.body.innerHTML = "";
  const doc = emptyDocument("MainForm");
  const id = await (await fetch("/api/forms", {
    method: "POST", body: JSON.stringify(doc),
  })).json();
  expect(id.id).toBe(FORM_ID);
  const root = document.createElement("div");
  document.body.appendChild(root);
  app = createApp(root, doc, FORM_ID);
});

afterEach(() => {
  server.restore();
});

function mouse(type: string, target: EventTarget, clientX = 0, clientY = 0): void {
  target.dispatchEvent(new MouseEvent(type, {
    bubbles: true, cancelable: true, clientX, clientY, button: 0,
  }));
}

function controlEl(name: string): HTMLElement {
  const el = document.querySelector(`.ctl[data-name="${name}"]`);
  expect(el, `control ${name} should be on the surface`).not.toBeNull();
  return el as HTMLElement;
}

function panelInput(caption: string): HTMLInputElement {
  const rows = [...document.querySelectorAll(".prop-row")];
  const row = rows.find((r) => r.querySelector(".prop-label")?.textContent === caption);
  expect(row, `panel row ${caption}`).toBeTruthy();
  return row!.querySelector("input") as HTMLInputElement;
}

function commit(input: HTMLInputElement, value: string): void {
  input.value = value;
  input.dispatchEvent(new Event("change", { bubbles: true }));
}

function menuItem(label: string): HTMLElement {
  const item = [...document.querySelectorAll(".ctx-menu-item")]
    .find((b) => b.textContent === label);
  expect(item, `menu item ${label}`).toBeTruthy();
  return item as HTMLElement;
}

describe("toolbox drag and drop", () => {
  it("lists the three kinds across the top", () => {
    const labels = [...document.querySelectorAll(".toolbox-item")].map((e) => e.textContent);
    expect(labels).toEqual(["Label", "TextBox", "Button"]);
  });

  it("dropping Button at (50,60) saves a 75x23 control there", async () => {
    const item = document.querySelector('.toolbox-item[data-kind="button"]')!;
    mouse("mousedown", item);
    mouse("mousemove", document, 30, 30);
    mouse("mouseup", document, 50, 60);

    expect(controlEl("button1")).toBeTruthy();
    expect(app.state.selected).toBe("button1");

    await app.state.flush();
    const saved = server.forms.get(FORM_ID)!;
    expect(saved.form.controls).toHaveLength(1);
    expect(saved.form.controls[0]).toMatchObject({
      name: "button1", kind: "button", x: 50, y: 60, width: 75, height: 23,
    });
  });

  it("dropping outside the surface does nothing", () => {
    const item = document.querySelector('.toolbox-item[data-kind="label"]')!;
    mouse("mousedown", item);
    mouse("mouseup", document, -40, -10);
    expect(app.state.form.controls).toHaveLength(0);
  });
});

describe("moving and resizing", () => {
  beforeEach(() => {
    app.state.apply((f) => addControl(f, "button", 50, 60));
    app.state.select("button1");
  });

  it("dragging a control moves it and the panel tracks live", () => {
    const el = controlEl("button1");
    mouse("mousedown", el, 55, 65);
    mouse("mousemove", document, 105, 85);
    mouse("mouseup", document, 105, 85);
    const moved = app.state.form.controls[0]!;
    expect([moved.x, moved.y]).toEqual([100, 80]);
    expect(panelInput("X").value).toBe("100");
    expect(panelInput("Y").value).toBe("80");
  });

  it("dragging the corner handle resizes", () => {
    const handle = controlEl("button1").querySelector(".handle-se")!;
    mouse("mousedown", handle, 125, 83);
    mouse("mousemove", document, 145, 93);
    mouse("mouseup", document, 145, 93);
    const resized = app.state.form.controls[0]!;
    expect([resized.width, resized.height]).toEqual([95, 33]);
  });

  it("panel edits commit on change", () => {
    commit(panelInput("X"), "200");
    commit(panelInput("Width"), "90");
    const control = app.state.form.controls[0]!;
    expect(control.x).toBe(200);
    expect(control.width).toBe(90);
  });
});

describe("context menus, properties, comments", () => {
  beforeEach(() => {
    app.state.apply((f) => addControl(f, "textbox", 10, 10));
  });

  it("right-click opens Properties…/Comment…, right-click on surface opens form props", () => {
    const el = controlEl("textbox1");
    el.dispatchEvent(new MouseEvent("contextmenu", { bubbles: true, cancelable: true }));
    expect(menuItem("Properties…")).toBeTruthy();
    expect(menuItem("Comment…")).toBeTruthy();
    menuItem("Properties…").click();
    expect(app.state.selected).toBe("textbox1");
    expect(document.querySelector(".props-heading")!.textContent).toContain("textbox1");

    app.canvas.surface.dispatchEvent(
      new MouseEvent("contextmenu", { bubbles: true, cancelable: true }));
    menuItem("Form properties…").click();
    expect(document.querySelector(".props-heading")!.textContent).toBe("Form");
  });

  it("schema-driven extra editors appear for the kind", () => {
    app.state.select("textbox1");
    expect(panelInput("multiline").type).toBe("checkbox");
    expect(panelInput("readonly").type).toBe("checkbox");
    panelInput("multiline").click();
    expect(app.state.form.controls[0]!.extra).toEqual({ multiline: true, readonly: false });
  });

  it("comment set/clear toggles the red badge", () => {
    const el = controlEl("textbox1");
    expect(el.querySelector(".badge")).toBeNull();

    el.dispatchEvent(new MouseEvent("contextmenu", { bubbles: true, cancelable: true }));
    menuItem("Comment…").click();
    const textarea = document.querySelector(".dialog textarea") as HTMLTextAreaElement;
    textarea.value = "check input";
    const save = [...document.querySelectorAll(".dialog-buttons button")]
      .find((b) => b.textContent === "Save") as HTMLElement;
    save.click();
    expect(controlEl("textbox1").querySelector(".badge")).not.toBeNull();
    expect(app.state.form.controls[0]!.comment).toBe("check input");

    controlEl("textbox1").dispatchEvent(
      new MouseEvent("contextmenu", { bubbles: true, cancelable: true }));
    menuItem("Comment…").click();
    const clear = [...document.querySelectorAll(".dialog-buttons button")]
      .find((b) => b.textContent === "Clear") as HTMLElement;
    clear.click();
    expect(controlEl("textbox1").querySelector(".badge")).toBeNull();
    expect(app.state.form.controls[0]!.comment).toBeUndefined();
  });

  it("rename conflicts show an inline error and are not applied", () => {
    app.state.apply((f) => addControl(f, "button", 40, 40));
    app.state.select("button1");
    commit(panelInput("Name"), "textbox1");
    expect(document.querySelector(".inline-error")!.textContent)
      .toMatch(/collides with another control/);
    expect(app.state.form.controls.map((c) => c.name)).toEqual(["textbox1", "button1"]);
    commit(panelInput("Name"), "okButton");
    expect(app.state.form.controls.map((c) => c.name)).toEqual(["textbox1", "okButton"]);
    expect(app.state.selected).toBe("okButton");
  });
});

describe("save and diagnostics", () => {
  it("duplicate names slipping past the precheck surface E_DUP_NAME with path", async () => {
    app.state.apply((f) => addControl(addControl(f, "button", 0, 0), "button", 30, 30));
    app.state.apply((f) => renameControl(f, "button2", "button1"));
    await app.state.flush();
    const rows = [...document.querySelectorAll(".diag")];
    expect(rows.some((r) =>
      r.textContent!.includes("E_DUP_NAME") && r.textContent!.includes("controls/1/name"),
    )).toBe(true);
    expect(rows[0]!.className).toContain("diag-error");
  });

  it("warnings display non-blockingly after a clean save", async () => {
    app.state.apply((f) => addControl(f, "button", 9000, 9000));
    await app.state.flush();
    expect(app.state.dirty).toBe(false);
    const rows = [...document.querySelectorAll(".diag")];
    expect(rows.some((r) => r.textContent!.includes("W_OUT_OF_BOUNDS"))).toBe(true);
    expect(rows[0]!.className).toContain("diag-warning");
  });

  it("network failures raise the banner", async () => {
    server.failNetwork = true;
    app.state.apply((f) => addControl(f, "label", 1, 1));
    await app.state.flush();
    const banner = document.querySelector(".net-banner") as HTMLElement;
    expect(banner.style.display).toBe("block");
    expect(banner.textContent).toMatch(/cannot reach the server/);
  });
});

describe("export buttons", () => {
  it("download from the three endpoints, byte-equal to direct GETs", async () => {
    app.state.apply((f) => addControl(f, "button", 5, 5));
    await app.state.flush();

    const clicked: string[] = [];
    document.addEventListener("click", (evt) => {
      const anchor = evt.target as HTMLElement;
      if (anchor.tagName === "A") {
        clicked.push((anchor as HTMLAnchorElement).getAttribute("href")!);
        evt.preventDefault();
      }
    }, true);

    for (const kind of ["csharp", "svg", "docx"]) {
      (document.querySelector(`button[data-export="${kind}"]`) as HTMLElement).click();
    }
    expect(clicked).toEqual([
      `/api/forms/${FORM_ID}/export/csharp`,
      `/api/forms/${FORM_ID}/export/svg`,
      `/api/forms/${FORM_ID}/export/docx`,
    ]);

    for (const href of clicked) {
      const viaButton = await (await fetch(href)).text();
      const direct = await (await fetch(href)).text();
      expect(viaButton).toBe(direct);
      expect(viaButton.length).toBeGreaterThan(0);
    }
    const disposition = (await fetch(clicked[0]!)).headers.get("Content-Disposition");
    expect(disposition).toBe('attachment; filename="MainForm.cs"');
  });
});
