import { describe, expect, it } from "vitest";

import {
  addControl,
  emptyDocument,
  hasComment,
  identifierProblem,
  isValidIdentifier,
  moveControl,
  removeControl,
  renameControl,
  resizeControl,
  setComment,
  setExtra,
  setFont,
  setFormProps,
  setText,
  toWire,
} from "../src/doc";
import { FormData } from "../src/types";

function baseForm(): FormData {
  return emptyDocument("MainForm").form;
}

describe("addControl", () => {
  it("uses kind defaults and auto-names button1/Button1", () => {
    const form = addControl(baseForm(), "button", 50, 60);
    expect(form.controls).toHaveLength(1);
    const control = form.controls[0]!;
    expect(control).toMatchObject({
      name: "button1", kind: "button", text: "Button1",
      x: 50, y: 60, width: 75, height: 23,
    });
    expect(control.comment).toBeUndefined();
    expect(control.extra).toBeUndefined();
    expect(control.font).toEqual({
      family: "Microsoft Sans Serif", size_pt: 8.25, color: "#000000",
      bold: false, italic: false,
    });
  });

  it("picks the smallest free index, avoiding the form name", () => {
    let form = addControl(baseForm(), "button", 0, 0);
    form = addControl(form, "button", 10, 10);
    expect(form.controls.map((c) => c.name)).toEqual(["button1", "button2"]);
    const named = { ...baseForm(), name: "textbox1" };
    expect(addControl(named, "textbox", 0, 0).controls[0]!.name).toBe("textbox2");
  });

  it("textbox carries its schema defaults", () => {
    const form = addControl(baseForm(), "textbox", 0, 0);
    expect(form.controls[0]!.extra).toEqual({ multiline: false, readonly: false });
    expect(form.controls[0]!.width).toBe(100);
    expect(form.controls[0]!.height).toBe(20);
  });

  it("does not mutate its input", () => {
    const form = baseForm();
    addControl(form, "button", 0, 0);
    expect(form.controls).toHaveLength(0);
  });
});

describe("edit operations", () => {
  it("move and resize clamp nothing but sizes", () => {
    let form = addControl(baseForm(), "button", 0, 0);
    form = moveControl(form, "button1", -7, 12);
    expect([form.controls[0]!.x, form.controls[0]!.y]).toEqual([-7, 12]);
    form = resizeControl(form, "button1", 0, -5);
    expect([form.controls[0]!.width, form.controls[0]!.height]).toEqual([1, 1]);
  });

  it("rename, text, font, extras", () => {
    let form = addControl(baseForm(), "textbox", 0, 0);
    form = renameControl(form, "textbox1", "nameBox");
    form = setText(form, "nameBox", "hello");
    form = setFont(form, "nameBox", { bold: true, size_pt: 12 });
    form = setExtra(form, "nameBox", "multiline", true);
    const control = form.controls[0]!;
    expect(control.name).toBe("nameBox");
    expect(control.text).toBe("hello");
    expect(control.font.bold).toBe(true);
    expect(control.font.family).toBe("Microsoft Sans Serif");
    expect(control.extra).toEqual({ multiline: true, readonly: false });
  });

  it("removeControl drops exactly one", () => {
    let form = addControl(addControl(baseForm(), "button", 0, 0), "label", 5, 5);
    form = removeControl(form, "button1");
    expect(form.controls.map((c) => c.name)).toEqual(["label1"]);
  });

  it("setFormProps keeps sizes positive", () => {
    const form = setFormProps(baseForm(), { width: 0, height: -4, title: "T" });
    expect([form.width, form.height, form.title]).toEqual([1, 1, "T"]);
  });
});

describe("comments and the badge predicate", () => {
  it("stores verbatim and clears on empty", () => {
    let form = addControl(baseForm(), "button", 0, 0);
    form = setComment(form, "button1", "  check input\n");
    expect(form.controls[0]!.comment).toBe("  check input\n");
    expect(hasComment(form.controls[0]!)).toBe(true);
    form = setComment(form, "button1", "");
    expect(form.controls[0]!.comment).toBeUndefined();
    expect(hasComment(form.controls[0]!)).toBe(false);
  });
});

describe("identifier pre-checks", () => {
  it("format and keyword rules", () => {
    expect(isValidIdentifier("okButton")).toBe(true);
    expect(isValidIdentifier("_x9")).toBe(true);
    expect(isValidIdentifier("9lives")).toBe(false);
    expect(isValidIdentifier("has space")).toBe(false);
    expect(isValidIdentifier("class")).toBe(false);
  });

  it("conflicts inside the form", () => {
    const form = addControl(baseForm(), "button", 0, 0);
    expect(identifierProblem(form, "button1")).toMatch(/another control/);
    expect(identifierProblem(form, "button1", "button1")).toBeNull();
    expect(identifierProblem(form, "MainForm")).toMatch(/form name/);
    expect(identifierProblem(form, "fine2")).toBeNull();
  });
});

describe("toWire", () => {
  it("emits exactly the schema keys in order", () => {
    let form = addControl(baseForm(), "textbox", 1, 2);
    form = setComment(form, "textbox1", "note");
    const wire = toWire({ athos_version: 1, form });
    expect(Object.keys(wire)).toEqual(["athos_version", "form"]);
    expect(Object.keys(wire.form)).toEqual(["name", "title", "width", "height", "controls"]);
    expect(Object.keys(wire.form.controls[0]!)).toEqual([
      "name", "kind", "text", "x", "y", "width", "height", "font", "comment", "extra",
    ]);
    expect(Object.keys(wire.form.controls[0]!.font)).toEqual([
      "family", "size_pt", "color", "bold", "italic",
    ]);
  });

  it("omits absent comment and empty extra", () => {
    const form = addControl(baseForm(), "button", 0, 0);
    const control = toWire({ athos_version: 1, form }).form.controls[0]!;
    expect("comment" in control).toBe(false);
    expect("extra" in control).toBe(false);
  });

  it("strips any stray properties an editor bug might attach", () => {
    const form = addControl(baseForm(), "button", 0, 0);
    (form.controls[0] as unknown as Record<string, unknown>)["$selected"] = true;
    const control = toWire({ athos_version: 1, form }).form.controls[0]!;
    expect("$selected" in control).toBe(false);
  });
});
