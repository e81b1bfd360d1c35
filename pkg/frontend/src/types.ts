/** Wire-format types: these mirror the server's document schema exactly.
 * The editor must never add keys beyond these (the server parses strictly).
 */

export type ExtraValue = boolean | number | string;

export interface FontData {
  family: string;
  size_pt: number;
  color: string;
  bold: boolean;
  italic: boolean;
}

export interface ControlData {
  name: string;
  kind: string;
  text: string;
  x: number;
  y: number;
  width: number;
  height: number;
  font: FontData;
  comment?: string;
  extra?: Record<string, ExtraValue>;
}

export interface FormData {
  name: string;
  title: string;
  width: number;
  height: number;
  controls: ControlData[];
}

export interface FormDocumentData {
  athos_version: 1;
  form: FormData;
}

export interface DiagnosticData {
  severity: "error" | "warning";
  code: string;
  path: string;
  message: string;
}

export interface FormSummary {
  id: string;
  name: string;
  updated_at: string;
}

export type ScalarType = "bool" | "int" | "string" | "color";

export interface ExtraPropMeta {
  name: string;
  type: ScalarType;
  default: ExtraValue;
}

export interface KindMeta {
  id: string;
  label: string;
  width: number;
  height: number;
  extras: ExtraPropMeta[];
}

/** Client-side mirror of the server's built-in kind registry (defaults and
 * property schemas drive the toolbox and the properties panel; the server
 * stays authoritative). */
export const KINDS: KindMeta[] = [
  {
    id: "label", label: "Label", width: 100, height: 23,
    extras: [{ name: "autosize", type: "bool", default: true }],
  },
  {
    id: "textbox", label: "TextBox", width: 100, height: 20,
    extras: [
      { name: "multiline", type: "bool", default: false },
      { name: "readonly", type: "bool", default: false },
    ],
  },
  { id: "button", label: "Button", width: 75, height: 23, extras: [] },
];

export function kindMeta(id: string): KindMeta | undefined {
  return KINDS.find((k) => k.id === id);
}

export const DEFAULT_FONT: FontData = {
  family: "Microsoft Sans Serif",
  size_pt: 8.25,
  color: "#000000",
  bold: false,
  italic: false,
};
