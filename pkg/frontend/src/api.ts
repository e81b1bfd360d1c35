/** Thin client for the form service. All validation and export logic lives
 * server-side; this module only moves documents and surfaces errors. */

import { DiagnosticData, FormDocumentData, FormSummary } from "./types";

export type ExportKind = "csharp" | "svg" | "docx";

export class ApiError extends Error {
  constructor(
    message: string,
    public status: number,
    public code: string = "",
    public diagnostics: DiagnosticData[] = [],
  ) {
    super(message);
  }
}

async function request(url: string, init?: RequestInit): Promise<Response> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (err) {
    throw new ApiError(`cannot reach the server: ${String(err)}`, 0, "network");
  }
  if (response.ok) return response;
  let code = "";
  let message = `${response.status} ${response.statusText}`;
  let diagnostics: DiagnosticData[] = [];
  try {
    const body = await response.json();
    code = body.code ?? "";
    message = body.message ?? message;
    diagnostics = body.diagnostics ?? [];
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(message, response.status, code, diagnostics);
}

export async function listForms(): Promise<FormSummary[]> {
  return (await request("/api/forms")).json();
}

export async function createForm(doc: FormDocumentData): Promise<string> {
  const response = await request("/api/forms", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
  return (await response.json()).id;
}

export async function loadForm(id: string): Promise<FormDocumentData> {
  return (await request(`/api/forms/${id}`)).json();
}

export async function saveForm(id: string, doc: FormDocumentData): Promise<void> {
  await request(`/api/forms/${id}`, {
    method: "PUT",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
}

export async function validateForm(id: string): Promise<DiagnosticData[]> {
  return (await request(`/api/forms/${id}/validate`, { method: "POST" })).json();
}

export function exportUrl(id: string, kind: ExportKind): string {
  return `/api/forms/${id}/export/${kind}`;
}

/** Navigate to the export endpoint; the server sets the attachment filename. */
export function downloadExport(id: string, kind: ExportKind): void {
  const anchor = document.createElement("a");
  anchor.href = exportUrl(id, kind);
  anchor.setAttribute("download", "");
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
}
