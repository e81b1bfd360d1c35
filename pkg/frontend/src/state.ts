/** Editor state: the mirrored document, selection, dirty flag and the
 * autosave loop (debounced 1s, one PUT in flight at a time). */

import { ApiError, saveForm, validateForm } from "./api";
import { toWire } from "./doc";
import { DiagnosticData, FormData, FormDocumentData } from "./types";

export const AUTOSAVE_DELAY_MS = 1000;

type Listener = () => void;

export class EditorState {
  doc: FormDocumentData;
  serverId: string | null;
  selected: string | null = null;
  dirty = false;
  diagnostics: DiagnosticData[] = [];
  networkError: string | null = null;

  private listeners = new Set<Listener>();
  private revision = 0;
  private savedRevision = 0;
  private saveTimer: ReturnType<typeof setTimeout> | null = null;
  private inFlight: Promise<void> | null = null;

  constructor(doc: FormDocumentData, serverId: string | null) {
    this.doc = doc;
    this.serverId = serverId;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  get form(): FormData {
    return this.doc.form;
  }

  /** Apply a pure edit to the form, mark dirty and schedule an autosave. */
  apply(edit: (form: FormData) => FormData): void {
    this.doc = { ...this.doc, form: edit(this.doc.form) };
    this.revision += 1;
    this.dirty = true;
    this.scheduleSave();
    this.emit();
  }

  select(name: string | null): void {
    if (this.selected === name) return;
    this.selected = name;
    this.emit();
  }

  private scheduleSave(): void {
    if (this.saveTimer !== null) clearTimeout(this.saveTimer);
    this.saveTimer = setTimeout(() => {
      this.saveTimer = null;
      void this.save();
    }, AUTOSAVE_DELAY_MS);
  }

  /** Save now. Concurrent calls coalesce: while a PUT is in flight the next
   * save waits for it, then re-checks whether the document moved on. */
  async save(): Promise<void> {
    if (!this.serverId) return;
    while (this.inFlight) await this.inFlight.catch(() => undefined);
    if (this.revision === this.savedRevision) return;

    const id = this.serverId;
    const revision = this.revision;
    const payload = toWire(this.doc);
    let succeeded = false;
    this.inFlight = (async () => {
      try {
        await saveForm(id, payload);
        succeeded = true;
        this.savedRevision = revision;
        if (this.revision === revision) this.dirty = false;
        this.networkError = null;
        this.diagnostics = await validateForm(id); // warnings, non-blocking
      } catch (err) {
        if (err instanceof ApiError && err.status === 422) {
          this.diagnostics = err.diagnostics;
        } else if (err instanceof ApiError && err.status === 0) {
          this.networkError = err.message;
        } else {
          this.networkError = err instanceof Error ? err.message : String(err);
        }
      }
    })();
    try {
      await this.inFlight;
    } finally {
      this.inFlight = null;
      this.emit();
    }
    // An edit raced a successful PUT: push the newer document too. Failed
    // saves do not retry here; the next edit reschedules the autosave.
    if (succeeded && this.revision !== revision && this.saveTimer === null) {
      await this.save();
    }
  }

  /** For tests and the save button: resolve once nothing is queued. */
  async flush(): Promise<void> {
    if (this.saveTimer !== null) {
      clearTimeout(this.saveTimer);
      this.saveTimer = null;
    }
    await this.save();
  }

  hasErrors(): boolean {
    return this.diagnostics.some((d) => d.severity === "error");
  }
}
