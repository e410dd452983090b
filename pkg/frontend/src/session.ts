/**
 * Session flow state machine, independent of the DOM.
 *
 * Screens: instructions (shown once per session, acknowledged before the
 * first item) -> one item at a time -> done. The draft starts from the
 * first-pass correction when present, else from the source; the timer runs
 * from item render to submission. The server cursor is the source of truth:
 * an out-of-order rejection resynchronizes through /next.
 */

import { ApiError, ServiceClient } from "./api.js";
import { DwellTimer } from "./timer.js";

export type Screen = "instructions" | "item" | "done";

export interface UiState {
  screen: Screen;
  sessionId: string;
  itemIndex: number | null;
  source: string | null;
  firstPass: string | null;
  draft: string;
  answered: number;
  total: number;
}

export const INSTRUCTIONS_TEXT =
  "Correct the sentence shown below. Make minimal edits and avoid rewrites: " +
  "change only what is needed to make the sentence well formed, keeping the " +
  "original wording wherever possible. When a first-pass correction is shown, " +
  "improve it further in the text box. Submitting moves to the next sentence; " +
  "you cannot return to earlier ones.";

export class EmptyDraftError extends Error {
  constructor() {
    super("the correction box must not be empty");
    this.name = "EmptyDraftError";
  }
}

export class SessionController {
  private state: UiState | null = null;

  constructor(
    private readonly api: ServiceClient,
    private readonly timer: DwellTimer,
  ) {}

  getState(): UiState {
    if (!this.state) {
      throw new Error("session not started");
    }
    return { ...this.state };
  }

  /** Create a new session; instructions are shown before the first item. */
  async start(editor: string, batchFile: string): Promise<UiState> {
    const created = await this.api.createSession(editor, batchFile);
    this.state = {
      screen: "instructions",
      sessionId: created.session_id,
      itemIndex: null,
      source: null,
      firstPass: null,
      draft: "",
      answered: 0,
      total: created.total,
    };
    return this.getState();
  }

  /** Rejoin an existing session (e.g. page reload): no instructions again,
   * resume at the server cursor. */
  async resume(sessionId: string): Promise<UiState> {
    this.state = {
      screen: "instructions",
      sessionId,
      itemIndex: null,
      source: null,
      firstPass: null,
      draft: "",
      answered: 0,
      total: 0,
    };
    return await this.loadNext();
  }

  /** Acknowledge the instruction screen and render the first item. */
  async acknowledgeInstructions(): Promise<UiState> {
    if (!this.state || this.state.screen !== "instructions") {
      throw new Error("instructions are not on screen");
    }
    return await this.loadNext();
  }

  private async loadNext(): Promise<UiState> {
    const state = this.state!;
    const next = await this.api.next(state.sessionId);
    if (next.done) {
      this.state = {
        ...state,
        screen: "done",
        itemIndex: null,
        source: null,
        firstPass: null,
        draft: "",
        answered: next.answered,
        total: next.total,
      };
      return this.getState();
    }
    // timer starts the moment the item becomes visible
    this.timer.start();
    this.state = {
      ...state,
      screen: "item",
      itemIndex: next.item_index!,
      source: next.source!,
      firstPass: next.first_pass ?? null,
      draft: next.first_pass ?? next.source!,
      answered: next.answered,
      total: next.total,
    };
    return this.getState();
  }

  setDraft(text: string): void {
    if (!this.state || this.state.screen !== "item") {
      throw new Error("no item on screen");
    }
    this.state.draft = text;
  }

  setVisibility(visible: boolean): void {
    this.timer.setVisibility(visible);
  }

  /**
   * Submit the current draft with its dwell time.
   *
   * Empty drafts are rejected locally. A stale cursor (out-of-order
   * rejection from the server) resynchronizes via /next. Network failures
   * propagate with the timer still running so the user can retry.
   */
  async submit(): Promise<UiState> {
    const state = this.state;
    if (!state || state.screen !== "item") {
      throw new Error("no item on screen");
    }
    if (state.draft.trim() === "") {
      throw new EmptyDraftError();
    }
    const elapsed = this.timer.elapsedMs();
    try {
      await this.api.submit(state.sessionId, state.itemIndex!, state.draft, elapsed);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // server cursor disagrees; trust it and re-render
        return await this.loadNext();
      }
      throw error; // retry prompt: timer state is preserved
    }
    this.timer.stop();
    return await this.loadNext();
  }

  async exportJsonl(): Promise<string> {
    const state = this.state;
    if (!state) {
      throw new Error("session not started");
    }
    return await this.api.exportSession(state.sessionId);
  }
}
