/**
 * DOM wiring: renders the instruction screen, one item at a time with an
 * editable draft box, a progress bar, and a retry prompt on network errors.
 * All flow decisions live in SessionController; this layer only reflects
 * UiState and forwards events.
 */

import { ServiceClient } from "./api.js";
import { EmptyDraftError, INSTRUCTIONS_TEXT, SessionController, UiState } from "./session.js";
import { DwellTimer } from "./timer.js";

export function mountApp(root: HTMLElement, baseUrl: string): SessionController {
  const api = new ServiceClient(baseUrl);
  const timer = new DwellTimer(() => performance.now());
  const controller = new SessionController(api, timer);

  document.addEventListener("visibilitychange", () => {
    controller.setVisibility(document.visibilityState === "visible");
  });

  root.innerHTML = `
    <div id="start-screen">
      <h1>Post-editing session</h1>
      <label>Editor name <input id="editor-name" type="text"></label>
      <label>Batch file <input id="batch-file" type="text"></label>
      <button id="start-button">Start session</button>
    </div>
    <div id="instructions-screen" hidden>
      <h1>Instructions</h1>
      <p id="instructions-text"></p>
      <button id="ack-button">I understand, start editing</button>
    </div>
    <div id="item-screen" hidden>
      <div id="progress"></div>
      <p>Source sentence (read-only):</p>
      <blockquote id="source-text"></blockquote>
      <div id="first-pass-block" hidden>
        <p>First-pass correction:</p>
        <blockquote id="first-pass-text"></blockquote>
      </div>
      <p>Your correction:</p>
      <textarea id="draft-box" rows="3" cols="80"></textarea>
      <p id="error-line" role="alert" hidden></p>
      <button id="submit-button">Submit</button>
    </div>
    <div id="done-screen" hidden>
      <h1>Session complete</h1>
      <p id="done-summary"></p>
    </div>
  `;

  const byId = <T extends HTMLElement>(id: string): T =>
    root.querySelector(`#${id}`) as T;

  const screens = {
    start: byId<HTMLDivElement>("start-screen"),
    instructions: byId<HTMLDivElement>("instructions-screen"),
    item: byId<HTMLDivElement>("item-screen"),
    done: byId<HTMLDivElement>("done-screen"),
  };
  byId<HTMLParagraphElement>("instructions-text").textContent = INSTRUCTIONS_TEXT;

  function show(name: keyof typeof screens): void {
    for (const [key, el] of Object.entries(screens)) {
      el.hidden = key !== name;
    }
  }

  function render(state: UiState): void {
    if (state.screen === "instructions") {
      show("instructions");
      return;
    }
    if (state.screen === "done") {
      show("done");
      byId<HTMLParagraphElement>("done-summary").textContent =
        `${state.answered} of ${state.total} sentences submitted.`;
      return;
    }
    show("item");
    byId<HTMLDivElement>("progress").textContent =
      `Sentence ${state.answered + 1} of ${state.total}`;
    byId<HTMLQuoteElement>("source-text").textContent = state.source;
    const firstPassBlock = byId<HTMLDivElement>("first-pass-block");
    firstPassBlock.hidden = state.firstPass === null;
    if (state.firstPass !== null) {
      byId<HTMLQuoteElement>("first-pass-text").textContent = state.firstPass;
    }
    byId<HTMLTextAreaElement>("draft-box").value = state.draft;
    byId<HTMLParagraphElement>("error-line").hidden = true;
  }

  function showError(message: string): void {
    const line = byId<HTMLParagraphElement>("error-line");
    line.textContent = message;
    line.hidden = false;
  }

  byId<HTMLButtonElement>("start-button").addEventListener("click", async () => {
    const editor = byId<HTMLInputElement>("editor-name").value.trim();
    const batchFile = byId<HTMLInputElement>("batch-file").value.trim();
    if (!editor || !batchFile) {
      return;
    }
    render(await controller.start(editor, batchFile));
  });

  byId<HTMLButtonElement>("ack-button").addEventListener("click", async () => {
    render(await controller.acknowledgeInstructions());
  });

  byId<HTMLTextAreaElement>("draft-box").addEventListener("input", (event) => {
    controller.setDraft((event.target as HTMLTextAreaElement).value);
  });

  byId<HTMLButtonElement>("submit-button").addEventListener("click", async () => {
    try {
      render(await controller.submit());
    } catch (error) {
      if (error instanceof EmptyDraftError) {
        showError("Please enter a correction before submitting.");
      } else {
        showError("Could not reach the server; your timing is preserved. Try again.");
      }
    }
  });

  return controller;
}
