/**
 * Scripted end-to-end session against the real annotation service.
 *
 * Spawns the Python server, drives a 3-item batch through the UI state
 * machine with a deterministic clock, then checks the exported JSONL by
 * round-tripping it through the Python corpus reader.
 */

import { execFileSync, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ServiceClient } from "../src/api.js";
import { SessionController } from "../src/session.js";
import { DwellTimer } from "../src/timer.js";

const PORT = 8931;
const BASE_URL = `http://127.0.0.1:${PORT}`;
const PYTHON = process.env.PEET_PYTHON ?? "python3";

class FakeClock {
  private t = 0;

  now = (): number => this.t;

  advance(ms: number): void {
    this.t += ms;
  }
}

let server: ChildProcess;
let workDir: string;
let batchFile: string;

async function waitForHealth(api: ServiceClient, attempts = 100): Promise<void> {
  for (let i = 0; i < attempts; i++) {
    if (await api.health()) {
      return;
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error("service did not become healthy");
}

beforeAll(async () => {
  workDir = mkdtempSync(join(tmpdir(), "peet-ui-"));
  batchFile = join(workDir, "batch.jsonl");
  const items = [
    { id: "s1", src: "she walk to school .", variation: "GECTOR", first_pass: "she walks to school ." },
    { id: "s2", src: "i has a apple .", variation: "GECTOR", first_pass: "i have an apple ." },
    { id: "s3", src: "they is happy .", variation: "SRC" },
  ];
  writeFileSync(batchFile, items.map((i) => JSON.stringify(i)).join("\n") + "\n");

  server = spawn(
    PYTHON,
    ["-m", "peet.cli", "serve", "--data-dir", join(workDir, "sessions"), "--port", String(PORT)],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  await waitForHealth(new ServiceClient(BASE_URL));
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe("scripted session against the live service", () => {
  it("completes a 3-item batch with exact millisecond accounting", async () => {
    const api = new ServiceClient(BASE_URL);
    const clock = new FakeClock();
    const controller = new SessionController(api, new DwellTimer(clock.now));

    const started = await controller.start("editor7", batchFile);
    expect(started.screen).toBe("instructions");
    expect(started.total).toBe(3);

    // item 1: accept the first-pass suggestion after 3.217s of visible time
    let state = await controller.acknowledgeInstructions();
    expect(state.itemIndex).toBe(0);
    expect(state.draft).toBe("she walks to school .");
    clock.advance(3217);
    state = await controller.submit();

    // item 2: hidden-tab interval must not count toward the 4.5s of editing
    expect(state.itemIndex).toBe(1);
    clock.advance(1500);
    controller.setVisibility(false);
    clock.advance(60_000);
    controller.setVisibility(true);
    clock.advance(3000);
    controller.setDraft("i have an apple .");
    state = await controller.submit();

    // item 3: no first pass, draft starts from the source
    expect(state.itemIndex).toBe(2);
    expect(state.firstPass).toBeNull();
    expect(state.draft).toBe("they is happy .");
    controller.setDraft("they are happy .");
    clock.advance(31_160);
    state = await controller.submit();
    expect(state.screen).toBe("done");
    expect(state.answered).toBe(3);

    // exported JSONL round-trips through the Python corpus reader with
    // millisecond precision
    const exported = await controller.exportJsonl();
    const echo = execFileSync(
      PYTHON,
      [
        "-c",
        [
          "import json, sys",
          "from peet.corpus_io import emit_time_annotations, parse_time_annotations",
          "records = parse_time_annotations(sys.stdin.read())",
          "assert parse_time_annotations(emit_time_annotations(records)) == records",
          "print(json.dumps([[r.id, r.editor, r.variation, r.correction, r.seconds] for r in records]))",
        ].join("\n"),
      ],
      { input: exported, encoding: "utf-8" },
    );
    const rows = JSON.parse(echo) as Array<[string, string, string, string, number]>;
    expect(rows).toEqual([
      ["s1", "editor7", "GECTOR", "she walks to school .", 3.217],
      ["s2", "editor7", "GECTOR", "i have an apple .", 4.5],
      ["s3", "editor7", "SRC", "they are happy .", 31.16],
    ]);
    for (const [, , , , seconds] of rows) {
      expect(Math.round(seconds * 1000) / 1000).toBe(seconds);
    }
  }, 30_000);

  it("rejects out-of-order submissions and the UI recovers via next", async () => {
    const api = new ServiceClient(BASE_URL);
    const clock = new FakeClock();
    const controller = new SessionController(api, new DwellTimer(clock.now));

    await controller.start("editor8", batchFile);
    let state = await controller.acknowledgeInstructions();
    const sessionId = state.sessionId;

    clock.advance(900);
    state = await controller.submit();
    expect(state.itemIndex).toBe(1);

    // double submit of the already-answered index is refused by the server
    await expect(api.submit(sessionId, 0, "stale", 10)).rejects.toMatchObject({
      code: "OutOfOrder",
      status: 409,
    });

    // a stale controller (e.g. second tab) resyncs through /next
    const staleController = new SessionController(api, new DwellTimer(clock.now));
    await staleController.resume(sessionId);
    // simulate the primary tab answering item 1 first
    clock.advance(400);
    state = await controller.submit();
    expect(state.itemIndex).toBe(2);
    // the stale tab still shows item 1; its submit gets 409 and resyncs
    staleController.setDraft("stale draft .");
    const resynced = await staleController.submit();
    expect(resynced.itemIndex).toBe(2);

    // partial export is refused without the partial flag
    await expect(api.exportSession(sessionId)).rejects.toMatchObject({
      code: "IncompleteSession",
      status: 409,
    });
    const partial = await api.exportSession(sessionId, true);
    expect(partial.trim().split("\n")).toHaveLength(2);
  }, 30_000);
});
