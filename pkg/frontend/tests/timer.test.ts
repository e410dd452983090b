import { describe, expect, it } from "vitest";

import { DwellTimer } from "../src/timer.js";

class FakeClock {
  private t = 0;

  now = (): number => this.t;

  advance(ms: number): void {
    this.t += ms;
  }
}

describe("DwellTimer", () => {
  it("measures visible time from start", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.start();
    clock.advance(1500);
    expect(timer.elapsedMs()).toBe(1500);
  });

  it("excludes hidden-tab time", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.start();
    clock.advance(2000);
    timer.setVisibility(false);
    clock.advance(10_000); // tab hidden for 10s mid-edit
    timer.setVisibility(true);
    clock.advance(1000);
    expect(timer.elapsedMs()).toBe(3000);
  });

  it("is monotone while running", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.start();
    let previous = 0;
    for (let step = 0; step < 20; step++) {
      clock.advance(step % 3 === 0 ? 0 : 37);
      if (step === 7) timer.setVisibility(false);
      if (step === 11) timer.setVisibility(true);
      const current = timer.elapsedMs();
      expect(current).toBeGreaterThanOrEqual(previous);
      previous = current;
    }
  });

  it("never reports more than wall-clock duration", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    const wallStart = clock.now();
    timer.start();
    clock.advance(500);
    timer.setVisibility(false);
    clock.advance(500);
    timer.setVisibility(true);
    clock.advance(500);
    expect(timer.elapsedMs()).toBeLessThanOrEqual(clock.now() - wallStart);
  });

  it("start resets the previous item's time", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.start();
    clock.advance(4000);
    expect(timer.stop()).toBe(4000);
    timer.start();
    clock.advance(250);
    expect(timer.elapsedMs()).toBe(250);
  });

  it("redundant visibility events are ignored", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.start();
    clock.advance(100);
    timer.setVisibility(true); // already visible
    clock.advance(100);
    expect(timer.elapsedMs()).toBe(200);
    timer.setVisibility(false);
    timer.setVisibility(false);
    clock.advance(5000);
    timer.setVisibility(true);
    expect(timer.elapsedMs()).toBe(200);
  });

  it("visibility changes while stopped do not corrupt the next run", () => {
    const clock = new FakeClock();
    const timer = new DwellTimer(clock.now);
    timer.setVisibility(false);
    clock.advance(1000);
    timer.setVisibility(true);
    timer.start();
    clock.advance(300);
    expect(timer.elapsedMs()).toBe(300);
  });
});
