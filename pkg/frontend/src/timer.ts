/**
 * Per-item dwell timer.
 *
 * Counts monotonic time from when an item becomes visible, excluding any
 * interval during which the tab is hidden. The clock source is injected so
 * tests can drive it deterministically; browsers pass performance.now.
 */

export type Clock = () => number;

export class DwellTimer {
  private running = false;
  private visible = true;
  private accumulatedMs = 0;
  private segmentStart = 0;

  constructor(private readonly now: Clock) {}

  /** Begin timing a freshly shown item; resets any previous measurement. */
  start(): void {
    this.running = true;
    this.accumulatedMs = 0;
    this.segmentStart = this.now();
  }

  /** Visibility change from the page; hidden time is not counted. */
  setVisibility(visible: boolean): void {
    if (visible === this.visible) {
      return;
    }
    if (this.running) {
      if (visible) {
        this.segmentStart = this.now();
      } else {
        this.accumulatedMs += this.now() - this.segmentStart;
      }
    }
    this.visible = visible;
  }

  /** Milliseconds of visible dwell time so far; monotone while running. */
  elapsedMs(): number {
    let total = this.accumulatedMs;
    if (this.running && this.visible) {
      total += this.now() - this.segmentStart;
    }
    return Math.max(0, Math.round(total));
  }

  /** Stop and return the final elapsed value. */
  stop(): number {
    const total = this.elapsedMs();
    this.running = false;
    this.accumulatedMs = 0;
    return total;
  }

  isRunning(): boolean {
    return this.running;
  }
}
