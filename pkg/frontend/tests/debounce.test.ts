import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once per idle period no matter how fast the typing", () => {
    const calls: string[] = [];
    const run = debounce((text: string) => calls.push(text), 400);
    for (let i = 0; i < 25; i++) {
      run(`draft ${i}`);
      vi.advanceTimersByTime(100); // never idle long enough
    }
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(400);
    expect(calls).toEqual(["draft 24"]); // only the last burst value
  });

  it("fires again after a second idle period", () => {
    const calls: string[] = [];
    const run = debounce((text: string) => calls.push(text), 400);
    run("first");
    vi.advanceTimersByTime(400);
    run("second");
    vi.advanceTimersByTime(400);
    expect(calls).toEqual(["first", "second"]);
  });

  it("cancel drops the pending call", () => {
    const calls: string[] = [];
    const run = debounce((text: string) => calls.push(text), 400);
    run("doomed");
    run.cancel();
    vi.advanceTimersByTime(1000);
    expect(calls).toEqual([]);
  });
});
