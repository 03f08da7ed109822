// Editor state machine: debounced predictions, stale-response discard, and
// a banner when the service is unreachable. The last good result is kept on
// screen (marked stale) so an outage never blanks the workbench.

import type { PredictResponse } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import { SequenceGate } from "./sequence.js";

export interface EditorState {
  status: "empty" | "waiting" | "ready" | "stale";
  result: PredictResponse | null;
  banner: string | null;
}

export const MIN_DEBOUNCE_MS = 400;

export class EditorController {
  private readonly gate = new SequenceGate();
  private readonly scheduled: Debounced<[string]>;
  private state: EditorState = { status: "empty", result: null, banner: null };

  constructor(
    private readonly predictFn: (text: string) => Promise<PredictResponse>,
    private readonly onChange: (state: EditorState) => void,
    waitMs = MIN_DEBOUNCE_MS,
  ) {
    this.scheduled = debounce((text: string) => {
      void this.fire(text);
    }, Math.max(waitMs, MIN_DEBOUNCE_MS));
  }

  current(): EditorState {
    return this.state;
  }

  handleInput(text: string): void {
    if (text.trim().length === 0) {
      this.scheduled.cancel();
      this.setState({ status: "empty", result: null, banner: null });
      return;
    }
    this.setState({ ...this.state, status: "waiting" });
    this.scheduled(text);
  }

  private async fire(text: string): Promise<void> {
    const sequence = this.gate.issue();
    try {
      const result = await this.predictFn(text);
      if (!this.gate.accept(sequence)) return; // a newer response already showed
      this.setState({ status: "ready", result, banner: null });
    } catch (error) {
      if (!this.gate.accept(sequence)) return;
      this.setState({
        status: "stale",
        result: this.state.result,
        banner: `service unavailable: ${error instanceof Error ? error.message : String(error)}`,
      });
    }
  }

  private setState(state: EditorState): void {
    this.state = state;
    this.onChange(state);
  }
}

/** Display-only counts for the editor meter; features come from the server. */
export function editorCounts(text: string): { chars: number; words: number } {
  const words = text.split(/\s+/).filter((w) => w.length > 0);
  return { chars: text.length, words: words.length };
}
