// Monotonic display gate: responses arriving out of order are discarded so
// the screen never regresses to a stale prediction.

export class SequenceGate {
  private next = 0;
  private shown = -1;

  issue(): number {
    return this.next++;
  }

  accept(sequence: number): boolean {
    if (sequence <= this.shown) return false;
    this.shown = sequence;
    return true;
  }
}
