/** Session state: constraint toggles and the single-flight prune queue. */

import type { FetchLike, PruneResult } from "./api.js";
import { postPrune } from "./api.js";
import type { CellRef, Constraints } from "./types.js";
import { sameCell } from "./grid.js";

export type ToggleAction = "accept" | "reject";

/** Per-cell constraint state; a cell is in at most one list, so accepting
 * and rejecting the same cell at once is impossible by construction. */
export class Session {
  readonly text: string;
  private accepted: CellRef[] = [];
  private rejected: CellRef[] = [];
  private fetchImpl: FetchLike;
  private inFlight = false;
  private dirty = false;
  private listeners: Array<(r: PruneResult) => void> = [];
  lastResult: PruneResult | null = null;

  constructor(text: string, fetchImpl: FetchLike = fetch) {
    this.text = text;
    this.fetchImpl = fetchImpl;
  }

  get constraints(): Constraints {
    return { accepted: [...this.accepted], rejected: [...this.rejected] };
  }

  onResult(fn: (r: PruneResult) => void): void {
    this.listeners.push(fn);
  }

  /** accept/reject toggles move the cell between exactly three states:
   * open -> accepted -> open, open -> rejected -> open, and a direct
   * switch between accepted and rejected. */
  toggle(cell: CellRef, action: ToggleAction): Promise<void> {
    const wasAccepted = this.accepted.some((c) => sameCell(c, cell));
    const wasRejected = this.rejected.some((c) => sameCell(c, cell));
    this.accepted = this.accepted.filter((c) => !sameCell(c, cell));
    this.rejected = this.rejected.filter((c) => !sameCell(c, cell));
    if (action === "accept" && !wasAccepted) this.accepted.push(cell);
    if (action === "reject" && !wasRejected) this.rejected.push(cell);
    return this.refresh();
  }

  /** At most one prune request in flight; later toggles coalesce into one
   * follow-up request carrying the newest constraint set. */
  private async refresh(): Promise<void> {
    if (this.inFlight) {
      this.dirty = true;
      return;
    }
    this.inFlight = true;
    try {
      do {
        this.dirty = false;
        const result = await postPrune(this.text, this.constraints, this.fetchImpl);
        this.lastResult = result;
        for (const fn of this.listeners) fn(result);
      } while (this.dirty);
    } finally {
      this.inFlight = false;
    }
  }
}
