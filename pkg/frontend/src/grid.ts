/** Pure grid derivation: cells and their states from solutions + constraints. */

import type {
  CellRef,
  CellState,
  Constraints,
  SolutionDto,
  WordGridCell,
} from "./types.js";

export function cellKey(span: [number, number], form: string): string {
  return `${span[0]}:${span[1]}:${form}`;
}

/** One cell per distinct (span, form), ordered by position then form. */
export function buildCells(solutions: SolutionDto[]): WordGridCell[] {
  const byKey = new Map<string, WordGridCell>();
  for (const sol of solutions) {
    for (const seg of sol.segments) {
      const key = cellKey(seg.span, seg.form);
      let cell = byKey.get(key);
      if (!cell) {
        cell = {
          span: seg.span,
          form: seg.form,
          phases: [],
          compound: seg.compound,
          state: "open",
        };
        byKey.set(key, cell);
      }
      for (const e of seg.entries) {
        if (!cell.phases.includes(e.phase)) cell.phases.push(e.phase);
      }
    }
  }
  return [...byKey.values()].sort(
    (a, b) =>
      a.span[0] - b.span[0] || a.span[1] - b.span[1] || (a.form < b.form ? -1 : 1),
  );
}

/** Solutions compatible with the constraint set (client-side mirror of the
 * server filter, used only for optimistic display). */
export function filterSolutions(
  solutions: SolutionDto[],
  constraints: Constraints,
): SolutionDto[] {
  return solutions.filter((sol) => {
    const keys = new Set(sol.segments.map((s) => cellKey(s.span, s.form)));
    return (
      constraints.accepted.every((c) => keys.has(cellKey(c.span, c.form))) &&
      !constraints.rejected.some((c) => keys.has(cellKey(c.span, c.form)))
    );
  });
}

/** Cell states as a pure function of (solutions, constraints).
 *
 * rejected/accepted echo the constraints; implied-dead marks cells no
 * surviving solution uses; a cell used by every surviving solution shows as
 * accepted even without an explicit constraint.
 */
export function deriveStates(
  cells: WordGridCell[],
  surviving: SolutionDto[],
  constraints: Constraints,
): Map<string, CellState> {
  const accepted = new Set(constraints.accepted.map((c) => cellKey(c.span, c.form)));
  const rejected = new Set(constraints.rejected.map((c) => cellKey(c.span, c.form)));
  const usage = new Map<string, number>();
  for (const sol of surviving) {
    for (const key of new Set(sol.segments.map((s) => cellKey(s.span, s.form)))) {
      usage.set(key, (usage.get(key) ?? 0) + 1);
    }
  }
  const states = new Map<string, CellState>();
  for (const cell of cells) {
    const key = cellKey(cell.span, cell.form);
    let state: CellState;
    if (rejected.has(key)) state = "rejected";
    else if (accepted.has(key)) state = "accepted";
    else if ((usage.get(key) ?? 0) === 0) state = "implied-dead";
    else if (surviving.length > 0 && usage.get(key) === surviving.length)
      state = "accepted";
    else state = "open";
    states.set(key, state);
  }
  return states;
}

export function sameCell(a: CellRef, b: CellRef): boolean {
  return a.span[0] === b.span[0] && a.span[1] === b.span[1] && a.form === b.form;
}
