/** DOM wiring: input box, word grid, ranked pane. */

import { postSegment, type PruneResult } from "./api.js";
import { buildCells, cellKey, deriveStates } from "./grid.js";
import { Session } from "./state.js";
import type { SolutionDto, WordGridCell } from "./types.js";

const input = document.querySelector<HTMLInputElement>("#text")!;
const goButton = document.querySelector<HTMLButtonElement>("#go")!;
const gridEl = document.querySelector<HTMLDivElement>("#grid")!;
const rankedEl = document.querySelector<HTMLOListElement>("#ranked")!;
const rawEl = document.querySelector<HTMLPreElement>("#raw")!;
const statusEl = document.querySelector<HTMLDivElement>("#status")!;

let session: Session | null = null;
let cells: WordGridCell[] = [];

goButton.addEventListener("click", () => void start());
input.addEventListener("keydown", (e) => {
  if (e.key === "Enter") void start();
});

async function start(): Promise<void> {
  const text = input.value.trim();
  if (!text) return;
  statusEl.textContent = "segmenting…";
  try {
    const result = await postSegment(text);
    if (result.status !== 200) {
      statusEl.textContent = `error: ${result.raw}`;
      return;
    }
    cells = buildCells(result.body.solutions);
    session = new Session(text);
    session.lastResult = result;
    session.onResult((r) => render(r));
    render(result);
    statusEl.textContent = "";
  } catch (err) {
    statusEl.textContent = `request failed: ${String(err)}`;
  }
}

function render(result: PruneResult): void {
  const solutions = result.status === 200 ? result.body.solutions : [];
  renderGrid(solutions);
  renderRanked(result, solutions);
}

function renderGrid(surviving: SolutionDto[]): void {
  gridEl.replaceChildren();
  if (!session) return;
  if (cells.length === 0) {
    gridEl.textContent = "no segmentation";
    return;
  }
  const states = deriveStates(cells, surviving, session.constraints);
  for (const cell of cells) {
    const key = cellKey(cell.span, cell.form);
    const state = states.get(key) ?? "open";
    const div = document.createElement("div");
    div.className = `cell ${state}`;
    div.style.gridColumn = `${cell.span[0] + 1} / ${cell.span[1] + 1}`;
    const label = document.createElement("span");
    label.textContent = `${cell.form} (${cell.phases.join(", ")})`;
    div.appendChild(label);
    // one button pair; a cell can never be accepted and rejected at once
    const acceptBtn = document.createElement("button");
    acceptBtn.textContent = state === "accepted" ? "✓" : "✓?";
    acceptBtn.addEventListener("click", () => {
      void session!.toggle({ span: cell.span, form: cell.form }, "accept");
    });
    const rejectBtn = document.createElement("button");
    rejectBtn.textContent = state === "rejected" ? "✗" : "✗?";
    rejectBtn.addEventListener("click", () => {
      void session!.toggle({ span: cell.span, form: cell.form }, "reject");
    });
    div.append(acceptBtn, rejectBtn);
    gridEl.appendChild(div);
  }
}

function renderRanked(result: PruneResult, solutions: SolutionDto[]): void {
  rankedEl.replaceChildren();
  for (const sol of solutions) {
    const li = document.createElement("li");
    const conf = sol.confidence == null ? "" : ` — ${sol.confidence.toExponential(4)}`;
    li.textContent = sol.segments.map((s) => s.form).join(" + ") + conf;
    rankedEl.appendChild(li);
  }
  if (solutions.length === 0) {
    const li = document.createElement("li");
    li.textContent = result.body.reason ?? "no surviving solutions";
    rankedEl.appendChild(li);
  }
  // the server response verbatim: the ranked pane's source of truth
  rawEl.textContent = result.raw;
}
