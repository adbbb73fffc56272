/** Thin fetch client for the segmentation service. */

import type { Constraints, SegmentResponse } from "./types.js";

export interface PruneResult {
  status: number;
  /** Raw response text; the ranked pane renders from this verbatim. */
  raw: string;
  body: SegmentResponse;
}

export type FetchLike = typeof fetch;

export async function postSegment(
  text: string,
  fetchImpl: FetchLike = fetch,
): Promise<PruneResult> {
  return post("/api/segment", { text }, fetchImpl);
}

export async function postPrune(
  text: string,
  constraints: Constraints,
  fetchImpl: FetchLike = fetch,
): Promise<PruneResult> {
  return post("/api/prune", { text, constraints }, fetchImpl);
}

async function post(
  url: string,
  payload: unknown,
  fetchImpl: FetchLike,
): Promise<PruneResult> {
  const resp = await fetchImpl(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  const raw = await resp.text();
  return { status: resp.status, raw, body: JSON.parse(raw) as SegmentResponse };
}
