/** JSON shapes of the segmentation service (schema version 1). */

export interface EntryRef {
  surface: string;
  phase: string;
  stem: string;
  gloss: string;
}

export interface Transition {
  rule_id: string;
  u: string;
  v: string;
  w: string;
  context: string;
}

export interface SegmentDto {
  form: string;
  phase: string;
  compound: boolean;
  span: [number, number];
  entries: EntryRef[];
  transition: Transition | null;
}

export interface SolutionDto {
  rank: number | null;
  confidence: number | null;
  segments: SegmentDto[];
}

export interface SegmentResponse {
  schema: number;
  text: string;
  scorer: string;
  dedup: boolean;
  truncated: boolean;
  total_paths?: number;
  solutions: SolutionDto[];
  reason?: string;
}

export interface CellRef {
  span: [number, number];
  form: string;
}

export interface Constraints {
  accepted: CellRef[];
  rejected: CellRef[];
}

export type CellState = "open" | "accepted" | "rejected" | "implied-dead";

export interface WordGridCell {
  span: [number, number];
  form: string;
  phases: string[];
  compound: boolean;
  state: CellState;
}
