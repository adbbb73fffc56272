"""JSON and TSV serialization of segmentation outcomes (schema version 1)."""

from __future__ import annotations

import json

from .phonology import BOUNDARY_RULE
from .segmenter import Segment, Solution

SCHEMA_VERSION = 1


def segment_to_dict(seg: Segment) -> dict:
    tr = seg.out_transition
    return {
        "form": seg.form,
        "phase": seg.phase.name,
        "compound": seg.is_compound_component,
        "span": list(seg.span),
        "entries": [
            {
                "surface": e.surface,
                "phase": e.phase.name,
                "stem": e.stem,
                "gloss": e.gloss,
            }
            for e in seg.entry_refs
        ],
        "transition": None
        if tr is None
        else {
            "rule_id": tr.rule_id,
            "u": tr.u,
            "v": tr.v,
            "w": tr.w,
            "context": tr.context.value,
        },
    }


def solution_to_dict(sol: Solution) -> dict:
    return {
        "rank": sol.rank,
        "confidence": sol.confidence,
        "segments": [segment_to_dict(s) for s in sol.segments],
    }


def lattice_to_dict(lattice) -> dict:
    def node_id(node):
        pos, state, pending = node
        return f"{pos}:{state}:{pending}"

    nodes = [lattice.start] + sorted(
        (n for n in lattice.edges if n != lattice.start), key=lambda n: (n[0], n[1], n[2])
    )
    if lattice.accept not in nodes:
        nodes.append(lattice.accept)
    edges = []
    for node in nodes:
        for seg, nxt in lattice.edges.get(node, []):
            edges.append(
                {
                    "from": node_id(node),
                    "to": node_id(nxt),
                    "form": seg.form,
                    "phase": seg.phase.name,
                    "rule_id": seg.out_transition.rule_id if seg.out_transition else None,
                    "span": list(seg.span),
                }
            )
    return {
        "nodes": [
            {"id": node_id(n), "pos": n[0], "state": n[1], "pending": n[2]}
            for n in nodes
        ],
        "edges": edges,
    }


def outcome_to_dict(outcome, include_lattice: bool = False) -> dict:
    payload = {
        "schema": SCHEMA_VERSION,
        "text": outcome.text,
        "scorer": outcome.scorer.value,
        "dedup": outcome.dedup,
        "truncated": outcome.truncated,
        "total_paths": outcome.total_paths,
        "solutions": [solution_to_dict(s) for s in outcome.solutions],
    }
    if include_lattice:
        payload["lattice"] = lattice_to_dict(outcome.lattice)
    return payload


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _segment_text_repr(seg: Segment) -> str:
    tr = seg.out_transition
    base = f"{seg.form}({seg.phase.name})"
    if tr is None:
        return base
    if tr is BOUNDARY_RULE or tr.rule_id == BOUNDARY_RULE.rule_id:
        return base + "<|>"
    u = tr.u or "-"
    v = tr.v or "-"
    return f"{base}<{u}|{v}->{tr.w}>"


def outcome_to_tsv(outcome) -> str:
    lines = []
    for sol in outcome.solutions:
        words = " ".join(_segment_text_repr(s) for s in sol.segments)
        conf = "" if sol.confidence is None else repr(sol.confidence)
        lines.append(f"{sol.rank}\t{conf}\t{words}")
    return "\n".join(lines)
