"""Word-level merging of solutions and confidence-ordered ranking.

Two solutions merge when they agree segment by segment on (surface form,
compound-component flag); all other phase and gloss detail is irrelevant to
segmentation.  The merged representative keeps the union of morphological
analyses so nothing is lost.
"""

from __future__ import annotations

from dataclasses import replace

from .scoring import FrequencyTables, Scorer, score
from .segmenter import Segment, Solution

DedupKey = tuple[tuple[str, bool], ...]


def dedup_key(sol: Solution) -> DedupKey:
    return tuple((s.form, s.is_compound_component) for s in sol.segments)


def dedup(solutions: list[Solution]) -> list[Solution]:
    """One representative per key, first-occurrence order, analyses unioned."""
    groups: dict[DedupKey, list[Solution]] = {}
    order: list[DedupKey] = []
    for sol in solutions:
        key = dedup_key(sol)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(sol)
    out: list[Solution] = []
    for key in order:
        members = groups[key]
        rep = members[0]
        segments = []
        for i, seg in enumerate(rep.segments):
            refs: list = []
            for member in members:
                for ref in member.segments[i].entry_refs:
                    if ref not in refs:
                        refs.append(ref)
            segments.append(replace(seg, entry_refs=tuple(refs)))
        out.append(Solution(segments=tuple(segments), confidence=rep.confidence))
    return out


def rank(
    solutions: list[Solution], scorer: Scorer, t: FrequencyTables
) -> list[Solution]:
    """Score, merge, and sort by descending confidence.

    Ties break on fewer segments, then the lexicographic order of the surface
    sequence, then the phase-name sequence, giving a total order.
    """
    log_by_key: dict[DedupKey, float] = {}
    for sol in solutions:
        sv = score(sol, scorer, t)
        log_by_key[dedup_key(sol)] = sv.log_value
    merged = dedup(solutions)
    merged.sort(
        key=lambda s: (
            -log_by_key[dedup_key(s)],
            len(s.segments),
            s.word_sequence(),
            tuple(seg.phase.name for seg in s.segments),
        )
    )
    for i, sol in enumerate(merged, 1):
        sol.rank = i
    return merged
