"""Exhaustive segmentation via a shared lattice.

A lattice node is (position, automaton state, pending), where ``pending`` is
the right part ``v`` of the junction just crossed: those phonemes were
replaced by the junction's ``w`` in the surface, so the next word must begin
with them even though they are not present at ``position``.

An edge carries one word candidate: its pre-sandhi form, its phase (entries
sharing surface and phase are merged onto one edge), and the junction rule
consumed after it.  Every Start-to-Accept path is one solution and vice
versa.  Word-candidate scans are memoized per (position, pending) so the
whole construction stays linear in the text length for a fixed resource set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .automaton import ACCEPT, START, PhaseAutomaton
from .errors import EmptyInput, RuleMismatch
from .lexicon import Lexicon, LexiconEntry, Phase
from .phonology import BOUNDARY, BOUNDARY_RULE, PhonemeString, RuleIndex, SandhiRule

DEFAULT_CAP = 10_000

Node = tuple[int, str, str]  # (position, automaton state, pending v)


@dataclass(frozen=True)
class Segment:
    form: PhonemeString
    phase: Phase
    entry_refs: tuple[LexiconEntry, ...]
    is_compound_component: bool
    out_transition: Optional[SandhiRule]
    span: tuple[int, int]


@dataclass
class Solution:
    segments: tuple[Segment, ...]
    confidence: Optional[float] = None
    rank: Optional[int] = None

    def word_sequence(self) -> tuple[str, ...]:
        return tuple(s.form for s in self.segments)


@dataclass(frozen=True)
class _Match:
    """One word candidate found at (position, pending), state-independent."""

    form: str
    phase: Phase
    entries: tuple[LexiconEntry, ...]
    rule: Optional[SandhiRule]  # None = text-final word
    next_pos: int
    next_pending: str
    span: tuple[int, int]


@dataclass
class Lattice:
    text: PhonemeString
    start: Node
    accept: Node
    edges: dict[Node, list[tuple[Segment, Node]]]
    stats: dict[str, int] = field(default_factory=dict)
    _path_counts: dict[Node, int] = field(default_factory=dict)

    def path_count(self) -> int:
        """Number of Start-to-Accept paths, computed once, iteratively."""
        if not self._path_counts:
            counts = {self.accept: 1}
            # next_pos strictly grows along edges, so descending position is
            # a topological order.
            for node in sorted(self.edges, key=lambda n: -n[0]):
                counts[node] = sum(
                    counts.get(nxt, 0) for _, nxt in self.edges[node]
                )
            self._path_counts = counts
        return self._path_counts.get(self.start, 0)


def _scan_words(
    textp: str, pos: int, pending: str, lex: Lexicon, rules: RuleIndex, auto: PhaseAutomaton
) -> list[_Match]:
    """All word candidates at ``pos`` given the virtual prefix ``pending``."""
    node = lex.root
    for ch in pending:
        node = node.children.get(ch)
        if node is None:
            return []
    matches: list[_Match] = []
    end = len(textp)
    i = pos
    while True:
        # word that closes the text here
        if node.entries and i == end:
            for phase, entries in _by_phase(node.entries):
                if auto.can_accept(phase.name):
                    form = entries[0].surface
                    matches.append(
                        _Match(form, phase, entries, None, end, "",
                               (pos - len(pending), end))
                    )
        if i < end:
            ch = textp[i]
            if ch == BOUNDARY:
                # the word must close before a hard boundary
                if node.entries:
                    for phase, entries in _by_phase(node.entries):
                        if auto.can_accept(phase.name):
                            form = entries[0].surface
                            matches.append(
                                _Match(form, phase, entries, BOUNDARY_RULE,
                                       i + 1, "", (pos - len(pending), i))
                            )
            else:
                # junction attempts: surface shows rule.w here, the word ends
                # with rule.u which is off-surface (replaced by w)
                for length in range(1, rules.max_w_len + 1):
                    if i + length > end:
                        break
                    window = textp[i : i + length]
                    if BOUNDARY in window:
                        break
                    for rule in rules.window_rules(window[0], length):
                        if rule.w != window:
                            continue
                        unode = node
                        for uch in rule.u:
                            unode = unode.children.get(uch)
                            if unode is None:
                                break
                        if unode is None or not unode.entries:
                            continue
                        for phase, entries in _by_phase(unode.entries):
                            form = entries[0].surface
                            matches.append(
                                _Match(form, phase, entries, rule,
                                       i + length, rule.v,
                                       (pos - len(pending), i + length))
                            )
        if i >= end:
            break
        node = node.children.get(textp[i])
        if node is None:
            break
        i += 1
    # leftmost-longest-first, then a deterministic total order
    matches.sort(
        key=lambda m: (-(m.next_pos - pos), m.form, m.phase.name,
                       m.rule.rule_id if m.rule else "")
    )
    return matches


def _by_phase(entries: list[LexiconEntry]) -> list[tuple[Phase, tuple[LexiconEntry, ...]]]:
    groups: dict[Phase, list[LexiconEntry]] = {}
    for e in entries:
        groups.setdefault(e.phase, []).append(e)
    return [(p, tuple(v)) for p, v in sorted(groups.items(), key=lambda kv: kv[0].name)]


def build_lattice(
    textp: PhonemeString, lex: Lexicon, rules: RuleIndex, auto: PhaseAutomaton
) -> Lattice:
    if not textp:
        raise EmptyInput("cannot segment empty input")
    start: Node = (0, START, "")
    accept: Node = (len(textp), ACCEPT, "")
    edges: dict[Node, list[tuple[Segment, Node]]] = {}
    scan_cache: dict[tuple[int, str], list[_Match]] = {}
    worklist = [start]
    while worklist:
        node = worklist.pop()
        if node in edges:
            continue
        pos, state, pending = node
        key = (pos, pending)
        if key not in scan_cache:
            scan_cache[key] = _scan_words(textp, pos, pending, lex, rules, auto)
        out: list[tuple[Segment, Node]] = []
        for m in scan_cache[key]:
            if not auto.valid_move(state, m.phase.name):
                continue
            if m.rule is None:
                nxt = accept
            elif m.rule is BOUNDARY_RULE:
                nxt = (m.next_pos, START, "")
            else:
                nxt = (m.next_pos, m.phase.name, m.next_pending)
            seg = Segment(
                form=m.form,
                phase=m.phase,
                entry_refs=m.entries,
                is_compound_component=m.phase.is_compound_component,
                out_transition=m.rule,
                span=m.span,
            )
            out.append((seg, nxt))
            if nxt != accept and nxt not in edges:
                worklist.append(nxt)
        edges[node] = out
    lattice = Lattice(textp, start, accept, edges)
    lattice.stats = {
        "nodes": len(edges),
        "expansions": len(scan_cache),
        "pendings": len({p for _, p in scan_cache}),
        "states": len(auto.states),
    }
    return lattice


@dataclass
class SegmentationResult:
    solutions: list[Solution]
    truncated: bool
    total_paths: int


def enumerate_solutions(lat: Lattice, cap: Optional[int] = DEFAULT_CAP) -> SegmentationResult:
    """All Start-to-Accept paths in deterministic order, up to ``cap``."""
    total = lat.path_count()
    limit = total if cap is None else min(cap, total)
    solutions: list[Solution] = []
    if limit:
        counts = lat._path_counts
        # iterative DFS; edge lists are pre-sorted leftmost-longest-first
        stack: list[tuple[Node, int, tuple[Segment, ...]]] = [(lat.start, 0, ())]
        while stack and len(solutions) < limit:
            node, idx, prefix = stack.pop()
            if node == lat.accept:
                solutions.append(Solution(segments=prefix))
                continue
            out = lat.edges.get(node, [])
            if idx >= len(out):
                continue
            stack.append((node, idx + 1, prefix))
            seg, nxt = out[idx]
            if nxt == lat.accept or counts.get(nxt, 0) > 0:
                stack.append((nxt, 0, prefix + (seg,)))
    return SegmentationResult(solutions, truncated=total > limit, total_paths=total)


def synthesize(sol: Solution, rules: RuleIndex) -> PhonemeString:
    """Fold a solution back to its surface string.

    Raises RuleMismatch when a recorded transition disagrees with the rule
    table or with the segment forms it joins.
    """
    parts: list[str] = []
    prev_v = ""
    for idx, seg in enumerate(sol.segments):
        form = seg.form
        if not form.startswith(prev_v):
            raise RuleMismatch(f"segment {form!r} does not begin with pending {prev_v!r}")
        tr = seg.out_transition
        if tr is None:
            if idx != len(sol.segments) - 1:
                raise RuleMismatch("missing transition on a non-final segment")
            parts.append(form[len(prev_v):])
            prev_v = ""
            continue
        if tr is not BOUNDARY_RULE:
            table_rule = rules.lookup(tr.u, tr.v, tr.context)
            if table_rule is None or table_rule.w != tr.w:
                raise RuleMismatch(f"transition {tr.rule_id} not in the rule table")
        if tr.u and not form.endswith(tr.u):
            raise RuleMismatch(f"segment {form!r} does not end with u={tr.u!r}")
        core_end = len(form) - len(tr.u)
        if core_end < len(prev_v):
            raise RuleMismatch(f"segment {form!r} shorter than its junction parts")
        parts.append(form[len(prev_v):core_end])
        parts.append(tr.w)
        prev_v = tr.v
    return "".join(parts)
