"""Word-structure automaton over phases.

States are phase names plus the distinguished Start and Accept.  A word chain
runs segment phases through the edges; when the current state can reach
Accept, the word may close and the next segment restarts from Start.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from .errors import MalformedRow, NoAcceptPath, UnknownPhase
from .lexicon import Phase

log = logging.getLogger(__name__)

START = "Start"
ACCEPT = "Accept"


class PhaseAutomaton:
    def __init__(self, edges: set[tuple[str, str]], compound_phases: set[str]):
        self.edges = frozenset(edges)
        self.states: frozenset[str] = frozenset(
            {s for e in edges for s in e} | {START, ACCEPT}
        )
        phase_names = self.states - {START, ACCEPT}
        self.phases: dict[str, Phase] = {
            name: Phase(name, name in compound_phases) for name in sorted(phase_names)
        }
        unknown = set(compound_phases) - phase_names
        if unknown:
            raise UnknownPhase(f"compound_phases not in the edge list: {sorted(unknown)}")
        self.compound_phases = frozenset(compound_phases)
        self._validate()

    def _validate(self) -> None:
        # Accept must be reachable from Start.
        seen = {START}
        frontier = [START]
        while frontier:
            s = frontier.pop()
            for a, b in self.edges:
                if a == s and b not in seen:
                    seen.add(b)
                    frontier.append(b)
        if ACCEPT not in seen:
            raise NoAcceptPath("Accept is unreachable from Start")
        unreachable = self.states - seen
        if unreachable:
            log.warning("unreachable automaton states: %s", sorted(unreachable))

    def step(self, state: str, phase: str) -> Optional[str]:
        """Deterministic edge lookup; None means Reject."""
        return phase if (state, phase) in self.edges else None

    def can_accept(self, state: str) -> bool:
        return (state, ACCEPT) in self.edges

    def valid_move(self, state: str, phase: str) -> bool:
        """Continue the current word, or close it and start a new one."""
        if self.step(state, phase) is not None:
            return True
        return self.can_accept(state) and self.step(START, phase) is not None


def load_automaton(path) -> PhaseAutomaton:
    """Load the TSV edge list with its ``compound_phases:`` header."""
    path = Path(path)
    edges: set[tuple[str, str]] = set()
    compound: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if line.startswith("compound_phases:"):
                compound.update(line.split(":", 1)[1].split())
                continue
            cells = line.replace("\t", " ").split()
            if len(cells) != 2:
                raise MalformedRow(path, line_no, f"expected 'from to', got {line!r}")
            edges.add((cells[0], cells[1]))
    return PhaseAutomaton(edges, compound)
