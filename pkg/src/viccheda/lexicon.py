"""Inflected-form lexicon with trie-backed prefix queries."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import MalformedRow, UnknownPhase
from .phonology import ALPHABET, BOUNDARY, PhonemeString


@dataclass(frozen=True)
class Phase:
    name: str
    is_compound_component: bool


@dataclass(frozen=True)
class LexiconEntry:
    surface: PhonemeString
    phase: Phase
    stem: str
    gloss: str


class TrieNode:
    __slots__ = ("children", "entries")

    def __init__(self):
        self.children: dict[str, TrieNode] = {}
        self.entries: list[LexiconEntry] = []


class Lexicon:
    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self.entries: dict[str, list[LexiconEntry]] = {}
        self.root = TrieNode()
        for e in entries:
            self.add(e)

    def add(self, entry: LexiconEntry) -> None:
        bucket = self.entries.setdefault(entry.surface, [])
        if entry in bucket:  # identical rows deduplicate
            return
        bucket.append(entry)
        node = self.root
        for ch in entry.surface:
            node = node.children.setdefault(ch, TrieNode())
        node.entries.append(entry)

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def surfaces(self) -> list[str]:
        return sorted(self.entries)


def load_lexicon(path, phases: Mapping[str, Phase]) -> Lexicon:
    """Load the TSV lexicon (``surface phase stem gloss``).

    ``phases`` is the automaton's phase set; rows naming any other phase are
    rejected with UnknownPhase.
    """
    path = Path(path)
    lex = Lexicon()
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cells = line.split("\t")
            if len(cells) != 4:
                raise MalformedRow(path, line_no, f"expected 4 columns, got {len(cells)}")
            surface, phase_name, stem, gloss = cells
            if not surface:
                raise MalformedRow(path, line_no, "empty surface form")
            for ch in surface:
                if ch not in ALPHABET or ch == BOUNDARY:
                    raise MalformedRow(path, line_no, f"invalid phoneme {ch!r}")
            if phase_name not in phases:
                raise UnknownPhase(phase_name)
            lex.add(LexiconEntry(surface, phases[phase_name], stem, gloss))
    return lex


def match_prefixes(
    textp: PhonemeString, start: int, lex: Lexicon
) -> list[tuple[int, list[LexiconEntry]]]:
    """Every lexicon surface occurring at ``start``, by ascending end index."""
    if not 0 <= start < len(textp):
        raise IndexError(start)
    out: list[tuple[int, list[LexiconEntry]]] = []
    node = lex.root
    i = start
    while i < len(textp):
        node = node.children.get(textp[i])
        if node is None:
            break
        i += 1
        if node.entries:
            out.append((i, list(node.entries)))
    return out
