"""Frequency tables and the four solution scorers.

Probabilities are count/(total+1), with absent keys defaulting to count 1,
so every factor stays in (0, 1] and unseen tokens are never free.  The
``smoothing`` flag on FrequencyTables disables the +1/default behaviour for
tables known to be complete (count/total), which is what the exact
scale-invariance property needs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import MalformedRow, NegativeCount
from .segmenter import Segment, Solution

FREQ_FILES = {
    "samasa_words": "samasa_words.tsv",
    "sandhi_words": "sandhi_words.tsv",
    "samasa_transitions": "samasa_transitions.tsv",
    "sandhi_transitions": "sandhi_transitions.tsv",
}


class Scorer(str, enum.Enum):
    POP = "pop"
    MITTAL = "mittal"
    KUMAR = "kumar"
    UNIGRAM = "unigram"


@dataclass(frozen=True)
class ScoreValue:
    value: float
    log_value: float
    scorer_id: Scorer


@dataclass
class FrequencyTables:
    samasa_words: dict[str, int] = field(default_factory=dict)
    sandhi_words: dict[str, int] = field(default_factory=dict)
    samasa_transitions: dict[str, int] = field(default_factory=dict)
    sandhi_transitions: dict[str, int] = field(default_factory=dict)
    smoothing: bool = True

    @property
    def samasa_word_total(self) -> int:
        return sum(self.samasa_words.values())

    @property
    def sandhi_word_total(self) -> int:
        return sum(self.sandhi_words.values())

    @property
    def samasa_transition_total(self) -> int:
        return sum(self.samasa_transitions.values())

    @property
    def sandhi_transition_total(self) -> int:
        return sum(self.sandhi_transitions.values())

    def _prob(self, table: dict[str, int], key: str) -> float:
        total = sum(table.values())
        if self.smoothing:
            return table.get(key, 1) / (total + 1)
        return table[key] / total


def _load_table(path: Path) -> dict[str, int]:
    table: dict[str, int] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cells = line.split("\t")
            if len(cells) != 2:
                raise MalformedRow(path, line_no, f"expected 2 columns, got {len(cells)}")
            token, raw = cells
            try:
                count = int(raw)
            except ValueError:
                raise MalformedRow(path, line_no, f"bad count {raw!r}") from None
            if count < 0:
                raise NegativeCount(token, count)
            table[token] = table.get(token, 0) + count
    return table


def load_frequencies(directory) -> FrequencyTables:
    """Load the four fixed-name TSV tables; a missing file is an empty table."""
    directory = Path(directory)
    tables = {}
    for attr, fname in FREQ_FILES.items():
        path = directory / fname
        tables[attr] = _load_table(path) if path.exists() else {}
    return FrequencyTables(**tables)


def word_probability(seg: Segment, t: FrequencyTables) -> float:
    table = t.samasa_words if seg.is_compound_component else t.sandhi_words
    return t._prob(table, seg.form)


def transition_probability(seg: Segment, t: FrequencyTables) -> float:
    if seg.out_transition is None:
        return 1.0
    table = t.samasa_transitions if seg.is_compound_component else t.sandhi_transitions
    return t._prob(table, seg.out_transition.rule_id)


def _make(sol: Solution, factors: list[float], divisor: float, scorer: Scorer) -> ScoreValue:
    value = math.prod(factors) / divisor
    log_value = sum(math.log(f) for f in factors) - math.log(divisor)
    sv = ScoreValue(value, log_value, scorer)
    sol.confidence = value
    return sv


def score_pop(sol: Solution, t: FrequencyTables) -> ScoreValue:
    """Product over segments of word probability times transition probability."""
    factors = [
        p
        for seg in sol.segments
        for p in (word_probability(seg, t), transition_probability(seg, t))
    ]
    return _make(sol, factors, 1.0, Scorer.POP)


def score_mittal(sol: Solution, t: FrequencyTables) -> ScoreValue:
    m = len(sol.segments)
    wp = [word_probability(s, t) for s in sol.segments]
    factors = [
        (wp[i] + wp[i + 1]) * transition_probability(sol.segments[i], t)
        for i in range(m - 1)
    ]
    return _make(sol, factors, float(m), Scorer.MITTAL)


def score_kumar(sol: Solution, t: FrequencyTables) -> ScoreValue:
    m = len(sol.segments)
    factors = [word_probability(s, t) for s in sol.segments]
    factors += [transition_probability(s, t) for s in sol.segments[:-1]]
    return _make(sol, factors, float(m), Scorer.KUMAR)


def score_unigram(sol: Solution, t: FrequencyTables) -> ScoreValue:
    factors = [word_probability(s, t) for s in sol.segments]
    return _make(sol, factors, 1.0, Scorer.UNIGRAM)


SCORERS = {
    Scorer.POP: score_pop,
    Scorer.MITTAL: score_mittal,
    Scorer.KUMAR: score_kumar,
    Scorer.UNIGRAM: score_unigram,
}


def score(sol: Solution, scorer: Scorer, t: FrequencyTables) -> ScoreValue:
    return SCORERS[Scorer(scorer)](sol, t)
