"""Resource bundle (lexicon, rules, automaton, frequencies) and the
end-to-end segmentation pipeline shared by the CLI and the HTTP service."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path
from typing import Optional

from .automaton import PhaseAutomaton, load_automaton
from .lexicon import Lexicon, load_lexicon
from .phonology import RuleIndex, load_rules, parse_text
from .ranking import rank
from .scoring import FrequencyTables, Scorer, load_frequencies, score
from .segmenter import (
    DEFAULT_CAP,
    Lattice,
    Solution,
    build_lattice,
    enumerate_solutions,
)

ENV_VARS = {
    "lexicon": "VICCHEDA_LEXICON",
    "rules": "VICCHEDA_RULES",
    "automaton": "VICCHEDA_AUTOMATON",
    "freq_dir": "VICCHEDA_FREQ_DIR",
}


def default_data_dir() -> Path:
    return Path(str(importlib_resources.files("viccheda") / "data"))


@dataclass
class ResourceSet:
    lexicon_path: Path
    rules_path: Path
    automaton_path: Path
    freq_dir: Path
    automaton: PhaseAutomaton
    lexicon: Lexicon
    rules: RuleIndex
    tables: FrequencyTables
    scorer: Scorer = Scorer.POP
    cap: int = DEFAULT_CAP


def _resolve(explicit, env_key: str, default: Path) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VARS[env_key])
    return Path(env) if env else default


def load_resources(
    lexicon=None,
    rules=None,
    automaton=None,
    freq_dir=None,
    scorer: Scorer = Scorer.POP,
    cap: int = DEFAULT_CAP,
) -> ResourceSet:
    """Resolve paths (explicit > env var > packaged default) and load, failing
    fast on any parse error."""
    data = default_data_dir()
    automaton_path = _resolve(automaton, "automaton", data / "automaton.tsv")
    lexicon_path = _resolve(lexicon, "lexicon", data / "lexicon.tsv")
    rules_path = _resolve(rules, "rules", data / "rules.tsv")
    freq_path = _resolve(freq_dir, "freq_dir", data / "frequencies")
    auto = load_automaton(automaton_path)
    return ResourceSet(
        lexicon_path=lexicon_path,
        rules_path=rules_path,
        automaton_path=automaton_path,
        freq_dir=freq_path,
        automaton=auto,
        lexicon=load_lexicon(lexicon_path, auto.phases),
        rules=load_rules(rules_path),
        tables=load_frequencies(freq_path),
        scorer=Scorer(scorer),
        cap=cap,
    )


@dataclass
class SegmentationOutcome:
    text: str
    solutions: list[Solution]
    truncated: bool
    total_paths: int
    lattice: Lattice
    scorer: Scorer
    dedup: bool


def segment_text(
    res: ResourceSet,
    raw_text: str,
    scorer: Optional[Scorer] = None,
    dedup: bool = True,
    cap: Optional[int] = None,
) -> SegmentationOutcome:
    """Parse, build the lattice, enumerate, then rank (or just score when
    dedup is off, preserving enumeration order)."""
    scorer = Scorer(scorer) if scorer else res.scorer
    cap = res.cap if cap is None else cap
    textp = parse_text(raw_text)
    lattice = build_lattice(textp, res.lexicon, res.rules, res.automaton)
    result = enumerate_solutions(lattice, cap)
    solutions = result.solutions
    if dedup:
        solutions = rank(solutions, scorer, res.tables)
    else:
        for i, sol in enumerate(solutions, 1):
            score(sol, scorer, res.tables)
            sol.rank = i
    return SegmentationOutcome(
        text=textp,
        solutions=solutions,
        truncated=result.truncated,
        total_paths=result.total_paths,
        lattice=lattice,
        scorer=scorer,
        dedup=dedup,
    )
