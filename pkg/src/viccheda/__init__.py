"""viccheda: exhaustive Sanskrit external-sandhi segmentation with
frequency-based ranking of the solutions."""

from .automaton import PhaseAutomaton, load_automaton
from .errors import VicchedaError
from .lexicon import Lexicon, LexiconEntry, Phase, load_lexicon, match_prefixes
from .phonology import (
    RuleIndex,
    SandhiRule,
    apply_sandhi,
    invert_at,
    load_rules,
    parse_text,
)
from .ranking import dedup, rank
from .resources import ResourceSet, load_resources, segment_text
from .scoring import (
    FrequencyTables,
    Scorer,
    load_frequencies,
    score_kumar,
    score_mittal,
    score_pop,
    score_unigram,
)
from .segmenter import (
    Lattice,
    Segment,
    Solution,
    build_lattice,
    enumerate_solutions,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "FrequencyTables",
    "Lattice",
    "Lexicon",
    "LexiconEntry",
    "Phase",
    "PhaseAutomaton",
    "ResourceSet",
    "RuleIndex",
    "SandhiRule",
    "Scorer",
    "Segment",
    "Solution",
    "VicchedaError",
    "apply_sandhi",
    "build_lattice",
    "dedup",
    "enumerate_solutions",
    "invert_at",
    "load_automaton",
    "load_frequencies",
    "load_lexicon",
    "load_resources",
    "load_rules",
    "match_prefixes",
    "parse_text",
    "rank",
    "score_kumar",
    "score_mittal",
    "score_pop",
    "score_unigram",
    "segment_text",
    "synthesize",
]
