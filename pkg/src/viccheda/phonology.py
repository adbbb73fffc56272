"""SLP1 phoneme alphabet, sandhi rules and the inverted rule index.

SLP1 is one code point per phoneme, so a phoneme string is a plain ``str``
validated against the alphabet.  The avagraha ``'`` is a phoneme in its own
right, and a single space is the hard chunk boundary marker.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ConflictingRule, DuplicateRule, InvalidPhoneme, MalformedRow

# A PhonemeString is a str whose every character is in ALPHABET.
PhonemeString = str

VOWELS = "aAiIuUfFxXeEoO"
CONSONANTS = "kKgGNcCjJYwWqQRtTdDnpPbBmyrlvSzsh"
MARKS = "MH~'"
BOUNDARY = " "

ALPHABET = frozenset(VOWELS + CONSONANTS + MARKS + BOUNDARY)

MAX_PART_LEN = 2  # u and v may hold at most two phonemes each


class RuleContext(str, enum.Enum):
    SANDHI = "Sandhi"
    SAMASA = "Samasa"


@dataclass(frozen=True)
class SandhiRule:
    """A junction transition ``u|v -> w``.

    ``u`` is the final part of the left word, ``v`` the initial part of the
    right word, ``w`` what appears in the surface in their place.
    """

    rule_id: str
    u: PhonemeString
    v: PhonemeString
    w: PhonemeString
    context: RuleContext
    source_sutra: str = ""


# Synthetic junction used between whitespace-separated chunks.  Never stored
# in a RuleIndex; the segmenter and synthesizer special-case it.
BOUNDARY_RULE = SandhiRule(
    rule_id="_space_", u="", v="", w=BOUNDARY, context=RuleContext.SANDHI
)


@dataclass(frozen=True)
class InverseCandidate:
    u: PhonemeString
    v: PhonemeString
    rule: SandhiRule
    consumed: int


def parse_text(raw: str, scheme: str = "SLP1") -> PhonemeString:
    """Validate ``raw`` as SLP1 and collapse whitespace runs to one boundary.

    Raises InvalidPhoneme with the offending position in ``raw``.
    """
    if scheme != "SLP1":
        raise ValueError(f"unsupported transliteration scheme {scheme!r}")
    units: list[str] = []
    pending_boundary = False
    for i, ch in enumerate(raw):
        if ch.isspace():
            pending_boundary = bool(units)
            continue
        if ch not in ALPHABET or ch == BOUNDARY:
            raise InvalidPhoneme(i, ch)
        if pending_boundary:
            units.append(BOUNDARY)
            pending_boundary = False
        units.append(ch)
    return "".join(units)


def render(textp: PhonemeString) -> str:
    """Inverse of parse_text on its image (the identity)."""
    return textp


class RuleIndex:
    """Forward map (u, v, context) -> rule and its exact relational inverse."""

    def __init__(self, rules: list[SandhiRule]):
        self.rules: tuple[SandhiRule, ...] = tuple(rules)
        self._forward: dict[tuple[str, str, RuleContext], SandhiRule] = {}
        # inverse, bucketed by (first phoneme of w, len(w)) for window scans
        self._inverse: dict[tuple[str, int], list[SandhiRule]] = {}
        self.max_w_len = 0
        for r in rules:
            key = (r.u, r.v, r.context)
            if key in self._forward:
                raise ConflictingRule(r.u, r.v, r.context.value)
            self._forward[key] = r
            self._inverse.setdefault((r.w[0], len(r.w)), []).append(r)
            self.max_w_len = max(self.max_w_len, len(r.w))

    def __len__(self) -> int:
        return len(self.rules)

    def lookup(self, u: str, v: str, context: RuleContext) -> Optional[SandhiRule]:
        return self._forward.get((u, v, context))

    def window_rules(self, first: str, length: int) -> list[SandhiRule]:
        return self._inverse.get((first, length), [])


def _split_optional(cell: str) -> str:
    return "" if cell == "-" else cell


def load_rules(path) -> RuleIndex:
    """Load the TSV rule file (``rule_id u v w context [sutra]``)."""
    path = Path(path)
    rules: list[SandhiRule] = []
    seen_ids: set[str] = set()
    seen_keys: set[tuple[str, str, RuleContext]] = set()
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cells = line.split("\t")
            if len(cells) not in (5, 6):
                raise MalformedRow(path, line_no, f"expected 5 or 6 columns, got {len(cells)}")
            rule_id, u, v, w = cells[0], _split_optional(cells[1]), _split_optional(cells[2]), cells[3]
            sutra = cells[5] if len(cells) == 6 else ""
            try:
                context = RuleContext(cells[4])
            except ValueError:
                raise MalformedRow(path, line_no, f"unknown context {cells[4]!r}") from None
            if not rule_id:
                raise MalformedRow(path, line_no, "empty rule id")
            if len(u) > MAX_PART_LEN or len(v) > MAX_PART_LEN:
                raise MalformedRow(path, line_no, "u and v are limited to two phonemes")
            if not u and not v:
                raise MalformedRow(path, line_no, "u and v may not both be empty")
            if not w:
                raise MalformedRow(path, line_no, "w may not be empty")
            for part in (u, v, w):
                for ch in part:
                    if ch not in ALPHABET or ch == BOUNDARY:
                        raise MalformedRow(path, line_no, f"invalid phoneme {ch!r}")
            if rule_id in seen_ids:
                raise DuplicateRule(rule_id)
            key = (u, v, context)
            if key in seen_keys:
                raise ConflictingRule(u, v, context.value)
            seen_ids.add(rule_id)
            seen_keys.add(key)
            rules.append(SandhiRule(rule_id, u, v, w, context, sutra))
    return RuleIndex(rules)


def apply_sandhi(
    u: PhonemeString, v: PhonemeString, context: RuleContext, index: RuleIndex
) -> Optional[PhonemeString]:
    """Forward rule application; None is the NoRule outcome."""
    rule = index.lookup(u, v, context)
    return rule.w if rule is not None else None


def invert_at(textp: PhonemeString, pos: int, index: RuleIndex) -> list[InverseCandidate]:
    """All (u, v, rule) splits of a surface window starting at ``pos``.

    At a hard boundary marker the implicit identity candidate is returned in
    addition to any table matches.
    """
    if not 0 <= pos < len(textp):
        raise IndexError(pos)
    out: list[InverseCandidate] = []
    if textp[pos] == BOUNDARY:
        out.append(InverseCandidate("", "", BOUNDARY_RULE, 1))
    for length in range(1, index.max_w_len + 1):
        window = textp[pos : pos + length]
        if len(window) < length:
            break
        for rule in index.window_rules(textp[pos], length):
            if rule.w == window:
                out.append(InverseCandidate(rule.u, rule.v, rule, length))
    return out
