"""Builders for temporary resource files and randomized fixtures."""

from __future__ import annotations

import random

from viccheda.automaton import PhaseAutomaton
from viccheda.lexicon import Lexicon, LexiconEntry, Phase
from viccheda.phonology import RuleIndex, SandhiRule, RuleContext


def write_tsv(path, rows):
    path.write_text("\n".join("\t".join(r) for r in rows) + "\n", encoding="utf-8")


def small_automaton():
    return PhaseAutomaton(
        edges={
            ("Start", "Iic"), ("Start", "Noun"), ("Start", "Pr"),
            ("Iic", "Iic"), ("Iic", "Ifc"), ("Iic", "Noun"),
            ("Noun", "Accept"), ("Ifc", "Accept"), ("Pr", "Accept"),
        },
        compound_phases={"Iic", "Ifc"},
    )


def random_fixture(rng: random.Random, max_entries: int = 25):
    """A random lexicon and rule table over a small alphabet.

    Returns (lexicon, entries, rule_index, automaton).  Rule tables always
    contain identity juxtaposition rows for a few initials so synthesized
    texts can chain words.
    """
    alphabet = "aikrst"
    auto = small_automaton()
    phases = [auto.phases[name] for name in ("Iic", "Ifc", "Noun", "Pr")]

    n_entries = rng.randint(3, max_entries)
    entries = []
    for i in range(n_entries):
        form = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
        phase = rng.choice(phases)
        entries.append(LexiconEntry(form, phase, form, f"g{i}"))
    lex = Lexicon(entries)

    rules = []
    seen = set()
    rid = 0
    # identity juxtaposition rules
    for ch in alphabet[: rng.randint(2, len(alphabet))]:
        key = ("", ch, RuleContext.SANDHI)
        seen.add(key)
        rid += 1
        rules.append(SandhiRule(f"T{rid}", "", ch, ch, RuleContext.SANDHI))
    # random transformation rules
    for _ in range(rng.randint(2, 10)):
        u = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 2)))
        v = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 2)))
        if not u and not v:
            continue
        key = (u, v, RuleContext.SANDHI)
        if key in seen:
            continue
        seen.add(key)
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
        rid += 1
        rules.append(SandhiRule(f"T{rid}", u, v, w, RuleContext.SANDHI))
    return lex, entries, RuleIndex(rules), auto


def synthesize_random_text(rng: random.Random, entries, rules, auto, max_words=4):
    """Glue a random valid word chain through the rule table; returns
    (text, n_words) or None when no chain can be built."""
    for _ in range(30):
        state = "Start"
        pending = ""
        parts = []
        n_words = rng.randint(1, max_words)
        ok = True
        for i in range(n_words):
            candidates = [
                e for e in entries
                if e.surface.startswith(pending)
                and auto.valid_move(state, e.phase.name)
            ]
            rng.shuffle(candidates)
            placed = False
            for e in candidates:
                form = e.surface
                if i == n_words - 1:
                    if auto.can_accept(e.phase.name):
                        parts.append(form[len(pending):])
                        placed = True
                        break
                    continue
                usable = [
                    r for r in rules.rules
                    if form.endswith(r.u) and len(form) - len(r.u) >= len(pending)
                ]
                if not usable:
                    continue
                r = rng.choice(usable)
                parts.append(form[len(pending): len(form) - len(r.u)] + r.w)
                pending = r.v
                state = e.phase.name
                placed = True
                break
            if not placed:
                ok = False
                break
        if ok:
            return "".join(parts), n_words
    return None
