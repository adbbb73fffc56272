"""Acceptance suite: one test per release criterion.

Run with ``pytest -v tests/test_acceptance.py`` for one pass/fail line per
criterion.  Tolerances are pinned in the assertions themselves.
"""

import math
import random
import time

from viccheda.evaluation import evaluate, load_corpus
from viccheda.lexicon import Lexicon, LexiconEntry
from viccheda.phonology import RuleContext, RuleIndex, SandhiRule, parse_text
from viccheda.ranking import dedup, dedup_key, rank
from viccheda.resources import segment_text
from viccheda.scoring import Scorer, score
from viccheda.segmenter import build_lattice, enumerate_solutions, synthesize

from fixtures import random_fixture, small_automaton, synthesize_random_text
from oracles import ProductOracle, brute_force_solutions, solution_triples

REFERENCE_ROWS = {
    (("rAma", "AlayaH", "asti"), ("Iic", "Noun", "Pr")),
    (("rAma", "AlayaH", "asti"), ("Iic", "Ifc", "Pr")),
    (("rAma", "alayaH", "asti"), ("Iic", "Noun", "Pr")),
    (("rAma", "alayaH", "asti"), ("Iic", "Ifc", "Pr")),
    (("rAma", "a", "layaH", "asti"), ("Iic", "Iic", "Noun", "Pr")),
    (("rAmA", "AlayaH", "asti"), ("Noun", "Noun", "Pr")),
    (("rAmA", "alayaH", "asti"), ("Noun", "Noun", "Pr")),
    (("rAmA", "a", "layaH", "asti"), ("Noun", "Iic", "Noun", "Pr")),
    (("rAmA", "layaH", "asti"), ("Noun", "Noun", "Pr")),
    (("rAma", "AlayaH", "asti"), ("Pr", "Noun", "Pr")),
    (("rAma", "alayaH", "asti"), ("Pr", "Noun", "Pr")),
    (("rAma", "a", "layaH", "asti"), ("Pr", "Iic", "Noun", "Pr")),
}


def passline(name):
    print(f"ACCEPTANCE PASS: {name}")


def test_reference_sentence_reproduction(resources):
    """Exactly 12 (word, phase) rows on the temple sentence, in < 100 ms."""
    t0 = time.monotonic()
    outcome = segment_text(resources, "rAmAlayo'sti", dedup=False)
    elapsed = time.monotonic() - t0
    rows = {
        (sol.word_sequence(), tuple(s.phase.name for s in sol.segments))
        for sol in outcome.solutions
    }
    assert len(outcome.solutions) == 12
    assert rows == REFERENCE_ROWS
    assert elapsed < 0.100, f"took {elapsed * 1000:.1f} ms"
    passline("reference sentence: exactly 12 solutions in < 100 ms")


def test_village_sentence_reproduction(resources):
    """4 raw analyses; word-level merging leaves exactly one."""
    raw = segment_text(resources, "rAmovanaNgacCati", dedup=False)
    assert len(raw.solutions) == 4
    assert {s.word_sequence() for s in raw.solutions} == {("rAmaH", "vanam", "gacCati")}
    merged = segment_text(resources, "rAmovanaNgacCati", dedup=True)
    assert len(merged.solutions) == 1
    assert merged.solutions[0].word_sequence() == ("rAmaH", "vanam", "gacCati")
    passline("village sentence: 4 raw analyses, 1 after merging")


def test_soundness_every_solution_round_trips():
    """>= 1000 random texts; every emitted solution resynthesizes exactly."""
    rng = random.Random(1009)
    texts = 0
    solutions = 0
    while texts < 1000:
        lex, entries, rules, auto = random_fixture(rng)
        made = synthesize_random_text(rng, entries, rules, auto)
        if made is not None:
            text = made[0]
        else:
            text = "".join(rng.choice("aikrst") for _ in range(rng.randint(1, 12)))
        lat = build_lattice(text, lex, rules, auto)
        for sol in enumerate_solutions(lat, cap=500).solutions:
            assert synthesize(sol, rules) == text
            solutions += 1
        texts += 1
    assert solutions > 0
    passline(f"soundness: {solutions} solutions over {texts} random texts, zero failures")


def test_oracle_equivalence_with_brute_force_splitter():
    """>= 500 random cases, solution sets exactly equal, whole run < 60 s."""
    t0 = time.monotonic()
    rng = random.Random(8191)
    for case in range(500):
        lex, entries, rules, auto = random_fixture(rng, max_entries=25)
        text = "".join(rng.choice("aikrst ") for _ in range(rng.randint(1, 15)))
        text = " ".join(text.split()) or "a"
        lat = build_lattice(text, lex, rules, auto)
        got = {solution_triples(s) for s in enumerate_solutions(lat, cap=None).solutions}
        want = brute_force_solutions(text, entries, rules, auto)
        assert got == want, f"case {case}: divergence on {text!r}"
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"took {elapsed:.1f} s"
    passline(f"oracle equivalence: 500 cases in {elapsed:.1f} s")


def test_scoring_matches_spreadsheet_oracle(resources, freq_dir):
    """All four scorers agree with the spreadsheet oracle to rel 1e-12."""
    oracle = ProductOracle(freq_dir)
    checked = 0
    for sol in segment_text(resources, "rAmAlayo'sti", dedup=False).solutions:
        for scorer in Scorer:
            got = score(sol, scorer, resources.tables).value
            want = getattr(oracle, scorer.value)(sol)
            assert math.isclose(got, want, rel_tol=1e-12), (scorer, sol.word_sequence())
            checked += 1
    assert checked == 48
    passline("scoring oracle: 12 solutions x 4 scorers within rel 1e-12")


def test_ranking_invariants(resources, corpus50_path):
    """Dedup idempotence, permutation stability, sorted confidence, recall parity."""
    sols = segment_text(resources, "rAmAlayo'sti", dedup=False).solutions
    once = dedup(sols)
    assert [dedup_key(s) for s in dedup(once)] == [dedup_key(s) for s in once]

    base = rank(list(sols), Scorer.POP, resources.tables)
    assert {dedup_key(s) for s in base} == {dedup_key(s) for s in sols}
    rng = random.Random(3)
    for _ in range(3):
        shuffled = list(sols)
        rng.shuffle(shuffled)
        again = rank(shuffled, Scorer.POP, resources.tables)
        assert [dedup_key(s) for s in again] == [dedup_key(s) for s in base]
    confs = [s.confidence for s in base]
    assert confs == sorted(confs, reverse=True)

    corpus = load_corpus(corpus50_path)
    assert (
        evaluate(corpus, resources, dedup=False).with_correct
        == evaluate(corpus, resources, dedup=True).with_correct
    )
    passline("ranking invariants: idempotence, permutation, order, recall parity")


def test_eval_harness_exact_report(resources, corpus50_path):
    """Hand-computed report on the 50-item corpus, both segmenter modes."""
    corpus = load_corpus(corpus50_path)
    new = evaluate(corpus, resources, dedup=True)
    assert new.total == 50
    assert new.with_correct == 47
    assert math.isclose(new.recall, 47 / 50)
    assert new.position_histogram == {"1": 40, "2": 0, "3": 0, "4": 0, "5": 0, ">5": 7}
    assert new.entries_with_k_solutions == {1: 37, 2: 0, 3: 0}
    assert math.isclose(new.avg_solutions, 181 / 50)
    assert math.isclose(new.avg_correct_position, 88 / 47)

    old = evaluate(corpus, resources, dedup=False)
    assert old.with_correct == 47
    assert old.position_histogram == {"1": 39, "2": 0, "3": 0, "4": 3, "5": 5, ">5": 0}
    assert old.entries_with_k_solutions == {1: 17, 2: 10, 3: 0}
    assert math.isclose(old.avg_solutions, 221 / 50)
    assert math.isclose(old.avg_correct_position, 76 / 47)

    # corpus items with phase-duplicated analyses exist, so merging must
    # strictly lower the average solution count
    assert new.avg_solutions < old.avg_solutions
    passline("eval harness: exact hand-computed report on 50 items")


def test_performance_linear_time(resources):
    """Expansion bound on reference inputs; 1000-phoneme text in < 1 s."""
    for raw in ("rAmAlayo'sti", "rAmovanaNgacCati", "asti asti"):
        text = parse_text(raw)
        lat = build_lattice(text, resources.lexicon, resources.rules, resources.automaton)
        n_states = len(resources.automaton.states)
        assert lat.stats["expansions"] <= (len(text) + 1) * n_states
        assert lat.stats["nodes"] <= (len(text) + 1) * n_states * lat.stats["pendings"]

    # 1000-entry lexicon, 1000-phoneme text
    rng = random.Random(17)
    auto = small_automaton()
    noun = auto.phases["Noun"]
    entries = [LexiconEntry("a" * 10, noun, "a" * 10, "")]
    while len(entries) < 1000:
        form = "".join(rng.choice("ikrst") for _ in range(rng.randint(2, 8)))
        e = LexiconEntry(form, noun, form, "")
        if e not in entries:
            entries.append(e)
    lex = Lexicon(entries)
    rules = RuleIndex([SandhiRule("T1", "", "a", "a", RuleContext.SANDHI)])
    text = "a" * 1000
    t0 = time.monotonic()
    lat = build_lattice(text, lex, rules, auto)
    result = enumerate_solutions(lat)
    for sol in result.solutions:
        assert synthesize(sol, rules) == text
    elapsed = time.monotonic() - t0
    assert result.solutions and not result.truncated
    assert elapsed < 1.0, f"took {elapsed:.3f} s"
    passline(f"performance: 1000-phoneme / 1000-entry case in {elapsed * 1000:.0f} ms")


def test_cap_semantics(resources):
    """Truncation is flagged and deterministic; cap=None means exhaustive."""
    full = segment_text(resources, "rAmAlayo'sti", dedup=False, cap=None)
    capped = segment_text(resources, "rAmAlayo'sti", dedup=False, cap=5)
    assert not full.truncated and full.total_paths == 12
    assert capped.truncated and len(capped.solutions) == 5
    assert [s.word_sequence() for s in capped.solutions] == [
        s.word_sequence() for s in full.solutions[:5]
    ]
    passline("cap semantics: deterministic truncation with flag")
