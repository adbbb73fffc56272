import math

import pytest

from viccheda.errors import DifferentCorpora, MalformedRow
from viccheda.evaluation import (
    CorpusItem,
    compare,
    evaluate,
    format_comparison,
    load_corpus,
)


class TestLoadCorpus:
    def test_fifty_items(self, corpus50_path):
        corpus = load_corpus(corpus50_path)
        assert len(corpus) == 50
        assert corpus[0] == CorpusItem("asti", ("asti",))

    def test_malformed_row(self, tmp_path):
        p = tmp_path / "corpus.tsv"
        p.write_text("asti\n", encoding="utf-8")
        with pytest.raises(MalformedRow):
            load_corpus(p)

    def test_invalid_gold_phoneme(self, tmp_path):
        p = tmp_path / "corpus.tsv"
        p.write_text("asti\tāsti\n", encoding="utf-8")
        with pytest.raises(MalformedRow):
            load_corpus(p)

    def test_comments_and_blanks_skipped(self, tmp_path):
        p = tmp_path / "corpus.tsv"
        p.write_text("# header\n\nasti\tasti\n", encoding="utf-8")
        assert len(load_corpus(p)) == 1


class TestEvaluateSmall:
    def test_three_item_report_in_enumeration_order(self, resources):
        corpus = [
            CorpusItem("rAmAlayo'sti", ("rAmA", "layaH", "asti")),
            CorpusItem("rAmAlayo'sti", ("rAmA", "alayaH", "asti")),
            CorpusItem("rAmAlayo'sti", ("rAma", "vanam")),
        ]
        report = evaluate(corpus, resources, dedup=False)
        assert report.total == 3
        assert report.with_correct == 2
        assert math.isclose(report.recall, 2 / 3)
        assert report.position_histogram == {
            "1": 1, "2": 1, "3": 0, "4": 0, "5": 0, ">5": 0
        }
        assert report.avg_correct_position == 1.5
        assert report.avg_solutions == 12.0

    def test_unparseable_item_counts_as_incorrect(self, resources):
        report = evaluate([CorpusItem("zzz", ("zzz",))], resources)
        assert report.total == 1 and report.with_correct == 0
        assert report.recall == 0.0

    def test_empty_corpus_is_degenerate(self, resources):
        report = evaluate([], resources)
        assert report.degenerate and report.recall == 0.0


class TestEvaluateCorpus50:
    @pytest.fixture()
    def corpus(self, corpus50_path):
        return load_corpus(corpus50_path)

    def test_updated_segmenter_report(self, resources, corpus):
        r = evaluate(corpus, resources, dedup=True)
        assert r.total == 50
        assert r.with_correct == 47
        assert math.isclose(r.recall, 0.94)
        assert r.position_histogram == {
            "1": 40, "2": 0, "3": 0, "4": 0, "5": 0, ">5": 7
        }
        assert r.entries_with_k_solutions == {1: 37, 2: 0, 3: 0}
        assert math.isclose(r.avg_solutions, 181 / 50)
        assert math.isclose(r.avg_correct_position, 88 / 47)

    def test_baseline_report(self, resources, corpus):
        r = evaluate(corpus, resources, dedup=False)
        assert r.with_correct == 47
        assert r.position_histogram == {
            "1": 39, "2": 0, "3": 0, "4": 3, "5": 5, ">5": 0
        }
        assert r.entries_with_k_solutions == {1: 17, 2: 10, 3: 0}
        assert math.isclose(r.avg_solutions, 221 / 50)
        assert math.isclose(r.avg_correct_position, 76 / 47)

    def test_recall_independent_of_ranking_mode(self, resources, corpus):
        a = evaluate(corpus, resources, dedup=False)
        b = evaluate(corpus, resources, dedup=True)
        assert a.with_correct == b.with_correct

    def test_to_dict_percentages(self, resources, corpus):
        d = evaluate(corpus, resources, dedup=True).to_dict()
        rank1 = next(row for row in d["position_histogram"] if row["rank"] == "1")
        assert math.isclose(rank1["pct_of_total"], 100.0 * 40 / 50)
        assert math.isclose(rank1["pct_of_with_correct"], 100.0 * 40 / 47)


class TestCompare:
    def test_rows_and_deltas(self, resources, corpus50_path):
        corpus = load_corpus(corpus50_path)
        old = evaluate(corpus, resources, dedup=False)
        new = evaluate(corpus, resources, dedup=True)
        rows = compare(old, new)
        by_label = {r["label"]: r for r in rows}
        assert by_label["Input text"]["a"] == 50
        r1 = by_label["Correct sol in 1"]
        assert r1["a"] == 39 and r1["b"] == 40
        assert math.isclose(r1["delta"], 100.0 * (40 - 39) / 50)
        assert by_label["Correct sol"]["delta"] == 0.0

    def test_different_totals_rejected(self, resources):
        a = evaluate([CorpusItem("asti", ("asti",))], resources)
        b = evaluate(
            [CorpusItem("asti", ("asti",)), CorpusItem("vanam", ("vanam",))], resources
        )
        with pytest.raises(DifferentCorpora):
            compare(a, b)

    def test_format_comparison_is_aligned_text(self, resources, corpus50_path):
        corpus = load_corpus(corpus50_path)
        rows = compare(
            evaluate(corpus, resources, dedup=False),
            evaluate(corpus, resources, dedup=True),
        )
        text = format_comparison(rows)
        lines = text.splitlines()
        assert lines[0].startswith("Metric")
        assert any("Correct sol in >5th" in l for l in lines)
        assert len(lines) == len(rows) + 1
