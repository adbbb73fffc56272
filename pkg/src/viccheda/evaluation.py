"""Parallel-corpus evaluation: recall, rank histogram, solution counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DifferentCorpora, MalformedRow, VicchedaError
from .phonology import ALPHABET, BOUNDARY

HIST_BUCKETS = ("1", "2", "3", "4", "5", ">5")


@dataclass(frozen=True)
class CorpusItem:
    sandhied: str
    gold_split: tuple[str, ...]


@dataclass
class EvalReport:
    total: int = 0
    with_correct: int = 0
    position_histogram: dict[str, int] = field(
        default_factory=lambda: {b: 0 for b in HIST_BUCKETS}
    )
    entries_with_k_solutions: dict[int, int] = field(
        default_factory=lambda: {1: 0, 2: 0, 3: 0}
    )
    avg_solutions: float = 0.0
    avg_correct_position: float = 0.0
    degenerate: bool = False

    @property
    def recall(self) -> float:
        return self.with_correct / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        def pct(n: int, d: int) -> float:
            return 100.0 * n / d if d else 0.0

        return {
            "total": self.total,
            "with_correct": self.with_correct,
            "recall": self.recall,
            "incorrect": self.total - self.with_correct,
            "position_histogram": [
                {
                    "rank": b,
                    "count": c,
                    "pct_of_total": pct(c, self.total),
                    "pct_of_with_correct": pct(c, self.with_correct),
                }
                for b, c in self.position_histogram.items()
            ],
            "entries_with_k_solutions": [
                {"k": k, "count": c, "pct_of_total": pct(c, self.total)}
                for k, c in self.entries_with_k_solutions.items()
            ],
            "avg_solutions": self.avg_solutions,
            "avg_correct_position": self.avg_correct_position,
            "degenerate": self.degenerate,
        }


def load_corpus(path) -> list[CorpusItem]:
    """TSV: ``sandhied \\t gold`` with gold forms space-separated."""
    path = Path(path)
    items: list[CorpusItem] = []
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cells = line.split("\t")
            if len(cells) != 2 or not cells[0] or not cells[1].strip():
                raise MalformedRow(path, line_no, "expected 'sandhied<TAB>gold forms'")
            gold = tuple(cells[1].split())
            for form in gold:
                for ch in form:
                    if ch not in ALPHABET or ch == BOUNDARY:
                        raise MalformedRow(path, line_no, f"invalid gold phoneme {ch!r}")
            items.append(CorpusItem(cells[0], gold))
    return items


def evaluate(
    corpus: list[CorpusItem],
    resources,
    scorer=None,
    dedup: bool = True,
    cap: Optional[int] = None,
) -> EvalReport:
    """Run the segmenter over the corpus and aggregate gold-rank statistics.

    With ``dedup`` false the solutions stay in raw enumeration order without
    ranking, modelling the phase-level segmenter baseline.
    """
    from .resources import segment_text  # local import to avoid a cycle

    report = EvalReport(total=len(corpus))
    if not corpus:
        report.degenerate = True
        return report
    n_solutions_sum = 0
    position_sum = 0
    for item in corpus:
        try:
            outcome = segment_text(
                resources, item.sandhied, scorer=scorer, dedup=dedup, cap=cap
            )
            solutions = outcome.solutions
        except VicchedaError:
            solutions = []
        n_solutions_sum += len(solutions)
        if len(solutions) in report.entries_with_k_solutions:
            report.entries_with_k_solutions[len(solutions)] += 1
        gold_rank = None
        for i, sol in enumerate(solutions, 1):
            if sol.word_sequence() == item.gold_split:
                gold_rank = i
                break
        if gold_rank is not None:
            report.with_correct += 1
            position_sum += gold_rank
            bucket = str(gold_rank) if gold_rank <= 5 else ">5"
            report.position_histogram[bucket] += 1
    report.avg_solutions = n_solutions_sum / report.total
    report.avg_correct_position = (
        position_sum / report.with_correct if report.with_correct else 0.0
    )
    return report


def compare(report_a: EvalReport, report_b: EvalReport) -> list[dict]:
    """Side-by-side rows with percentages (of total inputs) and deltas."""
    if report_a.total != report_b.total:
        raise DifferentCorpora(
            f"reports cover {report_a.total} vs {report_b.total} items"
        )

    def pct(n, total):
        return 100.0 * n / total if total else 0.0

    rows: list[dict] = []

    def add(label, a_count, b_count, a_pct=None, b_pct=None):
        rows.append(
            {
                "label": label,
                "a": a_count,
                "a_pct": a_pct,
                "b": b_count,
                "b_pct": b_pct,
                "delta": (b_pct - a_pct) if a_pct is not None else None,
            }
        )

    total = report_a.total
    add("Input text", total, total)
    add(
        "Correct sol",
        report_a.with_correct,
        report_b.with_correct,
        pct(report_a.with_correct, total),
        pct(report_b.with_correct, total),
    )
    for bucket in HIST_BUCKETS:
        label = f"Correct sol in {bucket}" if bucket != ">5" else "Correct sol in >5th"
        a_c = report_a.position_histogram[bucket]
        b_c = report_b.position_histogram[bucket]
        add(label, a_c, b_c, pct(a_c, total), pct(b_c, total))
    add(
        "Incorrect sol",
        total - report_a.with_correct,
        total - report_b.with_correct,
        pct(total - report_a.with_correct, total),
        pct(total - report_b.with_correct, total),
    )
    for k in (1, 2, 3):
        a_c = report_a.entries_with_k_solutions[k]
        b_c = report_b.entries_with_k_solutions[k]
        add(f"Entries with {k} solution{'s' if k > 1 else ''}", a_c, b_c,
            pct(a_c, total), pct(b_c, total))
    add("Avg solutions", report_a.avg_solutions, report_b.avg_solutions)
    add("Avg correct position", report_a.avg_correct_position,
        report_b.avg_correct_position)
    return rows


def format_comparison(rows: list[dict], a_name: str = "Old", b_name: str = "Updated") -> str:
    def fmt(x):
        if x is None:
            return "-"
        if isinstance(x, float):
            return f"{x:.2f}"
        return str(x)

    header = ["Metric", a_name, "%", b_name, "%", "Delta(%)"]
    body = [
        [r["label"], fmt(r["a"]), fmt(r["a_pct"]), fmt(r["b"]), fmt(r["b_pct"]), fmt(r["delta"])]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(6)]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
