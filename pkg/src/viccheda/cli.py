"""Command-line front end: segment, eval, serve, check-resources."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import VicchedaError
from .evaluation import compare, evaluate, format_comparison, load_corpus
from .resources import ENV_VARS, load_resources, segment_text
from .scoring import Scorer
from .segmenter import DEFAULT_CAP
from .serialize import outcome_to_dict, outcome_to_tsv, to_json


def resource_options(fn):
    fn = click.option("--lexicon", envvar=ENV_VARS["lexicon"], default=None,
                      type=click.Path(), help="Lexicon TSV path.")(fn)
    fn = click.option("--rules", envvar=ENV_VARS["rules"], default=None,
                      type=click.Path(), help="Sandhi rule TSV path.")(fn)
    fn = click.option("--automaton", envvar=ENV_VARS["automaton"], default=None,
                      type=click.Path(), help="Phase automaton TSV path.")(fn)
    fn = click.option("--freq-dir", envvar=ENV_VARS["freq_dir"], default=None,
                      type=click.Path(), help="Frequency tables directory.")(fn)
    return fn


def _load(lexicon, rules, automaton, freq_dir):
    try:
        return load_resources(lexicon=lexicon, rules=rules,
                              automaton=automaton, freq_dir=freq_dir)
    except (VicchedaError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
def main():
    """Sanskrit external-sandhi segmentation engine."""


@main.command()
@click.argument("text")
@resource_options
@click.option("--scorer", type=click.Choice([s.value for s in Scorer]), default="pop")
@click.option("--no-dedup", is_flag=True, help="Keep raw enumeration order, no merging.")
@click.option("--max-solutions", type=int, default=DEFAULT_CAP)
@click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default="json")
def segment(text, lexicon, rules, automaton, freq_dir, scorer, no_dedup, max_solutions, fmt):
    """Segment TEXT and print the ranked solutions."""
    res = _load(lexicon, rules, automaton, freq_dir)
    try:
        outcome = segment_text(res, text, scorer=Scorer(scorer),
                               dedup=not no_dedup, cap=max_solutions)
    except VicchedaError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(to_json(outcome_to_dict(outcome)))
    else:
        click.echo(outcome_to_tsv(outcome))
    sys.exit(0 if outcome.solutions else 1)


@main.command("eval")
@click.argument("corpus", type=click.Path())
@resource_options
@click.option("--scorer", type=click.Choice([s.value for s in Scorer]), default="pop")
@click.option("--out-json", type=click.Path(), default=None,
              help="Write both reports and the comparison as JSON.")
@click.option("--out-table", type=click.Path(), default=None,
              help="Write the aligned comparison table.")
def eval_cmd(corpus, lexicon, rules, automaton, freq_dir, scorer, out_json, out_table):
    """Evaluate both segmenter modes over a parallel corpus."""
    res = _load(lexicon, rules, automaton, freq_dir)
    try:
        items = load_corpus(corpus)
    except (VicchedaError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    old = evaluate(items, res, scorer=Scorer(scorer), dedup=False)
    new = evaluate(items, res, scorer=Scorer(scorer), dedup=True)
    rows = compare(old, new)
    table = format_comparison(rows)
    payload = {
        "schema": 1,
        "old": old.to_dict(),
        "updated": new.to_dict(),
        "comparison": rows,
    }
    if out_json:
        Path(out_json).write_text(to_json(payload) + "\n", encoding="utf-8")
    if out_table:
        Path(out_table).write_text(table + "\n", encoding="utf-8")
    click.echo(table)


@main.command()
@resource_options
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
@click.option("--static-dir", type=click.Path(), default=None,
              help="Directory with the built web UI, served at /.")
def serve(lexicon, rules, automaton, freq_dir, host, port, static_dir):
    """Run the HTTP/JSON service."""
    import uvicorn

    from .service import create_app

    res = _load(lexicon, rules, automaton, freq_dir)
    if static_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        static_dir = str(candidate) if candidate.is_dir() else None
    uvicorn.run(create_app(res, static_dir=static_dir), host=host, port=port)


@main.command("check-resources")
@resource_options
def check_resources(lexicon, rules, automaton, freq_dir):
    """Load every resource file and report a summary."""
    res = _load(lexicon, rules, automaton, freq_dir)
    t = res.tables
    click.echo(f"lexicon    {res.lexicon_path}: {len(res.lexicon)} entries")
    click.echo(f"rules      {res.rules_path}: {len(res.rules)} rules")
    click.echo(
        f"automaton  {res.automaton_path}: "
        f"{len(res.automaton.states)} states, {len(res.automaton.edges)} edges"
    )
    click.echo(
        f"frequencies {res.freq_dir}: "
        f"words {t.sandhi_word_total}+{t.samasa_word_total}, "
        f"transitions {t.sandhi_transition_total}+{t.samasa_transition_total}"
    )


if __name__ == "__main__":
    main()
