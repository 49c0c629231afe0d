"""Command line interface.

Subcommands: ``summarize``, ``evaluate``, ``inspect``, ``quality-stats``, and
``wordnet lookup``.  Inputs must be pre-annotated frame files (JSONL or
CoNLL props columns) with pronouns already resolved; the tool never runs a
tagger or role labeler.  Exit codes: 0 success, 1 usage/config error, 2 input
parse error, 3 lexicon error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from framesum.evaluate import QualityRatings, format_quality_table, quality_stats
from framesum.frames import FrameFormatError
from framesum.graph import to_dot
from framesum.pipeline import (
    INSPECT_TARGETS,
    ConfigError,
    PipelineConfig,
    load_config,
    run_evaluate,
    run_inspect,
    run_pipeline,
)
from framesum.wordnet import (
    LexiconError,
    Pos,
    Relation,
    load_wordnet_dir,
    normalize_lemma,
    synsets_of,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_LEXICON = 3

ENV_WORDNET = "FRAMESUM_WORDNET"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--wordnet", metavar="DIR", help="WordNet database directory "
                        f"(fallback: ${ENV_WORDNET})")
    common.add_argument("--config", metavar="PATH", help="key=value configuration file")
    common.add_argument("--verbose", action="store_true", help="log pipeline stages to stderr")

    parser = _Parser(prog="framesum", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", parents=[common],
                       help="summarize an annotated document")
    p.add_argument("frames", help="frame file to summarize")
    p.add_argument("--format", choices=("jsonl", "conll"), default="jsonl")
    p.add_argument("--out", metavar="PATH", help="write the summary here instead of stdout")
    p.add_argument("--report", metavar="PATH", help="write the JSON run report here")
    p.add_argument("--dump-graph", metavar="PATH", help="write the frame graph as DOT")
    p.add_argument("--dump-signatures", action="store_true",
                   help="include per-frame signatures in the JSON report")
    p.add_argument("--merge-overlaps", action="store_true", default=None,
                   help="union overlapping segments into connected components")
    p.add_argument("--keep-modifiers", action="store_true", default=None,
                   help="append modifier arguments to generated sentences")

    p = sub.add_parser("evaluate", parents=[common],
                       help="score a system summary's frames against a reference")
    p.add_argument("system_frames", help="frame file of the system summary")
    p.add_argument("reference_frames", help="frame file of the reference summary")
    p.add_argument("--format", choices=("jsonl", "conll"), default="jsonl")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here instead of stdout")

    p = sub.add_parser("inspect", parents=[common],
                       help="dump one intermediate representation")
    p.add_argument("what", choices=INSPECT_TARGETS)
    p.add_argument("frames", help="frame file to inspect")
    p.add_argument("--format", choices=("jsonl", "conll"), default="jsonl")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--merge-overlaps", action="store_true", default=None)

    p = sub.add_parser("quality-stats", parents=[common],
                       help="print mean/SD table for a human-ratings JSON file")
    p.add_argument("ratings", help="JSON file mapping attribute names to rating lists")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("wordnet", parents=[common], help="lexicon queries")
    wn_sub = p.add_subparsers(dest="wordnet_command", required=True)
    lookup = wn_sub.add_parser("lookup", parents=[common],
                               help="show the synsets and neighbors of a lemma")
    lookup.add_argument("lemma")
    lookup.add_argument("pos", choices=("noun", "verb", "n", "v"))
    return parser


def _emit(text: str, out_path: str | None):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _config_from(args) -> PipelineConfig:
    overrides = {"wordnet_dir": args.wordnet}
    for flag in ("merge_overlaps", "keep_modifiers"):
        if getattr(args, flag, None) is not None:
            overrides[flag] = getattr(args, flag)
    return load_config(args.config, overrides, os.environ.get(ENV_WORDNET))


def _cmd_summarize(args) -> int:
    config = _config_from(args)
    run = run_pipeline(config, args.frames, args.format,
                       include_signatures=args.dump_signatures)
    _emit("".join(line + "\n" for line in run.report.summary), args.out)
    if args.dump_graph:
        Path(args.dump_graph).write_text(to_dot(run.graph, run.segmentation), encoding="utf-8")
    if args.report:
        Path(args.report).write_text(run.report.to_json(), encoding="utf-8")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    config = _config_from(args)
    report = run_evaluate(config, args.system_frames, args.reference_frames, args.format)
    _emit(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_inspect(args) -> int:
    config = _config_from(args)
    _emit(run_inspect(config, args.frames, args.what, args.format), args.out)
    return EXIT_OK


def _cmd_quality_stats(args) -> int:
    try:
        data = json.loads(Path(args.ratings).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("ratings file must contain a JSON object")
        ratings = QualityRatings.from_json_dict(data)
        stats = quality_stats(ratings)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise FrameFormatError(f"bad ratings file {args.ratings}: {exc}") from None
    _emit(format_quality_table(stats), args.out)
    return EXIT_OK


def _cmd_wordnet_lookup(args) -> int:
    config = _config_from(args)
    if config.wordnet_dir is None:
        raise ConfigError("wordnet_dir", "no WordNet directory configured")
    try:
        lexicon = load_wordnet_dir(config.wordnet_dir)
    except OSError as exc:
        raise LexiconError(f"cannot load WordNet from {config.wordnet_dir}: {exc}") from None
    pos = Pos.NOUN if args.pos in ("noun", "n") else Pos.VERB
    lemma = normalize_lemma(args.lemma)
    ids = synsets_of(lexicon, lemma, pos)
    if not ids:
        print(f"{lemma} ({pos.value}): no synsets")
        return EXIT_OK
    for sid in sorted(ids):
        synset = lexicon.synsets[sid]
        print(f"{sid[1]:08d}-{sid[0].value}  {', '.join(synset.lemmas)}")
        for kind in (Relation.HYPERNYM, Relation.HYPONYM):
            related = sorted(
                (tpos, toff) for rel, toff, tpos in synset.relations if rel is kind
            )
            if related:
                label = "hypernyms" if kind is Relation.HYPERNYM else "hyponyms/troponyms"
                rendered = ", ".join(
                    f"{off:08d}-{p.value} {lexicon.synsets[(p, off)].lemmas[0]}"
                    for p, off in related
                )
                print(f"  {label}: {rendered}")
    return EXIT_OK


_COMMANDS = {
    "summarize": _cmd_summarize,
    "evaluate": _cmd_evaluate,
    "inspect": _cmd_inspect,
    "quality-stats": _cmd_quality_stats,
    "wordnet": _cmd_wordnet_lookup,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, format="%(name)s: %(message)s",
                        level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"framesum: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FrameFormatError as exc:
        print(f"framesum: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LexiconError as exc:
        print(f"framesum: lexicon error: {exc}", file=sys.stderr)
        return EXIT_LEXICON


def console_entry():
    sys.exit(main())
