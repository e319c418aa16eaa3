"""Command-line front end.

Subcommands:
    annotate  ORIG.conllu CORR.conllu  -> M2 annotations
    score     HYP.m2 REF.m2            -> precision/recall/F report
    stats     FILE.m2                  -> operation counts and top categories

Exit codes: 0 success, 1 internal error, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from geckit import __version__
from geckit.align import CostConfig, MergeConfig
from geckit.conllu import parse_conllu, sentence_pairs
from geckit.errors import GecKitError
from geckit.m2 import format_corpus, parse_m2
from geckit.pipeline import annotate_corpus
from geckit.profiles import load_profile
from geckit.scorer import (
    DEFAULT_TYPE_MODE,
    MATCH_MODES,
    MODE_SPAN_CORRECTION,
    corpus_stats,
    evaluate_corpus,
    render_report,
    render_report_kv,
    render_stats,
)

_MERGE_RULES = ("uniform", "wb", "pos", "punct")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GecKitError(f"cannot read {path}: {exc}") from exc


def _merge_config(spec: str) -> MergeConfig:
    wanted = {item.strip() for item in spec.split(",") if item.strip()}
    unknown = wanted - set(_MERGE_RULES)
    if unknown:
        raise GecKitError(
            f"unknown merge rule(s) {sorted(unknown)}; known: {', '.join(_MERGE_RULES)}")
    return MergeConfig(
        uniform_runs="uniform" in wanted,
        word_boundary="wb" in wanted,
        same_pos="pos" in wanted,
        punct_case="punct" in wanted,
    )


def _cmd_annotate(args) -> int:
    profile = load_profile(args.profile)
    if args.alpha1 is not None or args.alpha2 is not None:
        profile = profile.with_thresholds(args.alpha1, args.alpha2)
    inventory = profile.upos_inventory()
    orig = parse_conllu(_read_text(args.orig), inventory)
    corr = parse_conllu(_read_text(args.corr), inventory)
    pairs = sentence_pairs(orig, corr)
    cost_cfg = CostConfig(transpose_base=args.transpose_cost, window=args.window)
    merge_cfg = _merge_config(args.merge_rules)
    entries = annotate_corpus(pairs, profile,
                              cost_cfg=cost_cfg, merge_cfg=merge_cfg,
                              annotator=args.annotator, noop=args.noop)
    header = ()
    if args.provenance:
        header = (
            f"geckit {__version__} annotate profile={profile.name} "
            f"alpha1={profile.thresholds.alpha1:g} alpha2={profile.thresholds.alpha2:g} "
            f"transpose-cost={args.transpose_cost:g} window={args.window} "
            f"merge-rules={args.merge_rules} annotator={args.annotator}",
        )
    text = format_corpus(entries, header_comments=header)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_score(args) -> int:
    hyp = parse_m2(_read_text(args.hyp))
    ref = parse_m2(_read_text(args.ref))
    report = evaluate_corpus(hyp, ref, beta=args.beta, mode=args.mode)
    if args.per_type and args.mode != DEFAULT_TYPE_MODE:
        # The per-type table matches on type as well, so it gets its own run.
        type_report = evaluate_corpus(hyp, ref, beta=args.beta, mode=DEFAULT_TYPE_MODE)
    else:
        type_report = report
    renderer = render_report_kv if args.kv else render_report
    print(renderer(report))
    if args.per_type:
        print()
        print(renderer(type_report, per_type=True))
    return 0


def _cmd_stats(args) -> int:
    entries = parse_m2(_read_text(args.file))
    annotator = None if args.annotator < 0 else args.annotator
    stats = corpus_stats(entries, top_n=args.top, annotator=annotator)
    print(render_stats(stats))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geckit",
        description="Grammatical error annotation and evaluation toolkit.")
    parser.add_argument("--version", action="version", version=f"geckit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ann = sub.add_parser("annotate", help="extract and classify edits from a CoNLL-U pair")
    p_ann.add_argument("orig", help="original corpus (CoNLL-U)")
    p_ann.add_argument("corr", help="corrected corpus (CoNLL-U)")
    p_ann.add_argument("--profile", default="generic",
                       help="built-in profile name or profile file path (default: generic)")
    p_ann.add_argument("--alpha1", type=float, default=None, help="phonetic threshold override")
    p_ann.add_argument("--alpha2", type=float, default=None, help="shape threshold override")
    p_ann.add_argument("--transpose-cost", type=float, default=1.0,
                       help="base cost per reordered token (default: 1.0)")
    p_ann.add_argument("--window", type=int, default=4,
                       help="max reordering span length (default: 4)")
    p_ann.add_argument("--merge-rules", default=",".join(_MERGE_RULES),
                       help="comma list of active merge rules "
                            f"(default: {','.join(_MERGE_RULES)})")
    p_ann.add_argument("--annotator", type=int, default=0, help="annotator id for A lines")
    p_ann.add_argument("--noop", action="store_true",
                       help="emit a noop A line for edit-free sentences")
    p_ann.add_argument("--provenance", action="store_true",
                       help="prepend a comment header echoing the run settings")
    p_ann.add_argument("--out", default=None, help="write M2 here instead of stdout")
    p_ann.set_defaults(func=_cmd_annotate)

    p_score = sub.add_parser("score", help="score hypothesis M2 against reference M2")
    p_score.add_argument("hyp", help="hypothesis annotations (M2)")
    p_score.add_argument("ref", help="reference annotations (M2)")
    p_score.add_argument("--beta", type=float, default=0.5, help="F-score beta (default: 0.5)")
    p_score.add_argument("--mode", choices=MATCH_MODES, default=MODE_SPAN_CORRECTION,
                         help=f"edit matching key (default: {MODE_SPAN_CORRECTION})")
    p_score.add_argument("--per-type", action="store_true", help="add the per-type breakdown")
    p_score.add_argument("--kv", action="store_true", help="machine-readable key=value output")
    p_score.set_defaults(func=_cmd_score)

    p_stats = sub.add_parser("stats", help="operation counts and top error categories")
    p_stats.add_argument("file", help="annotations to summarize (M2)")
    p_stats.add_argument("--top", type=int, default=10, help="number of categories (default: 10)")
    p_stats.add_argument("--annotator", type=int, default=0,
                         help="annotator to count; -1 for all (default: 0)")
    p_stats.set_defaults(func=_cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GecKitError as exc:
        print(f"geckit: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"geckit: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"geckit: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
