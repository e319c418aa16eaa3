"""Batch preprocessing front end.

    preprocess --lang en --orig orig.txt --corr corr.txt --outdir out/
               [--pretokenized] [--compounds compounds.tsv]
               [--engine auto|stanza|rule]

Reads one sentence per line from the two parallel files, runs the tagging
engine, optionally merges lexicon compounds, validates the result through
the annotation toolkit's command-line interface, and writes orig.conllu and
corr.conllu atomically into the output directory.

Exit codes: 0 success, 1 internal error, 2 input error, 3 pipeline load
failure.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import tempfile
from pathlib import Path

from udprep.engines import EngineLoadError, build_engine
from udprep.resegment import load_compounds, resegment
from udprep.rows import format_corpus

DEFAULT_VALIDATOR = f"{sys.executable} -m geckit.cli"


class InputError(Exception):
    pass


def _read_lines(path: str) -> list[str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return text.splitlines()


def convert(lines: list[str], engine, pretokenized: bool) -> str:
    sentences = []
    for number, line in enumerate(lines, start=1):
        rows = engine.analyze(line, pretokenized)
        text = " ".join(r.form for r in rows)
        sentences.append((rows, number, text))
    return format_corpus(sentences)


def validate_with_toolkit(orig_path: Path, corr_path: Path, validator: str) -> None:
    """Run the annotation toolkit over the pair; non-zero exit means the
    output violates its ingestion contract."""
    command = validator.split() + ["annotate", str(orig_path), str(corr_path),
                                   "--out", os.devnull]
    result = subprocess.run(command, capture_output=True, text=True)
    if result.returncode != 0:
        raise RuntimeError(
            f"generated CoNLL-U rejected by the toolkit: {result.stderr.strip()}")


def preprocess(args) -> int:
    orig_lines = _read_lines(args.orig)
    corr_lines = _read_lines(args.corr)
    if len(orig_lines) != len(corr_lines):
        raise InputError(
            f"line count mismatch: {len(orig_lines)} original vs {len(corr_lines)} corrected")

    engine = build_engine(args.engine, args.lang, args.pretokenized)

    compounds = {}
    if args.compounds:
        try:
            compounds = load_compounds(args.compounds)
        except (OSError, ValueError) as exc:
            raise InputError(str(exc)) from exc

    outputs = {}
    for name, lines in (("orig.conllu", orig_lines), ("corr.conllu", corr_lines)):
        text = convert(lines, engine, args.pretokenized)
        if compounds:
            text = resegment(text, compounds)
        outputs[name] = text

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    temp_paths = {}
    try:
        for name, text in outputs.items():
            fd, temp_name = tempfile.mkstemp(dir=outdir, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            temp_paths[name] = Path(temp_name)
        validate_with_toolkit(temp_paths["orig.conllu"], temp_paths["corr.conllu"],
                              args.validator)
        for name, temp_path in temp_paths.items():
            os.replace(temp_path, outdir / name)
        temp_paths = {}
    finally:
        for temp_path in temp_paths.values():
            temp_path.unlink(missing_ok=True)
    print(f"wrote {outdir / 'orig.conllu'} and {outdir / 'corr.conllu'} "
          f"({len(orig_lines)} sentences each, engine={engine.name})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preprocess",
        description="Convert raw parallel text into CoNLL-U for annotation.")
    parser.add_argument("--lang", required=True, help="language code (e.g. en, zh)")
    parser.add_argument("--orig", required=True, help="original sentences, one per line")
    parser.add_argument("--corr", required=True, help="corrected sentences, one per line")
    parser.add_argument("--outdir", required=True, help="output directory")
    parser.add_argument("--pretokenized", action="store_true",
                        help="treat input lines as whitespace-tokenized")
    parser.add_argument("--compounds", default=None,
                        help="compound lexicon (surface<TAB>upos) for resegmentation")
    parser.add_argument("--engine", default="auto", choices=("auto", "stanza", "rule"),
                        help="tagging backend (default: auto = stanza when available)")
    parser.add_argument("--validator", default=DEFAULT_VALIDATOR,
                        help="command used to validate output through the toolkit")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return preprocess(args)
    except InputError as exc:
        print(f"preprocess: error: {exc}", file=sys.stderr)
        return 2
    except EngineLoadError as exc:
        print(f"preprocess: pipeline error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"preprocess: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
