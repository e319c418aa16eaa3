"""Minimal CoNLL-U row model for the adapter's output side.

The adapter produces the 10-column format; it never interprets foreign
files beyond what resegmentation needs. The annotation toolkit on the other
side of the file boundary does the real validation.
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Row:
    form: str
    lemma: str
    upos: str
    head: int  # 1-based; 0 = root
    deprel: str
    xpos: str = "_"
    feats: str = "_"
    deps: str = "_"
    misc: str = "_"

    def with_head(self, head: int) -> "Row":
        return replace(self, head=head)


def format_sentence(rows: list[Row], sent_id, text: str | None = None) -> str:
    lines = [f"# sent_id = {sent_id}"]
    if text is not None:
        lines.append(f"# text = {text}")
    for i, row in enumerate(rows, start=1):
        lines.append("\t".join([
            str(i), row.form, row.lemma, row.upos, row.xpos, row.feats,
            str(row.head), row.deprel, row.deps, row.misc,
        ]))
    return "\n".join(lines)


def format_corpus(sentences: list[tuple[list[Row], object, str | None]]) -> str:
    if not sentences:
        return ""
    return "\n\n".join(format_sentence(rows, sent_id, text)
                       for rows, sent_id, text in sentences) + "\n"


def parse_corpus(text: str) -> list[tuple[list[Row], list[str]]]:
    """Parse CoNLL-U into (rows, comment lines) per sentence.

    Only what resegmentation needs: regular token rows with integer ids.
    """
    sentences = []
    rows: list[Row] = []
    comments: list[str] = []
    seen_any = False
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip():
            if seen_any:
                sentences.append((rows, comments))
                rows, comments, seen_any = [], [], False
            continue
        seen_any = True
        if line.startswith("#"):
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ValueError(f"expected 10 columns, got {len(cols)}: {line!r}")
        if not cols[0].isdigit():
            raise ValueError(f"adapter only handles plain token rows, got id {cols[0]!r}")
        rows.append(Row(
            form=cols[1], lemma=cols[2], upos=cols[3], xpos=cols[4], feats=cols[5],
            head=int(cols[6]), deprel=cols[7], deps=cols[8], misc=cols[9],
        ))
    if seen_any:
        sentences.append((rows, comments))
    return sentences


def format_parsed(sentences: list[tuple[list[Row], list[str]]]) -> str:
    blocks = []
    for rows, comments in sentences:
        lines = list(comments)
        for i, row in enumerate(rows, start=1):
            lines.append("\t".join([
                str(i), row.form, row.lemma, row.upos, row.xpos, row.feats,
                str(row.head), row.deprel, row.deps, row.misc,
            ]))
        blocks.append("\n".join(lines))
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"
