"""Compound-driven token merging for CoNLL-U.

Adjacent tokens whose concatenated forms appear in a compound lexicon are
merged into one token carrying the lexicon's UPOS. Merging repeats until a
fixed point, so the operation is idempotent for any lexicon. The character
stream of each sentence is preserved by construction.

Lexicon file format: surface<TAB>upos, one compound per line.
"""
from __future__ import annotations

from pathlib import Path

from udprep.rows import Row, format_parsed, parse_corpus


def load_compounds(path) -> dict[str, str]:
    compounds = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0] or not cols[1]:
            raise ValueError(f"{path}:{line_no}: expected 'surface<TAB>upos'")
        compounds[cols[0]] = cols[1]
    return compounds


def _find_spans(rows: list[Row], compounds: dict[str, str]) -> list[tuple[int, int]]:
    """Non-overlapping half-open spans to merge, longest match first."""
    max_chars = max(len(surface) for surface in compounds)
    spans = []
    n = len(rows)
    i = 0
    while i < n:
        concat = rows[i].form
        match_end = None
        j = i + 1
        while j < n:
            concat += rows[j].form
            j += 1
            if len(concat) > max_chars:
                break
            if concat in compounds:
                match_end = j
        if match_end is None:
            i += 1
        else:
            spans.append((i, match_end))
            i = match_end
    return spans


def _merge_once(rows: list[Row], compounds: dict[str, str]) -> list[Row] | None:
    spans = _find_spans(rows, compounds)
    if not spans:
        return None

    span_of = {}
    for span in spans:
        for k in range(span[0], span[1]):
            span_of[k] = span

    # group old 0-based indices into the new row layout
    groups: list[tuple[int, int]] = []
    i = 0
    while i < len(rows):
        span = span_of.get(i)
        if span is None:
            groups.append((i, i + 1))
            i += 1
        else:
            groups.append(span)
            i = span[1]

    new_id_of = {}  # old 1-based id -> new 1-based id
    for new_index, (start, end) in enumerate(groups, start=1):
        for k in range(start, end):
            new_id_of[k + 1] = new_index

    merged: list[Row] = []
    for start, end in groups:
        if end - start == 1:
            row = rows[start]
        else:
            surface = "".join(r.form for r in rows[start:end])
            # merged token takes the head of its leftmost component whose
            # head lies outside the span; root if every head is internal
            head = 0
            deprel = "root"
            for r in rows[start:end]:
                if r.head == 0 or not (start + 1 <= r.head <= end):
                    head = r.head
                    deprel = r.deprel
                    break
            row = Row(form=surface, lemma=surface, upos=compounds[surface],
                      head=head, deprel=deprel)
        merged.append(row)

    remapped = [row.with_head(new_id_of[row.head] if row.head else 0)
                for row in merged]
    return remapped


def resegment_rows(rows: list[Row], compounds: dict[str, str]) -> list[Row]:
    if not compounds:
        return rows
    current = rows
    while True:
        merged = _merge_once(current, compounds)
        if merged is None:
            return current
        current = merged


def resegment(conllu_text: str, compounds: dict[str, str]) -> str:
    """Merge lexicon compounds in every sentence of a CoNLL-U document."""
    sentences = parse_corpus(conllu_text)
    out = [(resegment_rows(rows, compounds), comments) for rows, comments in sentences]
    return format_parsed(out)
