"""CoNLL-U ingestion and the token/sentence model.

This is the only entry point for linguistic annotations: the toolkit never
runs a tokenizer or tagger itself, it consumes whatever segmentation and
tags the input CoNLL-U carries.

Format notes:
- 10 tab-separated columns: ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC
- '#' comment lines are kept verbatim as sentence metadata
- multi-word-token range rows (ID "3-4") are skipped in favor of their
  component rows; empty-node rows (ID "3.1") are rejected
- XPOS, DEPS and MISC are carried opaquely and never interpreted
"""
from __future__ import annotations

from dataclasses import dataclass, field

from geckit.errors import ConlluParseError, PairingError

# The 17 universal POS tags. Profiles may extend this set (e.g. HON).
UD_UPOS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})

_N_COLUMNS = 10


@dataclass
class Token:
    """One surface token with its UD annotations."""

    form: str
    lemma: str
    upos: str
    feats: dict[str, str] = field(default_factory=dict)
    head: int | None = None  # 0-based index into the sentence; None = root
    deprel: str = "dep"
    xpos: str = "_"
    deps: str = "_"
    misc: str = "_"
    feats_raw: str = "_"  # original FEATS column, kept for exact round trips

    def feats_string(self) -> str:
        if self.feats_raw != "_" or not self.feats:
            return self.feats_raw
        return "|".join(f"{k}={v}" for k, v in self.feats.items())


@dataclass
class Sentence:
    """Ordered token sequence plus its source identity."""

    tokens: list[Token] = field(default_factory=list)
    sent_id: str = ""
    comments: list[str] = field(default_factory=list)

    def forms(self) -> list[str]:
        return [t.form for t in self.tokens]

    def text(self) -> str:
        return " ".join(self.forms())

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]


def _parse_feats(raw: str, line_no: int) -> dict[str, str]:
    if raw in ("_", ""):
        return {}
    feats = {}
    for item in raw.split("|"):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ConlluParseError(f"malformed FEATS item {item!r}", line_no)
        feats[key] = value
    return feats


def _parse_row(cols: list[str], line_no: int, upos_inventory) -> tuple[int, Token]:
    raw_id, form, lemma, upos, xpos, feats, head, deprel, deps, misc = cols
    if not raw_id.isdigit():
        raise ConlluParseError(f"non-numeric token ID {raw_id!r}", line_no)
    if not form or form.split() != [form]:
        raise ConlluParseError(f"FORM must be non-empty and whitespace-free, got {form!r}", line_no)
    if upos not in upos_inventory:
        raise ConlluParseError(f"UPOS {upos!r} not in the active tag inventory", line_no)
    if head == "0":
        head_index = None
    elif head.isdigit():
        head_index = int(head) - 1
    else:
        raise ConlluParseError(f"non-numeric HEAD {head!r}", line_no)
    token = Token(
        form=form,
        lemma=lemma,
        upos=upos,
        feats=_parse_feats(feats, line_no),
        head=head_index,
        deprel=deprel,
        xpos=xpos,
        deps=deps,
        misc=misc,
        feats_raw=feats,
    )
    return int(raw_id), token


def _finish_sentence(rows, comments, first_line) -> Sentence:
    ids = [i for i, _ in rows]
    seen = set()
    for token_id in ids:
        if token_id in seen:
            raise ConlluParseError(f"duplicate token ID {token_id}", first_line)
        seen.add(token_id)
    if ids != list(range(1, len(ids) + 1)):
        raise ConlluParseError(f"token IDs must run 1..{len(ids)}, got {ids}", first_line)
    tokens = [t for _, t in rows]
    for t in tokens:
        if t.head is not None and not (0 <= t.head < len(tokens)):
            raise ConlluParseError(f"HEAD {t.head + 1} outside sentence of {len(tokens)} tokens", first_line)
    sent_id = ""
    for comment in comments:
        body = comment.lstrip("#").strip()
        if body.startswith("sent_id"):
            _, sep, value = body.partition("=")
            if sep:
                sent_id = value.strip()
    return Sentence(tokens=tokens, sent_id=sent_id, comments=list(comments))


def parse_conllu(text: str, upos_inventory=None) -> list[Sentence]:
    """Parse CoNLL-U text into sentences, validating as it goes.

    Raises ConlluParseError with a 1-based line number on malformed input.
    """
    inventory = UD_UPOS if upos_inventory is None else frozenset(upos_inventory)
    sentences: list[Sentence] = []
    seen_ids: set[str] = set()
    rows: list[tuple[int, Token]] = []
    comments: list[str] = []
    first_line = 1
    in_sentence = False

    def finish() -> None:
        sentence = _finish_sentence(rows, comments, first_line)
        if sentence.sent_id:
            if sentence.sent_id in seen_ids:
                raise ConlluParseError(f"duplicate sent_id {sentence.sent_id!r}", first_line)
            seen_ids.add(sentence.sent_id)
        sentences.append(sentence)

    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            if in_sentence:
                finish()
                rows, comments, in_sentence = [], [], False
            continue
        if not in_sentence:
            first_line = line_no
            in_sentence = True
        if line.startswith("#"):
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) != _N_COLUMNS:
            raise ConlluParseError(f"expected {_N_COLUMNS} columns, got {len(cols)}", line_no)
        raw_id = cols[0]
        if "-" in raw_id:  # multi-word token range row; component rows follow
            continue
        if "." in raw_id:
            raise ConlluParseError(f"empty-node row {raw_id!r} not supported", line_no)
        rows.append(_parse_row(cols, line_no, inventory))

    if in_sentence:
        finish()
    return sentences


def serialize_sentence(sentence: Sentence) -> str:
    lines = list(sentence.comments)
    for i, t in enumerate(sentence.tokens, start=1):
        head = "0" if t.head is None else str(t.head + 1)
        lines.append("\t".join([
            str(i), t.form, t.lemma, t.upos, t.xpos, t.feats_string(),
            head, t.deprel, t.deps, t.misc,
        ]))
    return "\n".join(lines)


def serialize_conllu(sentences: list[Sentence]) -> str:
    if not sentences:
        return ""
    return "\n\n".join(serialize_sentence(s) for s in sentences) + "\n"


def sentence_pairs(orig: list[Sentence], corr: list[Sentence]) -> list[tuple[Sentence, Sentence]]:
    """Pair corpora positionally (i-th original with i-th correction)."""
    if len(orig) != len(corr):
        raise PairingError(f"count mismatch {len(orig)}≠{len(corr)}")
    return list(zip(orig, corr))
