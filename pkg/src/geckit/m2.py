"""Reading and writing the M2 annotation format.

An entry is one S line (the tokenized original sentence) followed by zero or
more A lines:

    S This are a sentence .
    A 1 2|||R:VERB:SVA|||is|||REQUIRED|||-NONE-|||0

A-line fields: source span, error type, correction, requirement flag,
comment, annotator id. Spans are half-open token indices; start == end marks
an insertion point. A "noop" annotation (span -1 -1, type "noop") records an
annotator who proposes no edits.

Output is canonical: flags are always REQUIRED|||-NONE-, annotations are
sorted by (annotator, span), and blocks are separated by one blank line.
The parser additionally accepts the historical -REQUIRED-|||NONE flag order
and leaves unrecognized type strings untouched, so third-party files can be
scored without a matching profile.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from geckit.errors import M2EmitError, M2ParseError

NOOP_TYPE = "noop"
_SEP = "|||"


@dataclass(frozen=True)
class M2Annotation:
    start: int
    end: int
    type_str: str
    correction: str
    annotator: int = 0
    required: bool = True
    comment: str = "-NONE-"

    @property
    def is_noop(self) -> bool:
        return self.type_str == NOOP_TYPE

    @property
    def operation(self) -> str:
        head, _, _ = self.type_str.partition(":")
        return head

    @property
    def category(self) -> str:
        _, sep, tail = self.type_str.partition(":")
        return tail if sep else self.type_str


@dataclass
class M2Entry:
    source_tokens: list[str] = field(default_factory=list)
    annotations: list[M2Annotation] = field(default_factory=list)

    def annotator_ids(self) -> list[int]:
        ids = sorted({a.annotator for a in self.annotations})
        return ids if ids else [0]

    def edits_of(self, annotator: int) -> list[M2Annotation]:
        return [a for a in self.annotations
                if a.annotator == annotator and not a.is_noop]


def _annotation_sort_key(a: M2Annotation):
    return (a.annotator, a.start, a.end, a.type_str, a.correction)


def noop_annotation(annotator: int = 0) -> M2Annotation:
    return M2Annotation(-1, -1, NOOP_TYPE, "-NONE-", annotator)


def entry_from_edits(source_tokens, typed_edits, annotator: int = 0,
                     noop: bool = False, collapse_equal: bool = True) -> M2Entry:
    """Build an entry from (Edit, ErrorType) pairs.

    Edits must be sorted by source span and non-overlapping; violations
    raise M2EmitError. With noop=True an edit-free sentence still gets a
    noop A line.
    """
    annotations = []
    previous = None
    for edit, error_type in typed_edits:
        if previous is not None:
            if (edit.src_start, edit.src_end) < (previous.src_start, previous.src_end):
                raise M2EmitError(
                    f"edits out of order at span ({edit.src_start},{edit.src_end})")
            if edit.src_start < previous.src_end:
                raise M2EmitError(
                    f"overlapping edits at span ({edit.src_start},{edit.src_end})")
        previous = edit
        if not (0 <= edit.src_start <= edit.src_end <= len(source_tokens)):
            raise M2EmitError(
                f"edit span ({edit.src_start},{edit.src_end}) outside sentence "
                f"of {len(source_tokens)} tokens")
        annotations.append(M2Annotation(
            start=edit.src_start,
            end=edit.src_end,
            type_str=error_type.render(collapse_equal=collapse_equal),
            correction=edit.correction,
            annotator=annotator,
        ))
    if not annotations and noop:
        annotations.append(noop_annotation(annotator))
    return M2Entry(source_tokens=list(source_tokens), annotations=annotations)


def emit_m2(source_tokens, typed_edits, annotator: int = 0, noop: bool = False,
            collapse_equal: bool = True) -> str:
    """Canonical M2 text block for one sentence."""
    return format_entry(entry_from_edits(
        source_tokens, typed_edits, annotator, noop, collapse_equal))


def format_entry(entry: M2Entry) -> str:
    lines = ["S " + " ".join(entry.source_tokens)]
    for a in sorted(entry.annotations, key=_annotation_sort_key):
        flag = "REQUIRED" if a.required else "OPTIONAL"
        lines.append(
            f"A {a.start} {a.end}{_SEP}{a.type_str}{_SEP}{a.correction}"
            f"{_SEP}{flag}{_SEP}{a.comment}{_SEP}{a.annotator}")
    return "\n".join(lines)


def format_corpus(entries, header_comments=()) -> str:
    blocks = [format_entry(e) for e in entries]
    head = "".join(f"# {line}\n" for line in header_comments)
    if not blocks:
        return head
    return head + "\n\n".join(blocks) + "\n"


def _parse_a_line(line: str, line_no: int, n_tokens: int) -> M2Annotation:
    fields = line[2:].split(_SEP)
    if len(fields) != 6:
        raise M2ParseError(f"A line needs 6 |||-separated fields, got {len(fields)}", line_no)
    span_part, type_str, correction, flag, comment, annotator_str = fields
    span_bits = span_part.split()
    if len(span_bits) != 2:
        raise M2ParseError(f"bad span {span_part!r}", line_no)
    try:
        start, end = int(span_bits[0]), int(span_bits[1])
    except ValueError:
        raise M2ParseError(f"non-integer span {span_part!r}", line_no) from None
    try:
        annotator = int(annotator_str)
    except ValueError:
        raise M2ParseError(f"non-integer annotator id {annotator_str!r}", line_no) from None
    if annotator < 0:
        raise M2ParseError(f"negative annotator id {annotator}", line_no)
    if type_str == NOOP_TYPE:
        if (start, end) != (-1, -1):
            raise M2ParseError(f"noop annotation must use span -1 -1, got {start} {end}", line_no)
    else:
        if not (0 <= start <= end <= n_tokens):
            raise M2ParseError(
                f"span {start} {end} outside sentence of {n_tokens} tokens", line_no)
    # Accept both flag layouts seen in the wild: REQUIRED|||-NONE- and
    # -REQUIRED-|||NONE. Everything else is carried as-is.
    required = "REQUIRED" in flag.upper()
    if comment in ("NONE", "-NONE-", ""):
        comment = "-NONE-"
    return M2Annotation(start, end, type_str, correction, annotator, required, comment)


def parse_m2(text: str) -> list[M2Entry]:
    """Parse M2 text into entries; errors carry 1-based line numbers."""
    entries: list[M2Entry] = []
    current: M2Entry | None = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            if current is not None:
                entries.append(current)
                current = None
            continue
        if line.startswith("#"):
            continue
        if line.startswith("S ") or line == "S":
            if current is not None:
                entries.append(current)
            current = M2Entry(source_tokens=line[2:].split())
        elif line.startswith("A "):
            if current is None:
                raise M2ParseError("A line before any S line", line_no)
            current.annotations.append(
                _parse_a_line(line, line_no, len(current.source_tokens)))
        else:
            raise M2ParseError(f"unrecognized line {line!r}", line_no)
    if current is not None:
        entries.append(current)
    return entries
