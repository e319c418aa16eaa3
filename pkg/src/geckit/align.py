"""Token alignment and edit extraction.

align() computes a minimum-cost alignment between the original and corrected
token sequences of a sentence pair. The cost function prefers substitutions
between morphosyntactically related tokens (shared lemma, compatible POS,
similar characters) over delete+insert pairs, and admits transpositions for
reordered spans. merge_edits() then turns runs of adjacent non-matches into
span edits by rule.

The inner loop is provided by a compiled kernel when the extension built; set
GECKIT_PURE_PYTHON=1 before import to force the interpreted fallback. Both
kernels are interchangeable bit for bit.
"""
from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass

from geckit.conllu import Sentence
from geckit.similarity import lcs_length

if os.environ.get("GECKIT_PURE_PYTHON") == "1":
    from geckit import _align_py as _kernel

    KERNEL_BACKEND = "python"
else:
    try:
        from geckit import _align_c as _kernel  # type: ignore[no-redef]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from geckit import _align_py as _kernel  # type: ignore[no-redef]

        KERNEL_BACKEND = "python"

MATCH = "MATCH"
SUB = "SUB"
INS = "INS"
DEL = "DEL"
TRANSPOSE = "TRANSPOSE"

_KIND_NAMES = {0: MATCH, 1: SUB, 2: INS, 3: DEL, 4: TRANSPOSE}

CONTENT_TAGS = frozenset({"ADJ", "ADV", "NOUN", "VERB"})
# Tag set whose mixtures still merge: auxiliaries, particles and verbs form
# periphrastic constructions that belong in one edit.
_VERBAL_TAGS = frozenset({"AUX", "PART", "VERB"})


@dataclass(frozen=True)
class CostConfig:
    """Weights for the linguistically informed alignment cost."""

    del_cost: float = 1.0
    ins_cost: float = 1.0
    lemma_mismatch_cost: float = 0.499
    pos_same_cost: float = 0.0
    pos_both_content_cost: float = 0.25
    pos_other_cost: float = 0.5
    transpose_base: float = 1.0
    window: int = 4

    def __post_init__(self):
        for name in ("del_cost", "ins_cost", "lemma_mismatch_cost", "pos_same_cost",
                     "pos_both_content_cost", "pos_other_cost", "transpose_base"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.window < 2:
            raise ValueError("window must be >= 2")


DEFAULT_COSTS = CostConfig()


@dataclass(frozen=True)
class AlignmentOp:
    """One step of an alignment; spans are half-open token index ranges."""

    kind: str
    src_start: int
    src_end: int
    tgt_start: int
    tgt_end: int
    cost: float


@dataclass(frozen=True)
class Edit:
    """A contiguous source-span/target-span correction."""

    src_start: int
    src_end: int
    tgt_start: int
    tgt_end: int
    correction: str

    @property
    def operation(self) -> str:
        if self.src_start == self.src_end:
            return "M"
        if self.tgt_start == self.tgt_end:
            return "U"
        return "R"


@dataclass(frozen=True)
class MergeConfig:
    """Individually toggleable merge rules."""

    uniform_runs: bool = True     # runs that are all-INS or all-DEL
    word_boundary: bool = True    # concatenated forms equal on both sides
    same_pos: bool = True         # one shared UPOS, or all AUX/PART/VERB
    punct_case: bool = True       # punctuation SUB followed by case-only SUB


DEFAULT_MERGE = MergeConfig()


def char_similarity(a: str, b: str) -> float:
    """Normalized character LCS, 2*LCS/(|a|+|b|)."""
    if not a and not b:
        return 1.0
    return 2.0 * lcs_length(a, b) / (len(a) + len(b))


def sub_cost(a, b, cfg: CostConfig = DEFAULT_COSTS) -> float:
    """Substitution cost between two tokens; 0 for identical forms."""
    if a.form == b.form:
        return 0.0
    cost = 0.0 if a.lemma == b.lemma else cfg.lemma_mismatch_cost
    if a.upos == b.upos:
        cost += cfg.pos_same_cost
    elif a.upos in CONTENT_TAGS and b.upos in CONTENT_TAGS:
        cost += cfg.pos_both_content_cost
    else:
        cost += cfg.pos_other_cost
    return cost + (1.0 - char_similarity(a.form, b.form))


def align(src: Sentence, tgt: Sentence, cfg: CostConfig = DEFAULT_COSTS) -> list[AlignmentOp]:
    """Minimum-cost alignment between two sentences.

    Deterministic: ties prefer MATCH > SUB > TRANSPOSE > DEL > INS, and
    longer transposition spans over shorter ones.
    """
    raw_ops, _ = _kernel.align_kernel(
        [t.form for t in src], [t.lemma for t in src], [t.upos for t in src],
        [t.form for t in tgt], [t.lemma for t in tgt], [t.upos for t in tgt],
        cfg.del_cost, cfg.ins_cost, cfg.lemma_mismatch_cost, cfg.pos_same_cost,
        cfg.pos_both_content_cost, cfg.pos_other_cost, cfg.transpose_base,
        cfg.window,
    )
    return [AlignmentOp(_KIND_NAMES[code], ss, se, ts, te, cost)
            for code, ss, se, ts, te, cost in raw_ops]


def alignment_cost(src: Sentence, tgt: Sentence, cfg: CostConfig = DEFAULT_COSTS) -> float:
    """Total cost of the optimal alignment (cheaper than align() by a hair)."""
    _, total = _kernel.align_kernel(
        [t.form for t in src], [t.lemma for t in src], [t.upos for t in src],
        [t.form for t in tgt], [t.lemma for t in tgt], [t.upos for t in tgt],
        cfg.del_cost, cfg.ins_cost, cfg.lemma_mismatch_cost, cfg.pos_same_cost,
        cfg.pos_both_content_cost, cfg.pos_other_cost, cfg.transpose_base,
        cfg.window,
    )
    return total


def detect_transpositions(src: Sentence, tgt: Sentence, window: int,
                          cfg: CostConfig = DEFAULT_COSTS) -> list[AlignmentOp]:
    """All reordered span pairs admissible as TRANSPOSE ops.

    A span pair qualifies when the lowercased token multisets are equal but
    the orders differ; cost is transpose_base * (k - 1) for span length k.
    """
    if window < 2:
        raise ValueError("window must be >= 2")
    src_lower = [t.form.lower() for t in src]
    tgt_lower = [t.form.lower() for t in tgt]
    candidates = []
    for k in range(2, window + 1):
        for i in range(len(src_lower) - k + 1):
            ss = src_lower[i:i + k]
            sorted_ss = sorted(ss)
            for j in range(len(tgt_lower) - k + 1):
                tt = tgt_lower[j:j + k]
                if ss != tt and sorted_ss == sorted(tt):
                    candidates.append(AlignmentOp(
                        TRANSPOSE, i, i + k, j, j + k, cfg.transpose_base * (k - 1)))
    return candidates


def _is_punct_token(token) -> bool:
    if token.upos == "PUNCT":
        return True
    return all(unicodedata.category(c).startswith("P") for c in token.form)


def _edit_from_ops(ops, tgt: Sentence) -> Edit:
    src_start = min(op.src_start for op in ops)
    src_end = max(op.src_end for op in ops)
    tgt_start = min(op.tgt_start for op in ops)
    tgt_end = max(op.tgt_end for op in ops)
    correction = " ".join(t.form for t in tgt.tokens[tgt_start:tgt_end])
    return Edit(src_start, src_end, tgt_start, tgt_end, correction)


def _ranges_largest_first(length: int):
    # All (a, b) with b > a, widest span first, leftmost first among equals.
    spans = [(a, b) for a in range(length) for b in range(a + 1, length)]
    spans.sort(key=lambda ab: (ab[0] - ab[1], ab[0]))
    return spans


def _segment_edits(seg, src: Sentence, tgt: Sentence, cfg: MergeConfig) -> list[Edit]:
    if not seg:
        return []
    if len(seg) == 1:
        return [_edit_from_ops(seg, tgt)]
    kinds = {op.kind for op in seg}
    if cfg.uniform_runs and (kinds == {INS} or kinds == {DEL}):
        return [_edit_from_ops(seg, tgt)]

    def merged_at(a, b):
        left = _segment_edits(seg[:a], src, tgt, cfg)
        mid = [_edit_from_ops(seg[a:b + 1], tgt)]
        right = _segment_edits(seg[b + 1:], src, tgt, cfg)
        return left + mid + right

    if cfg.word_boundary:
        for a, b in _ranges_largest_first(len(seg)):
            group = seg[a:b + 1]
            src_cat = "".join(t.form for op in group
                              for t in src.tokens[op.src_start:op.src_end])
            tgt_cat = "".join(t.form for op in group
                              for t in tgt.tokens[op.tgt_start:op.tgt_end])
            if src_cat and tgt_cat and src_cat == tgt_cat:
                return merged_at(a, b)
    if cfg.same_pos:
        for a, b in _ranges_largest_first(len(seg)):
            group = seg[a:b + 1]
            tags = {t.upos for op in group for t in src.tokens[op.src_start:op.src_end]}
            tags |= {t.upos for op in group for t in tgt.tokens[op.tgt_start:op.tgt_end]}
            if len(tags) == 1 or tags <= _VERBAL_TAGS:
                return merged_at(a, b)
    if cfg.punct_case:
        for a in range(len(seg) - 1):
            first, second = seg[a], seg[a + 1]
            if first.kind != SUB or second.kind != SUB:
                continue
            if not (_is_punct_token(src.tokens[first.src_start])
                    and _is_punct_token(tgt.tokens[first.tgt_start])):
                continue
            s_form = src.tokens[second.src_start].form
            t_form = tgt.tokens[second.tgt_start].form
            if s_form != t_form and s_form.casefold() == t_form.casefold():
                return merged_at(a, a + 1)
    return [_edit_from_ops([op], tgt) for op in seg]


def merge_edits(ops: list[AlignmentOp], src: Sentence, tgt: Sentence,
                cfg: MergeConfig = DEFAULT_MERGE) -> list[Edit]:
    """Group adjacent non-MATCH alignment ops into span edits.

    Transpositions always stand alone. Within the remaining runs the merge
    rules fire in a fixed order (word-boundary, shared POS, punctuation +
    case pair), widest subspan first; whatever no rule claims becomes a
    single-op edit.
    """
    edits: list[Edit] = []
    seg: list[AlignmentOp] = []
    for op in ops:
        if op.kind == MATCH:
            edits.extend(_segment_edits(seg, src, tgt, cfg))
            seg = []
        elif op.kind == TRANSPOSE:
            edits.extend(_segment_edits(seg, src, tgt, cfg))
            seg = []
            edits.append(_edit_from_ops([op], tgt))
        else:
            seg.append(op)
    edits.extend(_segment_edits(seg, src, tgt, cfg))
    edits.sort(key=lambda e: (e.src_start, e.src_end, e.tgt_start))
    return edits


def apply_edits(edits: list[Edit], src_forms: list[str], tgt_forms: list[str]) -> list[str]:
    """Apply span edits to the source token sequence.

    Used by round-trip checks: the result must equal the target sequence.
    """
    out: list[str] = []
    cursor = 0
    for edit in edits:
        out.extend(src_forms[cursor:edit.src_start])
        out.extend(tgt_forms[edit.tgt_start:edit.tgt_end])
        cursor = edit.src_end
    out.extend(src_forms[cursor:])
    return out
