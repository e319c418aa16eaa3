"""Language-agnostic error classification.

Every edit gets an operation (M missing, R replacement, U unnecessary) plus
a category. Replacements additionally pass through a subtype cascade:
spelling (phonetic / shape / both), word order (equal bags of words), word
boundary (equal character concatenation), and finally a POS transition
label source-tags -> target-tags. Language profiles hook in before any of
this and may claim an edit outright.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from geckit.align import Edit
from geckit.conllu import Sentence, Token
from geckit.similarity import PhoneticLexicon, ShapeTable, ThresholdConfig, sim_phonetic, sim_shape

SPELL = "SPELL"
PHONETIC = "PHONETIC"
SHAPE = "SHAPE"
PHONOGRAPHIC = "PHONOGRAPHIC"
WORD_ORDER = "WO"
WORD_BOUNDARY = "WB"
PUNCT = "PUNCT"


@dataclass(frozen=True)
class ErrorType:
    """Structured error label: operation plus category.

    Exactly one of the two category shapes is populated: a hierarchical
    path (("SPELL", "PHONETIC"), ("WB", "M"), ("PRON",), ...) or a POS
    transition with source and target label sequences.
    """

    operation: str  # M | R | U
    path: tuple[str, ...] = ()
    src_labels: tuple[str, ...] = ()
    tgt_labels: tuple[str, ...] = ()

    def is_transition(self) -> bool:
        return bool(self.src_labels or self.tgt_labels)

    def top_category(self) -> str:
        if self.is_transition():
            return ""
        return self.path[0] if self.path else ""

    def render(self, collapse_equal: bool = True) -> str:
        if self.is_transition():
            lhs = " ".join(self.src_labels)
            rhs = " ".join(self.tgt_labels)
            if collapse_equal and lhs == rhs:
                return f"{self.operation}:{lhs}"
            return f"{self.operation}:{lhs} -> {rhs}"
        if not self.path:
            return self.operation
        return f"{self.operation}:" + ":".join(self.path)


@dataclass(frozen=True)
class EditContext:
    """Token views of an edit, resolved against its sentence pair."""

    source_words: tuple[str, ...]
    target_words: tuple[str, ...]
    source_tokens: tuple[Token, ...]
    target_tokens: tuple[Token, ...]


def context_of(edit: Edit, src: Sentence, tgt: Sentence) -> EditContext:
    src_tokens = tuple(src.tokens[edit.src_start:edit.src_end])
    tgt_tokens = tuple(tgt.tokens[edit.tgt_start:edit.tgt_end])
    return EditContext(
        source_words=tuple(t.form for t in src_tokens),
        target_words=tuple(t.form for t in tgt_tokens),
        source_tokens=src_tokens,
        target_tokens=tgt_tokens,
    )


def operation_of(edit: Edit) -> str:
    return edit.operation


def bag_of_words(words) -> Counter:
    """Case-folded multiset of words; order is discarded, counts matter."""
    return Counter(w.casefold() for w in words)


def concat_chars(words) -> str:
    """Character sequence of the words with separators removed, case kept."""
    return "".join(words)


def pos_transition_label(ctx: EditContext) -> ErrorType:
    """Generic replacement label from the UPOS sequences of both sides."""
    return ErrorType(
        "R",
        src_labels=tuple(t.upos for t in ctx.source_tokens),
        tgt_labels=tuple(t.upos for t in ctx.target_tokens),
    )


def classify_r(ctx: EditContext, thresholds: ThresholdConfig,
               lexicon: PhoneticLexicon, shape_table: ShapeTable,
               phonetic_fn=None, shape_fn=None) -> ErrorType:
    """Replacement subtype cascade.

    The similarity branches only apply to single-word pairs; multi-word
    replacements go straight to the word-order test. Exactly one branch
    fires. phonetic_fn/shape_fn are optional (word, word) -> [0, 1]
    providers that replace the file-driven backends, e.g. a glyph-rendering
    shape scorer.
    """
    source = ctx.source_words
    target = ctx.target_words
    if len(source) == 1 and len(target) == 1:
        if phonetic_fn is not None:
            phonetic = phonetic_fn(source[0], target[0])
        else:
            phonetic = sim_phonetic(source[0], target[0], lexicon)
        if shape_fn is not None:
            shape = shape_fn(source[0], target[0])
        else:
            shape = sim_shape(source[0], target[0], shape_table)
        if phonetic > thresholds.alpha1 and shape > thresholds.alpha2:
            return ErrorType("R", (SPELL, PHONOGRAPHIC))
        if phonetic > thresholds.alpha1:
            return ErrorType("R", (SPELL, PHONETIC))
        if shape > thresholds.alpha2:
            return ErrorType("R", (SPELL, SHAPE))
    if bag_of_words(source) == bag_of_words(target):
        return ErrorType("R", (WORD_ORDER,))
    if concat_chars(source) == concat_chars(target):
        return ErrorType("R", (WORD_BOUNDARY,))
    return pos_transition_label(ctx)


def _punct_only(ctx: EditContext) -> bool:
    tokens = ctx.source_tokens + ctx.target_tokens
    return bool(tokens) and all(t.upos == PUNCT for t in tokens)


def classify(edit: Edit, src: Sentence, tgt: Sentence, profile) -> ErrorType:
    """Classify one edit under a language profile.

    The profile hook runs first and may return a complete type. Otherwise:
    punctuation-only edits are typed PUNCT directly; M/U edits take the
    UPOS sequence of the inserted/deleted tokens; replacements run the
    subtype cascade when the profile enables it, else the POS transition.
    """
    ctx = context_of(edit, src, tgt)
    hooked = profile.run_hook(edit, ctx)
    if hooked is not None:
        return hooked
    operation = edit.operation
    if _punct_only(ctx):
        return ErrorType(operation, (PUNCT,))
    if operation == "M":
        return ErrorType("M", (" ".join(t.upos for t in ctx.target_tokens),))
    if operation == "U":
        return ErrorType("U", (" ".join(t.upos for t in ctx.source_tokens),))
    if profile.enable_r_subtypes:
        return classify_r(ctx, profile.thresholds,
                          profile.phonetic_lexicon, profile.shape_table,
                          phonetic_fn=profile.phonetic_fn, shape_fn=profile.shape_fn)
    return pos_transition_label(ctx)
