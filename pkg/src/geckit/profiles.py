"""Language profiles: classification hooks layered over the core typology.

Three profiles ship with the toolkit:

- generic: declines every edit, so the core MRU + POS labels apply
  unchanged. Replacement subtypes (SPELL/WO/WB) stay off; every R edit is
  labeled by its POS transition. This is the right mode for languages
  without curated similarity resources.
- en: errant-style refinements for English (possessive suffixes,
  subject-verb agreement, verb form/tense, orthography) plus the
  replacement subtype cascade backed by a small pronunciation lexicon and
  letter-shape table.
- ko: word-boundary subtypes (WB:M missing space, WB:U extraneous space)
  and functional-morpheme suffix classes (ADP postpositions, PART verbal
  endings, HON honorifics) resolved by priority rules.

Custom profiles load from a key=value text file; see load_profile().
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from geckit.align import Edit
from geckit.conllu import UD_UPOS
from geckit.errors import ProfileError
from geckit.similarity import PhoneticLexicon, ShapeTable, ThresholdConfig
from geckit.typology import (
    ErrorType,
    EditContext,
    WORD_BOUNDARY,
    concat_chars,
)

_VERBAL_UPOS = frozenset({"VERB", "AUX"})

# Operation rank: insertions outrank deletions outrank everything else.
_OP_RANK = {"M": 0, "U": 1}
# Category rank for competing labels on the same edit.
_CAT_RANK = {"WB": 0, "WO": 1, "SPELL": 2, "SHORTEN": 3, "PUNCT": 4}
_OTHER_RANK = 5

# Morpheme table probe order when a suffix appears in several tables.
_TABLE_ORDER = ("ADP", "PART", "HON")


@dataclass(frozen=True)
class KoreanMorphTables:
    """Functional-morpheme suffix inventories, one set per error class."""

    adp: frozenset[str]
    part: frozenset[str]
    hon: frozenset[str]

    def __post_init__(self):
        for name in ("adp", "part", "hon"):
            if not getattr(self, name):
                raise ProfileError(f"morpheme table {name!r} is empty")

    def class_of(self, suffix: str) -> str | None:
        for cls in _TABLE_ORDER:
            if suffix in getattr(self, cls.lower()):
                return cls
        return None

    @staticmethod
    def _read_set(path) -> frozenset[str]:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        entries = frozenset(line.strip() for line in lines
                            if line.strip() and not line.startswith("#"))
        return entries

    @classmethod
    def from_files(cls, adp_path, part_path, hon_path) -> "KoreanMorphTables":
        return cls(
            adp=cls._read_set(adp_path),
            part=cls._read_set(part_path),
            hon=cls._read_set(hon_path),
        )


@dataclass(frozen=True)
class Profile:
    """Immutable bundle of language-specific classification behavior."""

    name: str
    rules: str = "generic"  # generic | english | korean
    upos_extensions: frozenset[str] = frozenset()
    phonetic_lexicon: PhoneticLexicon = field(default_factory=PhoneticLexicon)
    shape_table: ShapeTable = field(default_factory=ShapeTable)
    thresholds: ThresholdConfig = ThresholdConfig()
    enable_r_subtypes: bool = False
    collapse_equal_transitions: bool = True
    korean_tables: KoreanMorphTables | None = None
    # optional (word, word) -> [0, 1] providers replacing the file-driven
    # backends, e.g. a glyph-rendering shape scorer; code-level only
    phonetic_fn: object = None
    shape_fn: object = None

    def upos_inventory(self) -> frozenset[str]:
        return UD_UPOS | self.upos_extensions

    def run_hook(self, edit: Edit, ctx: EditContext) -> ErrorType | None:
        if self.rules == "english":
            return english_hook(edit, ctx)
        if self.rules == "korean":
            if self.korean_tables is None:
                raise ProfileError(f"profile {self.name!r} uses korean rules but has no morpheme tables")
            return korean_hook(edit, ctx, self.korean_tables)
        return generic_hook(edit, ctx)

    def with_thresholds(self, alpha1=None, alpha2=None) -> "Profile":
        thresholds = ThresholdConfig(
            alpha1=self.thresholds.alpha1 if alpha1 is None else alpha1,
            alpha2=self.thresholds.alpha2 if alpha2 is None else alpha2,
        )
        return dataclasses.replace(self, thresholds=thresholds)


def generic_hook(edit: Edit, ctx: EditContext) -> ErrorType | None:
    """Always declines: the universal MRU + POS labeling stands."""
    return None


def _differing_feats(a, b) -> set[str]:
    keys = set(a.feats) | set(b.feats)
    return {k for k in keys if a.feats.get(k) != b.feats.get(k)}


def english_hook(edit: Edit, ctx: EditContext) -> ErrorType | None:
    """English refinements, tried in order; None falls through to core."""
    tokens = ctx.source_tokens if ctx.source_tokens else ctx.target_tokens
    # Possessive suffix: PART token attached as case:poss, e.g. 's
    if tokens and tokens[0].upos == "PART" and tokens[0].deprel == "case:poss":
        return ErrorType(edit.operation, ("NOUN", "POSS"))
    if edit.operation != "R":
        return None
    if len(ctx.source_tokens) == 1 and len(ctx.target_tokens) == 1:
        a = ctx.source_tokens[0]
        b = ctx.target_tokens[0]
        if a.upos in _VERBAL_UPOS and b.upos in _VERBAL_UPOS and a.lemma == b.lemma:
            diff = _differing_feats(a, b)
            if diff and diff <= {"Person", "Number"}:
                return ErrorType("R", ("VERB", "SVA"))
            if "VerbForm" in diff:
                return ErrorType("R", ("VERB", "FORM"))
            if "Tense" in diff:
                return ErrorType("R", ("VERB", "TENSE"))
    src_chars = concat_chars(ctx.source_words).casefold()
    tgt_chars = concat_chars(ctx.target_words).casefold()
    if src_chars == tgt_chars:
        return ErrorType("R", ("ORTH",))
    return None


def _suffix_error(ctx: EditContext, tables: KoreanMorphTables) -> ErrorType | None:
    source = ctx.source_words[0]
    target = ctx.target_words[0]
    if source == target:
        return None
    # Longest suffix first: grow the shared stem from the left and take the
    # first split whose remainder(s) the tables know.
    for stem_len in range(1, min(len(source), len(target)) + 1):
        if source[:stem_len] != target[:stem_len]:
            break
        s_suffix = source[stem_len:]
        t_suffix = target[stem_len:]
        if not s_suffix and t_suffix:
            cls = tables.class_of(t_suffix)
            if cls:
                return ErrorType("M", (ctx.target_tokens[0].upos, cls))
        elif s_suffix and not t_suffix:
            cls = tables.class_of(s_suffix)
            if cls:
                return ErrorType("U", (ctx.source_tokens[0].upos, cls))
        elif s_suffix and t_suffix:
            s_cls = tables.class_of(s_suffix)
            t_cls = tables.class_of(t_suffix)
            if s_cls and t_cls:
                return ErrorType(
                    "R",
                    src_labels=(ctx.source_tokens[0].upos,),
                    tgt_labels=(f"{ctx.target_tokens[0].upos}:{t_cls}",),
                )
    return None


def korean_hook(edit: Edit, ctx: EditContext, tables: KoreanMorphTables) -> ErrorType | None:
    """Word-boundary subtypes and functional-morpheme suffix classes."""
    if edit.operation != "R":
        return None
    candidates: list[ErrorType] = []
    if concat_chars(ctx.source_words) == concat_chars(ctx.target_words):
        n_source = len(ctx.source_words)
        n_target = len(ctx.target_words)
        if n_source < n_target:
            # Writer omitted a space, merging words; the correction splits.
            candidates.append(ErrorType("R", (WORD_BOUNDARY, "M")))
        elif n_source > n_target:
            candidates.append(ErrorType("R", (WORD_BOUNDARY, "U")))
        else:
            candidates.append(ErrorType("R", (WORD_BOUNDARY,)))
    if len(ctx.source_words) == 1 and len(ctx.target_words) == 1:
        suffix_type = _suffix_error(ctx, tables)
        if suffix_type is not None:
            candidates.append(suffix_type)
    if not candidates:
        return None
    return priority_resolve(candidates)


def priority_resolve(candidates: list[ErrorType]) -> ErrorType:
    """Pick one type: operation rank first, category rank second, then the
    earliest candidate among exact ties."""
    if not candidates:
        raise ValueError("priority_resolve needs at least one candidate")
    def rank(indexed):
        i, c = indexed
        return (
            _OP_RANK.get(c.operation, 2),
            _CAT_RANK.get(c.top_category(), _OTHER_RANK),
            i,
        )
    return min(enumerate(candidates), key=rank)[1]


def _data_path(relative: str):
    return resources.files("geckit").joinpath("data", *relative.split("/"))


def _builtin_generic() -> Profile:
    return Profile(name="generic")


def _builtin_english() -> Profile:
    return Profile(
        name="en",
        rules="english",
        phonetic_lexicon=PhoneticLexicon.from_file(_data_path("en/phonetic.tsv")),
        shape_table=ShapeTable.from_file(_data_path("en/shape.tsv")),
        enable_r_subtypes=True,
    )


def _builtin_korean() -> Profile:
    return Profile(
        name="ko",
        rules="korean",
        upos_extensions=frozenset({"HON"}),
        phonetic_lexicon=PhoneticLexicon.from_file(_data_path("ko/phonetic.tsv")),
        shape_table=ShapeTable.from_file(_data_path("ko/shape.tsv")),
        enable_r_subtypes=True,
        collapse_equal_transitions=False,
        korean_tables=KoreanMorphTables.from_files(
            _data_path("ko/adp.txt"),
            _data_path("ko/part.txt"),
            _data_path("ko/hon.txt"),
        ),
    )


_BUILTINS = {
    "generic": _builtin_generic,
    "en": _builtin_english,
    "ko": _builtin_korean,
}

_BOOL_VALUES = {"true": True, "false": False, "1": True, "0": False}


def profile_from_file(path) -> Profile:
    """Load a custom profile from a key=value text file.

    Recognized keys: name, rules, upos_extensions (comma-separated),
    phonetic_lexicon, shape_table, adp_table, part_table, hon_table,
    alpha1, alpha2, enable_r_subtypes, collapse_equal_transitions.
    Relative resource paths resolve against the profile file's directory.
    """
    path = Path(path)
    base = path.parent
    settings: dict[str, str] = {}
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProfileError(f"cannot read profile {path}: {exc}") from exc
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ProfileError(f"{path}:{line_no}: expected key=value")
        settings[key.strip()] = value.strip()

    def resolve(key):
        value = settings.get(key)
        if value is None:
            return None
        candidate = Path(value)
        return candidate if candidate.is_absolute() else base / candidate

    def boolean(key, default):
        raw = settings.get(key)
        if raw is None:
            return default
        if raw.lower() not in _BOOL_VALUES:
            raise ProfileError(f"{path}: {key} must be true/false, got {raw!r}")
        return _BOOL_VALUES[raw.lower()]

    name = settings.get("name", path.stem)
    rules = settings.get("rules", "generic")
    if rules not in ("generic", "english", "korean"):
        raise ProfileError(f"{path}: unknown rule set {rules!r}")
    extensions = frozenset(x.strip() for x in settings.get("upos_extensions", "").split(",") if x.strip())

    lexicon_path = resolve("phonetic_lexicon")
    shape_path = resolve("shape_table")
    lexicon = PhoneticLexicon.from_file(lexicon_path) if lexicon_path else PhoneticLexicon()
    shape = ShapeTable.from_file(shape_path) if shape_path else ShapeTable()

    tables = None
    if rules == "korean":
        table_paths = [resolve(k) for k in ("adp_table", "part_table", "hon_table")]
        if not all(table_paths):
            raise ProfileError(f"{path}: korean rules need adp_table, part_table and hon_table")
        tables = KoreanMorphTables.from_files(*table_paths)

    try:
        thresholds = ThresholdConfig(
            alpha1=float(settings.get("alpha1", 0.8)),
            alpha2=float(settings.get("alpha2", 0.8)),
        )
    except ValueError as exc:
        raise ProfileError(f"{path}: bad threshold: {exc}") from exc

    return Profile(
        name=name,
        rules=rules,
        upos_extensions=extensions,
        phonetic_lexicon=lexicon,
        shape_table=shape,
        thresholds=thresholds,
        enable_r_subtypes=boolean("enable_r_subtypes", rules != "generic"),
        collapse_equal_transitions=boolean("collapse_equal_transitions", rules != "korean"),
        korean_tables=tables,
    )


def load_profile(name_or_path: str) -> Profile:
    """Resolve a built-in profile name or a profile file path."""
    if name_or_path in _BUILTINS:
        return _BUILTINS[name_or_path]()
    if Path(name_or_path).exists():
        return profile_from_file(name_or_path)
    raise ProfileError(
        f"unknown profile {name_or_path!r} (built-ins: {', '.join(sorted(_BUILTINS))})")
