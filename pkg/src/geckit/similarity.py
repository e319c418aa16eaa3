"""Phonetic and visual word-similarity providers.

Both similarities are symmetric, live in [0, 1], and score equal inputs
exactly 1. The default backends are file-driven: a pronunciation lexicon
(word -> phone sequences) and a character-pair shape table. A custom
callable (word, word) -> [0, 1] can replace either backend, e.g. a
glyph-rendering provider for logographic scripts.

File formats:
- lexicon:     word<TAB>phone phone phone    (repeat lines for variants)
- shape table: char<TAB>char<TAB>value       (symmetric, value in [0, 1])
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from geckit.errors import ProfileError


def lcs_length(a, b) -> int:
    """Longest common subsequence length over any two indexable sequences."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return 0
    prev = [0] * (lb + 1)
    for i in range(1, la + 1):
        cur = [0] * (lb + 1)
        ai = a[i - 1]
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[lb]


def lcs_ratio(a, b) -> float:
    """Normalized LCS similarity 2*LCS/(|a|+|b|); empty vs empty is 1."""
    if len(a) == 0 and len(b) == 0:
        return 1.0
    denom = len(a) + len(b)
    return 2.0 * lcs_length(a, b) / denom


@dataclass(frozen=True)
class ThresholdConfig:
    """Sensitivity thresholds for the phonetic and shape branches.

    The useful range is [0, 1]; values above 1 are legal and switch the
    corresponding branch off entirely (no similarity can exceed 1).
    """

    alpha1: float = 0.8  # phonetic
    alpha2: float = 0.8  # shape

    def __post_init__(self):
        if self.alpha1 < 0 or self.alpha2 < 0:
            raise ValueError("thresholds must be non-negative")


class PhoneticLexicon:
    """Case-insensitive map from word to its pronunciation variants."""

    def __init__(self, entries: dict[str, list[tuple[str, ...]]] | None = None):
        self._entries: dict[str, list[tuple[str, ...]]] = {}
        if entries:
            for word, prons in entries.items():
                for pron in prons:
                    self.add(word, pron)

    def add(self, word: str, phones) -> None:
        key = word.casefold()
        pron = tuple(phones)
        if not pron:
            raise ProfileError(f"empty pronunciation for {word!r}")
        self._entries.setdefault(key, []).append(pron)

    def pronunciations(self, word: str) -> list[tuple[str, ...]]:
        return self._entries.get(word.casefold(), [])

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @classmethod
    def from_file(cls, path) -> "PhoneticLexicon":
        lex = cls()
        text = Path(path).read_text(encoding="utf-8")
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            word, sep, phones = line.partition("\t")
            if not sep or not phones.split():
                raise ProfileError(f"{path}:{line_no}: expected 'word<TAB>phones'")
            lex.add(word, phones.split())
        return lex


class ShapeTable:
    """Symmetric character-pair similarity with s(a, a) = 1."""

    def __init__(self, pairs: dict[tuple[str, str], float] | None = None, fallback: float = 0.0):
        self.fallback = fallback
        self._pairs: dict[tuple[str, str], float] = {}
        if pairs:
            for (a, b), value in pairs.items():
                self.add(a, b, value)

    def add(self, a: str, b: str, value: float) -> None:
        if not (0.0 <= value <= 1.0):
            raise ProfileError(f"shape similarity for ({a!r}, {b!r}) outside [0, 1]: {value}")
        self._pairs[(a, b)] = value
        self._pairs[(b, a)] = value

    def similarity(self, a: str, b: str) -> float:
        if a == b:
            return 1.0
        return self._pairs.get((a, b), self.fallback)

    @classmethod
    def from_file(cls, path, fallback: float = 0.0) -> "ShapeTable":
        table = cls(fallback=fallback)
        text = Path(path).read_text(encoding="utf-8")
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3 or len(cols[0]) != 1 or len(cols[1]) != 1:
                raise ProfileError(f"{path}:{line_no}: expected 'char<TAB>char<TAB>value'")
            try:
                value = float(cols[2])
            except ValueError:
                raise ProfileError(f"{path}:{line_no}: bad similarity value {cols[2]!r}") from None
            table.add(cols[0], cols[1], value)
        return table


def sim_phonetic(a: str, b: str, lexicon: PhoneticLexicon) -> float:
    """Pronunciation similarity of two words.

    Best normalized-LCS score over all pronunciation pairs; words missing
    from the lexicon fall back to character LCS on the case-folded forms.
    """
    a_prons = lexicon.pronunciations(a)
    b_prons = lexicon.pronunciations(b)
    if not a_prons or not b_prons:
        return lcs_ratio(a.casefold(), b.casefold())
    return max(lcs_ratio(pa, pb) for pa in a_prons for pb in b_prons)


def sim_shape(a: str, b: str, table: ShapeTable) -> float:
    """Visual similarity of two words.

    Same-length words score the positional mean of character similarities;
    different lengths fall back to character LCS (unmatched positions
    contribute nothing).
    """
    if a == b:
        return 1.0
    if len(a) != len(b):
        return lcs_ratio(a, b)
    return sum(table.similarity(x, y) for x, y in zip(a, b)) / len(a)
