"""Tagging engines behind one interface.

The real pipeline is a neural UD parser (stanza) loaded on demand. Because
model downloads are not always possible, a deterministic rule engine ships
as a fallback: closed-class lexicons plus crude suffix heuristics, a flat
dependency tree hanging off one root. Its output is linguistically shallow
but structurally valid, which is all the downstream toolkit's ingestion
contract requires.
"""
from __future__ import annotations

import re
import unicodedata

from udprep.rows import Row


class EngineLoadError(Exception):
    """The requested pipeline cannot be constructed."""


_EN_TOKEN = re.compile(r"\w+(?:'\w+)?|[^\w\s]", re.UNICODE)

_EN_DET = {"the", "a", "an", "this", "that", "these", "those"}
_EN_AUX = {"is", "are", "was", "were", "am", "be", "been", "being",
           "has", "have", "had", "do", "does", "did",
           "will", "would", "can", "could", "shall", "should", "may", "might", "must"}
_EN_PRON = {"i", "you", "he", "she", "it", "we", "they",
            "me", "him", "her", "us", "them",
            "my", "your", "his", "its", "our", "their", "who", "what"}
_EN_ADP = {"in", "on", "at", "by", "for", "with", "from", "to", "of",
           "into", "over", "under", "about", "after", "before"}
_EN_CCONJ = {"and", "or", "but"}
_EN_SCONJ = {"because", "although", "if", "when", "while", "since"}
_EN_VERB = {"go", "goes", "went", "see", "saw", "seen", "eat", "ate", "eaten",
            "play", "plays", "played", "like", "likes", "liked", "make", "made",
            "run", "runs", "ran", "walk", "walks", "walked", "say", "says", "said",
            "buy", "bought", "read", "write", "wrote", "help", "helps", "helped"}
_EN_BE = {"is", "are", "was", "were", "am", "been", "being"}
_EN_HAVE = {"has", "have", "had"}


def _is_punct(word: str) -> bool:
    return all(unicodedata.category(c).startswith("P") for c in word)


def _en_upos(word: str, position: int) -> str:
    lower = word.lower()
    if _is_punct(word):
        return "PUNCT"
    if word.isdigit():
        return "NUM"
    if lower in _EN_DET:
        return "DET"
    if lower in _EN_AUX:
        return "AUX"
    if lower in _EN_PRON:
        return "PRON"
    if lower in _EN_ADP:
        return "ADP"
    if lower in _EN_CCONJ:
        return "CCONJ"
    if lower in _EN_SCONJ:
        return "SCONJ"
    if lower in _EN_VERB:
        return "VERB"
    if lower == "not" or lower.endswith("ly"):
        return "ADV"
    if position > 0 and word[:1].isupper():
        return "PROPN"
    return "NOUN"


def _en_lemma(word: str, upos: str) -> str:
    lower = word.lower()
    if lower in _EN_BE:
        return "be"
    if lower in _EN_HAVE:
        return "have"
    if upos in ("NOUN", "VERB") and lower.endswith("s") and len(lower) > 3:
        return lower[:-1]
    return lower


def _attach_flat(tagged: list[tuple[str, str, str]]) -> list[Row]:
    # one root (first VERB, else first AUX, else first non-PUNCT) and a
    # flat tree under it: crude but always inside the sentence
    root_index = None
    for want in ("VERB", "AUX"):
        for i, (_, _, upos) in enumerate(tagged):
            if upos == want:
                root_index = i
                break
        if root_index is not None:
            break
    if root_index is None:
        for i, (_, _, upos) in enumerate(tagged):
            if upos != "PUNCT":
                root_index = i
                break
    if root_index is None:
        root_index = 0
    rows = []
    for i, (form, lemma, upos) in enumerate(tagged):
        if i == root_index:
            head, deprel = 0, "root"
        else:
            head = root_index + 1
            deprel = "punct" if upos == "PUNCT" else "dep"
        rows.append(Row(form=form, lemma=lemma, upos=upos, head=head, deprel=deprel))
    return rows


def _zh_tokenize(line: str) -> list[str]:
    tokens = []
    buffer = ""
    for ch in line:
        if ch.isspace():
            if buffer:
                tokens.append(buffer)
                buffer = ""
        elif unicodedata.category(ch).startswith("P"):
            if buffer:
                tokens.append(buffer)
                buffer = ""
            tokens.append(ch)
        elif "一" <= ch <= "鿿":
            if buffer:
                tokens.append(buffer)
                buffer = ""
            tokens.append(ch)
        else:
            buffer += ch
    if buffer:
        tokens.append(buffer)
    return tokens


class RuleEngine:
    """Deterministic tagger for offline use; supports en and zh."""

    name = "rule"
    languages = ("en", "zh")

    def __init__(self, lang: str):
        if lang not in self.languages:
            raise EngineLoadError(
                f"rule engine supports {', '.join(self.languages)}; got {lang!r}")
        self.lang = lang

    def analyze(self, line: str, pretokenized: bool) -> list[Row]:
        if pretokenized:
            words = line.split()
        elif self.lang == "zh":
            words = _zh_tokenize(line)
        else:
            words = _EN_TOKEN.findall(line)
        if self.lang == "zh":
            tagged = []
            for word in words:
                if _is_punct(word):
                    upos = "PUNCT"
                elif word.isdigit():
                    upos = "NUM"
                else:
                    upos = "NOUN"
                tagged.append((word, word, upos))
        else:
            tagged = []
            for i, word in enumerate(words):
                upos = _en_upos(word, i)
                tagged.append((word, _en_lemma(word, upos), upos))
        return _attach_flat(tagged)


class StanzaEngine:
    """Neural UD pipeline; needs the stanza package and downloaded models."""

    name = "stanza"

    def __init__(self, lang: str, pretokenized: bool):
        try:
            import stanza
        except ImportError as exc:
            raise EngineLoadError("stanza is not installed") from exc
        try:
            self._pipeline = stanza.Pipeline(
                lang=lang,
                processors="tokenize,mwt,pos,lemma,depparse",
                tokenize_pretokenized=pretokenized,
                download_method=None,
                verbose=False,
            )
        except Exception as exc:
            raise EngineLoadError(f"cannot load stanza pipeline for {lang!r}: {exc}") from exc

    def analyze(self, line: str, pretokenized: bool) -> list[Row]:
        doc = self._pipeline(line)
        rows = []
        for sentence in doc.sentences:  # re-join if the model re-splits
            base = len(rows)
            for word in sentence.words:
                head = base + word.head if word.head else 0
                rows.append(Row(
                    form=word.text,
                    lemma=word.lemma or word.text,
                    upos=word.upos or "X",
                    xpos=word.xpos or "_",
                    feats=word.feats or "_",
                    head=head,
                    deprel=word.deprel or "dep",
                ))
        return rows


def build_engine(engine: str, lang: str, pretokenized: bool):
    """engine is 'rule', 'stanza', or 'auto' (stanza if importable)."""
    if engine == "rule":
        return RuleEngine(lang)
    if engine == "stanza":
        return StanzaEngine(lang, pretokenized)
    if engine == "auto":
        try:
            return StanzaEngine(lang, pretokenized)
        except EngineLoadError:
            return RuleEngine(lang)
    raise EngineLoadError(f"unknown engine {engine!r}")
