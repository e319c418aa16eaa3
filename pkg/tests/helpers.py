"""Shared builders for tests."""
from pathlib import Path

from geckit.conllu import Sentence, Token

FIXTURES = Path(__file__).parent / "fixtures"


def tok(form, lemma=None, upos="X", feats=None, head=None, deprel="dep"):
    return Token(
        form=form,
        lemma=form if lemma is None else lemma,
        upos=upos,
        feats=dict(feats) if feats else {},
        head=head,
        deprel=deprel,
    )


def sent(*tokens, sent_id=""):
    return Sentence(tokens=list(tokens), sent_id=sent_id)


def simple_sentence(forms, upos="X"):
    return sent(*(tok(f, upos=upos) for f in forms))


def read_fixture(name) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")
