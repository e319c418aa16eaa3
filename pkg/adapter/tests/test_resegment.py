from pathlib import Path

import pytest

from udprep.resegment import load_compounds, resegment, resegment_rows
from udprep.rows import Row, parse_corpus

FIXTURES = Path(__file__).parent / "fixtures"

COMPOUNDS = {"为什么": "ADV", "中山南路": "PROPN", "向上": "ADV"}


def row(form, upos="NOUN", head=0, deprel="root"):
    return Row(form=form, lemma=form, upos=upos, head=head, deprel=deprel)


def test_two_token_compound_merges():
    rows = [row("解释", "VERB", 0, "root"), row("为", "NOUN", 1, "dep"),
            row("什么", "NOUN", 1, "dep")]
    merged = resegment_rows(rows, COMPOUNDS)
    assert [r.form for r in merged] == ["解释", "为什么"]
    assert merged[1].upos == "ADV"
    assert merged[1].head == 1


def test_empty_lexicon_is_identity():
    rows = [row("为", "NOUN", 0, "root"), row("什么", "NOUN", 1, "dep")]
    assert resegment_rows(rows, {}) == rows


def test_no_match_is_identity():
    rows = [row("天", "NOUN", 0, "root"), row("气", "NOUN", 1, "dep")]
    assert resegment_rows(rows, COMPOUNDS) == rows


def test_longest_match_wins():
    compounds = {"中山": "PROPN", "中山南路": "PROPN"}
    rows = [row("中"), row("山", head=1, deprel="dep"),
            row("南", head=1, deprel="dep"), row("路", head=1, deprel="dep")]
    merged = resegment_rows(rows, compounds)
    assert [r.form for r in merged] == ["中山南路"]


def test_heads_renumbered_across_merge():
    # verb(1) 为(2) 什(3) 么(4) noun(5, head=1); merging 2..4 must remap 5's head
    rows = [
        row("问", "VERB", 0, "root"),
        row("为", "NOUN", 1, "dep"),
        row("什", "NOUN", 2, "dep"),
        row("么", "NOUN", 2, "dep"),
        row("题", "NOUN", 1, "dep"),
    ]
    merged = resegment_rows(rows, COMPOUNDS)
    assert [r.form for r in merged] == ["问", "为什么", "题"]
    assert merged[1].head == 1  # leftmost component's external head
    assert merged[2].head == 1


def test_merged_root_stays_root():
    rows = [row("为", "NOUN", 0, "root"), row("什", "NOUN", 1, "dep"),
            row("么", "NOUN", 1, "dep"), row("呢", "PART", 1, "dep")]
    merged = resegment_rows(rows, COMPOUNDS)
    assert merged[0].form == "为什么"
    assert merged[0].head == 0
    assert merged[0].deprel == "root"
    assert merged[1].head == 1


def test_document_level_resegment_and_idempotence():
    text = (FIXTURES / "chinese_chars.conllu").read_text(encoding="utf-8")
    compounds = load_compounds(FIXTURES / "compounds.tsv")
    once = resegment(text, compounds)
    assert resegment(once, compounds) == once  # fixed point
    assert "为什么" in once and "中山南路" in once and "向上" in once


def test_character_stream_preserved():
    text = (FIXTURES / "chinese_chars.conllu").read_text(encoding="utf-8")
    compounds = load_compounds(FIXTURES / "compounds.tsv")
    before = parse_corpus(text)
    after = parse_corpus(resegment(text, compounds))
    assert len(before) == len(after)
    for (rows_before, _), (rows_after, _) in zip(before, after):
        assert "".join(r.form for r in rows_before) == "".join(r.form for r in rows_after)


def test_compound_upos_applied():
    text = (FIXTURES / "chinese_chars.conllu").read_text(encoding="utf-8")
    compounds = load_compounds(FIXTURES / "compounds.tsv")
    for rows, _ in parse_corpus(resegment(text, compounds)):
        for r in rows:
            if r.form in compounds:
                assert r.upos == compounds[r.form]


def test_load_compounds_rejects_bad_lines(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("为什么 ADV\n", encoding="utf-8")  # space, not tab
    with pytest.raises(ValueError):
        load_compounds(bad)
