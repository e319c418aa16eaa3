import pytest

from geckit.conllu import UD_UPOS, parse_conllu, sentence_pairs, serialize_conllu
from geckit.errors import ConlluParseError, PairingError

from helpers import FIXTURES

MINIMAL = (
    "1\tThis\tthis\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tis\tbe\tAUX\t_\t_\t0\troot\t_\t_\n"
)


def test_minimal_two_token_sentence():
    sentences = parse_conllu(MINIMAL)
    assert len(sentences) == 1
    assert [t.form for t in sentences[0]] == ["This", "is"]
    assert [t.upos for t in sentences[0]] == ["PRON", "AUX"]
    assert sentences[0][0].head == 1
    assert sentences[0][1].head is None


def test_empty_input():
    assert parse_conllu("") == []
    assert parse_conllu("\n\n\n") == []


def test_sent_id_and_comments_preserved():
    text = "# sent_id = abc-1\n# text = Hi\n1\tHi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n"
    sentence = parse_conllu(text)[0]
    assert sentence.sent_id == "abc-1"
    assert sentence.comments == ["# sent_id = abc-1", "# text = Hi"]


def test_wrong_column_count_reports_line():
    bad = "# a comment\n1\tThis\tthis\tPRON\t_\t_\t2\tnsubj\t_\n"
    with pytest.raises(ConlluParseError) as err:
        parse_conllu(bad)
    assert err.value.line == 2
    assert "columns" in str(err.value)


def test_non_numeric_id_rejected():
    with pytest.raises(ConlluParseError):
        parse_conllu("x\tThis\tthis\tPRON\t_\t_\t0\troot\t_\t_\n")


def test_duplicate_token_ids_rejected():
    bad = (
        "1\ta\ta\tDET\t_\t_\t0\troot\t_\t_\n"
        "1\tb\tb\tNOUN\t_\t_\t1\tdep\t_\t_\n"
    )
    with pytest.raises(ConlluParseError) as err:
        parse_conllu(bad)
    assert "duplicate" in str(err.value) or "IDs" in str(err.value)


def test_empty_node_rows_rejected():
    bad = "1\ta\ta\tDET\t_\t_\t0\troot\t_\t_\n1.1\tb\tb\tNOUN\t_\t_\t1\tdep\t_\t_\n"
    with pytest.raises(ConlluParseError):
        parse_conllu(bad)


def test_multiword_token_rows_skipped():
    text = (FIXTURES / "multiword_tokens.conllu").read_text(encoding="utf-8")
    sentence = parse_conllu(text)[0]
    assert sentence.forms() == ["Er", "geht", "zu", "dem", "Arzt", "."]


def test_unknown_upos_rejected_unless_extended():
    row = "1\t감사\t감사\tHON\t_\t_\t0\troot\t_\t_\n"
    with pytest.raises(ConlluParseError):
        parse_conllu(row)
    extended = parse_conllu(row, UD_UPOS | {"HON"})
    assert extended[0][0].upos == "HON"


def test_duplicate_sent_id_rejected():
    block = "# sent_id = s1\n1\ta\ta\tDET\t_\t_\t0\troot\t_\t_\n"
    with pytest.raises(ConlluParseError) as err:
        parse_conllu(block + "\n" + block)
    assert "sent_id" in str(err.value)


def test_head_out_of_range_rejected():
    with pytest.raises(ConlluParseError):
        parse_conllu("1\ta\ta\tDET\t_\t_\t5\tdet\t_\t_\n")


def test_whitespace_form_rejected():
    with pytest.raises(ConlluParseError):
        parse_conllu("1\ta b\tab\tDET\t_\t_\t0\troot\t_\t_\n")


def test_field_level_round_trip_on_fixtures():
    for path in sorted(FIXTURES.glob("*.conllu")):
        text = path.read_text(encoding="utf-8")
        first = parse_conllu(text)
        assert first, path  # parse is total on the bundled corpora
        second = parse_conllu(serialize_conllu(first))
        assert len(first) == len(second)
        for s1, s2 in zip(first, second):
            assert len(s1) == len(s2)
            for t1, t2 in zip(s1, s2):
                assert (t1.form, t1.lemma, t1.upos, t1.feats_string(), t1.deprel) == \
                    (t2.form, t2.lemma, t2.upos, t2.feats_string(), t2.deprel)
                assert t1.head == t2.head


def test_feats_parsed_as_mapping():
    text = "1\tare\tbe\tAUX\t_\tMood=Ind|Number=Plur\t0\troot\t_\t_\n"
    token = parse_conllu(text)[0][0]
    assert token.feats == {"Mood": "Ind", "Number": "Plur"}
    assert token.feats_string() == "Mood=Ind|Number=Plur"


def test_sentence_pairs_positional():
    three = parse_conllu("\n\n".join([MINIMAL] * 3))
    assert len(three) == 3
    pairs = sentence_pairs(three, three)
    assert len(pairs) == 3
    assert pairs[0][0] is three[0]
    assert sentence_pairs([], []) == []


def test_sentence_pairs_count_mismatch():
    three = parse_conllu("\n\n".join([MINIMAL] * 3))
    two = parse_conllu("\n\n".join([MINIMAL] * 2))
    with pytest.raises(PairingError) as err:
        sentence_pairs(three, two)
    assert "count mismatch 3≠2" in str(err.value)
