from geckit.align import MergeConfig, align, merge_edits
from geckit.conllu import parse_conllu

from helpers import read_fixture, sent, simple_sentence, tok


def _edits(src, tgt, cfg=MergeConfig()):
    return merge_edits(align(src, tgt), src, tgt, cfg)


def test_separated_ops_stay_separate():
    src = parse_conllu(read_fixture("this_are.orig.conllu"))[0]
    tgt = parse_conllu(read_fixture("this_are.corr.conllu"))[0]
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.correction) for e in edits] == [
        (1, 2, "is"), (3, 3, "good"),
    ]
    assert [e.operation for e in edits] == ["R", "M"]


def test_no_edits_for_identical_pair():
    s = simple_sentence(["a", "b"])
    assert _edits(s, s) == []


def test_word_boundary_merge():
    src = sent(tok("ice", "ice", "NOUN"), tok("cream", "cream", "NOUN"))
    tgt = sent(tok("icecream", "icecream", "NOUN"))
    edits = _edits(src, tgt)
    assert len(edits) == 1
    edit = edits[0]
    assert (edit.src_start, edit.src_end, edit.correction) == (0, 2, "icecream")
    assert edit.operation == "R"


def test_word_boundary_merge_toggleable():
    src = sent(tok("ice", "ice", "NOUN"), tok("cream", "cream", "NOUN"))
    tgt = sent(tok("icecream", "icecream", "NOUN"))
    cfg = MergeConfig(word_boundary=False, same_pos=False)
    edits = _edits(src, tgt, cfg)
    assert len(edits) == 2


def test_uniform_insert_run_merges():
    src = sent(tok("walked", "walk", "VERB"))
    tgt = sent(tok("had", "have", "AUX"), tok("walked", "walk", "VERB"),
               tok("home", "home", "ADV"))
    # target aligns walked<->walked; "had" and "home" are separate INS runs
    edits = _edits(src, tgt)
    assert [(e.operation, e.correction) for e in edits] == [("M", "had"), ("M", "home")]
    adjacent_tgt = sent(tok("very", "very", "ADV"), tok("new", "new", "ADJ"),
                        tok("walked", "walk", "VERB"))
    edits = _edits(src, adjacent_tgt)
    assert [(e.operation, e.correction) for e in edits] == [("M", "very new")]


def test_verbal_group_merges_across_pos():
    src = sent(tok("play", "play", "VERB"))
    tgt = sent(tok("is", "be", "AUX"), tok("played", "play", "VERB"))
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.correction) for e in edits] == [(0, 1, "is played")]


def test_passive_rewrite_splits_pronoun_from_verb_group():
    src = parse_conllu(read_fixture("volleyball.orig.conllu"))[0]
    tgt = parse_conllu(read_fixture("volleyball.corr.conllu"))[0]
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.tgt_start, e.tgt_end, e.correction) for e in edits] == [
        (4, 4, 4, 5, "that"),
        (4, 5, 5, 7, "is played"),
    ]


def test_same_pos_adjacent_subs_merge():
    src = sent(tok("Dagegen", "dagegen", "ADV"), tok("wieder", "wieder", "ADV"),
               tok(",", ",", "PUNCT"), tok("kommen", "kommen", "VERB"))
    tgt = sent(tok("Dahingegen", "dahingegen", "ADV"), tok("kommen", "kommen", "VERB"))
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.operation, e.correction) for e in edits] == [
        (0, 2, "R", "Dahingegen"),
        (2, 3, "U", ""),
    ]


def test_punct_plus_case_sub_pair_merges():
    src = sent(tok(",", ",", "PUNCT"), tok("we", "we", "PRON"), tok("go", "go", "VERB"))
    tgt = sent(tok(".", ".", "PUNCT"), tok("We", "we", "PRON"), tok("go", "go", "VERB"))
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.correction) for e in edits] == [(0, 2, ". We")]


def test_transpose_forms_single_edit():
    src = simple_sentence(["You", "can", "help", "me"])
    tgt = simple_sentence(["Can", "you", "help", "me"])
    edits = _edits(src, tgt)
    assert [(e.src_start, e.src_end, e.correction) for e in edits] == [(0, 2, "Can you")]


def test_merge_handles_alignment_without_nonmatches():
    s = simple_sentence(["x", "y", "z"])
    assert merge_edits(align(s, s), s, s) == []


def test_single_op_segments_survive_rule_toggles():
    src = sent(tok("a", "a", "DET"))
    tgt = sent(tok("the", "the", "DET"))
    cfg = MergeConfig(uniform_runs=False, word_boundary=False,
                      same_pos=False, punct_case=False)
    edits = _edits(src, tgt, cfg)
    assert [(e.operation, e.correction) for e in edits] == [("R", "the")]
