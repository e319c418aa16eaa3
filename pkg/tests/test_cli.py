import subprocess
import sys

from geckit.cli import main

from helpers import FIXTURES, read_fixture


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_annotate_english_golden(capsys):
    code, out, err = run_cli(
        capsys, "annotate",
        str(FIXTURES / "this_are.orig.conllu"), str(FIXTURES / "this_are.corr.conllu"),
        "--profile", "en")
    assert code == 0, err
    assert out == read_fixture("this_are.m2")


def test_annotate_passive_golden(capsys):
    code, out, err = run_cli(
        capsys, "annotate",
        str(FIXTURES / "volleyball.orig.conllu"), str(FIXTURES / "volleyball.corr.conllu"),
        "--profile", "en")
    assert code == 0, err
    assert out == read_fixture("volleyball.m2")


def test_annotate_identical_corpora_s_lines_only(capsys):
    path = str(FIXTURES / "this_are.orig.conllu")
    code, out, _ = run_cli(capsys, "annotate", path, path, "--profile", "en")
    assert code == 0
    assert out == "S This are a sentence .\n"
    code, out, _ = run_cli(capsys, "annotate", path, path, "--noop")
    assert code == 0
    assert out.splitlines()[1].startswith("A -1 -1|||noop|||")


def test_annotate_count_mismatch_exits_2(tmp_path, capsys):
    two = (FIXTURES / "this_are.orig.conllu").read_text(encoding="utf-8")
    double = tmp_path / "two.conllu"
    double.write_text(two + "\n" + two.replace("en-001", "en-001b"), encoding="utf-8")
    code, _, err = run_cli(
        capsys, "annotate", str(double), str(FIXTURES / "this_are.corr.conllu"))
    assert code == 2
    assert "count mismatch" in err


def test_annotate_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.conllu"
    bad.write_text("1\tonly\tfour\tcolumns\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "annotate", str(bad), str(bad))
    assert code == 2
    assert "line 1" in err


def test_annotate_out_file_and_provenance(tmp_path, capsys):
    out_path = tmp_path / "out.m2"
    code, out, _ = run_cli(
        capsys, "annotate",
        str(FIXTURES / "this_are.orig.conllu"), str(FIXTURES / "this_are.corr.conllu"),
        "--profile", "en", "--provenance", "--out", str(out_path))
    assert code == 0
    assert out == ""
    text = out_path.read_text(encoding="utf-8")
    first, rest = text.split("\n", 1)
    assert first.startswith("# geckit")
    assert "alpha1=0.8" in first
    assert rest == read_fixture("this_are.m2")


def test_annotate_annotator_flag(capsys):
    code, out, _ = run_cli(
        capsys, "annotate",
        str(FIXTURES / "this_are.orig.conllu"), str(FIXTURES / "this_are.corr.conllu"),
        "--profile", "en", "--annotator", "3")
    assert code == 0
    for line in out.splitlines():
        if line.startswith("A "):
            assert line.endswith("|||3")


def test_annotate_is_deterministic(capsys):
    args = ("annotate", str(FIXTURES / "volleyball.orig.conllu"),
            str(FIXTURES / "volleyball.corr.conllu"), "--profile", "en")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_annotate_threshold_overrides_disable_spell(tmp_path, capsys):
    orig = tmp_path / "orig.conllu"
    corr = tmp_path / "corr.conllu"
    orig.write_text(
        "1\ttheir\tthey\tPRON\t_\t_\t0\troot\t_\t_\n", encoding="utf-8")
    corr.write_text(
        "1\tthere\tthere\tADV\t_\t_\t0\troot\t_\t_\n", encoding="utf-8")
    _, out, _ = run_cli(capsys, "annotate", str(orig), str(corr), "--profile", "en")
    assert "R:SPELL:PHONETIC" in out
    _, out, _ = run_cli(capsys, "annotate", str(orig), str(corr), "--profile", "en",
                        "--alpha1", "1.1", "--alpha2", "1.1")
    assert "SPELL" not in out
    assert "R:PRON -> ADV" in out


def test_score_self_is_perfect(capsys):
    path = str(FIXTURES / "this_are.m2")
    code, out, _ = run_cli(capsys, "score", path, path)
    assert code == 0
    assert "1.0000" in out
    code, out, _ = run_cli(capsys, "score", path, path, "--kv")
    assert code == 0
    assert "f=1.0000" in out
    assert "tp=2" in out


def test_score_multi_annotator_selection(capsys):
    code, out, _ = run_cli(
        capsys, "score",
        str(FIXTURES / "airline_food.hyp.m2"), str(FIXTURES / "airline_food.ref.m2"),
        "--kv")
    assert code == 0
    assert "tp=2" in out
    assert "fp=0" in out
    assert "fn=0" in out


def test_score_beta_one_symmetric_fixture(tmp_path, capsys):
    hyp = tmp_path / "hyp.m2"
    ref = tmp_path / "ref.m2"
    hyp.write_text(
        "S a b c\n"
        "A 0 1|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"
        "A 1 2|||R:NOUN|||q|||REQUIRED|||-NONE-|||0\n", encoding="utf-8")
    ref.write_text(
        "S a b c\n"
        "A 0 1|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"
        "A 2 3|||R:NOUN|||z|||REQUIRED|||-NONE-|||0\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "score", str(hyp), str(ref), "--beta", "1.0", "--kv")
    assert code == 0
    assert "precision=0.5000" in out
    assert "recall=0.5000" in out
    assert "f=0.5000" in out


def test_score_s_line_mismatch_exits_2(tmp_path, capsys):
    hyp = tmp_path / "hyp.m2"
    hyp.write_text("S a b\n", encoding="utf-8")
    ref = tmp_path / "ref.m2"
    ref.write_text("S a c\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "score", str(hyp), str(ref))
    assert code == 2
    assert "sentence 1" in err


def test_score_per_type_table(capsys):
    path = str(FIXTURES / "stats20.m2")
    code, out, _ = run_cli(capsys, "score", path, path, "--per-type")
    assert code == 0
    assert "R:VERB:SVA" in out
    assert "M:DET" in out


def test_stats_hand_counted_fixture(capsys):
    code, out, _ = run_cli(capsys, "stats", str(FIXTURES / "stats20.m2"))
    assert code == 0
    assert out == (
        "M       5\n"
        "R      11\n"
        "U       4\n"
        "Total  20\n"
        "\n"
        "DET               4\n"
        "VERB:SVA          3\n"
        "NOUN -> NOUN      2\n"
        "PRON              2\n"
        "PUNCT             2\n"
        "ADJ               1\n"
        "DET -> DET        1\n"
        "SPELL:PHONETIC    1\n"
        "SPELL:SHAPE       1\n"
        "VERB -> AUX VERB  1\n"
    )


def test_stats_top_flag(capsys):
    code, out, _ = run_cli(capsys, "stats", str(FIXTURES / "stats20.m2"), "--top", "1")
    assert code == 0
    tail = out.strip().splitlines()[-1]
    assert tail.split() == ["DET", "4"]


def test_stats_empty_file(tmp_path, capsys):
    empty = tmp_path / "empty.m2"
    empty.write_text("", encoding="utf-8")
    code, out, _ = run_cli(capsys, "stats", str(empty))
    assert code == 0
    assert "Total  0" in out


def test_stats_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.m2"
    bad.write_text("gibberish line\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "stats", str(bad))
    assert code == 2


def test_unknown_merge_rule_exits_2(capsys):
    path = str(FIXTURES / "this_are.orig.conllu")
    code, _, err = run_cli(capsys, "annotate", path, path, "--merge-rules", "bogus")
    assert code == 2
    assert "merge rule" in err


def _synthetic_corpus(tp: int, fp: int, fn: int, sentence_len: int = 100):
    """Hypothesis/reference M2 pair with exactly the requested counts."""
    hyp_blocks = []
    ref_blocks = []
    remaining = [tp, fp, fn]
    while any(remaining):
        tokens = " ".join(["w"] * sentence_len)
        hyp_lines = [f"S {tokens}"]
        ref_lines = [f"S {tokens}"]
        span = 0
        while span < sentence_len and any(remaining):
            if remaining[0]:
                line = f"A {span} {span + 1}|||R:NOUN|||x|||REQUIRED|||-NONE-|||0"
                hyp_lines.append(line)
                ref_lines.append(line)
                remaining[0] -= 1
            elif remaining[1]:
                hyp_lines.append(f"A {span} {span + 1}|||R:NOUN|||y|||REQUIRED|||-NONE-|||0")
                remaining[1] -= 1
            else:
                ref_lines.append(f"A {span} {span + 1}|||R:NOUN|||z|||REQUIRED|||-NONE-|||0")
                remaining[2] -= 1
            span += 1
        hyp_blocks.append("\n".join(hyp_lines))
        ref_blocks.append("\n".join(ref_lines))
    return "\n\n".join(hyp_blocks) + "\n", "\n\n".join(ref_blocks) + "\n"


def test_score_synthetic_corpus_hits_reference_numbers(tmp_path, capsys):
    hyp_text, ref_text = _synthetic_corpus(2589, 1639, 4030)
    hyp = tmp_path / "hyp.m2"
    ref = tmp_path / "ref.m2"
    hyp.write_text(hyp_text, encoding="utf-8")
    ref.write_text(ref_text, encoding="utf-8")
    code, out, _ = run_cli(capsys, "score", str(hyp), str(ref), "--kv")
    assert code == 0
    assert "tp=2589" in out
    assert "fp=1639" in out
    assert "fn=4030" in out
    assert "precision=0.6123" in out
    assert "recall=0.3911" in out
    assert "f=0.5501" in out


def test_console_entry_point_byte_determinism():
    argv = [sys.executable, "-m", "geckit.cli", "annotate",
            str(FIXTURES / "this_are.orig.conllu"),
            str(FIXTURES / "this_are.corr.conllu"), "--profile", "en"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
    assert first.stdout.decode() == read_fixture("this_are.m2")
