"""Evaluation of hypothesis M2 against reference M2.

Edits are matched exactly on a configurable key (span, optionally plus
correction and/or type). With multiple reference annotators the scorer
evaluates each annotator per sentence and counts the one with the best
sentence-level F score (ties go to the lower annotator id). Noop
annotations mark edit-free annotators and never enter the counts.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from geckit.errors import EvaluationError
from geckit.m2 import M2Annotation, M2Entry

MODE_SPAN = "span"
MODE_SPAN_TYPE = "span+type"
MODE_SPAN_CORRECTION = "span+correction"
MODE_SPAN_CORRECTION_TYPE = "span+correction+type"
MATCH_MODES = (MODE_SPAN, MODE_SPAN_TYPE, MODE_SPAN_CORRECTION, MODE_SPAN_CORRECTION_TYPE)

DEFAULT_MODE = MODE_SPAN_CORRECTION
DEFAULT_TYPE_MODE = MODE_SPAN_CORRECTION_TYPE


def f_beta(tp: int, fp: int, fn: int, beta: float) -> tuple[float, float, float]:
    """(precision, recall, F_beta); empty denominators count as perfect."""
    if tp < 0 or fp < 0 or fn < 0:
        raise ValueError("counts must be non-negative")
    if beta <= 0:
        raise ValueError("beta must be positive")
    precision = tp / (tp + fp) if tp + fp else 1.0
    recall = tp / (tp + fn) if tp + fn else 1.0
    if precision == 0.0 and recall == 0.0:
        return precision, recall, 0.0
    b2 = beta * beta
    f = (1 + b2) * precision * recall / (b2 * precision + recall)
    return precision, recall, f


def _match_key(annotation: M2Annotation, mode: str):
    key = [annotation.start, annotation.end]
    if "correction" in mode:
        key.append(annotation.correction)
    if "type" in mode:
        key.append(annotation.type_str)
    return tuple(key)


@dataclass
class MatchResult:
    tp: int
    fp: int
    fn: int
    pairs: list[tuple[M2Annotation, M2Annotation]]
    unmatched_hyp: list[M2Annotation]
    unmatched_ref: list[M2Annotation]


def match_edits(hyp: list[M2Annotation], ref: list[M2Annotation],
                mode: str = DEFAULT_MODE) -> MatchResult:
    """Exact matching on the mode's key; each reference edit pairs with at
    most one hypothesis edit. Noops are ignored."""
    if mode not in MATCH_MODES:
        raise ValueError(f"unknown matching mode {mode!r}")
    hyp = [a for a in hyp if not a.is_noop]
    ref = [a for a in ref if not a.is_noop]
    available: dict[tuple, list[int]] = defaultdict(list)
    for i, h in enumerate(hyp):
        available[_match_key(h, mode)].append(i)
    pairs = []
    used = set()
    unmatched_ref = []
    for r in ref:
        slots = available.get(_match_key(r, mode))
        if slots:
            i = slots.pop(0)
            used.add(i)
            pairs.append((hyp[i], r))
        else:
            unmatched_ref.append(r)
    unmatched_hyp = [h for i, h in enumerate(hyp) if i not in used]
    return MatchResult(
        tp=len(pairs),
        fp=len(unmatched_hyp),
        fn=len(unmatched_ref),
        pairs=pairs,
        unmatched_hyp=unmatched_hyp,
        unmatched_ref=unmatched_ref,
    )


@dataclass
class TypeCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def prf(self, beta: float) -> tuple[float, float, float]:
        return f_beta(self.tp, self.fp, self.fn, beta)


@dataclass
class ScoreReport:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f: float
    beta: float
    mode: str
    per_type: dict[str, TypeCounts] = field(default_factory=dict)
    per_operation: dict[str, TypeCounts] = field(default_factory=dict)
    chosen_annotators: list[int] = field(default_factory=list)


def _select_annotator(hyp_edits, ref_entry: M2Entry, beta: float, mode: str):
    best = None
    for annotator in ref_entry.annotator_ids():
        result = match_edits(hyp_edits, ref_entry.edits_of(annotator), mode)
        _, _, f = f_beta(result.tp, result.fp, result.fn, beta)
        if best is None or f > best[1]:
            best = (annotator, f, result)
    return best[0], best[2]


def evaluate_corpus(hyp_entries: list[M2Entry], ref_entries: list[M2Entry],
                    beta: float = 0.5, mode: str = DEFAULT_MODE) -> ScoreReport:
    """Corpus-level score with per-type and per-operation breakdowns."""
    if len(hyp_entries) != len(ref_entries):
        raise EvaluationError(
            f"entry count mismatch: {len(hyp_entries)} hypothesis vs "
            f"{len(ref_entries)} reference")
    totals = TypeCounts()
    per_type: dict[str, TypeCounts] = defaultdict(TypeCounts)
    per_operation: dict[str, TypeCounts] = defaultdict(TypeCounts)
    chosen = []
    for index, (hyp, ref) in enumerate(zip(hyp_entries, ref_entries)):
        if hyp.source_tokens != ref.source_tokens:
            raise EvaluationError(
                f"S line mismatch at sentence {index + 1}: "
                f"{' '.join(hyp.source_tokens)!r} vs {' '.join(ref.source_tokens)!r}")
        hyp_edits = [a for a in hyp.annotations if not a.is_noop]
        annotator, result = _select_annotator(hyp_edits, ref, beta, mode)
        chosen.append(annotator)
        totals.tp += result.tp
        totals.fp += result.fp
        totals.fn += result.fn
        for _, r in result.pairs:
            per_type[r.type_str].tp += 1
            per_operation[r.operation].tp += 1
        for h in result.unmatched_hyp:
            per_type[h.type_str].fp += 1
            per_operation[h.operation].fp += 1
        for r in result.unmatched_ref:
            per_type[r.type_str].fn += 1
            per_operation[r.operation].fn += 1
    precision, recall, f = f_beta(totals.tp, totals.fp, totals.fn, beta)
    return ScoreReport(
        tp=totals.tp, fp=totals.fp, fn=totals.fn,
        precision=precision, recall=recall, f=f, beta=beta, mode=mode,
        per_type=dict(sorted(per_type.items())),
        per_operation=dict(sorted(per_operation.items())),
        chosen_annotators=chosen,
    )


@dataclass
class CorpusStats:
    missing: int
    replacement: int
    unnecessary: int
    total: int
    top_categories: list[tuple[str, int]]


def corpus_stats(entries: list[M2Entry], top_n: int = 10,
                 annotator: int | None = 0) -> CorpusStats:
    """Operation counts and the most frequent categories.

    By default only annotator 0's annotations are counted; pass
    annotator=None to include everyone. Categories are the type strings
    with the operation prefix stripped; ties order alphabetically.
    """
    operations = Counter()
    categories = Counter()
    total = 0
    for entry in entries:
        for a in entry.annotations:
            if a.is_noop:
                continue
            if annotator is not None and a.annotator != annotator:
                continue
            total += 1
            operations[a.operation] += 1
            categories[a.category] += 1
    top = sorted(categories.items(), key=lambda item: (-item[1], item[0]))
    if top_n >= 0:
        top = top[:top_n]
    return CorpusStats(
        missing=operations.get("M", 0),
        replacement=operations.get("R", 0),
        unnecessary=operations.get("U", 0),
        total=total,
        top_categories=top,
    )


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def render_report(report: ScoreReport, per_type: bool = False) -> str:
    beta_label = f"F{report.beta:g}"
    header = ["TP", "FP", "FN", "Prec", "Rec", beta_label]
    row = [str(report.tp), str(report.fp), str(report.fn),
           _fmt(report.precision), _fmt(report.recall), _fmt(report.f)]
    widths = [max(len(h), len(v)) for h, v in zip(header, row)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
        "  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip(),
    ]
    if per_type and report.per_type:
        lines.append("")
        name_width = max(len("Type"), max(len(t) for t in report.per_type))
        lines.append("  ".join([
            "Type".ljust(name_width), "TP".rjust(4), "FP".rjust(4), "FN".rjust(4),
            "Prec".rjust(6), "Rec".rjust(6), beta_label.rjust(6)]))
        for type_str, counts in report.per_type.items():
            p, r, f = counts.prf(report.beta)
            lines.append("  ".join([
                type_str.ljust(name_width),
                str(counts.tp).rjust(4), str(counts.fp).rjust(4), str(counts.fn).rjust(4),
                _fmt(p).rjust(6), _fmt(r).rjust(6), _fmt(f).rjust(6)]))
    return "\n".join(lines)


def render_report_kv(report: ScoreReport, per_type: bool = False) -> str:
    lines = [
        f"tp={report.tp}",
        f"fp={report.fp}",
        f"fn={report.fn}",
        f"precision={_fmt(report.precision)}",
        f"recall={_fmt(report.recall)}",
        f"f={_fmt(report.f)}",
        f"beta={report.beta:g}",
        f"mode={report.mode}",
    ]
    if per_type:
        for type_str, counts in report.per_type.items():
            p, r, f = counts.prf(report.beta)
            lines.append(
                f"type.{type_str}.tp={counts.tp} fp={counts.fp} fn={counts.fn} "
                f"p={_fmt(p)} r={_fmt(r)} f={_fmt(f)}")
    return "\n".join(lines)


def render_stats(stats: CorpusStats) -> str:
    count_width = max(len(str(stats.total)), 1)
    lines = [
        f"M      {str(stats.missing).rjust(count_width)}",
        f"R      {str(stats.replacement).rjust(count_width)}",
        f"U      {str(stats.unnecessary).rjust(count_width)}",
        f"Total  {str(stats.total).rjust(count_width)}",
    ]
    if stats.top_categories:
        lines.append("")
        name_width = max(len(c) for c, _ in stats.top_categories)
        for category, count in stats.top_categories:
            lines.append(f"{category.ljust(name_width)}  {count}")
    return "\n".join(lines)
