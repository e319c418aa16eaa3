"""End-to-end annotation: align, merge, classify, emit."""
from __future__ import annotations

from geckit.align import CostConfig, DEFAULT_COSTS, DEFAULT_MERGE, Edit, MergeConfig, align, merge_edits
from geckit.conllu import Sentence
from geckit.m2 import M2Entry, entry_from_edits
from geckit.profiles import Profile
from geckit.typology import ErrorType, classify


def annotate_pair(src: Sentence, tgt: Sentence, profile: Profile,
                  cost_cfg: CostConfig = DEFAULT_COSTS,
                  merge_cfg: MergeConfig = DEFAULT_MERGE) -> list[tuple[Edit, ErrorType]]:
    """Extract and classify the edits turning src into tgt."""
    ops = align(src, tgt, cost_cfg)
    edits = merge_edits(ops, src, tgt, merge_cfg)
    return [(edit, classify(edit, src, tgt, profile)) for edit in edits]


def annotate_corpus(pairs, profile: Profile,
                    cost_cfg: CostConfig = DEFAULT_COSTS,
                    merge_cfg: MergeConfig = DEFAULT_MERGE,
                    annotator: int = 0, noop: bool = False) -> list[M2Entry]:
    """Annotate parsed sentence pairs into M2 entries, in input order."""
    entries = []
    for src, tgt in pairs:
        typed = annotate_pair(src, tgt, profile, cost_cfg, merge_cfg)
        entries.append(entry_from_edits(
            src.forms(), typed, annotator=annotator, noop=noop,
            collapse_equal=profile.collapse_equal_transitions))
    return entries
