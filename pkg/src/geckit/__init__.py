"""geckit: multilingual grammatical error annotation and evaluation.

Pipeline in one breath: parse CoNLL-U pairs, align tokens under a
linguistically weighted cost, merge the non-matches into span edits,
classify each edit under a two-tier typology (language-agnostic core plus
language profiles), read/write M2, and score hypotheses with F_beta.
"""
__version__ = "0.1.0"

from geckit.align import (  # noqa: F401
    AlignmentOp,
    CostConfig,
    Edit,
    KERNEL_BACKEND,
    MergeConfig,
    align,
    merge_edits,
)
from geckit.conllu import Sentence, Token, parse_conllu, sentence_pairs  # noqa: F401
from geckit.m2 import M2Annotation, M2Entry, emit_m2, parse_m2  # noqa: F401
from geckit.pipeline import annotate_corpus, annotate_pair  # noqa: F401
from geckit.profiles import Profile, load_profile  # noqa: F401
from geckit.scorer import ScoreReport, corpus_stats, evaluate_corpus, f_beta  # noqa: F401
from geckit.similarity import (  # noqa: F401
    PhoneticLexicon,
    ShapeTable,
    ThresholdConfig,
    sim_phonetic,
    sim_shape,
)
from geckit.typology import ErrorType, classify  # noqa: F401
