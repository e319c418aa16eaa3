"""udprep: raw parallel text to CoNLL-U preprocessing adapter."""
__version__ = "0.1.0"

from udprep.engines import EngineLoadError, RuleEngine, StanzaEngine, build_engine  # noqa: F401
from udprep.resegment import load_compounds, resegment, resegment_rows  # noqa: F401
from udprep.rows import Row, format_corpus, parse_corpus  # noqa: F401
