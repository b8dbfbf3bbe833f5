"""Score how relevant an entity's name is to its summary text, 0-100."""

from .corpus import (
    CorpusFormatError,
    CorpusStats,
    LabeledRecord,
    PackageRecord,
    corpus_stats,
    load_corpus,
    load_labels,
)
from .estimator import NameRelevanceScorer, as_records
from .matcher import FuzzyMatch, acronyms, best_fuzzy_match, levenshtein, ngrams, similarity_ratio
from .normalizer import (
    DEFAULT_SUFFIX_RULES,
    LemmaRules,
    filter_tokens,
    lemmatize,
    load_lemma_exceptions,
    load_word_set,
    tokenize_name,
    tokenize_summary,
)
from .report import (
    Distribution,
    ModeComparison,
    ValidationOutcome,
    compare_modes,
    distribution,
    render_report,
    score_to_label,
    validate,
)
from .resources import Resources, load_default_resources
from .scorer import (
    MODES,
    ScoreConfig,
    ScoreResult,
    SummaryIndex,
    TokenCredit,
    prepare_summary,
    score_corpus,
    score_record,
    token_credit,
)
from .segmenter import SegmentationModel, load_wordlist, segment, word_cost

__version__ = "0.1.0"

__all__ = [
    "CorpusFormatError",
    "CorpusStats",
    "DEFAULT_SUFFIX_RULES",
    "Distribution",
    "FuzzyMatch",
    "LabeledRecord",
    "LemmaRules",
    "MODES",
    "ModeComparison",
    "NameRelevanceScorer",
    "PackageRecord",
    "Resources",
    "ScoreConfig",
    "ScoreResult",
    "SegmentationModel",
    "SummaryIndex",
    "TokenCredit",
    "ValidationOutcome",
    "acronyms",
    "as_records",
    "best_fuzzy_match",
    "compare_modes",
    "corpus_stats",
    "distribution",
    "filter_tokens",
    "lemmatize",
    "levenshtein",
    "load_corpus",
    "load_default_resources",
    "load_labels",
    "load_lemma_exceptions",
    "load_word_set",
    "load_wordlist",
    "ngrams",
    "prepare_summary",
    "render_report",
    "score_corpus",
    "score_record",
    "score_to_label",
    "segment",
    "similarity_ratio",
    "token_credit",
    "tokenize_name",
    "tokenize_summary",
    "validate",
    "word_cost",
]
