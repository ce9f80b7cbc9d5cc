"""Exact algebra, inclusion relations, and law checking for hesitant fuzzy sets.

A hesitant fuzzy set assigns each universe element a non-empty finite
multiset of membership degrees in [0, 1]. This package implements the
element and set algebra (union, intersection, complement) with exact
rational arithmetic, six inclusion relations of graded strength with their
equalities, family-level folds, a machine-checked registry of the algebra's
laws (proved ones verified by randomized trials, failed classical identities
replayed from fixed counterexamples), and a document/CLI layer for
decision-ranking workflows.
"""

from .degrees import format_degree, parse_degree, render_rational
from .document import Document, document_of, load_document, save_document
from .elements import HFE, hfe, make_hfe
from .errors import (
    DegreeError,
    DocumentError,
    HesitantError,
    UniverseMismatchError,
    UnknownLawError,
)
from .expressions import evaluate_on_hfs, parse_expression
from .ingest import ingest_scores
from .laws import (
    GeneratorConfig,
    Law,
    LawStatus,
    SuiteReport,
    Witness,
    evaluate_law,
    fixture_documents,
    get_law,
    hunt_counterexample,
    law_registry,
    proved_laws,
    random_hfs,
    refuted_laws,
    run_suite,
)
from .ranking import Ranking, format_ranking, rank_schemes, ranking_dot
from .relations import (
    Inclusion,
    RelationProfile,
    best_subsequence,
    classify_strong_or_tail,
    element_relation,
    is_subsequence,
    pointwise_leq,
    relation_profile,
    set_equality,
    set_relation,
)
from .sets import (
    HFS,
    Family,
    SetOp,
    Universe,
    combine,
    complement,
    family_fold,
    is_subfamily,
    make_hfs,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeError",
    "Document",
    "DocumentError",
    "Family",
    "GeneratorConfig",
    "HFE",
    "HFS",
    "HesitantError",
    "Inclusion",
    "Law",
    "LawStatus",
    "Ranking",
    "RelationProfile",
    "SetOp",
    "SuiteReport",
    "Universe",
    "UniverseMismatchError",
    "UnknownLawError",
    "Witness",
    "best_subsequence",
    "classify_strong_or_tail",
    "combine",
    "complement",
    "document_of",
    "element_relation",
    "evaluate_law",
    "evaluate_on_hfs",
    "family_fold",
    "fixture_documents",
    "format_degree",
    "format_ranking",
    "get_law",
    "hfe",
    "hunt_counterexample",
    "ingest_scores",
    "is_subfamily",
    "is_subsequence",
    "law_registry",
    "load_document",
    "make_hfe",
    "make_hfs",
    "parse_degree",
    "parse_expression",
    "pointwise_leq",
    "proved_laws",
    "random_hfs",
    "rank_schemes",
    "ranking_dot",
    "refuted_laws",
    "relation_profile",
    "render_rational",
    "run_suite",
    "save_document",
    "set_equality",
    "set_relation",
]
