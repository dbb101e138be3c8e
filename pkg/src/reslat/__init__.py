"""Finite commutative integral bounded residuated lattices.

Tables in, structure out: element classes, filters and their spectra,
quotients, the Boolean lifting machinery, direct products and interval
splits, exhaustive enumeration of small algebras, and a harness that
verifies the library's structural facts over whole corpora.
"""

from .algebra import (
    AlgebraError,
    ElementClasses,
    FiniteResiduatedLattice,
    InternalCheckFailed,
    MalformedInput,
    ValidationFailed,
    booleans,
    element_classes,
    nilpotents,
    validate_algebra,
)
from .blp import (
    AlgebraBlpVerdict,
    AnalysisReport,
    Decomposition,
    FilterBlpVerdict,
    StarVerdict,
    TrivialAlgebra,
    algebra_has_blp,
    b_normal_on_principal_filters,
    classify,
    filter_has_blp,
    is_quasi_local,
    projection_injective_on_booleans,
    s_set,
    s_witnesses,
    semiperfect_decomposition,
    star_condition,
    star_star_condition,
)
from .construct import (
    IntervalPresentation,
    ProductPresentation,
    RestrictionPresentation,
    boolean_algebra,
    direct_product,
    godel_chain,
    interval_algebra,
    lukasiewicz_chain,
    restrict_bottom_chain,
    restrict_lower,
    stack_chain,
)
from .enumerator import DEFAULT_MAX_SIZE, corpus_up_to, enumerate_algebras
from .filters import (
    Filter,
    QuotientPresentation,
    Spectra,
    all_filters,
    filter_image,
    filter_join,
    filter_meet,
    generated_filter,
    is_filter_set,
    principal_filter,
    quotient,
    radical,
    second_isomorphism_check,
    spectra,
)
from .fixtures import FIXTURES, all_fixtures
from .harness import (
    Corpus,
    HarnessReport,
    OpenProblemFindings,
    TheoremCheck,
    UnknownTheorem,
    registry,
    render_findings,
    render_report,
    search_open_problems,
    standard_corpus,
    theorem_ids,
    verify_corpus,
)
from .io import (
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    dumps_algebra,
    load_algebra,
    loads_algebra,
)
from .isomorphism import canonical_key, find_isomorphism, is_isomorphic

__version__ = "0.1.0"

__all__ = [
    "AlgebraBlpVerdict",
    "AlgebraError",
    "AnalysisReport",
    "Corpus",
    "DEFAULT_MAX_SIZE",
    "Decomposition",
    "ElementClasses",
    "FIXTURES",
    "Filter",
    "FilterBlpVerdict",
    "FiniteResiduatedLattice",
    "HarnessReport",
    "InternalCheckFailed",
    "IntervalPresentation",
    "MalformedInput",
    "OpenProblemFindings",
    "ProductPresentation",
    "QuotientPresentation",
    "RestrictionPresentation",
    "Spectra",
    "StarVerdict",
    "TheoremCheck",
    "TrivialAlgebra",
    "UnknownTheorem",
    "ValidationFailed",
    "algebra_from_dict",
    "algebra_has_blp",
    "algebra_to_dict",
    "all_filters",
    "all_fixtures",
    "b_normal_on_principal_filters",
    "boolean_algebra",
    "booleans",
    "canonical_key",
    "classify",
    "corpus_up_to",
    "direct_product",
    "dump_algebra",
    "dumps_algebra",
    "element_classes",
    "enumerate_algebras",
    "filter_has_blp",
    "filter_image",
    "filter_join",
    "filter_meet",
    "find_isomorphism",
    "generated_filter",
    "godel_chain",
    "interval_algebra",
    "is_filter_set",
    "is_isomorphic",
    "is_quasi_local",
    "load_algebra",
    "loads_algebra",
    "lukasiewicz_chain",
    "nilpotents",
    "principal_filter",
    "projection_injective_on_booleans",
    "quotient",
    "radical",
    "registry",
    "render_findings",
    "render_report",
    "restrict_bottom_chain",
    "restrict_lower",
    "s_set",
    "s_witnesses",
    "search_open_problems",
    "second_isomorphism_check",
    "semiperfect_decomposition",
    "spectra",
    "stack_chain",
    "standard_corpus",
    "star_condition",
    "star_star_condition",
    "theorem_ids",
    "validate_algebra",
    "verify_corpus",
]
