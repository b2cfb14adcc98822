"""Bar Codes, Janet decompositions and complete-ordering search for finite term sets."""

from .barcode import (
    Bar,
    BarCode,
    StarMarking,
    build_barcode,
    decode,
    elist,
    is_admissible,
    is_order_ideal,
    order_ideal_violation,
    star_marking,
    star_set,
    star_set_formula,
)
from .errors import (
    CapExceededError,
    DimensionError,
    DuplicateTermError,
    EmptyTermSetError,
    InternalInvariantError,
    JanetBarError,
    MalformedBarCodeError,
    NotAdmissibleError,
    ParseError,
)
from .janet import (
    CompletenessReport,
    JanetDecomposition,
    cone_contains,
    decomposition_definition,
    involutive_divisor,
    is_complete_barcode,
    is_complete_definition,
    is_complete_recursive,
    mult_vars_barcode,
    mult_vars_definition,
)
from .search import (
    CandidateMap,
    PartialBarCode,
    SearchResult,
    TraceEvent,
    brute_force_orderings,
    candidate_divisors,
    candidate_var,
    candidates,
    common,
    find_ordering,
    friends,
)
from .terms import (
    Term,
    TermSet,
    VariableOrdering,
    degree_profile,
    divides,
    lex_compare,
    lex_key,
    pi_projection,
)

__version__ = "0.1.0"
