"""Unit interval orders, Dyck paths, the bijections between them, and the
zeta map, together with an exhaustive verification harness.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from .errors import PreconditionError, SizeLimitError, ValidationError
from .lattice import (
    AreaSequence,
    AreaSet,
    DyckWord,
    Peak,
    Step,
    add_final_peak,
    area_sequence_from_area_set,
    area_sequence_from_word,
    area_set_from_area_sequence,
    catalan,
    enumerate_dyck,
    final_maximal_peak,
    final_peak,
    parse_area_sequence,
    parse_area_set,
    parse_word,
    peaks,
    word_from_area_sequence,
)
from .uio import (
    IntervalConfiguration,
    LevelProfile,
    Relation,
    UnitIntervalOrder,
    a_inverse,
    a_map,
    enumerate_uio,
    extend,
    levels,
    parse_intervals,
    parse_pred,
    relation,
    uio_from_intervals,
)
from .partlist import (
    InsertionTrace,
    PartListing,
    Poset,
    f_permutation,
    grevlex_compare,
    grevlex_key,
    grevlex_min_search,
    is_isomorphic,
    p_map,
    poset_from_json,
    poset_from_uio,
    poset_of,
    poset_to_json,
    q_map,
    q_step,
    relabeled_poset,
)
from .zeta import (
    ZETA_INVERSE_MAX_N,
    DiagonalDecomposition,
    added_peak_parameters,
    diagonal_decomposition,
    zeta,
    zeta_inverse,
)
from .harness import (
    DEFAULT_CEILINGS,
    Failure,
    VerificationReport,
    check_bijections,
    check_grevlex,
    check_induction_step,
    check_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "AreaSequence",
    "AreaSet",
    "DEFAULT_CEILINGS",
    "DiagonalDecomposition",
    "DyckWord",
    "Failure",
    "InsertionTrace",
    "IntervalConfiguration",
    "LevelProfile",
    "PartListing",
    "Peak",
    "Poset",
    "PreconditionError",
    "Relation",
    "SizeLimitError",
    "Step",
    "UnitIntervalOrder",
    "ValidationError",
    "VerificationReport",
    "ZETA_INVERSE_MAX_N",
    "a_inverse",
    "a_map",
    "add_final_peak",
    "added_peak_parameters",
    "area_sequence_from_area_set",
    "area_sequence_from_word",
    "area_set_from_area_sequence",
    "catalan",
    "check_bijections",
    "check_grevlex",
    "check_induction_step",
    "check_theorem",
    "diagonal_decomposition",
    "enumerate_dyck",
    "enumerate_uio",
    "extend",
    "f_permutation",
    "final_maximal_peak",
    "final_peak",
    "grevlex_compare",
    "grevlex_key",
    "grevlex_min_search",
    "is_isomorphic",
    "levels",
    "p_map",
    "parse_area_sequence",
    "parse_area_set",
    "parse_intervals",
    "parse_pred",
    "parse_word",
    "peaks",
    "poset_from_json",
    "poset_from_uio",
    "poset_of",
    "poset_to_json",
    "q_map",
    "q_step",
    "relabeled_poset",
    "relation",
    "uio_from_intervals",
    "word_from_area_sequence",
    "zeta",
    "zeta_inverse",
]
