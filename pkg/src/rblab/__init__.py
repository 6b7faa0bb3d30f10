"""rblab: exact-computation laboratory for rainbow clique Turan systems."""

__version__ = "0.1.0"

from .bounds import (
    Prop31Report,
    ThresholdDiagnostics,
    TuranDecomposition,
    capped_total,
    capped_total_max,
    check_n_equals_r,
    decompose,
    threshold_diagnostics,
    turan_closed_form,
    verify_prop31,
)
from .errors import (
    ContractViolationError,
    FormatError,
    InvalidParameterError,
    ResourceLimitError,
)
from .model import (
    GraphSystem,
    PatternGraph,
    SimpleGraph,
    Thresholds,
    conjectured_bound,
    gen_clique_system,
    gen_turan_system,
    thresholds,
    turan_graph,
    turan_number,
)
from .nesting import (
    NestedSystem,
    WeightedGraph,
    from_weighted,
    is_nested,
    nest,
    to_weighted,
    truncate,
)
from .rainbow import (
    RainbowCertificate,
    count_rainbow_embeddings,
    find_rainbow,
    is_rainbow_free,
)
from .search import (
    GridReport,
    SearchReport,
    bnb_optimum,
    brute_force_optimum,
    construction_values,
    kernel_backend,
    verify_conjecture_grid,
)
from .sequences import (
    BoundTables,
    Packing,
    bound_tables,
    check_claim_45,
    check_claim_induction,
    check_claim_vertex,
    dominates,
    dominates_lex,
    greedy_packing,
    has_bounded_clique,
    is_staircase_free,
    staircase,
    weight_seq,
)

__all__ = [name for name in dir() if not name.startswith("_")]
