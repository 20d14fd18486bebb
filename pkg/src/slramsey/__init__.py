"""Exact-arithmetic toolkit for ordered hypergraph Ramsey constructions:
generators, structured submatrix extraction, domination-hypergraph cliques,
and the end-to-end clique-or-independent-set pipeline, all over
arbitrary-precision rationals with re-verifiable certificates."""

from .constructions import (
    GrowthParams,
    PolynomialFunction,
    StepUpWitness,
    delta_index,
    growth_bounds,
    growth_edge_function,
    growth_hypergraph,
    growth_hypergraph_lazy,
    incidence_graph,
    lower_bound_3uniform,
    shift3_bound,
    shift3_hypergraph,
    step_up,
    step_up_witness,
    word_of,
)
from .domination import (
    MINUS_INFINITY,
    DominationInstance,
    DominationResult,
    domination_clique,
    domination_color,
    domination_hypergraph,
    domination_sharpness_instance,
    max_common_monochromatic,
)
from .errors import InsufficientInputError, InternalVerificationError, OracleBudgetError
from .exactnum import (
    PerturbedValue,
    Rational,
    as_rational,
    floor_log,
    log_ratio_upper,
    perturb_matrix,
    rational_str,
    sign_of,
)
from .hypergraph import (
    BoolTable,
    ColoredHypergraph,
    LazyHypergraph,
    OrderedHypergraph,
    boolean_combination,
    brute_alpha,
    brute_omega,
    is_clique,
    is_independent,
    is_monochromatic,
)
from .pipeline import (
    MulticolorResult,
    PipelineResult,
    multicolor_extract,
    semilinear_ramsey_extract,
)
from .semilinear import (
    LinearDescription,
    LinearFunction,
    SignTable,
    WitnessMatrix,
    blocks,
    decompose_primitive,
    primitive_hypergraph,
    realize,
    stack,
)
from .streamline import (
    CupcapStage,
    ExponentialShift,
    RowMonotoneStage,
    cup_or_cap,
    cupcap_submatrix,
    cupcap_submatrix_greedy,
    exponential_shift,
    is_cap,
    is_cup,
    is_delta_exponential,
    monotone_sharpness_matrix,
    monotone_subsequence,
    required_width,
    row_monotone_submatrix,
)

__version__ = "0.1.0"
