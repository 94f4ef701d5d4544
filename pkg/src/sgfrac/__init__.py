"""Exact fractional coloring computations for signed graphs."""

from .errors import (
    BadParameters,
    DimensionMismatch,
    DuplicateEdge,
    FormatError,
    GraphError,
    HostMismatch,
    InfeasibleClique,
    LoopEdge,
    NTooSmall,
    OverlappingDistanceSets,
    SgfracError,
    SizeLimitExceeded,
    UnknownSet,
    VertexOutOfRange,
    ZeroK,
)
from .graphs import (
    CirculantSpec,
    SignedGraph,
    VertexMap,
    blowup_complete,
    build,
    circulant,
    closed_neighborhood,
    complete_positive,
    direct_product,
    format_sg,
    lex_product,
    neighborhood,
    parse_sg,
    read_sg,
    switch,
    write_sg,
)
from .independence import (
    SignedIndependentSet,
    alpha_s,
    enumerate_maximal,
    export_sets,
    fiber,
    incidence,
    incidence_csv,
    is_signed_independent,
)
from .lp import LpProblem, LpSolution, LpStatus, Sense, format_lp, solve, verify_certificate
from .fractional import (
    FractionalClique,
    FractionalColoring,
    SetColoring,
    chi_f,
    chi_f_circulant,
    chi_signed,
    evenized_optimum,
    find_pq_coloring,
    is_circular,
    validate_clique,
    validate_coloring,
    validate_pq,
    verify_alpha_product,
    verify_product_theorem,
    w_f,
)
from .homomorphism import (
    find_switching_hom,
    format_hom_witness,
    is_sign_hom,
    lex_lemma_map,
    verify_lex_lemma_map,
)
from .persistence import (
    check_fiber_condition,
    f_phi_psi,
    fiber_weights,
    is_local_clique,
    is_restricted_clique,
    verify_persistence,
)
from .rationals import Rational, format_rational, parse_rational, rat
from .report import Case, Report

__version__ = "0.1.0"
