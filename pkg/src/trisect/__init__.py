"""Trisection calculus: diagram validation, homological invariants,
genus-3 slope classification, parameter arithmetic for cut-and-paste
operations, torus-surgery block plans, and the genus-one slide reducer.
"""

from .calculus import (
    BoundaryCircles,
    ClosedPage,
    ComplementResult,
    PastingInput,
    PlanBlock,
    RibbonGraph,
    SurgeryPlan,
    curve_complement,
    destabilize,
    fiber_sum,
    log_transform_plan,
    luttinger_plan,
    parse_plan,
    paste,
    poke,
    serialize_plan,
    shadow_boundary_curves,
    shear_block,
    surgery_plan_general,
)
from .diagram import (
    BridgeData,
    CurveSystem,
    Fraction,
    StarDiagram,
    SymplecticLattice,
    TrisectionParams,
    Violation,
    diagram_ok,
    format_params,
    genus1_pair_kind,
    parse_diagram,
    parse_fraction,
    parse_params,
    serialize_diagram,
    validate_cut_system,
    validate_diagram,
    validate_standard_pair,
)
from .errors import (
    BoundaryNotSupported,
    CannotDestabilize,
    CellDecompositionMismatch,
    DiagramError,
    FormUndefined,
    IllegalMove,
    MalformedWord,
    NotApplicable,
    NotNeighbors,
    NotSL2,
    NotSL3,
    NotUnimodular,
    TrisectError,
    VectorLength,
)
from .farey import (
    FareyClassification,
    FareyTriple,
    SpunLens,
    atlas_rows,
    classify,
    dmet,
    enumerate_triples,
    farey_homology_model,
    fraction_universe,
    mediants,
    qx,
    triple_kind,
)
from .invariants import (
    HomologyReport,
    euler_char,
    first_homology,
    handle_counts,
)
from .slides import (
    SlideMove,
    SlideState,
    apply_move,
    format_state,
    initial_state,
    lambda_conserved,
    mu_conserved,
    parse_word,
    reduce_full,
    reduce_mu,
    render_word,
    replay,
    trace_lines,
)
from .zmatrix import (
    CokernelInvariants,
    FormClass,
    FormInvariants,
    Gen,
    SL3Word,
    classify_unimodular,
    cokernel_invariants,
    determinant,
    gen_matrix,
    identity,
    is_unimodular,
    mat_mul,
    sl3_factor,
    smith_normal_form,
    sym_form_invariants,
    transpose,
)

__version__ = "0.1.0"
