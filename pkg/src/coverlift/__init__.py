"""Exact decision procedure for lifting graph automorphisms to regular
covers with a finite abelian deck group, with brute-force oracles for
validation."""

from .abelian import (
    AbelianGroupSpec,
    GroupElement,
    all_elements,
    element,
    element_add,
    element_from_cyclic,
    element_neg,
    element_scale,
    element_to_cyclic,
    embed,
    parse_group_spec,
    zero,
)
from .errors import (
    BaseNotInGraphError,
    BudgetExceededError,
    CoverliftError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateVertexError,
    InconsistentOppositesError,
    IndexOutOfRangeError,
    LoopEdgeError,
    ModulusMismatchError,
    NotAdjacencyPreservingError,
    NotATreeError,
    NotAUnitError,
    NotBijectiveError,
    NotInvertibleError,
    NotTReducedError,
    NotUnimodularError,
    OracleDisagreementError,
    OrderTooSmallError,
    ParseError,
    SpecMismatchError,
    UnknownArcError,
    UnknownEndpointError,
    ValidationError,
)
from .graphs import (
    Arc,
    Automorphism,
    CycleBasis,
    Graph,
    Walk,
    apply_automorphism_to_walk,
    build_spanning_tree,
    check_automorphism,
    signed_cotree_incidence,
    tree_path,
    validate_graph,
)
from .instance import (
    Fixture,
    enumerate_automorphisms,
    generate_instance,
    instance_document,
    load_instance,
    parse_cycle_notation,
    parse_instance,
    serialize_instance,
)
from .lifting import (
    HomologyMatrix,
    LiftReport,
    PrimeVerdict,
    Violation,
    criterion_single_prime,
    degree_check,
    homology_matrix,
    lift_check,
)
from .oracle import (
    DEFAULT_BUDGET,
    DerivedGraph,
    build_derived_graph,
    kernel_oracle,
    lift_search_oracle,
)
from .report import build_report, render_structured, render_text
from .voltage import (
    VoltageAssignment,
    VoltageMatrices,
    build_voltage_matrices,
    gauge_reduce,
    validate_voltage,
    walk_voltage,
)
from .zn_linalg import (
    ModMatrix,
    NormalFormResult,
    is_unit,
    mat_inverse,
    mat_mul,
    mat_mul_int,
    normal_form,
    p_degree,
    unit_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupSpec",
    "Arc",
    "Automorphism",
    "BaseNotInGraphError",
    "BudgetExceededError",
    "CoverliftError",
    "CycleBasis",
    "DEFAULT_BUDGET",
    "DerivedGraph",
    "DimensionMismatchError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "DuplicateVertexError",
    "Fixture",
    "Graph",
    "GroupElement",
    "HomologyMatrix",
    "InconsistentOppositesError",
    "IndexOutOfRangeError",
    "LiftReport",
    "LoopEdgeError",
    "ModMatrix",
    "ModulusMismatchError",
    "NormalFormResult",
    "NotATreeError",
    "NotAUnitError",
    "NotAdjacencyPreservingError",
    "NotBijectiveError",
    "NotInvertibleError",
    "NotTReducedError",
    "NotUnimodularError",
    "OracleDisagreementError",
    "OrderTooSmallError",
    "ParseError",
    "PrimeVerdict",
    "SpecMismatchError",
    "UnknownArcError",
    "UnknownEndpointError",
    "ValidationError",
    "Violation",
    "VoltageAssignment",
    "VoltageMatrices",
    "Walk",
    "all_elements",
    "apply_automorphism_to_walk",
    "build_derived_graph",
    "build_report",
    "build_spanning_tree",
    "build_voltage_matrices",
    "check_automorphism",
    "criterion_single_prime",
    "degree_check",
    "element",
    "element_add",
    "element_from_cyclic",
    "element_neg",
    "element_scale",
    "element_to_cyclic",
    "embed",
    "enumerate_automorphisms",
    "gauge_reduce",
    "generate_instance",
    "homology_matrix",
    "instance_document",
    "is_unit",
    "kernel_oracle",
    "lift_check",
    "lift_search_oracle",
    "load_instance",
    "mat_inverse",
    "mat_mul",
    "mat_mul_int",
    "normal_form",
    "p_degree",
    "parse_cycle_notation",
    "parse_group_spec",
    "parse_instance",
    "render_structured",
    "render_text",
    "serialize_instance",
    "signed_cotree_incidence",
    "tree_path",
    "unit_inverse",
    "validate_graph",
    "validate_voltage",
    "walk_voltage",
    "zero",
]
