"""Kottwitz-Rapoport strata combinatorics for Siegel moduli spaces.

Extended affine Weyl group arithmetic for the symplectic similitude
group, admissible and permissible sets of the Siegel coweight, lattice
chain local models over small finite fields with stratum classifiers
and point censuses, and exact component counts and mass formulas for
the p-rank stratification under parahoric level.
"""

from .admissible import (
    AdmissibleTable,
    MonomialMatrix,
    admissible_set,
    g2_element_by_name,
    matrix_rep,
    p_rank,
    p_rank_strata,
    permissible_set,
    table_from_json_dict,
    table_to_json_dict,
)
from .errors import InternalInvariantError
from .local_model import (
    FlagChainPoint,
    InvariantProfile,
    Signature,
    chain_invariants,
    classification_tables,
    classify,
    enumerate_points,
    group_scheme_kind,
    invariant_profile,
    kr_from_profile,
    make_chain_context,
    make_point,
    monomial_point,
    point_census,
    point_from_json_dict,
    point_to_json_dict,
    second_invariants,
    signature,
    tau_criterion,
    transform_point,
    validate_point,
)
from .strata_counts import (
    GemType,
    MassParams,
    ParahoricType,
    almost_ordinary_components,
    connected_component_count,
    fermat_point_count,
    frobenius_graph_count,
    gem_to_chain_type,
    lambda_counts,
    sigma_sets,
    sp_order,
    supersingular_summary,
    type_index_sets,
)
from .weyl_group import (
    ExtendedAffineElement,
    GroupContext,
    act,
    bruhat_leq,
    compose,
    decompose_omega,
    element_from_json_dict,
    element_power,
    element_sort_key,
    element_to_json_dict,
    element_to_text,
    hasse_diagram,
    hasse_to_dot,
    identity_element,
    inverse,
    length,
    make_context,
    reduced_word,
    translation,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleTable",
    "ExtendedAffineElement",
    "FlagChainPoint",
    "GemType",
    "GroupContext",
    "InternalInvariantError",
    "InvariantProfile",
    "MassParams",
    "MonomialMatrix",
    "ParahoricType",
    "Signature",
    "act",
    "admissible_set",
    "almost_ordinary_components",
    "bruhat_leq",
    "chain_invariants",
    "classification_tables",
    "classify",
    "compose",
    "connected_component_count",
    "decompose_omega",
    "element_from_json_dict",
    "element_power",
    "element_sort_key",
    "element_to_json_dict",
    "element_to_text",
    "enumerate_points",
    "fermat_point_count",
    "frobenius_graph_count",
    "g2_element_by_name",
    "gem_to_chain_type",
    "group_scheme_kind",
    "hasse_diagram",
    "hasse_to_dot",
    "identity_element",
    "invariant_profile",
    "inverse",
    "kr_from_profile",
    "lambda_counts",
    "length",
    "make_chain_context",
    "make_context",
    "make_point",
    "matrix_rep",
    "monomial_point",
    "p_rank",
    "p_rank_strata",
    "permissible_set",
    "point_census",
    "point_from_json_dict",
    "point_to_json_dict",
    "reduced_word",
    "second_invariants",
    "sigma_sets",
    "signature",
    "sp_order",
    "supersingular_summary",
    "table_from_json_dict",
    "table_to_json_dict",
    "tau_criterion",
    "transform_point",
    "translation",
    "type_index_sets",
    "validate_point",
]
