"""twominor: exact treewidth, minor models, and clique-versus-treewidth experiments.

Everything is exact and desk-scale: operations either return provably correct
answers or raise ResourceLimitError past their documented caps.
"""

from .boundedness import (
    BindingProfile,
    Polynomial,
    check_profile_bounded,
    compose_h,
    empirical_binding_profile,
    nondecreasing_majorant,
    profile_to_csv,
)
from .errors import FormatError, ModelValidationError, ResourceLimitError
from .experiments import (
    ExperimentReport,
    derive_seed,
    obs7_experiment,
    run_theorem5_suite,
    theorem5_pipeline,
    theorem5_standard_instances,
    verify_lemma4,
)
from .graphs import (
    Graph,
    clique_number,
    complete_bipartite,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    empty_graph,
    independence_number,
    is_claw_free,
    line_graph,
    path_graph,
    subdivide_once,
    wall,
)
from .io import (
    edgelist_decode,
    edgelist_encode,
    graph6_decode,
    graph6_encode,
    to_dot,
)
from .minors import (
    InducedMinorModel,
    MinorModel,
    compose_models,
    find_induced_minor_model,
    find_minor_model,
    identity_model,
    lsg_canonical_model,
    minimize_minor_model,
    model_from_text,
    model_to_text,
    restrict_model,
    shrink_connected_cover,
    subdivision_model,
    validate_model,
)
from .treewidth import (
    TreeDecomposition,
    contains_wall_subdivision,
    decomposition_from_pace,
    decomposition_to_pace,
    exact_treewidth,
    validate_decomposition,
)

__all__ = [
    "BindingProfile",
    "ExperimentReport",
    "FormatError",
    "Graph",
    "InducedMinorModel",
    "MinorModel",
    "ModelValidationError",
    "Polynomial",
    "ResourceLimitError",
    "TreeDecomposition",
    "check_profile_bounded",
    "clique_number",
    "complete_bipartite",
    "complete_graph",
    "compose_h",
    "compose_models",
    "connected_components",
    "contains_wall_subdivision",
    "contract_edge",
    "cycle_graph",
    "decomposition_from_pace",
    "decomposition_to_pace",
    "derive_seed",
    "edgelist_decode",
    "edgelist_encode",
    "empirical_binding_profile",
    "empty_graph",
    "exact_treewidth",
    "find_induced_minor_model",
    "find_minor_model",
    "graph6_decode",
    "graph6_encode",
    "identity_model",
    "independence_number",
    "is_claw_free",
    "line_graph",
    "lsg_canonical_model",
    "minimize_minor_model",
    "model_from_text",
    "model_to_text",
    "nondecreasing_majorant",
    "obs7_experiment",
    "path_graph",
    "profile_to_csv",
    "restrict_model",
    "run_theorem5_suite",
    "shrink_connected_cover",
    "subdivide_once",
    "subdivision_model",
    "theorem5_pipeline",
    "theorem5_standard_instances",
    "to_dot",
    "validate_decomposition",
    "validate_model",
    "verify_lemma4",
    "wall",
]
