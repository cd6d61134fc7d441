"""Strong metric dimension of graphs and of lexicographic products."""
from ._kernels import BACKEND
from .boundary import (
    MmdReport,
    is_maximally_distant,
    mmd_report,
    star_minus,
    star_transform,
    strong_resolving_graph,
    strong_resolving_tf_graph,
    tf_boundary,
)
from .constructions import (
    FamilySpec,
    ProductVertex,
    cartesian_product,
    corona,
    generate_family,
    join,
    lexicographic_product,
)
from .cover import CoverResult, clique_number, independence_number, vertex_cover
from .graph import (
    INFINITY,
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    are_true_twins,
    build_graph,
    complement,
    disjoint_union,
    induced_subgraph,
    is_isomorphic,
    remove_isolated,
)
from .io import encode_graph6, parse_graph6, parse_graph_spec, write_dot
from .smd import (
    PreconditionError,
    SizeLimitError,
    TheoremReport,
    formula_bounded_degree,
    formula_first_complete,
    formula_no_true_twins,
    formula_second_complete,
    formula_twin_free_H,
    is_strong_generator,
    route_and_evaluate,
    smd_bruteforce,
    smd_via_sr,
    strongly_resolves,
)

__version__ = "0.1.0"
