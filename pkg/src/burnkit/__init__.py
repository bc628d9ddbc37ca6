"""burnkit: a graph-burning toolkit.

Exact burning numbers with witnesses, set burnability, certified
approximation burners (DFS-unfold and four-thirds), growth and spine
computation for trees, path reduction with schedule lifting, leafy
spanning trees for min-degree graphs, and exhaustive desk-scale
verification of the square-root burning bound.
"""

from .approx import (
    ExtractionStep,
    RootedSubtreeIndex,
    SmallDiameter,
    degree4_threshold,
    find_extraction,
    four_thirds_burn,
    leafy_spanning_tree,
    mindeg_burn,
    unfold_burn,
)
from .burning import (
    BurnAssignment,
    BurnCertificate,
    SparkSet,
    burning_number_exact,
    is_set_burnable,
    resolve_center_collisions,
    simulate_classic,
    validate,
)
from .enumeration import (
    TreeEnumeration,
    canonical_key,
    count_trees_prufer,
    decode_prufer,
    enumerate_trees,
    free_tree_counts,
)
from .errors import (
    BurnkitError,
    CapExceededError,
    DisconnectedError,
    DuplicateEdgeError,
    GraphError,
    InternalContradictionError,
    NotATreeError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
)
from .graphs import (
    Graph,
    PathWitness,
    Tree,
    as_tree,
    ball,
    bfs_distances,
    bfs_tree,
    build_graph,
    build_tree,
    diameter_and_longest_path,
    eulerian_unfold,
    path_graph,
    remove_vertices,
    star_graph,
    tree_center,
)
from .growth import GrowthCertificate, growth_of, growth_oracle, is_burning_set
from .reduction import (
    ReductionInstance,
    ReductionTrace,
    build_reduction,
    lift_assignment,
    lift_classic_assignment,
    reduction_applicable,
    search_reduction,
)
from .verify import (
    VerificationReport,
    verify_burning_sets,
    verify_conjecture,
    verify_corollary_bounds,
)

__version__ = "0.1.0"
