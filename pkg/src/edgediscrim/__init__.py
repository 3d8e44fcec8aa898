"""Minimum-weight edge-discriminating labelings on finite hypergraphs.

A labeling of the vertices by non-negative integers discriminates the edges
when every edge has positive total weight and no two edges share one.  The
package constructs such labelings greedily, finds minimum-weight ones
exactly at desk scale, computes the elementary weight bounds, censuses
which optimal weights are attainable for a given edge count, and solves the
geometric variant for interval and rectangle families.
"""

from .analysis import (
    BoundsReport,
    CensusReport,
    ConjectureScan,
    bounds,
    census,
    conjecture_scan,
    enumerate_reduced,
    greedy_hitting_set,
    max_matching,
    min_hitting_set,
)
from .construct import (
    ConstructionState,
    Ordering,
    construction_trace,
    differentiating_vertex,
    greedy_labeling,
    greedy_weight_bound,
    hitting_set_labeling,
)
from .core import (
    FormatError,
    Hypergraph,
    HypergraphError,
    Labeling,
    ReducedHypergraph,
    Verdict,
    class_labeling,
    edge_weight,
    parse_hypergraph,
    parse_labeling,
    reduce_hypergraph,
    serialize_hypergraph,
    serialize_labeling,
    total_weight,
    validate_discriminator,
)
from .families import (
    complete_bipartite_weight,
    complete_r_partite,
    complete_uniform,
    cycle,
    disjoint_edges,
    nested_chain,
    path,
    path_end_two,
    power_set,
    star,
)
from .geometry import (
    Cell,
    Interval,
    PointPlacement,
    Rect,
    arrangement_cells,
    count_points_in_regions,
    geometric_discriminator,
    geometric_hypergraph,
    parse_regions,
)
from .sidon import (
    BhSet,
    complete_uniform_lower_bound,
    greedy_bh,
    sidon_labeling,
    uniformity,
    verify_bh,
)
from .solver import (
    SearchLimitError,
    SolveResult,
    exact_optimal,
    exists_with_weight,
    reduced_lower_bound,
    solve_reduced,
)

__version__ = "0.1.0"
