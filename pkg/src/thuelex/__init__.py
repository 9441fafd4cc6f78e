"""Nonrepetitive (Thue) colorings of graphs and lexicographic products:
graph builders, sequence combinatorics, explicit colorings, a witness-producing
verifier and an exact branch-and-bound solver."""

from .colorings import (
    Coloring,
    LabelSequence,
    LayerColorSets,
    TupleColoring,
    c7_fractional_example,
    color_path_complete,
    color_path_empty,
    color_path_rainbow,
    color_tree_complete,
    is_rich,
    label_layers,
    layer_color_sets,
)
from .errors import NoSuchSequenceError, ResourceLimitError
from .graphs import (
    COMPLETE,
    EMPTY,
    Graph,
    ProductGraph,
    RootedTreeMeta,
    build_complete,
    build_cycle,
    build_empty,
    build_outerplanar_g0,
    build_path,
    build_rooted_tree,
    layer_vertices,
    lex_product,
)
from .sequences import (
    GapProfile,
    SymbolSeq,
    ValleyPattern,
    classify_valley_pattern,
    enumerate_bounded_nonrep,
    find_repetition,
    find_valley,
    gap_profile,
    gen_nonrepetitive,
    is_palindrome_free,
    search_constrained,
)
from .solver import (
    SearchLimits,
    SolveResult,
    brute_oracle,
    exists_coloring,
    exists_tuple_coloring,
    rainbow_exists_coloring,
    rainbow_thue_number,
    thue_number,
)
from .verifier import (
    RepetitionWitness,
    check_path4_trichotomy,
    find_repetitive_path,
    find_tuple_repetitive_path,
    is_rainbow,
    is_walk_nonrepetitive,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLETE",
    "EMPTY",
    "Coloring",
    "GapProfile",
    "Graph",
    "LabelSequence",
    "LayerColorSets",
    "NoSuchSequenceError",
    "ProductGraph",
    "RepetitionWitness",
    "ResourceLimitError",
    "RootedTreeMeta",
    "SearchLimits",
    "SolveResult",
    "SymbolSeq",
    "TupleColoring",
    "ValleyPattern",
    "brute_oracle",
    "build_complete",
    "build_cycle",
    "build_empty",
    "build_outerplanar_g0",
    "build_path",
    "build_rooted_tree",
    "c7_fractional_example",
    "check_path4_trichotomy",
    "classify_valley_pattern",
    "color_path_complete",
    "color_path_empty",
    "color_path_rainbow",
    "color_tree_complete",
    "enumerate_bounded_nonrep",
    "exists_coloring",
    "exists_tuple_coloring",
    "find_repetition",
    "find_repetitive_path",
    "find_tuple_repetitive_path",
    "find_valley",
    "gap_profile",
    "gen_nonrepetitive",
    "is_palindrome_free",
    "is_rainbow",
    "is_rich",
    "is_walk_nonrepetitive",
    "label_layers",
    "layer_color_sets",
    "layer_vertices",
    "lex_product",
    "rainbow_exists_coloring",
    "rainbow_thue_number",
    "search_constrained",
    "thue_number",
]
