from .check import DEFAULT_PATH_CAP, contains_k_anagram, is_k_anagram_free
from .colouring import (
    AnagramWitness,
    ColourMultiset,
    Colouring,
    count_colour_multisets,
    is_k_anagram,
    multiset_count_bound,
    multiset_of_path,
    validate_path,
)
from .graph import (
    Graph,
    complete_tree,
    cycle_graph,
    line_graph,
    path_graph,
    random_tree,
    star_graph,
    tree_parents,
)

__all__ = [
    "AnagramWitness",
    "ColourMultiset",
    "Colouring",
    "DEFAULT_PATH_CAP",
    "Graph",
    "complete_tree",
    "contains_k_anagram",
    "count_colour_multisets",
    "cycle_graph",
    "is_k_anagram",
    "is_k_anagram_free",
    "line_graph",
    "multiset_count_bound",
    "multiset_of_path",
    "path_graph",
    "random_tree",
    "star_graph",
    "tree_parents",
    "validate_path",
]
