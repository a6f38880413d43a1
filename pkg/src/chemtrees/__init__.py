"""chemtrees: topological indices, Huffman trees and extremal alcohol skeletons of chemical trees."""

from chemtrees import enumeration, extremal, huffman, indices, qspr
from chemtrees.config import (
    get_default_dtype,
    get_default_max_degree,
    get_default_tolerance,
    set_default_dtype,
    set_default_max_degree,
    set_default_tolerance,
)
from chemtrees.encoding import TreeSyntaxError, canonical_form, load_tree, parse_parent_array, parse_tree
from chemtrees.trees import ChemicalTree, DirectedTree, PendentRootedTree, VertexWeightedTree

try:
    from ._version import __version__
except ImportError:
    __version__ = "0.0.0"

__all__ = [
    "ChemicalTree",
    "DirectedTree",
    "PendentRootedTree",
    "TreeSyntaxError",
    "VertexWeightedTree",
    "__version__",
    "canonical_form",
    "enumeration",
    "extremal",
    "get_default_dtype",
    "get_default_max_degree",
    "get_default_tolerance",
    "huffman",
    "indices",
    "load_tree",
    "parse_parent_array",
    "parse_tree",
    "qspr",
    "set_default_dtype",
    "set_default_max_degree",
    "set_default_tolerance",
]
