"""Generalized Huffman trees, majorization, and verification of Wiener minimality."""

from .brute_force import (
    MAX_BRUTE_FORCE_ORDER,
    brute_force_minimum,
    check_huffman_optimality,
    degree_shift_minima,
    trees_with_degrees,
)
from .directed import is_proper, subordinate_weights, vwwi_directed
from .huffman import (
    GeneratingTuple,
    HuffmanStep,
    HuffmanTrace,
    extremal_tuple,
    extremal_tuples,
    generalized_huffman,
    huffman_trees,
    is_degree_monotone,
)
from .majorization import MajorizationVerdict, weak_majorize
from .properties import (
    Counterexample,
    PropertyReport,
    check_directed_identity,
    lemma_property_suite,
    random_generating_tuple,
    trial_generator,
)

__all__ = [
    "MAX_BRUTE_FORCE_ORDER",
    "Counterexample",
    "GeneratingTuple",
    "HuffmanStep",
    "HuffmanTrace",
    "MajorizationVerdict",
    "PropertyReport",
    "brute_force_minimum",
    "check_directed_identity",
    "check_huffman_optimality",
    "degree_shift_minima",
    "extremal_tuple",
    "extremal_tuples",
    "generalized_huffman",
    "huffman_trees",
    "is_degree_monotone",
    "is_proper",
    "lemma_property_suite",
    "random_generating_tuple",
    "subordinate_weights",
    "trees_with_degrees",
    "trial_generator",
    "vwwi_directed",
    "weak_majorize",
]
