"""Outerplane induced subgraphs of 2-outerplane graphs with at least 2n/3 vertices."""

from .augment import augment
from .errors import InternalProofViolation
from .instances import GenConfig, counterexample, gen_random, named
from .plane_graph import PlaneGraph, check_two_outerplane, induced_outer_vertices, layers, parse, serialize
from .solver import dispatch, good_set
from .verify import brute_max_outerplane, brute_max_outerplanar_containing, check_good, is_outerplanar_abstract

__all__ = [
    "GenConfig",
    "InternalProofViolation",
    "PlaneGraph",
    "augment",
    "brute_max_outerplanar_containing",
    "brute_max_outerplane",
    "check_good",
    "check_two_outerplane",
    "counterexample",
    "dispatch",
    "gen_random",
    "good_set",
    "induced_outer_vertices",
    "is_outerplanar_abstract",
    "layers",
    "named",
    "parse",
    "serialize",
]
