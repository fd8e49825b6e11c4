"""Interval-valued fuzzy graphs with exact rational arithmetic.

Degrees, order and size, irregularity flags, reciprocal-membership
distances, and decision procedures for isomorphism and isometry.
"""

from .graph import (ComplementError, DegreePair, GraphValidationError, IvfGraph, build_graph,
                    closed_degree, complement, neighbors, open_degree, order, permute,
                    random_graph, size, validate)
from .interval import (ONE, ZERO, IntervalError, IntervalNumber, Ordering, compare, isum,
                       make_interval, rmax, rmin, scale)
from .io import ParseError, format_rational, parse_graph, read_graph, serialize_graph, \
    write_graph
from .irregularity import IrregularityReport, classify, is_irregular, is_totally_irregular
from .metric import (INF, DistancePair, DistanceProfile, brute_force_distance, distance,
                     distance_matrix, distance_profile)
from .morphisms import (IsometryResult, LawReport, MorphismMode, brute_force_isometric_from,
                        find_morphism, is_morphism, isometric_from, isometric_mutual,
                        search_complement_counterexample, verify_relation_laws)

__version__ = "0.1.0"
