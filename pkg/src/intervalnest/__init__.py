"""Interval nest digraphs: nest orderings, certified interval models and pattern catalogs."""

from .construct import build_model, build_model_unchecked, compute_stops
from .digraph import (
    Digraph,
    enumerate_digraphs,
    is_reflexive,
    new_digraph,
    random_digraph,
    symmetric_arcs,
)
from .kernels import BACKEND
from .model import (
    IntervalModel,
    RationalInterval,
    digraph_of,
    extract_ordering,
    is_nest,
    perturb_positive,
    realizes,
    shape_of,
)
from .ordering import (
    Ordering,
    Pattern,
    PatternCatalog,
    adjusted_patterns,
    balanced_patterns,
    catch_patterns,
    check_nest_ordering,
    check_pattern_free,
    chronological_patterns,
    match_pattern,
    nest_patterns,
    point_patterns,
    reflexive_interval_patterns,
)
from .recognize import (
    brute_force_nest_ordering,
    census,
    classify,
    find_separating_example,
    is_interval_nest,
)

__version__ = "0.1.0"
