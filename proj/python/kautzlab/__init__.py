"""Kautz, subKautz and cyclic Kautz digraphs."""

import json

from ._core import (
    Digraph,
    Family,
    FamilySpec,
    GuardExceeded,
    NotStronglyConnected,
    UnreachablePair,
    arc_connectivity,
    build,
    diameter,
    diameter_formula,
    distance,
    enumerate_vertices,
    girth,
    girth_lower_bound,
    girth_periodic_search,
    is_valid_vertex,
    labels,
    mean_distance,
    mean_distance_formula,
    moore_bound,
    moore_mean_distance,
    order_formula,
    semigirth,
    shortest_path,
    vertex_connectivity,
)
from . import _core


def spec(family, d, l):
    return FamilySpec(family, d, l)


def analyze(family_spec, checks=()):
    """Verification records for one instance, as dicts."""
    return json.loads(_core.analyze_json(family_spec, list(checks)))


def graph_json(family_spec):
    return json.loads(_core.graph_json(family_spec))
