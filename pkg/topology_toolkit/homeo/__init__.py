from topology_toolkit.homeo.verdict import HOMEOMORPHIC, INCONCLUSIVE, NOT_HOMEOMORPHIC, HomeoVerdict
from topology_toolkit.homeo.screen import invariant_screen, sphere_fingerprint
from topology_toolkit.homeo.one_dim import one_dim_homeomorphic, smooth_degree_two
from topology_toolkit.homeo.search import (
    HomeomorphismChecker,
    bounded_search,
    compose,
    homeomorphic,
    isomorphism,
    preimage,
    projection,
)

__all__ = [
    "HOMEOMORPHIC",
    "INCONCLUSIVE",
    "NOT_HOMEOMORPHIC",
    "HomeoVerdict",
    "invariant_screen",
    "sphere_fingerprint",
    "one_dim_homeomorphic",
    "smooth_degree_two",
    "HomeomorphismChecker",
    "bounded_search",
    "compose",
    "homeomorphic",
    "isomorphism",
    "preimage",
    "projection",
]
