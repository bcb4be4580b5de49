"""
Invariant screen: cheap topological invariants compared in order, the first
difference decides "not homeomorphic".
"""

from typing import Any, Callable, List, Optional, Tuple

from topology_toolkit.characteristics.wu import wu
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import BudgetExceededError
from topology_toolkit.hodge.exterior import betti
from topology_toolkit.hodge.interaction import wu_betti
from topology_toolkit.homeo.verdict import NOT_HOMEOMORPHIC, HomeoVerdict
from topology_toolkit.recognition.recognizer import Recognizer, default_recognizer
from topology_toolkit.topology.properties import connected_components
from topology_toolkit.topology.stars import unit_sphere


def sphere_fingerprint(G: SimplicialComplex) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """
    Sorted set of (dim, χ, betti) over the unit spheres S(x).

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> sphere_fingerprint(closure([[1, 2]]))
    [(0, 1, (1,)), (0, 2, (2,))]
    """
    seen = set()
    for x in G:
        S = unit_sphere(G, x).to_complex()
        seen.add((S.dim, S.euler(), tuple(betti(S))))
    return sorted(seen)


def _checks(
    config: ToolkitConfig, recognizer: Recognizer, both_small: bool
) -> List[Tuple[str, Callable[[SimplicialComplex], Any]]]:
    checks = [
        ('dimension', lambda G: G.dim),
        ('components', lambda G: len(connected_components(G))),
        ('euler', lambda G: G.euler()),
        ('wu', lambda G: wu(G, 2, config)),
        ('betti', lambda G: betti(G)),
        ('manifold', recognizer.is_manifold),
    ]
    if both_small:
        checks.append(('wu_betti', lambda G: wu_betti(G, config=config)))
    checks.append(('sphere_fingerprint', sphere_fingerprint))
    return checks


def invariant_screen(
    G: SimplicialComplex,
    H: SimplicialComplex,
    config: Optional[ToolkitConfig] = None,
    recognizer: Optional[Recognizer] = None,
) -> Optional[HomeoVerdict]:
    """
    Compare topological invariants of ``G`` and ``H``.

    Returns
    -------
    HomeoVerdict or None
        A ``not_homeomorphic`` verdict naming the first differing invariant,
        or None when every invariant agrees.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph, path_graph, whitney_complex
    >>> invariant_screen(whitney_complex(cycle_graph(5)), whitney_complex(path_graph(4))).certificate
    {'invariant': 'euler', 'left': 0, 'right': 1}
    """
    config = resolve_config(config)
    recognizer = recognizer or default_recognizer()
    bound = config.homeo['wu_betti_bound']
    both_small = len(G) <= bound and len(H) <= bound
    for name, compute in _checks(config, recognizer, both_small):
        try:
            left, right = compute(G), compute(H)
        except BudgetExceededError:
            continue
        if left != right:
            return HomeoVerdict(
                NOT_HOMEOMORPHIC,
                certificate={'invariant': name, 'left': left, 'right': right},
            )
    return None
