"""
Bounded homeomorphism search.

Two complexes are homeomorphic when each is a continuous image of a
Barycentric refinement of the other, through a surjection f: G_n -> H with

  * for every locally maximal k-simplex x of H, the closure of f⁻¹(x) is a
    k-ball, and
  * for every simplex x of H, f⁻¹(S(x)) is homeomorphic to S(x).

The second condition recurses on unit spheres, whose dimension drops, so
it ends in the complete one-dimensional decision. Witnesses are looked for
in three stages: an isomorphism, a chain of canonical refinement
projections, and finally a depth-first search over monotone surjections
(continuity in the star topology is monotonicity) with the first image
restricted to automorphism-orbit representatives of H.
"""

from typing import Dict, List, Optional, Tuple

import networkx as nx

from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import MapError
from topology_toolkit.graphs.graph import complex_to_graph, skeleton_graph
from topology_toolkit.graphs.refinement import barycentric_refine
from topology_toolkit.hodge.dynamics import SimplexMap, graph_automorphisms, is_continuous, simplex_map_from_vertex_map
from topology_toolkit.homeo.one_dim import one_dim_homeomorphic
from topology_toolkit.homeo.screen import invariant_screen
from topology_toolkit.homeo.verdict import HOMEOMORPHIC, INCONCLUSIVE, NOT_HOMEOMORPHIC, HomeoVerdict
from topology_toolkit.recognition.recognizer import Recognizer, default_recognizer
from topology_toolkit.topology.stars import unit_sphere


class _OutOfBudget(Exception):
    pass


def _same_dim(a: dict, b: dict) -> bool:
    return a['dim'] == b['dim']


def projection(G: SimplicialComplex) -> Tuple[SimplicialComplex, SimplexMap]:
    """
    Barycentric refinement G₁ with the canonical projection G₁ -> G.

    A chain x₀ ⊂ ... ⊂ x_k of simplices of G, which is a simplex of G₁,
    goes to its largest element x_k. The projection is continuous and
    surjective.
    """
    G1 = barycentric_refine(G)
    dims = [x.dim for x in G]
    images = tuple(max(chain, key=lambda i: dims[i]) for chain in G1)
    return G1, SimplexMap(G1, G, images)


def compose(f: SimplexMap, g: SimplexMap) -> SimplexMap:
    """g ∘ f."""
    if f.target != g.source:
        raise MapError("Maps do not compose")
    return SimplexMap(f.source, g.target, tuple(g.images[j] for j in f.images))


def isomorphism(G: SimplicialComplex, H: SimplicialComplex) -> Optional[SimplexMap]:
    """A simplicial isomorphism G -> H, or None."""
    if G == H:
        return SimplexMap(G, H, tuple(range(len(G))))
    if G.f_vector() != H.f_vector():
        return None
    gG, gH = complex_to_graph(G), complex_to_graph(H)
    matcher = nx.algorithms.isomorphism.GraphMatcher(gG, gH, node_match=_same_dim)
    for mapping in matcher.isomorphisms_iter():
        return SimplexMap(G, H, tuple(mapping[i] for i in range(len(G))))
    return None


def preimage(f: SimplexMap, A: SimplexSet) -> SimplexSet:
    bits = 0
    for i, j in enumerate(f.images):
        if (A.bits >> j) & 1:
            bits |= 1 << i
    return SimplexSet(f.source, bits)


class HomeomorphismChecker:
    """
    Homeomorphism front door: invariant screen, then the complete decision
    in dimension at most one, then the bounded witness search.

    Parameters
    ----------
    config : ToolkitConfig, optional
        ``homeo`` section: ``max_refinements``, ``node_budget``,
        ``isomorphism_bound`` and ``one_direction_check``.
    recognizer : Recognizer, optional
        Used for the ball condition and the manifold screen.
    verbose : bool, default False
    one_direction_check : bool, optional
        Overrides ``config.homeo['one_direction_check']``.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph, whitney_complex
    >>> checker = HomeomorphismChecker()
    >>> checker.homeomorphic(whitney_complex(cycle_graph(5)), whitney_complex(cycle_graph(6))).result
    'homeomorphic'
    """

    def __init__(
        self,
        config: Optional[ToolkitConfig] = None,
        recognizer: Optional[Recognizer] = None,
        verbose: bool = False,
        one_direction_check: Optional[bool] = None,
    ):
        self.config = resolve_config(config)
        self.recognizer = recognizer or default_recognizer()
        self.verbose = verbose
        if one_direction_check is None:
            one_direction_check = bool(self.config.homeo.get('one_direction_check', False))
        self.one_direction_check = one_direction_check
        self.nodes_used = 0

    def _log(self, level: str, message: str) -> None:
        if self.verbose:
            print(f"[{level}] {message}")

    # -- front door ---------------------------------------------------------

    def homeomorphic(self, G: SimplicialComplex, H: SimplicialComplex) -> HomeoVerdict:
        screened = invariant_screen(G, H, self.config, self.recognizer)
        if screened is not None:
            self._log('INFO', f"Screen: {screened.certificate['invariant']} differs")
            verdict = screened
        elif G.dim <= 1:
            verdict = one_dim_homeomorphic(G, H)
        else:
            return self.bounded_search(G, H)
        if verdict.result == HOMEOMORPHIC:
            verdict.one_direction_sufficed = True
        elif verdict.result == NOT_HOMEOMORPHIC and self.one_direction_check:
            verdict.one_direction_sufficed = self.one_sided_search(G, H)
        return verdict

    def one_sided_search(self, G: SimplicialComplex, H: SimplicialComplex) -> Optional[bool]:
        """
        Look for a witness G_n -> H or H_m -> G on a pair known to be
        non-homeomorphic.

        Returns
        -------
        bool or None
            False if some direction has a witness, True if neither has one
            within the bounds, None if the node budget ran out first.
        """
        self.nodes_used = 0
        exhausted = False
        for A, B in ((G, H), (H, G)):
            f, method, out = self.find_witness(A, B)
            if f is not None:
                self._log('INFO', f"One-sided {method} witness on a separated pair")
                return False
            exhausted = exhausted or out
        return None if exhausted else True

    # -- witnesses ----------------------------------------------------------

    def is_witness(self, f: SimplexMap) -> bool:
        """Continuity, surjectivity, the ball condition and the sphere condition."""
        Gn, H = f.source, f.target
        if not is_continuous(f, Gn, H):
            return False
        if len(set(f.images)) != len(H):
            return False
        for x in H.facets():
            cell = preimage(f, H.subset([x])).closure().to_complex()
            if self.recognizer.is_ball(cell) != x.dim:
                return False
        nested = HomeomorphismChecker(self.config, self.recognizer, self.verbose, one_direction_check=False)
        for x in H:
            S = unit_sphere(H, x)
            pre = preimage(f, S).to_complex()
            sphere = S.to_complex()
            if nested.homeomorphic(pre, sphere).result != HOMEOMORPHIC:
                return False
        return True

    def _refinements(self, G: SimplicialComplex) -> List[Tuple[SimplicialComplex, SimplexMap]]:
        """[(G_n, G_n -> G)] for n = 0 .. max_refinements."""
        out = [(G, SimplexMap(G, G, tuple(range(len(G)))))]
        bound = self.config.homeo['isomorphism_bound']
        for _ in range(self.config.homeo['max_refinements']):
            current, to_base = out[-1]
            if len(current) > bound:
                break
            finer, step = projection(current)
            out.append((finer, compose(step, to_base)))
        return out

    def _chain_witness(
        self,
        G_chain: List[Tuple[SimplicialComplex, SimplexMap]],
        H_chain: List[Tuple[SimplicialComplex, SimplexMap]],
    ) -> Tuple[Optional[SimplexMap], Optional[str]]:
        """
        A map G_n -> H through G_n ≅ H_k followed by the projection H_k -> H,
        for n = 0 or k = 0.
        """
        bound = self.config.homeo['isomorphism_bound']
        pairs = [(n, 0) for n in range(len(G_chain))] + [(0, k) for k in range(1, len(H_chain))]
        for n, k in pairs:
            Gn, _ = G_chain[n]
            Hk, to_H = H_chain[k]
            if len(Gn) != len(Hk) or len(Gn) > bound:
                continue
            iso = isomorphism(Gn, Hk)
            if iso is None:
                continue
            f = compose(iso, to_H)
            method = 'isomorphism' if k == 0 else 'projection'
            if method == 'isomorphism' or self.is_witness(f):
                self._log('DEBUG', f"{method} witness from refinement {n} onto refinement {k}")
                return f, method
        return None, None

    def _orbit_representatives(self, H: SimplicialComplex) -> List[int]:
        if len(H) > self.config.homeo['isomorphism_bound']:
            return list(range(len(H)))
        seen = set()
        reps = []
        autos = []
        for phi in graph_automorphisms(skeleton_graph(H)):
            try:
                autos.append(simplex_map_from_vertex_map(H, H, phi))
            except MapError:
                continue
        for j in range(len(H)):
            if j in seen:
                continue
            reps.append(j)
            seen.update(a.images[j] for a in autos)
            seen.add(j)
        return reps

    def _search_maps(self, Gn: SimplicialComplex, H: SimplicialComplex) -> Optional[SimplexMap]:
        """Depth-first search over monotone surjections Gn -> H."""
        n, target = len(Gn), len(H)
        if n < target:
            return None
        budget = self.config.homeo['node_budget']
        star_bits = H.star_bits
        faces = [
            [Gn._index[y] for y in x.boundary_faces()] if len(x) > 1 else []
            for x in Gn
        ]
        first = self._orbit_representatives(H)
        images: List[int] = []
        counts: Dict[int, int] = {}

        def covered_gap(position: int) -> bool:
            return target - len(counts) > n - position

        def extend(position: int) -> Optional[SimplexMap]:
            self.nodes_used += 1
            if self.nodes_used > budget:
                raise _OutOfBudget
            if position == n:
                f = SimplexMap(Gn, H, tuple(images))
                return f if self.is_witness(f) else None
            allowed = (1 << target) - 1
            for z in faces[position]:
                allowed &= star_bits[images[z]]
            candidates = first if position == 0 else range(target)
            for j in candidates:
                if not (allowed >> j) & 1:
                    continue
                images.append(j)
                counts[j] = counts.get(j, 0) + 1
                if not covered_gap(position + 1):
                    found = extend(position + 1)
                    if found is not None:
                        return found
                images.pop()
                counts[j] -= 1
                if not counts[j]:
                    del counts[j]
            return None

        return extend(0)

    def find_witness(
        self, G: SimplicialComplex, H: SimplicialComplex
    ) -> Tuple[Optional[SimplexMap], Optional[str], bool]:
        """
        A witness G_n -> H, the method that found it, and whether the node
        budget ran out.
        """
        G_chain = self._refinements(G)
        H_chain = self._refinements(H)
        f, method = self._chain_witness(G_chain, H_chain)
        if f is not None:
            return f, method, False
        for Gn, _ in G_chain:
            if len(Gn) > self.config.homeo['isomorphism_bound']:
                break
            try:
                f = self._search_maps(Gn, H)
            except _OutOfBudget:
                self._log('WARNING', f"Node budget of {self.config.homeo['node_budget']:,} exhausted")
                return None, None, True
            if f is not None:
                return f, 'search', False
        return None, None, False

    def bounded_search(self, G: SimplicialComplex, H: SimplicialComplex) -> HomeoVerdict:
        """
        Witnesses in both directions give ``homeomorphic``; anything short
        of that is ``inconclusive``. 0-dimensional pairs are decided by
        cardinality.
        """
        if G.dim <= 0 and H.dim <= 0:
            return one_dim_homeomorphic(G, H)
        self.nodes_used = 0
        forward, forward_method, forward_out = self.find_witness(G, H)
        backward, backward_method, backward_out = self.find_witness(H, G)
        bounds = {
            'max_refinements': self.config.homeo['max_refinements'],
            'node_budget': self.config.homeo['node_budget'],
            'nodes_used': self.nodes_used,
        }
        if forward is not None and backward is not None:
            return HomeoVerdict(
                HOMEOMORPHIC,
                certificate={'forward': forward_method, 'backward': backward_method},
                forward_witness=forward,
                backward_witness=backward,
                bounds=bounds,
                one_direction_sufficed=True,
            )
        certificate = dict(bounds)
        certificate['budget_exhausted'] = forward_out or backward_out
        return HomeoVerdict(
            INCONCLUSIVE,
            certificate=certificate,
            forward_witness=forward,
            backward_witness=backward,
            bounds=bounds,
        )


def bounded_search(
    G: SimplicialComplex,
    H: SimplicialComplex,
    max_refinements: Optional[int] = None,
    budget: Optional[int] = None,
    config: Optional[ToolkitConfig] = None,
) -> HomeoVerdict:
    """Bounded witness search with optional overrides of the config bounds."""
    overrides = {}
    if max_refinements is not None:
        overrides['max_refinements'] = max_refinements
    if budget is not None:
        overrides['node_budget'] = budget
    config = resolve_config(config)
    if overrides:
        config = config.merge({'homeo': overrides})
    return HomeomorphismChecker(config).bounded_search(G, H)


def homeomorphic(
    G: SimplicialComplex,
    H: SimplicialComplex,
    config: Optional[ToolkitConfig] = None,
) -> HomeoVerdict:
    """
    Screen, then decide in dimension at most one, then search.

    Examples
    --------
    >>> from topology_toolkit.graphs import star_graph, whitney_complex
    >>> homeomorphic(whitney_complex(star_graph(3)), whitney_complex(star_graph(4))).result
    'not_homeomorphic'
    """
    return HomeomorphismChecker(config).homeomorphic(G, H)
