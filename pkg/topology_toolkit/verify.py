"""
Property suites.

Each suite checks exact identities over the named-complex registry and a
family of seeded random Whitney complexes and returns a
``VerificationReport``. Monitored observations that are not theorems are
recorded as warnings and never fail a suite.
"""

from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from topology_toolkit.characteristics.wu import (
    ball_formula_check,
    fermi_characteristic,
    relative_wu_under_refinement,
    star_characteristics,
    wu,
    wu_bruteforce,
    wu_fast,
)
from topology_toolkit.complexes.constructors import closure, double_suspension, sphere_zero, wedge_sum
from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.energy.green import (
    connection_matrix,
    curvature,
    energy_sum,
    green_matrix,
    green_star_identity,
    monitor_ones_positive_definite,
)
from topology_toolkit.errors import BudgetExceededError, TopologyLimitExceeded
from topology_toolkit.graphs.graph import (
    complete_graph,
    cycle_graph,
    skeleton_graph,
    whitney_complex,
)
from topology_toolkit.graphs.refinement import barycentric_refine, edge_refine, refined_f_vector
from topology_toolkit.hodge.dynamics import (
    SimplexMap,
    fixed_simplices,
    graph_endomorphisms,
    index_sum,
    lefschetz_number,
    random_continuous_map,
    simplex_map_from_vertex_map,
)
from topology_toolkit.hodge.exterior import betti, mckean_singer_check, oriented
from topology_toolkit.hodge.interaction import wu_betti
from topology_toolkit.homeo.search import HomeomorphismChecker
from topology_toolkit.homeo.verdict import HOMEOMORPHIC
from topology_toolkit.io.factory import ComplexFactory
from topology_toolkit.random_complexes import SplitMix64, random_whitney_family
from topology_toolkit.recognition.morse import level_set, morse_buildup, morse_classify
from topology_toolkit.recognition.recognizer import Recognizer, default_recognizer
from topology_toolkit.report import VerificationReport
from topology_toolkit.topology.open_sets import TopologyEnumerator
from topology_toolkit.topology.stars import star

# Small members of the parametrised families added to the registry.
FAMILY_SAMPLES = ('cycle:5', 'cycle:6', 'complete:3', 'complete:4', 'star:3', 'path:4', 'wheel:5')


def registry_complexes(max_simplices: Optional[int] = None) -> Dict[str, SimplicialComplex]:
    """Registry complexes and small family members, optionally size-capped."""
    keys = sorted(ComplexFactory.REGISTRY) + list(FAMILY_SAMPLES)
    out = {}
    for key in keys:
        G = ComplexFactory.create(key)
        if max_simplices is None or len(G) <= max_simplices:
            out[key] = G
    return out


def figure_eight_cover(G: SimplicialComplex) -> Tuple[SimplexSet, SimplexSet, SimplexSet]:
    """
    Open cover (U, V, W) of a figure-8 complex.

    V is the open star of the wedge vertex; U and W are the two loops
    without that vertex, each keeping its two open edges at the wedge point.
    """
    g = skeleton_graph(G)
    centre = max(g.nodes, key=lambda v: (g.degree(v), -v))
    rest = g.copy()
    rest.remove_node(centre)
    loops = sorted(nx.connected_components(rest), key=min)
    if len(loops) != 2:
        raise ValueError("figure_eight_cover needs a wedge of two circles")
    V = star(G, (centre,))
    covers = []
    for loop in loops:
        members = [x for x in G if set(x) & loop]
        covers.append(G.subset(members))
    U, W = covers
    return U, V, W


class VerificationRunner:
    """
    Runs the property suites.

    Parameters
    ----------
    config : ToolkitConfig, optional
        ``verify`` section: seed, registry cap, random family sizes and
        sample counts.
    seed : int, optional
        Overrides ``config.verify['seed']``.
    recognizer : Recognizer, optional
    verbose : bool, default False

    Examples
    --------
    >>> runner = VerificationRunner(ToolkitConfig.from_preset('quick'))
    >>> runner.run('energy').all_passed
    True
    """

    def __init__(
        self,
        config: Optional[ToolkitConfig] = None,
        seed: Optional[int] = None,
        recognizer: Optional[Recognizer] = None,
        verbose: bool = False,
    ):
        self.config = resolve_config(config)
        self.settings = self.config.verify
        self.seed = seed if seed is not None else self.settings['seed']
        self.recognizer = recognizer or default_recognizer()
        self.verbose = verbose
        self.suites: Dict[str, Callable[[VerificationReport], None]] = {
            'energy': self._energy,
            'gaussbonnet': self._gaussbonnet,
            'lefschetz': self._lefschetz,
            'valuation': self._valuation,
            'refinement': self._refinement,
            'recognition': self._recognition,
            'morse': self._morse,
        }

    def _log(self, level: str, message: str) -> None:
        if self.verbose:
            print(f"[{level}] {message}")

    def available_suites(self) -> List[str]:
        return list(self.suites)

    def run(self, suite: str) -> VerificationReport:
        """
        Run one suite.

        Raises
        ------
        ValueError
            If the suite name is unknown.
        """
        if suite not in self.suites:
            raise ValueError(
                f"Unknown suite: '{suite}'. Available suites: {', '.join(self.suites)}"
            )
        report = VerificationReport(suite, seed=self.seed)
        self._log('INFO', f"Running suite '{suite}' with seed {self.seed}")
        self.suites[suite](report)
        for check in report.failures:
            self._log('ERROR', f"{check.name} failed: {check.description}")
        for warning in report.warnings:
            self._log('WARNING', warning)
        self._log('INFO', f"{len(report.checks)} checks, {len(report.failures)} failed")
        return report

    # -- inputs -----------------------------------------------------------

    def registry(self) -> Dict[str, SimplicialComplex]:
        return registry_complexes(self.settings['registry_max'])

    def random_family(self) -> Dict[str, SimplicialComplex]:
        family = random_whitney_family(
            self.settings['random_count'],
            self.settings['random_vertices'],
            self.settings['edge_probability'],
            self.settings['max_simplices'],
            seed=self.seed,
        )
        return {f"random:{i}": G for i, G in enumerate(family)}

    def _inputs(self) -> Dict[str, SimplicialComplex]:
        inputs = self.registry()
        inputs.update(self.random_family())
        return inputs

    # -- suites -----------------------------------------------------------

    def _energy(self, report: VerificationReport) -> None:
        det_bound = self.config.energy['det_size_bound']
        tensor_max = self.settings['tensor_max']
        for name, G in self._inputs().items():
            L = connection_matrix(G)
            g1 = green_matrix(G, 1)
            g2 = green_matrix(G, 2)
            chi, wu2 = G.euler(), wu(G, 2, self.config)
            om = np.array(G.omegas, dtype=np.int64)
            report.add_check('green_inverse', f"L g = I on {name}", green_star_identity(G))
            report.add_check(
                'energy_euler', f"sum g1 = chi on {name}", int(g1.entries.sum()) == chi,
                details={'sum': int(g1.entries.sum()), 'euler': chi},
            )
            report.add_check(
                'energy_wu', f"sum g2 = wu2 on {name}", int(g2.entries.sum()) == wu2,
                details={'sum': int(g2.entries.sum()), 'wu2': wu2},
            )
            supertrace = int((om * np.diag(g1.entries)).sum())
            report.add_check(
                'green_supertrace', f"sum w(x) g1(x,x) = chi on {name}", supertrace == chi,
                details={'supertrace': supertrace, 'euler': chi},
            )
            if len(G) <= det_bound:
                fermi = fermi_characteristic(G)
                report.add_check(
                    'fermi_determinant', f"det L = fermi on {name}", L.det() == fermi,
                    details={'det': L.det(), 'fermi': fermi},
                )
            if len(G) <= tensor_max:
                for m in (3, 4):
                    total, oracle = energy_sum(G, m), wu_bruteforce(G, m)
                    report.add_check(
                        f'tensor_energy_{m}', f"sum g{m} = wu{m} on {name}", total == oracle,
                        details={'sum': total, f'wu{m}': oracle},
                    )

    def _gaussbonnet(self, report: VerificationReport) -> None:
        for name, G in self._inputs().items():
            chi = G.euler()
            total = sum(curvature(G, x) for x in G)
            report.add_check(
                'curvature_sum', f"sum of curvatures = chi on {name}", total == chi,
                details={'sum': total, 'euler': chi},
            )
            report.add_check('ball_sphere_formula', f"ball and sphere formulas on {name}", ball_formula_check(G, 2))
            report.add_check(
                'star_formula', f"wu_fast = wu on {name}", wu_fast(G, 2) == wu(G, 2, self.config),
            )
            table = star_characteristics(G, 2)
            if not table.empty and not bool(table['wu_ge_euler'].all()):
                report.warn(f"wu(U(x)) < chi(U(x)) somewhere on {name}")
            if len(G) <= self.settings['tensor_max']:
                observed = monitor_ones_positive_definite(G)
                if not all(observed.values()):
                    report.warn(f"All-ones Green matrix on {name}: {observed}")

    def _lefschetz(self, report: VerificationReport) -> None:
        for label, g in (('C4', cycle_graph(4)), ('K3', complete_graph(3))):
            G = whitney_complex(g)
            O = oriented(G)
            maps = graph_endomorphisms(g)
            agree = 0
            for phi in maps:
                f = simplex_map_from_vertex_map(G, G, phi)
                if lefschetz_number(f, O) == index_sum(f, G):
                    agree += 1
            report.add_check(
                'lefschetz_endomorphisms', f"index sum = Lefschetz number for all maps of {label}",
                agree == len(maps), details={'maps': len(maps), 'agree': agree},
            )
        for name, G in self.registry().items():
            identity = SimplexMap(G, G, tuple(range(len(G))))
            number = lefschetz_number(identity, G)
            report.add_check(
                'lefschetz_identity', f"identity has Lefschetz number chi on {name}",
                number == G.euler(), details={'lefschetz': number, 'euler': G.euler()},
            )
        ball = barycentric_refine(whitney_complex(complete_graph(4)))
        rng = SplitMix64(self.seed)
        samples = self.settings['brouwer_samples']
        fixed_free = 0
        for _ in range(samples):
            if not fixed_simplices(random_continuous_map(ball, rng), ball):
                fixed_free += 1
        report.add_check(
            'brouwer', f"{samples} random self-maps of the refined K4 have a fixed simplex",
            fixed_free == 0, details={'samples': samples, 'without_fixed_simplex': fixed_free},
        )

    def _valuation(self, report: VerificationReport) -> None:
        rng = SplitMix64(self.seed)
        enumerator = TopologyEnumerator(limit=200, config=self.config)
        for name, G in self.registry().items():
            try:
                opens = sorted(enumerator.enumerate(G).opens)
            except TopologyLimitExceeded:
                continue
            failures = 0
            for _ in range(self.settings['samples']):
                A = SimplexSet(G, opens[rng.randrange(len(opens))])
                B = SimplexSet(G, opens[rng.randrange(len(opens))])
                for m in (1, 2, 3):
                    if wu(A | B, m) != wu(A, m) + wu(B, m) - wu(A & B, m):
                        failures += 1
            report.add_check(
                'open_valuation', f"wu is a valuation on open sets of {name}", failures == 0,
                details={'failures': failures},
            )

        octahedron = ComplexFactory.create('octahedron')
        c4 = whitney_complex(cycle_graph(4))
        wedge = wedge_sum(octahedron, 1, c4, 1)
        union = wu(wedge, 2)
        report.add_check(
            'closed_valuation_fails', "wu of octahedron wedge C4 is 3, not 2 + 0 - 1",
            union == 3 and union != wu(octahedron, 2) + wu(c4, 2) - 1,
            details={'wu': union},
        )

        X = ComplexFactory.create('figure8')
        U, V, W = figure_eight_cover(X)
        parts = [wu(U, 2), wu(V, 2), wu(W, 2), wu(U & V, 2), wu(V & W, 2)]
        total = parts[0] + parts[1] + parts[2] - parts[3] - parts[4]
        report.add_check(
            'figure_eight_cover', "1 + 9 + 1 - 2 - 2 = 7 on the figure-8",
            parts == [1, 9, 1, 2, 2] and total == wu(X, 2) == 7 and not (U & W),
            details={'parts': parts, 'total': total},
        )

        K3 = whitney_complex(complete_graph(3))
        Uk = K3.subset([(1, 2, 3), (1, 2)])
        Vk = K3.subset([(1, 2, 3), (1, 3)])
        quadruple = [wu(Uk, 2), wu(Vk, 2), wu(Uk & Vk, 2), wu(Uk | Vk, 2)]
        report.add_check(
            'open_star_quadruple', "wu(U) = wu(V) = 0, wu(W) = 1, wu(U or V) = -1 in K3",
            quadruple == [0, 0, 1, -1], details={'values': quadruple},
        )

        for d, sphere in ((1, c4), (2, octahedron), (3, ComplexFactory.create('threesphere'))):
            v = min(sphere.vertex_set)
            ball = star(sphere, (v,)).complement()
            value = wu(ball, 2)
            report.add_check(
                'ball_wu', f"wu of a {d}-ball is (-1)^{d}", value == (-1) ** d,
                details={'wu': value},
            )

        for name, G in self.registry().items():
            if len(G) > self.settings['max_simplices']:
                continue
            G1 = barycentric_refine(G)
            same = all(wu(G, m, self.config) == wu(G1, m, self.config) for m in (1, 2))
            report.add_check('refinement_invariance', f"wu1, wu2 unchanged by refinement of {name}", same)
            if len(G) <= self.config.homeo['wu_betti_bound']:
                try:
                    numbers = wu_betti(G, config=self.config)
                except BudgetExceededError:
                    continue
                alternating = sum((-1) ** k * b for k, b in enumerate(numbers))
                if alternating != wu(G, 2, self.config):
                    report.warn(f"Alternating sum of wu_betti is {alternating} on {name}")

    def _refinement(self, report: VerificationReport) -> None:
        checker = HomeomorphismChecker(self.config, self.recognizer)
        cap = self.settings['max_simplices']
        for name, G in self._inputs().items():
            if len(G) > cap:
                continue
            G1 = barycentric_refine(G)
            report.add_check(
                'refined_f_vector', f"f-vector transformation on {name}",
                tuple(G1.f_vector()) == refined_f_vector(G.f_vector()),
            )
            report.add_check(
                'refinement_euler', f"chi and dimension preserved on {name}",
                G1.euler() == G.euler() and G1.dim == G.dim,
            )
            report.add_check('refinement_betti', f"betti preserved on {name}", betti(G1) == betti(G))
            report.add_check(
                'refinement_manifold', f"manifold verdict preserved on {name}",
                self.recognizer.is_manifold(G1) == self.recognizer.is_manifold(G),
            )
            times = self.config.hodge['heat_times']
            report.add_check(
                'mckean_singer', f"heat supertrace equals chi on {name}",
                all(mckean_singer_check(G, t, config=self.config) for t in times),
            )
            if not name.startswith('random:') and G.dim <= 2:
                verdict = checker.homeomorphic(G, G1)
                report.add_check(
                    'refinement_homeomorphic', f"{name} is homeomorphic to its refinement",
                    verdict.result == HOMEOMORPHIC, details={'result': verdict.result},
                )
            if G.vertex_set:
                v = min(G.vertex_set)
                before, after = relative_wu_under_refinement(G, closure([[v]]))
                if before != after:
                    report.warn(f"Relative wu with a vertex changed under refinement on {name}: {before} -> {after}")

    def _recognition(self, report: VerificationReport) -> None:
        c4 = whitney_complex(cycle_graph(4))
        octahedron = ComplexFactory.create('octahedron')
        expected = [
            ('empty', closure([]), -1),
            ('S0', sphere_zero(), 0),
            ('C4', c4, 1),
            ('octahedron', octahedron, 2),
            ('double suspension of C4', double_suspension(c4), 3),
        ]
        for label, G, d in expected:
            found = self.recognizer.is_sphere(G)
            report.add_check(
                'sphere_verdict', f"{label} is a {d}-sphere", found == d, details={'found': found},
            )

        g = skeleton_graph(octahedron)
        for _ in range(5):
            a, b = min(g.edges)
            g = edge_refine(g, (a, b))
        refined = whitney_complex(g)
        report.add_check(
            'edge_refined_manifold', "octahedron edge-refined 5 times is a 2-manifold with chi 2",
            self.recognizer.is_manifold(refined) == 2 and refined.euler() == 2,
        )
        before, after = self.recognizer.edge_refine_dehn_sommerville(skeleton_graph(octahedron), (1, 2), 2)
        report.add_check(
            'dehn_sommerville_refinement', "edge refinement keeps the octahedron Dehn-Sommerville",
            before and after,
        )
        registry = self.registry()
        if 'homology3sphere' in registry:
            verdict = self.recognizer.is_manifold(double_suspension(registry['homology3sphere']))
            report.add_check(
                'double_suspension_not_manifold', "double suspension of the homology sphere is no manifold",
                verdict is None, details={'verdict': verdict},
            )

    def _morse(self, report: VerificationReport) -> None:
        rng = SplitMix64(self.seed)
        for name, G in self.registry().items():
            g = skeleton_graph(G)
            if whitney_complex(g) != G:
                continue
            failures = 0
            for _ in range(self.settings['samples']):
                order = sorted(g.nodes)
                rng.shuffle(order)
                f = {v: k for k, v in enumerate(order)}
                if morse_classify(g, f, self.recognizer).index_total != G.euler():
                    failures += 1
            report.add_check(
                'poincare_hopf', f"index sum = chi for random functions on {name}", failures == 0,
                details={'samples': self.settings['samples'], 'failures': failures},
            )
            order = sorted(g.nodes)
            table = morse_buildup(g, {v: k for k, v in enumerate(order)})
            report.add_check(
                'morse_buildup', f"Euler jumps equal the indices on {name}",
                bool((table['jump'] == table['index']).all()),
            )

        octahedron = ComplexFactory.create('octahedron')
        g = skeleton_graph(octahedron)
        bad = 0
        for _ in range(self.settings['level_samples']):
            order = sorted(g.nodes)
            rng.shuffle(order)
            f = {v: k for k, v in enumerate(order)}
            c = rng.randrange(len(order) - 1) + 0.5
            surface = level_set(g, f, c)
            if surface.number_of_nodes() and self.recognizer.is_manifold(whitney_complex(surface)) != 1:
                bad += 1
        report.add_check(
            'level_sets', "level sets of the octahedron are circles or empty", bad == 0,
            details={'samples': self.settings['level_samples'], 'failures': bad},
        )


def run_suite(
    suite: str,
    config: Optional[ToolkitConfig] = None,
    seed: Optional[int] = None,
    verbose: bool = False,
) -> VerificationReport:
    """Run a single property suite with a fresh runner."""
    return VerificationRunner(config, seed=seed, verbose=verbose).run(suite)


SUITES = ('energy', 'gaussbonnet', 'lefschetz', 'valuation', 'refinement', 'recognition', 'morse')
