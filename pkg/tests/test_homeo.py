"""
Tests for the invariant screen, the one-dimensional decision and the
bounded witness search.
"""

import pytest

from topology_toolkit.complexes import closure, point, sphere_zero
from topology_toolkit.config import ToolkitConfig
from topology_toolkit.errors import InvalidComplexError, MapError
from topology_toolkit.graphs import (
    barycentric_refine,
    complete_graph,
    cycle_graph,
    path_graph,
    skeleton_graph,
    star_graph,
    whitney_complex,
)
from topology_toolkit.hodge import SimplexMap, is_continuous
from topology_toolkit.homeo import (
    HOMEOMORPHIC,
    INCONCLUSIVE,
    NOT_HOMEOMORPHIC,
    HomeoVerdict,
    HomeomorphismChecker,
    bounded_search,
    compose,
    homeomorphic,
    invariant_screen,
    isomorphism,
    one_dim_homeomorphic,
    preimage,
    projection,
    smooth_degree_two,
    sphere_fingerprint,
)
from topology_toolkit.io import ComplexFactory


def W(g):
    return whitney_complex(g)


@pytest.fixture
def k3():
    return W(complete_graph(3))


@pytest.fixture
def no_interaction_screen():
    return ToolkitConfig().merge({'homeo': {'wu_betti_bound': 0}})


# =====================================================================
# Invariant screen
# =====================================================================

class TestInvariantScreen:
    """Test suite for invariant_screen."""

    def test_circles_pass(self):
        """Test that two cycles agree on every invariant."""
        assert invariant_screen(W(cycle_graph(5)), W(cycle_graph(6))) is None

    def test_euler_decides_circle_and_path(self):
        """Test the certificate of C5 against P5."""
        verdict = invariant_screen(W(cycle_graph(5)), W(path_graph(5)))
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.certificate == {'invariant': 'euler', 'left': 0, 'right': 1}

    def test_wu_decides_star_graphs(self):
        """Test that S3 and S4 share χ but not ω."""
        verdict = invariant_screen(W(star_graph(3)), W(star_graph(4)))
        assert verdict.certificate == {'invariant': 'wu', 'left': 1, 'right': 5}

    def test_wu_decides_figure_eights(self):
        """Test the two figure-eight complexes."""
        verdict = invariant_screen(ComplexFactory.create('figure8'), ComplexFactory.create('digital8'))
        assert verdict.certificate['invariant'] == 'wu'
        assert (verdict.certificate['left'], verdict.certificate['right']) == (7, 5)

    def test_dimension_first(self, k3):
        """Test that dimension is compared before anything else."""
        verdict = invariant_screen(k3, W(cycle_graph(4)))
        assert verdict.certificate['invariant'] == 'dimension'

    def test_components(self):
        """Test two points against one."""
        verdict = invariant_screen(sphere_zero(), point())
        assert verdict.certificate == {'invariant': 'components', 'left': 2, 'right': 1}

    def test_interaction_cohomology_decides_moebius(self):
        """Test that the Möbius strip and the cylinder differ only in interaction Betti numbers."""
        verdict = invariant_screen(ComplexFactory.create('moebius'), ComplexFactory.create('cylinder'))
        assert verdict.certificate == {
            'invariant': 'wu_betti',
            'left': [0, 0, 0, 0, 0],
            'right': [0, 0, 1, 1, 0],
        }

    def test_interaction_cohomology_can_be_skipped(self, no_interaction_screen):
        """Test that wu_betti_bound switches the interaction screen off."""
        verdict = invariant_screen(
            ComplexFactory.create('moebius'),
            ComplexFactory.create('cylinder'),
            config=no_interaction_screen,
        )
        assert verdict is None or verdict.certificate['invariant'] != 'wu_betti'

    def test_sphere_fingerprint(self):
        """Test the unit-sphere fingerprint of an edge."""
        assert sphere_fingerprint(closure([[1, 2]])) == [(0, 1, (1,)), (0, 2, (2,))]

    def test_fingerprint_of_circle(self):
        """Test that every unit sphere of a cycle is a pair of points."""
        assert sphere_fingerprint(W(cycle_graph(7))) == [(0, 2, (2,))]


# =====================================================================
# Dimension at most one
# =====================================================================

class TestOneDimensional:
    """Test suite for the complete decision on graphs."""

    def test_smooth_path(self):
        """Test that a path smooths to a single edge."""
        m, cycles = smooth_degree_two(path_graph(7))
        assert (m.number_of_nodes(), m.number_of_edges(), cycles) == (2, 1, 0)

    def test_smooth_figure_eight(self):
        """Test that the figure eight smooths to one vertex with two loops."""
        m, cycles = smooth_degree_two(skeleton_graph(ComplexFactory.create('figure8')))
        assert cycles == 0
        assert m.number_of_nodes() == 1
        assert m.number_of_edges() == 2

    def test_cycles_of_different_length(self):
        """Test C5 ≅ C6."""
        verdict = one_dim_homeomorphic(W(cycle_graph(5)), W(cycle_graph(6)))
        assert verdict.result == HOMEOMORPHIC
        assert verdict.certificate['method'] == 'normal_form'
        assert verdict.certificate['cycles'] == 1

    def test_subdivided_star(self):
        """Test that subdividing the rays of a star keeps its topology."""
        long_star = closure([[0, 1], [1, 4], [0, 2], [2, 5], [0, 3], [3, 6]])
        assert one_dim_homeomorphic(W(star_graph(3)), long_star).result == HOMEOMORPHIC

    def test_eights_differ_in_normal_form(self):
        """Test a wedge of circles against a theta graph."""
        verdict = one_dim_homeomorphic(ComplexFactory.create('figure8'), ComplexFactory.create('digital8'))
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.certificate == {'invariant': 'normal_form', 'left': [1, 2], 'right': [2, 3]}

    def test_cycle_components(self):
        """Test two circles against one."""
        two = closure([[1, 2], [2, 3], [3, 4], [1, 4], [5, 6], [6, 7], [7, 8], [5, 8]])
        verdict = one_dim_homeomorphic(two, W(cycle_graph(4)))
        assert verdict.certificate == {'invariant': 'cycle_components', 'left': 2, 'right': 1}

    def test_points(self):
        """Test that 0-dimensional complexes compare by cardinality."""
        assert one_dim_homeomorphic(sphere_zero(), closure([[5], [9]])).result == HOMEOMORPHIC
        verdict = one_dim_homeomorphic(point(), sphere_zero())
        assert verdict.certificate == {'invariant': 'cardinality', 'left': 1, 'right': 2}

    def test_dimension_mismatch(self, k3):
        """Test that mixed or high dimensions are refused."""
        with pytest.raises(InvalidComplexError, match="equal dimension"):
            one_dim_homeomorphic(point(), W(cycle_graph(4)))
        with pytest.raises(InvalidComplexError):
            one_dim_homeomorphic(k3, k3)


# =====================================================================
# Maps and witnesses
# =====================================================================

class TestWitnessMaps:
    """Test suite for projections, compositions and isomorphisms."""

    def test_projection_is_continuous_surjection(self, k3):
        """Test the canonical map G_1 -> G."""
        G1, p = projection(k3)
        assert len(G1) == 25
        assert is_continuous(p, G1, k3)
        assert set(p.images) == set(range(len(k3)))

    def test_compose(self, k3):
        """Test that projections compose along the refinement chain."""
        G1, p1 = projection(k3)
        G2, p2 = projection(G1)
        q = compose(p2, p1)
        assert q.source == G2
        assert q.target == k3
        assert is_continuous(q, G2, k3)

    def test_compose_mismatch(self, k3):
        """Test that maps must meet in the middle."""
        _, p = projection(k3)
        with pytest.raises(MapError, match="do not compose"):
            compose(p, p)

    def test_isomorphism_of_relabelled_copy(self):
        """Test that relabelled cycles are isomorphic."""
        f = isomorphism(W(cycle_graph(4)), closure([[5, 6], [6, 7], [7, 8], [5, 8]]))
        assert f is not None
        assert len(set(f.images)) == 8

    def test_no_isomorphism(self):
        """Test that a path and a star are not isomorphic."""
        assert isomorphism(W(path_graph(4)), W(star_graph(3))) is None

    def test_preimage(self, k3):
        """Test the preimage of the top simplex under the projection."""
        G1, p = projection(k3)
        top = k3.subset([[1, 2, 3]])
        assert len(preimage(p, top)) == 1 + 6 + 6

    def test_projection_is_a_witness(self, k3, no_interaction_screen):
        """Test the ball and sphere conditions for G_1 -> G."""
        _, p = projection(k3)
        assert HomeomorphismChecker(no_interaction_screen).is_witness(p)

    def test_non_surjective_map_is_not_a_witness(self, k3):
        """Test that an isomorphism onto a larger complex fails surjectivity."""
        edge = closure([[1, 2]])
        f = SimplexMap(edge, k3, (0, 1, 3))
        assert not HomeomorphismChecker().is_witness(f)


# =====================================================================
# Front door and bounded search
# =====================================================================

class TestHomeomorphic:
    """Test suite for homeomorphic and bounded_search."""

    def test_triangle_and_its_refinement(self, k3, no_interaction_screen):
        """Test K3 ≅ K3_1 with witnesses in both directions."""
        verdict = homeomorphic(k3, barycentric_refine(k3), config=no_interaction_screen)
        assert verdict.result == HOMEOMORPHIC
        assert verdict.certificate == {'forward': 'isomorphism', 'backward': 'projection'}
        assert verdict.forward_witness is not None
        assert verdict.backward_witness.target == k3
        assert verdict.one_direction_sufficed is True

    def test_identical_complexes(self, k3):
        """Test that equal complexes are decided by the identity."""
        verdict = bounded_search(k3, k3)
        assert verdict.result == HOMEOMORPHIC
        assert verdict.certificate == {'forward': 'isomorphism', 'backward': 'isomorphism'}

    def test_budget_exhausted(self, k3):
        """Test that a tiny node budget gives an inconclusive verdict."""
        verdict = bounded_search(k3, ComplexFactory.create('octahedron'), max_refinements=0, budget=10)
        assert verdict.result == INCONCLUSIVE
        assert verdict.certificate['budget_exhausted'] is True
        assert verdict.bounds['max_refinements'] == 0
        assert verdict.bounds['node_budget'] == 10
        assert not verdict.is_decided

    def test_points_skip_the_search(self):
        """Test that 0-dimensional pairs are decided by cardinality."""
        assert bounded_search(sphere_zero(), sphere_zero()).result == HOMEOMORPHIC

    def test_screen_runs_first(self, capsys):
        """Test that a screened pair never reaches the search."""
        checker = HomeomorphismChecker(verbose=True)
        verdict = checker.homeomorphic(W(star_graph(3)), W(star_graph(4)))
        assert verdict.result == NOT_HOMEOMORPHIC
        assert checker.nodes_used == 0
        assert "[INFO] Screen: wu differs" in capsys.readouterr().out

    def test_one_dimensional_pairs(self):
        """Test that graphs go through the complete decision."""
        assert homeomorphic(W(cycle_graph(5)), W(cycle_graph(6))).result == HOMEOMORPHIC
        assert homeomorphic(W(cycle_graph(5)), W(path_graph(5))).result == NOT_HOMEOMORPHIC

    def test_one_dimensional_decision_sets_one_direction(self):
        """Test that a homeomorphic graph pair reports a single direction as enough."""
        verdict = homeomorphic(W(cycle_graph(5)), W(cycle_graph(6)))
        assert verdict.one_direction_sufficed is True


class TestOneDirectionCheck:
    """Test suite for the one-sided search on separated pairs."""

    @pytest.fixture
    def one_direction(self):
        return ToolkitConfig().merge({'homeo': {'one_direction_check': True}})

    def test_off_by_default(self):
        """Test that a screened verdict leaves the field unknown."""
        verdict = homeomorphic(W(star_graph(3)), W(star_graph(4)))
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.one_direction_sufficed is None

    def test_exhaustive_preset_enables_it(self):
        """Test the preset value and the constructor override."""
        assert HomeomorphismChecker(ToolkitConfig.from_preset('exhaustive')).one_direction_check is True
        assert HomeomorphismChecker(ToolkitConfig.from_preset('quick')).one_direction_check is False
        checker = HomeomorphismChecker(ToolkitConfig.from_preset('exhaustive'), one_direction_check=False)
        assert checker.one_direction_check is False

    def test_no_witness_in_either_direction(self, one_direction, monkeypatch):
        """Test that a separated pair with no one-sided witness reports True."""
        calls = []

        def no_witness(self, A, B):
            calls.append((A, B))
            return None, None, False

        monkeypatch.setattr(HomeomorphismChecker, 'find_witness', no_witness)
        G, H = W(star_graph(3)), W(star_graph(4))
        verdict = homeomorphic(G, H, config=one_direction)
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.one_direction_sufficed is True
        assert calls == [(G, H), (H, G)]

    def test_one_sided_witness(self, one_direction, monkeypatch, capsys):
        """Test that a witness on a separated pair reports False."""
        monkeypatch.setattr(
            HomeomorphismChecker, 'find_witness', lambda self, A, B: (object(), 'projection', False)
        )
        checker = HomeomorphismChecker(one_direction, verbose=True)
        verdict = checker.homeomorphic(W(star_graph(3)), W(star_graph(4)))
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.one_direction_sufficed is False
        assert "[INFO] One-sided projection witness" in capsys.readouterr().out

    def test_budget_runs_out(self, one_direction, monkeypatch):
        """Test that an exhausted search leaves the field unknown."""
        monkeypatch.setattr(
            HomeomorphismChecker, 'find_witness', lambda self, A, B: (None, None, True)
        )
        verdict = homeomorphic(W(star_graph(3)), W(star_graph(4)), config=one_direction)
        assert verdict.result == NOT_HOMEOMORPHIC
        assert verdict.one_direction_sufficed is None

    def test_inconclusive_verdict_leaves_it_unknown(self, k3):
        """Test that a bounded search without both witnesses sets no value."""
        verdict = bounded_search(k3, ComplexFactory.create('octahedron'), max_refinements=0, budget=10)
        assert verdict.result == INCONCLUSIVE
        assert verdict.one_direction_sufficed is None


class TestHomeoVerdict:
    """Test suite for HomeoVerdict."""

    def test_to_dict_with_witnesses(self, k3):
        """Test that witnesses serialize as label maps."""
        verdict = bounded_search(k3, k3)
        d = verdict.to_dict()
        assert d['result'] == HOMEOMORPHIC
        assert d['forward_witness']['1-2-3'] == '1-2-3'
        assert set(d) == {
            'result', 'certificate', 'forward_witness', 'backward_witness',
            'bounds', 'one_direction_sufficed',
        }

    def test_to_dict_without_witnesses(self):
        """Test a screened verdict."""
        d = HomeoVerdict(NOT_HOMEOMORPHIC, {'invariant': 'euler', 'left': 0, 'right': 1}).to_dict()
        assert d['forward_witness'] is None
        assert d['one_direction_sufficed'] is None

    def test_repr(self):
        """Test the short representation."""
        assert repr(HomeoVerdict(INCONCLUSIVE)) == "<HomeoVerdict: inconclusive {}>"
