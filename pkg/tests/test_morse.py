"""
Tests for Poincaré-Hopf indices, Morse classification and level sets.
"""

import networkx as nx
import pandas as pd
import pytest

from topology_toolkit.complexes.constants import OCTAHEDRON_EDGES
from topology_toolkit.errors import MapError, NotLocallyInjectiveError
from topology_toolkit.graphs import (
    barycentric_refine,
    complete_graph,
    cycle_graph,
    make_graph,
    skeleton_graph,
    star_graph,
    whitney_complex,
)
from topology_toolkit.io import ComplexFactory
from topology_toolkit.random_complexes import SplitMix64
from topology_toolkit.recognition import (
    CRITICAL,
    IRREGULAR,
    REGULAR,
    check_locally_injective,
    is_manifold,
    level_set,
    lower_sphere,
    morse_buildup,
    morse_classify,
    morse_lift,
    poincare_hopf_index,
)


@pytest.fixture
def octahedron_graph():
    return make_graph(edges=OCTAHEDRON_EDGES)


def _random_values(g: nx.Graph, seed: int) -> dict:
    values = list(range(g.number_of_nodes()))
    SplitMix64(seed).shuffle(values)
    return dict(zip(sorted(g.nodes), values))


# =====================================================================
# Poincaré-Hopf
# =====================================================================

class TestPoincareHopf:
    """Test suite for indices of locally injective functions."""

    def test_index_on_circle(self):
        """Test the maximum of a height function on C4."""
        g = cycle_graph(4)
        f = {1: 0, 2: 1, 3: 2, 4: 1.5}
        assert poincare_hopf_index(g, f, 1) == 1
        assert poincare_hopf_index(g, f, 3) == -1
        assert sorted(lower_sphere(g, f, 3).nodes) == [2, 4]

    @pytest.mark.parametrize("key", ['octahedron', 'figure8', 'moebius', 'fig1', 'cylinder'])
    @pytest.mark.parametrize("seed", range(5))
    def test_indices_sum_to_euler(self, key, seed):
        """Test Σ i_f(v) = χ for random injective functions."""
        G = ComplexFactory.create(key)
        g = skeleton_graph(G)
        f = _random_values(g, seed)
        total = sum(poincare_hopf_index(g, f, v) for v in g.nodes)
        assert total == G.euler()

    def test_repeated_value_on_edge(self):
        """Test that equal values on an edge are refused."""
        g = cycle_graph(4)
        with pytest.raises(NotLocallyInjectiveError, match="adjacent vertices"):
            poincare_hopf_index(g, {1: 0, 2: 0, 3: 1, 4: 2}, 1)
        with pytest.raises(NotLocallyInjectiveError):
            check_locally_injective(g, {1: 0, 2: 1, 3: 1, 4: 2})

    def test_repeated_value_off_edges(self):
        """Test that non-adjacent vertices may share values."""
        check_locally_injective(cycle_graph(4), {1: 0, 2: 1, 3: 0, 4: 1})

    def test_undefined_vertex(self):
        """Test that f must be defined everywhere."""
        with pytest.raises(MapError, match="not defined"):
            check_locally_injective(cycle_graph(4), {1: 0, 2: 1})


# =====================================================================
# Classification
# =====================================================================

class TestMorseClassify:
    """Test suite for critical, regular and irregular points."""

    def test_height_on_circle(self):
        """Test the minimum and maximum of a height function."""
        data = morse_classify(cycle_graph(4), {1: 0, 2: 1, 3: 2, 4: 1.5})
        assert data.critical_points == [1, 3]
        assert data.morse_indices == {1: 0, 3: 1}
        assert data.labels[2] == REGULAR
        assert data.is_morse
        assert data.index_total == 0

    def test_height_on_octahedron(self, octahedron_graph):
        """Test a Morse function with one minimum and one maximum."""
        f = {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5}
        data = morse_classify(octahedron_graph, f)
        assert data.labels[1] == CRITICAL
        assert data.labels[6] == CRITICAL
        assert data.morse_indices[6] == 2
        assert data.index_total == 2

    def test_irregular_point(self):
        """Test a star hub above three rays."""
        f = {0: 10, 1: 0, 2: 1, 3: 2}
        data = morse_classify(star_graph(3), f)
        assert data.labels[0] == IRREGULAR
        assert not data.is_morse
        assert data.index_total == whitney_complex(star_graph(3)).euler()

    def test_classify_rejects_repeats(self):
        """Test that classification needs a locally injective function."""
        with pytest.raises(NotLocallyInjectiveError):
            morse_classify(complete_graph(3), {1: 0, 2: 0, 3: 1})


class TestMorseLift:
    """Test suite for the (f, dim) lift to the containment graph."""

    def test_lift_is_locally_injective(self):
        """Test that a constant function lifts to a locally injective one."""
        G = whitney_complex(complete_graph(3))
        g1, lifted = morse_lift(G, lambda x: 0)
        check_locally_injective(g1, lifted)
        assert lifted[0] == (0, 0)
        assert lifted[len(G) - 1] == (0, 2)

    def test_lift_satisfies_poincare_hopf(self):
        """Test that the lifted indices sum to χ of the refinement."""
        G = ComplexFactory.create('octahedron')
        f = {x: sum(x) for x in G}
        g1, lifted = morse_lift(G, f)
        data = morse_classify(g1, lifted)
        assert data.index_total == barycentric_refine(G).euler() == 2


class TestBuildup:
    """Test suite for the sublevel build-up table."""

    def test_jumps_are_indices(self, octahedron_graph):
        """Test that every χ jump is the index of the added vertex."""
        df = morse_buildup(octahedron_graph, _random_values(octahedron_graph, 3))
        assert isinstance(df, pd.DataFrame)
        assert list(df.columns) == ['vertex', 'value', 'index', 'euler', 'jump']
        assert (df['jump'] == df['index']).all()
        assert df['euler'].iloc[-1] == 2
        assert df['value'].is_monotonic_increasing


# =====================================================================
# Level sets
# =====================================================================

class TestLevelSet:
    """Test suite for level surfaces."""

    def test_circle(self):
        """Test that alternating values cut every edge of C4."""
        L = level_set(cycle_graph(4), {1: 1, 2: -1, 3: 1, 4: -1}, 0)
        assert L.number_of_nodes() == 4
        assert L.number_of_edges() == 0

    def test_octahedron_equator(self, octahedron_graph):
        """Test that a regular level of the octahedron is a circle."""
        L = level_set(octahedron_graph, {v: v for v in octahedron_graph.nodes}, 3.5)
        assert L.number_of_nodes() == 12
        assert L.number_of_edges() == 12
        assert is_manifold(whitney_complex(L)) == 1

    @pytest.mark.parametrize("seed", range(20))
    def test_random_levels_are_curves(self, octahedron_graph, seed):
        """Test that level sets of random functions are 1-manifolds or empty."""
        f = _random_values(octahedron_graph, seed)
        L = level_set(octahedron_graph, f, 2.5)
        if L.number_of_nodes():
            assert is_manifold(whitney_complex(L)) == 1

    def test_level_taken_by_f(self):
        """Test that c must avoid the values of f."""
        with pytest.raises(ValueError, match="choose another level"):
            level_set(cycle_graph(4), {1: 0, 2: 1, 3: 2, 4: 1}, 1)

