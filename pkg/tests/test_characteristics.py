"""
Tests for Euler and Wu characteristics.
"""

import numpy as np
import pandas as pd
import pytest

from topology_toolkit.characteristics import (
    SUPPORTED_ORDERS,
    ball_formula_check,
    euler,
    fermi_characteristic,
    relative_wu,
    relative_wu_under_refinement,
    star_characteristics,
    wu,
    wu_bruteforce,
    wu_fast,
    wu_h,
)
from topology_toolkit.complexes import SimplexSet, closure, deletion, double_suspension, suspension
from topology_toolkit.config import ToolkitConfig
from topology_toolkit.errors import InvalidComplexError, UnsupportedOrderError
from topology_toolkit.graphs import complete_graph, cycle_graph, star_graph, whitney_complex
from topology_toolkit.io import ComplexFactory
from topology_toolkit.topology import star


@pytest.fixture
def k2():
    return closure([[1, 2]])


@pytest.fixture
def c4():
    return whitney_complex(cycle_graph(4))


SMALL_COMPLEXES = {
    'k2': lambda: closure([[1, 2]]),
    'k3': lambda: whitney_complex(complete_graph(3)),
    'c4': lambda: whitney_complex(cycle_graph(4)),
    'star3': lambda: whitney_complex(star_graph(3)),
    'mixed': lambda: closure([[1, 2, 3], [3, 4], [5]]),
}


# =====================================================================
# Euler characteristic
# =====================================================================

class TestEuler:
    """Test suite for the Euler characteristic."""

    def test_known_values(self, c4):
        """Test χ on circles, spheres and simplices."""
        assert euler(c4) == 0
        assert euler(suspension(c4)) == 2
        assert euler(whitney_complex(complete_graph(4))) == 1

    def test_valuation_on_subsets(self, k2):
        """Test that χ adds over disjoint subsets."""
        A = k2.subset([[1]])
        B = k2.subset([[1, 2]])
        assert euler(A | B) == euler(A) + euler(B)


# =====================================================================
# Wu characteristic
# =====================================================================

class TestWu:
    """Test suite for the Wu characteristics ω_m."""

    def test_order_one_is_euler(self, c4):
        """Test ω_1 = χ."""
        assert wu(c4, 1) == euler(c4)

    @pytest.mark.parametrize("name, expected", [
        ('k2', -1),
        ('k3', 1),
        ('c4', 0),
    ])
    def test_quadratic_values(self, name, expected):
        """Test ω_2 of small complexes."""
        assert wu(SMALL_COMPLEXES[name]()) == expected

    def test_octahedron(self):
        """Test that a closed 2-manifold has ω = χ."""
        assert wu(ComplexFactory.create('octahedron')) == 2

    @pytest.mark.parametrize("key, expected", [('figure8', 7), ('digital8', 5)])
    def test_eights(self, key, expected):
        """Test the two figure-eight complexes."""
        assert wu(ComplexFactory.create(key)) == expected

    def test_balls(self, c4):
        """Test ω(B) = (-1)^d for balls cut from spheres."""
        assert wu(deletion(c4, 1)) == -1
        assert wu(deletion(suspension(c4), 1)) == 1
        assert wu(deletion(double_suspension(c4), 1)) == -1

    @pytest.mark.parametrize("n, expected", [(3, 1), (4, 5), (5, 11)])
    def test_star_graphs(self, n, expected):
        """Test ω(S_n) = n² - 3n + 1."""
        assert wu(whitney_complex(star_graph(n))) == expected

    def test_open_subsets(self):
        """Test ω on non-closed subsets of a triangle."""
        G = closure([[1, 2, 3]])
        assert wu(G.subset([[1, 2, 3]])) == 1
        assert wu(G.subset([[1, 2, 3], [1, 2]])) == 0

    @pytest.mark.parametrize("name", sorted(SMALL_COMPLEXES))
    @pytest.mark.parametrize("m", SUPPORTED_ORDERS)
    def test_matches_bruteforce_on_complexes(self, name, m):
        """Test the inversion formula against the literal tuple sum."""
        G = SMALL_COMPLEXES[name]()
        assert wu(G, m) == wu_bruteforce(G, m)

    @pytest.mark.parametrize("m", [2, 3])
    def test_matches_bruteforce_on_arbitrary_subsets(self, m):
        """Test the inversion formula on every subset of K2."""
        G = closure([[1, 2]])
        for bits in range(1 << len(G)):
            A = SimplexSet(G, bits)
            assert wu(A, m) == wu_bruteforce(A, m)

    @pytest.mark.parametrize("m", SUPPORTED_ORDERS)
    def test_star_formula(self, c4, m):
        """Test that the star formula agrees on full complexes."""
        assert wu_fast(c4, m) == wu(c4, m)

    def test_fast_threshold_dispatch(self):
        """Test that both code paths give the same value."""
        G = ComplexFactory.create('octahedron')
        slow = ToolkitConfig().merge({'characteristics': {'fast_threshold': 10_000}})
        fast = ToolkitConfig().merge({'characteristics': {'fast_threshold': 0}})
        assert wu(G, 3, config=slow) == wu(G, 3, config=fast)

    @pytest.mark.parametrize("m", [0, 5])
    def test_unsupported_order(self, c4, m):
        """Test that orders outside 1..4 raise."""
        with pytest.raises(UnsupportedOrderError, match="Unsupported order"):
            wu(c4, m)


class TestWeightedWu:
    """Test suite for interaction-weighted characteristics."""

    def test_omega_weights_give_quadratic_wu(self, c4):
        """Test that h = ω ωᵀ reproduces ω_2."""
        om = np.array(c4.omegas)
        assert wu_h(c4, np.outer(om, om)) == wu(c4)

    def test_all_ones_counts_pairs(self, k2):
        """Test that all-ones weights count intersecting pairs."""
        n = len(k2)
        assert wu_h(k2, np.ones((n, n), dtype=int)) == 7

    def test_callable_weights(self, k2):
        """Test that a weight function is accepted."""
        assert wu_h(k2, lambda i, j: 1) == 7


class TestStarFormulas:
    """Test suite for ball, sphere and relative formulas."""

    @pytest.mark.parametrize("name", sorted(SMALL_COMPLEXES))
    def test_ball_formula(self, name):
        """Test Σ ω(x) ω(B(x)) = ω(G) and Σ ω(x) ω(S(x)) = 0."""
        assert ball_formula_check(SMALL_COMPLEXES[name]())

    def test_ball_formula_order_one(self, c4):
        """Test the ball formula for the Euler characteristic."""
        assert ball_formula_check(c4, 1)

    def test_relative_wu_of_whole_complex(self, c4):
        """Test ω(G, G) = ω(G)."""
        assert relative_wu(c4, c4) == wu(c4)
        K3 = whitney_complex(complete_graph(3))
        assert relative_wu(K3, K3) == 1

    def test_relative_wu_needs_subcomplex(self, c4):
        """Test that a non-subcomplex is rejected."""
        with pytest.raises(InvalidComplexError, match="subcomplex"):
            relative_wu(c4, closure([[1, 3]]))

    def test_relative_wu_under_refinement(self, c4):
        """Test that the pair (G, G) keeps its value after refinement."""
        before, after = relative_wu_under_refinement(c4, c4)
        assert before == after == 0

    def test_relative_wu_change_is_reported(self, c4, capsys):
        """Test that the refinement check only reports."""
        before, after = relative_wu_under_refinement(c4, closure([[1]]), verbose=True)
        out = capsys.readouterr().out
        assert isinstance(before, int) and isinstance(after, int)
        if before != after:
            assert "[WARNING]" in out

    def test_fermi_characteristic(self, k2, c4):
        """Test Π ω(x)."""
        assert fermi_characteristic(k2) == -1
        assert fermi_characteristic(c4) == 1
        assert fermi_characteristic(whitney_complex(complete_graph(3))) == -1


class TestStarCharacteristics:
    """Test suite for the per-simplex table."""

    def test_columns(self, c4):
        """Test the table layout."""
        df = star_characteristics(c4)
        assert isinstance(df, pd.DataFrame)
        assert list(df.columns) == [
            'simplex', 'dim', 'omega', 'euler_U', 'wu_U', 'euler_B', 'wu_B',
            'euler_S', 'wu_S', 'wu_ge_euler',
        ]
        assert len(df) == 8

    def test_circle_rows(self, c4):
        """Test the star, ball and sphere values of a circle."""
        df = star_characteristics(c4)
        assert (df['wu_U'] == 1).all()
        assert (df['euler_B'] == 1).all()
        assert (df['euler_S'] == 2).all()
        assert df['wu_ge_euler'].all()
        assert df.loc[0, 'simplex'] == "1"
        assert df.loc[4, 'simplex'] == "1-2"


class TestValuation:
    """Inclusion-exclusion for ω on open sets."""

    def test_open_stars_in_triangle(self):
        """Test ω(U) + ω(V) - ω(U ∩ V) = ω(U ∪ V) for two edge stars of K3."""
        K3 = whitney_complex(complete_graph(3))
        U = star(K3, [1, 2])
        V = star(K3, [2, 3])
        assert wu(U) == 0
        assert wu(V) == 0
        assert wu(U & V) == 1
        assert wu(U | V) == -1
        assert wu(U) + wu(V) - wu(U & V) == wu(U | V)

    def test_figure_eight_from_three_open_sets(self):
        """Test 1 + 9 + 1 - 2 - 2 = 7 on the figure eight."""
        X = ComplexFactory.create('figure8')
        hub = next(v for v in X.vertex_set if len(star(X, [v])) == 5)
        first = [2, 3, 4]
        second = [v for v in X.vertex_set if v not in first and v != hub]

        def union_of_stars(vertices):
            A = X.empty_set()
            for v in vertices:
                A = A | star(X, [v])
            return A

        U = union_of_stars(first)
        V = star(X, [hub])
        W = union_of_stars(second)
        assert (wu(U), wu(V), wu(W)) == (1, 9, 1)
        assert (wu(U & V), wu(V & W)) == (2, 2)
        assert not (U & W)
        assert wu(U) + wu(V) + wu(W) - wu(U & V) - wu(V & W) == wu(X) == 7
