"""
Tests for the SplitMix64 stream and the seeded random graphs.
"""

import pytest

from topology_toolkit.random_complexes import (
    SplitMix64,
    erdos_renyi,
    random_graph_nm,
    random_whitney,
    random_whitney_family,
)


class TestSplitMix64:
    """Test suite for SplitMix64."""

    def test_reference_outputs(self):
        """Test the first outputs of the stream seeded with 0."""
        rng = SplitMix64(0)
        assert rng.next() == 0xE220A8397B1DCDAF
        assert rng.next() == 0x6E789E6AA1B965F4
        assert rng.next() == 0x06C45D188009454F

    def test_same_seed_same_stream(self):
        """Test determinism."""
        a, b = SplitMix64(42), SplitMix64(42)
        assert [a.next() for _ in range(10)] == [b.next() for _ in range(10)]

    def test_random_in_unit_interval(self):
        """Test that floats lie in [0, 1)."""
        rng = SplitMix64(3)
        values = [rng.random() for _ in range(1000)]
        assert all(0.0 <= v < 1.0 for v in values)
        assert 0.4 < sum(values) / len(values) < 0.6

    def test_randrange(self):
        """Test that every residue is reached and bounds hold."""
        rng = SplitMix64(5)
        draws = {rng.randrange(7) for _ in range(500)}
        assert draws == set(range(7))
        assert SplitMix64(5).randrange(1) == 0

    def test_randrange_needs_positive_bound(self):
        """Test that a non-positive bound raises."""
        with pytest.raises(ValueError, match="positive bound"):
            SplitMix64().randrange(0)

    def test_shuffle_is_a_permutation(self):
        """Test that shuffle keeps the elements."""
        items = list(range(20))
        SplitMix64(9).shuffle(items)
        assert sorted(items) == list(range(20))
        again = list(range(20))
        SplitMix64(9).shuffle(again)
        assert items == again

    def test_choice(self):
        """Test choice and its empty case."""
        assert SplitMix64(1).choice(['a']) == 'a'
        with pytest.raises(IndexError):
            SplitMix64(1).choice([])


class TestRandomGraphs:
    """Test suite for G(n, p) and G(n, m)."""

    def test_erdos_renyi_extremes(self):
        """Test p = 0 and p = 1."""
        assert erdos_renyi(6, 0.0).number_of_edges() == 0
        assert erdos_renyi(6, 1.0).number_of_edges() == 15
        assert sorted(erdos_renyi(6, 0.5).nodes) == [1, 2, 3, 4, 5, 6]

    def test_erdos_renyi_is_seeded(self):
        """Test that a seed fixes the graph."""
        assert set(erdos_renyi(9, 0.5, seed=11).edges) == set(erdos_renyi(9, 0.5, seed=11).edges)

    def test_one_draw_per_pair(self):
        """Test that the stream advances once per vertex pair."""
        rng = SplitMix64(4)
        erdos_renyi(5, 0.3, rng)
        reference = SplitMix64(4)
        for _ in range(10):
            reference.next()
        assert rng.next() == reference.next()

    @pytest.mark.parametrize("n, p", [(4, -0.1), (4, 1.5), (-1, 0.5)])
    def test_erdos_renyi_errors(self, n, p):
        """Test argument validation."""
        with pytest.raises(ValueError):
            erdos_renyi(n, p)

    def test_graph_nm(self):
        """Test the exact edge count."""
        g = random_graph_nm(14, 30, seed=1)
        assert (g.number_of_nodes(), g.number_of_edges()) == (14, 30)

    def test_graph_nm_errors(self):
        """Test that m must fit the vertex count."""
        with pytest.raises(ValueError, match="between 0 and 6 edges"):
            random_graph_nm(4, 7)

    def test_random_whitney(self):
        """Test the Whitney wrapper and its argument check."""
        G = random_whitney(6, p=1.0)
        assert G.f_vector() == (6, 15, 20, 15, 6, 1)
        assert random_whitney(5, m=4, seed=2).f_vector()[:2] == (5, 4)
        with pytest.raises(ValueError, match="exactly one"):
            random_whitney(5)
        with pytest.raises(ValueError, match="exactly one"):
            random_whitney(5, p=0.5, m=3)

    def test_family(self):
        """Test size bounds and reproducibility of a family."""
        family = random_whitney_family(10, (5, 8), 0.5, 60, seed=2024)
        assert len(family) == 10
        assert all(0 < len(G) <= 60 for G in family)
        assert all(5 <= G.f_vector()[0] <= 8 for G in family)
        assert family == random_whitney_family(10, (5, 8), 0.5, 60, seed=2024)
