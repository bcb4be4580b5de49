"""
Tests for the property suites.

Suites run with the quick preset; the heavier ones are marked slow.
"""

import pytest

from topology_toolkit.characteristics import wu
from topology_toolkit.config import ToolkitConfig
from topology_toolkit.graphs import cycle_graph, whitney_complex
from topology_toolkit.io import ComplexFactory
from topology_toolkit.verify import (
    SUITES,
    VerificationRunner,
    figure_eight_cover,
    registry_complexes,
    run_suite,
)


@pytest.fixture(scope="module")
def quick():
    return ToolkitConfig.from_preset('quick')


@pytest.fixture
def runner(quick):
    return VerificationRunner(quick)


class TestInputs:
    """Test suite for the suite inputs."""

    def test_registry_cap(self):
        """Test that large registry complexes are left out."""
        complexes = registry_complexes(60)
        assert 'octahedron' in complexes
        assert 'cycle:5' in complexes
        assert 'homology3sphere' not in complexes
        assert all(len(G) <= 60 for G in complexes.values())

    def test_registry_uncapped(self):
        """Test that no cap keeps every registry key."""
        assert set(ComplexFactory.REGISTRY) <= set(registry_complexes())

    def test_random_family_is_seeded(self, quick):
        """Test that the seed fixes the random family."""
        a = VerificationRunner(quick, seed=5).random_family()
        b = VerificationRunner(quick, seed=5).random_family()
        assert list(a) == [f"random:{i}" for i in range(quick.verify['random_count'])]
        assert a == b

    def test_figure_eight_cover(self):
        """Test the open cover of the figure eight."""
        X = ComplexFactory.create('figure8')
        U, V, W = figure_eight_cover(X)
        assert [wu(U), wu(V), wu(W)] == [1, 9, 1]
        assert not (U & W)
        assert len(U | V | W) == len(X)

    def test_figure_eight_cover_needs_two_loops(self):
        """Test that a single circle is refused."""
        with pytest.raises(ValueError, match="wedge of two circles"):
            figure_eight_cover(whitney_complex(cycle_graph(4)))


class TestVerificationRunner:
    """Test suite for VerificationRunner."""

    def test_available_suites(self, runner):
        """Test the suite names."""
        assert runner.available_suites() == list(SUITES)

    def test_unknown_suite(self, runner):
        """Test that unknown suites raise ValueError."""
        with pytest.raises(ValueError, match="Unknown suite: 'homotopy'"):
            runner.run('homotopy')

    def test_seed_override(self, quick):
        """Test that an explicit seed wins over the config."""
        assert VerificationRunner(quick).seed == 2024
        assert VerificationRunner(quick, seed=7).seed == 7

    @pytest.mark.parametrize("suite", ['energy', 'gaussbonnet', 'recognition', 'morse'])
    def test_suite_passes(self, quick, suite):
        """Test that the fast suites pass on the quick preset."""
        report = run_suite(suite, quick)
        assert report.checks
        assert report.all_passed, report.summary()

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", ['lefschetz', 'valuation', 'refinement'])
    def test_slow_suite_passes(self, quick, suite):
        """Test that the heavier suites pass on the quick preset."""
        report = run_suite(suite, quick)
        assert report.all_passed, report.summary()

    def test_energy_checks(self, quick):
        """Test that the energy suite checks every identity."""
        names = {c.name for c in run_suite('energy', quick).checks}
        assert {'green_inverse', 'energy_euler', 'energy_wu', 'green_supertrace',
                'fermi_determinant', 'tensor_energy_3', 'tensor_energy_4'} <= names

    def test_report_carries_seed(self, quick):
        """Test that the seed is recorded."""
        report = run_suite('recognition', quick, seed=11)
        assert report.seed == 11
        assert report.suite == 'recognition'

    def test_verbose(self, quick, capsys):
        """Test progress lines."""
        run_suite('recognition', quick, verbose=True)
        out = capsys.readouterr().out
        assert "[INFO] Running suite 'recognition' with seed 2024" in out
        assert "checks, 0 failed" in out

    def test_homology_sphere_check_needs_large_registry(self, quick):
        """Test that the double suspension check is skipped under the quick cap."""
        names = {c.name for c in run_suite('recognition', quick).checks}
        assert 'double_suspension_not_manifold' not in names

    @pytest.mark.slow
    def test_homology_sphere_check(self, quick):
        """Test the double suspension check with the exhaustive registry cap."""
        config = quick.merge({'verify': {'registry_max': 400}})
        report = run_suite('recognition', config)
        check = next(c for c in report.checks if c.name == 'double_suspension_not_manifold')
        assert check.passed

