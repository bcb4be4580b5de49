"""
Unit tests for the core complex types and constructors.

Covers Simplex validation, canonical ordering, SimplexSet bit operations
and the algebraic builders (join, suspension, wedge, link, ...).
"""

import pytest

from topology_toolkit.complexes import (
    Simplex,
    SimplexSet,
    SimplicialComplex,
    closure,
    cone,
    deletion,
    dimension,
    disjoint_union,
    double_suspension,
    f_vector,
    induced_subcomplex,
    join,
    link,
    point,
    relabel,
    skeleton,
    sphere_zero,
    suspension,
    wedge_sum,
)
from topology_toolkit.errors import InvalidComplexError, SimplexNotFoundError
from topology_toolkit.graphs import cycle_graph, whitney_complex


@pytest.fixture
def triangle():
    """Full 2-simplex on vertices 1, 2, 3."""
    return closure([[1, 2, 3]])


@pytest.fixture
def c4():
    """Whitney complex of the 4-cycle."""
    return whitney_complex(cycle_graph(4))


# =====================================================================
# Simplex
# =====================================================================

class TestSimplex:
    """Test suite for Simplex."""

    def test_vertices_are_sorted_and_deduplicated(self):
        """Test that vertices are stored ascending without repeats."""
        x = Simplex((3, 1, 2, 1))
        assert tuple(x) == (1, 2, 3)
        assert x.dim == 2

    def test_omega_is_dimension_parity(self):
        """Test ω(x) = (-1)^dim."""
        assert Simplex([5]).omega == 1
        assert Simplex([1, 2]).omega == -1
        assert Simplex([1, 2, 3]).omega == 1

    def test_label(self):
        """Test the compact label used in matrix legends."""
        assert Simplex([10, 2]).label() == "2-10"

    def test_faces_and_boundary(self):
        """Test all faces and codimension-one faces."""
        x = Simplex([1, 2, 3])
        assert len(x.faces()) == 7
        assert x.boundary_faces() == [(2, 3), (1, 3), (1, 2)]
        assert Simplex([4]).boundary_faces() == []

    def test_empty_simplex_rejected(self):
        """Test that the empty set is not a simplex."""
        with pytest.raises(InvalidComplexError, match="at least one vertex"):
            Simplex([])

    @pytest.mark.parametrize("bad", [-1, True, 1.5, "a"])
    def test_bad_vertex_rejected(self, bad):
        """Test that only non-negative integers are vertices."""
        with pytest.raises(InvalidComplexError, match="non-negative integers"):
            Simplex([bad])


# =====================================================================
# SimplicialComplex
# =====================================================================

class TestSimplicialComplex:
    """Test suite for SimplicialComplex."""

    def test_triangle_counts(self, triangle):
        """Test size, dimension, f-vector and Euler characteristic."""
        assert len(triangle) == 7
        assert triangle.dim == 2
        assert triangle.f_vector() == (3, 3, 1)
        assert triangle.euler() == 1
        assert f_vector(triangle).euler == 1
        assert dimension(triangle) == 2

    def test_canonical_order(self):
        """Test dimension-first, then lexicographic order."""
        G = closure([[2, 3], [1, 2]])
        assert [tuple(x) for x in G] == [(1,), (2,), (3,), (1, 2), (2, 3)]
        assert G.index((2, 3)) == 4

    def test_empty_complex(self):
        """Test the empty complex."""
        G = SimplicialComplex.empty()
        assert len(G) == 0
        assert G.dim == -1
        assert G.f_vector() == ()
        assert G.euler() == 0
        assert closure([]) == G

    def test_not_downward_closed(self):
        """Test that a missing face is rejected."""
        with pytest.raises(InvalidComplexError, match="Not downward closed"):
            SimplicialComplex([(1, 2)])

    def test_from_facets_equals_closure(self):
        """Test that from_facets is the downward closure."""
        assert SimplicialComplex.from_facets([[1, 2, 3]]) == closure([[1, 2, 3]])

    def test_closure_rejects_empty_set(self):
        """Test that closure() refuses the empty generator."""
        with pytest.raises(InvalidComplexError, match="empty set"):
            closure([[1, 2], []])

    def test_facets(self):
        """Test locally maximal simplices."""
        G = closure([[1, 2, 3], [3, 4], [5]])
        assert G.facets() == [(5,), (3, 4), (1, 2, 3)]

    def test_index_of_missing_simplex(self, triangle):
        """Test that looking up a missing simplex raises a KeyError subclass."""
        with pytest.raises(SimplexNotFoundError):
            triangle.index((1, 4))
        with pytest.raises(KeyError):
            triangle.index((9,))

    def test_membership_ignores_order(self, triangle):
        """Test that membership accepts unsorted vertex tuples."""
        assert (3, 1) in triangle
        assert (1, 4) not in triangle

    def test_vertex_set_and_masks(self, c4):
        """Test the vertex set and vertex bitmasks."""
        assert c4.vertex_set == (1, 2, 3, 4)
        assert c4.vertex_masks[c4.index((1, 4))] == 0b1001

    def test_star_and_core_bits(self):
        """Test star and core bitsets on a single edge."""
        G = closure([[1, 2]])
        assert G.star_bits[G.index((1,))] == 0b101
        assert G.core_bits[G.index((1, 2))] == 0b111

    def test_subcomplex_relation(self, triangle):
        """Test is_subcomplex_of."""
        assert closure([[1, 2]]).is_subcomplex_of(triangle)
        assert not closure([[1, 4]]).is_subcomplex_of(triangle)

    def test_equality_and_hash(self):
        """Test that equal simplex sets give equal, equally hashed complexes."""
        a = closure([[1, 2], [2, 3]])
        b = closure([[2, 3], [1, 2], [2]])
        assert a == b
        assert hash(a) == hash(b)


# =====================================================================
# SimplexSet
# =====================================================================

class TestSimplexSet:
    """Test suite for SimplexSet."""

    def test_set_algebra(self):
        """Test union, intersection, difference and complement."""
        G = closure([[1, 2]])
        A = G.subset([[1]])
        B = G.subset([[1, 2]])
        assert len(A | B) == 2
        assert not (A & B)
        assert (A | B) - A == B
        assert A.complement().members() == ((2,), (1, 2))

    def test_closure_and_interior(self):
        """Test closure and interior of simplex sets."""
        G = closure([[1, 2]])
        assert G.subset([[1, 2]]).closure() == G.as_set()
        assert G.subset([[1], [2]]).interior() == G.empty_set()
        assert G.subset([[1], [1, 2]]).interior() == G.subset([[1], [1, 2]])

    def test_open_and_closed(self, triangle):
        """Test openness (up-closed) and closedness (down-closed)."""
        top = triangle.subset([[1, 2, 3]])
        assert top.is_open()
        assert not top.is_closed()
        edge = triangle.subset([[1], [2], [1, 2]])
        assert edge.is_closed()
        assert not edge.is_open()

    def test_euler_and_dim(self, triangle):
        """Test Euler characteristic and dimension of a subset."""
        A = triangle.subset([[1, 2], [1, 2, 3]])
        assert A.euler() == 0
        assert A.dim() == 2

    def test_to_complex(self, triangle):
        """Test converting closed sets to complexes."""
        assert triangle.subset([[1], [2], [1, 2]]).to_complex() == closure([[1, 2]])
        with pytest.raises(InvalidComplexError):
            triangle.subset([[1, 2]]).to_complex()

    def test_different_hosts_rejected(self, triangle, c4):
        """Test that sets of different hosts do not combine."""
        with pytest.raises(InvalidComplexError, match="different host"):
            _ = triangle.as_set() | c4.as_set()

    def test_bits_must_fit_host(self, triangle):
        """Test that oversized bitsets are rejected."""
        with pytest.raises(InvalidComplexError):
            SimplexSet(triangle, 1 << 7)


# =====================================================================
# Constructors
# =====================================================================

class TestConstructors:
    """Test suite for the algebraic builders."""

    def test_join_of_two_zero_spheres_is_a_circle(self):
        """Test S⁰ ⊕ S⁰ = C4."""
        G = join(sphere_zero(), sphere_zero())
        assert len(G) == 8
        assert G.f_vector() == (4, 4)
        assert G.euler() == 0

    def test_join_with_empty_is_identity(self, c4):
        """Test that the empty complex is the unit of the join."""
        assert join(SimplicialComplex.empty(), c4) == c4
        assert join(c4, SimplicialComplex.empty()) == c4

    def test_join_mapping(self, c4):
        """Test that the second factor is shifted above the first."""
        _, mapping = join(c4, c4, return_mapping=True)
        assert mapping == {1: 5, 2: 6, 3: 7, 4: 8}

    def test_suspension_of_circle_is_octahedron(self, c4):
        """Test the suspension of C4."""
        assert suspension(c4).f_vector() == (6, 12, 8)
        assert suspension(c4).euler() == 2

    def test_double_suspension(self, c4):
        """Test the double suspension of C4, a 3-sphere."""
        G = double_suspension(c4)
        assert G.f_vector() == (8, 24, 32, 16)
        assert G.euler() == 0

    def test_cone(self, c4):
        """Test that a cone has Euler characteristic 1."""
        assert cone(c4).euler() == 1
        assert cone(c4).dim == 2

    def test_point(self):
        """Test the one-point complex."""
        assert point().f_vector() == (1,)

    def test_wedge_sum(self, c4):
        """Test the figure-8 wedge of two circles."""
        G = wedge_sum(c4, 1, c4, 1)
        assert len(G) == 15
        assert G.f_vector() == (7, 8)
        assert G.euler() == -1

    def test_wedge_sum_bad_basepoint(self, c4):
        """Test that the basepoints must be vertices."""
        with pytest.raises(InvalidComplexError, match="Basepoint 9"):
            wedge_sum(c4, 9, c4, 1)
        with pytest.raises(InvalidComplexError, match="second complex"):
            wedge_sum(c4, 1, c4, 0)

    def test_link_in_octahedron(self, c4):
        """Test that vertex links of the octahedron are circles."""
        octahedron = suspension(c4)
        for v in octahedron.vertex_set:
            assert link(octahedron, (v,)).f_vector() == (4, 4)

    def test_link_of_missing_simplex(self, triangle):
        """Test that the link needs a simplex of the complex."""
        with pytest.raises(InvalidComplexError, match="not a simplex"):
            link(triangle, (1, 4))

    def test_deletion(self, triangle):
        """Test deleting the open star of a vertex."""
        assert deletion(triangle, 1) == closure([[2, 3]])

    def test_skeleton(self, triangle):
        """Test k-skeleta."""
        assert len(skeleton(triangle, 1)) == 6
        assert len(skeleton(triangle, -1)) == 0
        with pytest.raises(InvalidComplexError):
            skeleton(triangle, -2)

    def test_induced_subcomplex(self, triangle):
        """Test the subcomplex induced by a vertex subset."""
        assert induced_subcomplex(triangle, [1, 3]) == closure([[1, 3]])

    def test_disjoint_union(self, c4):
        """Test that the disjoint union relabels the second copy."""
        G = disjoint_union(c4, c4)
        assert len(G) == 16
        assert G.vertex_set == tuple(range(1, 9))

    def test_relabel_requires_injective_map(self, c4):
        """Test relabel with injective and non-injective maps."""
        shifted = relabel(c4, {1: 11, 2: 12, 3: 13, 4: 14})
        assert shifted.vertex_set == (11, 12, 13, 14)
        with pytest.raises(InvalidComplexError, match="injective"):
            relabel(c4, {1: 1, 2: 1, 3: 3, 4: 4})
