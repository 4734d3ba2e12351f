import networkx as nx
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.matrices.normalforms import invariant_factors as sympy_invariant_factors

from models.complex import Face
from services.complex.operations import from_facets, simplex, simplex_boundary, void_complex
from services.constructions.moves import double_cone
from services.homology.boundary import boundary_matrix
from services.homology.homology import adds_top_cycle, betti_numbers, components, homology, is_acyclic
from services.homology.normal_form import invariant_factors
from services.homology.rank import RING_Q, RING_Zp, IncrementalRank, matrix_rank, parse_ring
from utils.exceptions import ComplexInputError, PreconditionError


def _sympy_factors(matrix):
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return []
    factors = sympy_invariant_factors(matrix.to_domain_matrix(ZZ))
    return sorted(abs(int(f)) for f in factors if f)


class TestBoundary:

    def test_signs_alternate(self, triangle):
        matrix = boundary_matrix(triangle, 2)
        assert matrix.shape == (3, 1)
        assert sorted(matrix.columns[0].values()) == [-1, 1, 1]

    def test_augmentation_row(self, triangle):
        matrix = boundary_matrix(triangle, 0)
        assert matrix.rows == (Face(),)
        assert matrix.to_dense() == [[1, 1, 1]]

    def test_boundary_of_boundary_vanishes(self, rp2):
        outer = boundary_matrix(rp2, 2).to_dense()
        inner = boundary_matrix(rp2, 1).to_dense()
        for i in range(len(inner)):
            for j in range(len(outer[0])):
                assert sum(inner[i][k] * outer[k][j] for k in range(len(outer))) == 0

    def test_negative_dimension(self, triangle):
        with pytest.raises(PreconditionError):
            boundary_matrix(triangle, -1)


class TestNormalForm:

    @pytest.mark.parametrize('name', ['rp2', 'y28', 'hollow_triangle'])
    def test_agrees_with_sympy(self, name, request):
        X = request.getfixturevalue(name)
        for i in range(X.dimension + 1):
            matrix = boundary_matrix(X, i)
            assert sorted(invariant_factors(matrix.columns)) == _sympy_factors(matrix)

    def test_agrees_with_sympy_on_random_complexes(self, make_random_complex):
        for seed in range(30):
            X = make_random_complex(seed)
            for i in range(X.dimension + 1):
                matrix = boundary_matrix(X, i)
                assert sorted(invariant_factors(matrix.columns)) == _sympy_factors(matrix)

    def test_divisibility_chain(self):
        # diag(4, 6) has invariant factors 2, 12
        assert invariant_factors([{0: 4}, {1: 6}]) == [2, 12]


class TestHomology:

    def test_rp2(self, rp2):
        profile = homology(rp2)
        assert profile.torsion_of(1) == (2,)
        assert all(b == 0 for b in profile.betti.values())
        assert profile.is_q_acyclic() and not profile.is_z_acyclic()
        assert 'dim 1: betti=0 torsion=[2]' in profile.lines()

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_sphere(self, k):
        profile = homology(simplex_boundary(range(1, k + 2)))
        assert profile.betti_number(k - 1) == 1
        assert sum(profile.betti.values()) == 1
        assert not any(profile.torsion.values())

    def test_simplex_is_acyclic(self):
        assert homology(simplex(range(1, 6))).is_z_acyclic()

    def test_empty_complex_has_homology_in_dimension_minus_one(self):
        profile = homology(from_facets([], ground=range(1, 3)))
        assert profile.betti == {-1: 1}

    def test_void_complex_has_none(self):
        profile = homology(void_complex(range(1, 3)))
        assert profile.betti == {} and profile.torsion == {}

    def test_double_cone_shifts_torsion(self, rp2):
        profile = homology(double_cone(rp2, 1))
        assert profile.torsion_of(2) == (2,)
        assert profile.torsion_of(1) == ()
        assert profile.is_q_acyclic()

    def test_components_match_networkx(self, make_random_complex):
        for seed in range(40):
            X = make_random_complex(seed)
            graph = nx.Graph()
            graph.add_nodes_from(X.vertices)
            graph.add_edges_from(X.faces_of_dim(1))
            assert components(X) == nx.number_connected_components(graph)

    @pytest.mark.parametrize('ring', ['Q', 2, 'Z'])
    def test_euler_poincare(self, make_random_complex, ring):
        for seed in range(60):
            X = make_random_complex(seed)
            betti = betti_numbers(X, ring)
            assert sum((-1) ** k * b for k, b in betti.items()) == X.reduced_euler_characteristic()


class TestFieldCoefficients:

    def test_rp2_over_z2(self, rp2):
        betti = betti_numbers(rp2, 2)
        assert betti[1] == 1 and betti[2] == 1
        assert not is_acyclic(rp2, 2)
        assert is_acyclic(rp2, 'Q')

    def test_rp2_over_z3_is_acyclic(self, rp2):
        assert is_acyclic(rp2, 'Z/3')

    def test_composite_modulus_rejected(self):
        with pytest.raises(ComplexInputError):
            parse_ring('Z/4')

    def test_parse_ring(self):
        assert parse_ring('Q') == (RING_Q, None)
        assert parse_ring('Z/5') == (RING_Zp, 5)
        assert parse_ring(7) == (RING_Zp, 7)

    def test_matrix_rank(self, triangle):
        assert matrix_rank(boundary_matrix(triangle, 1)) == 2


class TestIncrementalRank:

    def test_dependent_column(self):
        rank = IncrementalRank()
        assert rank.add({0: 1, 1: -1})
        assert rank.add({1: 1, 2: -1})
        assert not rank.is_independent({0: 1, 2: -1})
        assert rank.rank == 2

    @pytest.mark.parametrize('full', [False, True])
    def test_adds_top_cycle(self, hollow_triangle, full):
        path = from_facets([[1, 2], [2, 3]])
        assert adds_top_cycle(path, [1, 3], full) is True
        assert adds_top_cycle(hollow_triangle, [1, 2, 3], full) is False

    def test_adds_top_cycle_preconditions(self, triangle):
        with pytest.raises(PreconditionError):
            adds_top_cycle(triangle, [1, 2, 3])
        with pytest.raises(PreconditionError):
            adds_top_cycle(from_facets([[1, 2]]), [1, 2, 3])
