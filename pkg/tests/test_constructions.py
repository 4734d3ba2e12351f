import pytest

from models.certificates import Matching
from models.complex import Face
from models.reports import Claim, ConstructionResult, Refusal, RefusalReason
from services.collapse.morse import critical_subcomplex, matching_from_certificate, verify_matching_acyclic
from services.collapse.search import search_collapse
from services.collapse.steps import free_faces, verify_certificate
from services.complex.operations import from_facets, simplex
from services.constructions.base_case import find_base_case, golden_base_case, verify_base_case
from services.constructions.catalog import GOLDEN_DIGESTS, catalog, catalog_complex, catalog_names
from services.constructions.moves import (cone_fill, double_cone, double_cone_labeled, lift_matching,
                                          stacked_simplex, stacking_move, transport_double_cone,
                                          transport_stacking)
from services.constructions.theorem import plan, refusal, route, theorem2_construct
from services.duality.alexander import alexander_dual
from services.homology.homology import homology
from utils.exceptions import ComplexInputError, PreconditionError, SearchBudgetError


def _top_facet(X):
    return next(f for f in X.facets if f.dim == X.dimension)


def _profile(X):
    profile = homology(X)
    return ({k: v for k, v in profile.betti.items() if v}, {k: v for k, v in profile.torsion.items() if v})


def _assert_stuck(result, n, d):
    X = result.complex
    assert X.dimension == d
    assert X.n == n and len(X.vertices) == n
    assert free_faces(X) == []
    assert verify_certificate(X, result.certificate).is_simplex()


class TestCatalog:

    def test_shipped_facet_files(self, y28, y38, c38):
        assert len(y28.facets) == 21
        assert Face((1, 2, 3)) in y28.facets and Face((1, 2, 6)) in y28.facets
        assert len(y38.facets) == 35 and Face((4, 6, 7, 8)) in y38.facets
        assert len(c38.facets) == 35

    @pytest.mark.parametrize('name', sorted(GOLDEN_DIGESTS))
    def test_golden_digests(self, name):
        assert catalog_complex(name).digest() == GOLDEN_DIGESTS[name]

    def test_names(self):
        assert set(catalog_names()) >= {'Y28_2', 'dual_Y38_3', 'C38_3', 'RP2_6', 'DUNCE8_2'}

    def test_star_means_dual(self, y28):
        assert catalog_complex('Y28_2*') == alexander_dual(y28)

    def test_unknown_name(self):
        with pytest.raises(ComplexInputError):
            catalog_complex('K4')

    def test_y28_entry_carries_collapse_witness(self, y28):
        entry = catalog('Y28_2')
        assert Claim.COLLAPSIBLE in entry.claims
        assert len(verify_certificate(y28, entry.certificates[Claim.COLLAPSIBLE]).vertices) == 1

    def test_c38_claims(self):
        entry = catalog('C38_3')
        assert entry.claims == {Claim.Q_ACYCLIC, Claim.HAS_CORE, Claim.DUAL_HAS_CORE}
        assert entry.certificates == {}

    def test_dual_y28_has_no_free_faces(self):
        entry = catalog('dual_Y28_2')
        assert free_faces(entry.complex) == []
        assert verify_certificate(entry.complex, entry.certificates[Claim.ANTICOLLAPSIBLE]).is_simplex()

    def test_dual_y38_is_anticollapsible_but_has_free_faces(self, y38):
        assert catalog('Y38_3').claims == {Claim.COLLAPSIBLE, Claim.Z_ACYCLIC}
        entry = catalog('dual_Y38_3')
        assert entry.complex.dimension == 3
        assert {(step.free, step.coface) for step in free_faces(entry.complex)} == {
            (Face((2, 3, 8)), Face((2, 3, 4, 8))), (Face((3, 5, 8)), Face((1, 3, 5, 8))),
            (Face((1, 5, 7)), Face((1, 3, 5, 7))), (Face((1, 5, 6)), Face((1, 5, 6, 8))),
        }
        assert verify_certificate(entry.complex, entry.certificates[Claim.ANTICOLLAPSIBLE]).is_simplex()


class TestDoubleCone:

    def test_edge_becomes_triangle(self):
        assert double_cone(simplex([1, 2]), 1) == simplex([1, 2, 3])

    def test_simplex_stays_a_simplex(self, triangle):
        assert double_cone(triangle, 2) == simplex(range(1, 5))

    def test_raw_labels(self, triangle):
        raw, a, b = double_cone_labeled(triangle, 1)
        assert (a, b) == (4, 5)
        assert raw.ground == frozenset({2, 3, 4, 5})

    def test_keeps_complex_stuck(self, y28):
        dual = alexander_dual(y28)
        cone = double_cone(dual, dual.vertices[0])
        assert cone.dimension == dual.dimension + 1 and cone.n == 9
        assert free_faces(cone) == []

    def test_rejects_bad_label(self, triangle):
        with pytest.raises(ComplexInputError):
            double_cone(triangle, 0)

    def test_empty_matching_lifts_to_empty(self, triangle):
        raw, _, _ = double_cone_labeled(triangle, 1)
        lifted = lift_matching(triangle, 1, Matching())
        assert len(lifted) == 0
        assert len(lifted.critical_cells(raw)) == len(raw) - 1

    def test_lifted_matching_stays_acyclic(self, y28):
        M = matching_from_certificate(search_collapse(y28, seed=0))
        raw, _, _ = double_cone_labeled(y28, 1)
        lifted = lift_matching(y28, 1, M)
        assert len(lifted) > len(M)
        assert verify_matching_acyclic(raw, lifted)

    @pytest.mark.parametrize('seed', range(3))
    def test_lift_critical_cells_are_double_cone_of_critical_subcomplex(self, y28, seed):
        M = matching_from_certificate(search_collapse(y28, seed=seed))
        Y = critical_subcomplex(y28, M)
        assert len(Y.vertices) == 1
        for x in (1, Y.vertices[0]):
            raw, _, _ = double_cone_labeled(y28, x)
            cone, _, _ = double_cone_labeled(Y, x)
            assert set(lift_matching(y28, x, M).critical_cells(raw)) == {f for f in cone.faces if f}
            assert cone.dimension == 1

    @pytest.mark.parametrize('name', ['Y28_2', 'RP2_6', 'C38_3', 'DUNCE8_2'])
    def test_dual_facets_follow_double_cone(self, name):
        X = catalog_complex(name)
        x = X.vertices[0]
        raw, a, b = double_cone_labeled(X, x)
        expected = {s.without(x).union((a, b)) if x in s else s for s in alexander_dual(X).facets}
        assert set(alexander_dual(raw).facets) == expected

    def test_transport_through_double_cone(self):
        entry = catalog('dual_Y28_2')
        X, certificate = entry.complex, entry.certificates[Claim.ANTICOLLAPSIBLE]
        cone, carried = transport_double_cone(X, X.vertices[0], certificate)
        assert cone.n == 9 and cone.dimension == 5
        assert verify_certificate(cone, carried).is_simplex()

    def test_transport_needs_anticollapse_certificate(self, triangle):
        with pytest.raises(PreconditionError):
            transport_double_cone(triangle, 1, search_collapse(triangle, seed=0))


class TestStacking:

    def test_triangle(self, triangle):
        X = stacking_move(triangle, [1, 2, 3])
        assert sorted(X.facets) == [Face((1, 2, 4)), Face((1, 3, 4)), Face((2, 3, 4))]

    def test_stacked_simplex(self):
        X = stacked_simplex(2, 2)
        assert len(X.facets) == 5 and X.n == 5

    def test_keeps_complex_stuck(self, y28):
        dual = alexander_dual(y28)
        X = stacking_move(dual, dual.facets[-1])
        assert X.n == 9 and X.dimension == 4
        assert free_faces(X) == []

    @pytest.mark.parametrize('name', ['DUNCE8_2', 'dual_Y28_2', 'RP2_6'])
    def test_preserves_homology(self, name):
        X = catalog_complex(name)
        assert _profile(stacking_move(X, _top_facet(X))) == _profile(X)

    def test_preserves_homology_of_simplex(self, triangle):
        assert _profile(stacking_move(triangle, [1, 2, 3])) == _profile(triangle)

    def test_needs_top_facet(self):
        X = from_facets([[1, 2, 3], [3, 4]])
        with pytest.raises(PreconditionError):
            stacking_move(X, [3, 4])

    def test_transport_through_stacking(self):
        X, certificate = golden_base_case()
        Y, carried = transport_stacking(X, X.facets[-1], certificate)
        assert Y.n == 9 and Y.dimension == 2
        assert free_faces(Y) == []
        assert verify_certificate(Y, carried).is_simplex()

    def test_cone_fill_needs_apex(self, hollow_triangle):
        with pytest.raises(PreconditionError):
            cone_fill(hollow_triangle, 1)


class TestBaseCase:

    def test_golden_base_case(self, dunce_hat):
        X, certificate = golden_base_case()
        assert X == dunce_hat
        assert verify_base_case(X, certificate)

    def test_rejects_wrong_certificate(self, y28):
        X, _ = golden_base_case()
        other = catalog('dual_Y28_2').certificates[Claim.ANTICOLLAPSIBLE]
        assert not verify_base_case(X, other)
        assert not verify_base_case(y28, other)

    def test_find_uses_golden(self):
        assert find_base_case().name == 'DUNCE8_2'

    def test_shipped_certificate_file(self):
        _, certificate = golden_base_case()
        assert len(certificate) == 103

    def test_missing_files_raise(self, tmp_path):
        with pytest.raises(ComplexInputError):
            golden_base_case(str(tmp_path))

    @pytest.mark.parametrize('n, d', [(8, 0), (8, 6), (5, 2)])
    def test_rejects_bad_dimension(self, n, d):
        with pytest.raises(ComplexInputError):
            find_base_case(n=n, d=d)

    def test_seven_vertices_exhaust_budget(self):
        with pytest.raises(SearchBudgetError):
            find_base_case(seed=0, budget=3, n=7)

    @pytest.mark.slow
    def test_searched_base_for_dimension_three(self, tmp_path):
        entry = find_base_case(seed=0, n=8, d=3, use_golden=False, out_dir=str(tmp_path))
        assert entry.name == 'BASE8_3'
        assert verify_base_case(entry.complex, entry.certificates[Claim.ANTICOLLAPSIBLE], n=8, d=3)
        assert (tmp_path / 'base_8_3.facets').exists()


class TestRefusal:

    @pytest.mark.parametrize('n', range(1, 13))
    def test_partition(self, n):
        for d in range(0, n + 2):
            admissible = n >= 8 and 2 <= d <= n - 4
            assert (refusal(n, d) is None) == admissible, (n, d)

    @pytest.mark.parametrize('n, d, text, reason', [
        (8, 5, 'Refusal: d = n−3', RefusalReason.HIGH_DIMENSION),
        (8, 8, 'Refusal: d ≥ n', RefusalReason.HIGH_DIMENSION),
        (12, 1, 'Refusal: d = 1', RefusalReason.LOW_DIMENSION),
        (7, 3, 'Refusal: n ≤ 7', RefusalReason.FEW_VERTICES),
    ])
    def test_labels(self, n, d, text, reason):
        refused = refusal(n, d)
        assert str(refused) == text
        assert refused.reason is reason
        assert refused.citation

    def test_low_dimension_comes_first(self):
        assert refusal(3, 1).reason is RefusalReason.LOW_DIMENSION

    @pytest.mark.parametrize('n, d', [(0, 2), (-1, 2), (8, -1)])
    def test_bad_arguments(self, n, d):
        with pytest.raises(ComplexInputError):
            refusal(n, d)

    def test_construct_returns_refusal(self):
        assert isinstance(theorem2_construct(8, 5), Refusal)


class TestConstruct:

    def test_plan(self):
        assert plan(10, 4) == ['start DUNCE8_2 (8, 2)', 'double cone -> (9, 3)', 'double cone -> (10, 4)']
        assert plan(9, 2) == ['start DUNCE8_2 (8, 2)', 'stack -> (9, 2)']
        assert plan(9, 5) == ['start dual_Y28_2 (8, 4)', 'double cone -> (9, 5)']
        assert plan(9, 4) == ['start dual_Y28_2 (8, 4)', 'stack -> (9, 4)']
        assert plan(8, 3) == ['start BASE8_3 (8, 3)']
        assert plan(10, 5) == plan(9, 4) + ['double cone -> (10, 5)']

    @pytest.mark.parametrize('n, d, start', [
        (8, 2, 'DUNCE8_2'), (12, 6, 'DUNCE8_2'), (8, 4, 'dual_Y28_2'), (11, 6, 'dual_Y28_2'), (8, 3, 'BASE8_3'),
    ])
    def test_route_start(self, n, d, start):
        assert route(n, d).start == start

    @pytest.mark.parametrize('n, d', [(8, 2), (8, 4), (9, 2), (9, 4), (9, 5), (10, 4), (10, 5)])
    def test_small_cases(self, n, d):
        result = theorem2_construct(n, d, seed=0)
        assert isinstance(result, ConstructionResult)
        _assert_stuck(result, n, d)

    @pytest.mark.slow
    def test_searched_start(self):
        _assert_stuck(theorem2_construct(8, 3, seed=0), 8, 3)

    @pytest.mark.slow
    @pytest.mark.parametrize('n', range(8, 12))
    def test_matrix(self, n):
        for d in range(2, n - 3):
            _assert_stuck(theorem2_construct(n, d, seed=0), n, d)
