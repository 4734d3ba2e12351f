import pytest

from models.certificates import Direction, Matching, StepPair
from models.complex import Face
from services.collapse.core import core_erosion, d_core, is_d_collapsible
from services.collapse.evasiveness import clear_memo, is_non_evasive
from services.collapse.morse import (critical_subcomplex, find_cycle, matching_from_certificate,
                                     random_discrete_morse, verify_matching_acyclic)
from services.collapse.search import search_collapse
from services.collapse.steps import apply_step, build_certificate, free_faces, replay, verify_certificate
from services.complex.operations import cone, from_facets, simplex, simplex_boundary
from services.homology.homology import homology
from utils.exceptions import ComplexInputError, MatchingError, PreconditionError, StepError
from utils.seeding import derive_seed, make_rng, resolve_seed


def _anticollapses(X):
    """Every non-trivial elementary anticollapse available on ``X``."""
    found = set()
    for face in X.faces:
        for vertex in X.ground - set(face):
            coface = face.with_vertex(vertex)
            if len(coface) < 2 or coface in X:
                continue
            missing = [sub for sub in coface.boundary() if sub not in X]
            if len(missing) == 1:
                found.add((missing[0], coface))
    return [StepPair(free, coface, Direction.ANTICOLLAPSE) for free, coface in sorted(found)]


def _profile(X):
    profile = homology(X)
    betti = {k: v for k, v in profile.betti.items() if v}
    torsion = {k: v for k, v in profile.torsion.items() if v}
    return betti, torsion


class TestFreeFaces:

    def test_triangle_edges_are_free(self, triangle):
        pairs = free_faces(triangle)
        assert len(pairs) == 3
        assert all(step.coface == Face((1, 2, 3)) for step in pairs)

    @pytest.mark.parametrize('name', ['hollow_triangle', 'dunce_hat'])
    def test_no_free_faces(self, name, request):
        assert free_faces(request.getfixturevalue(name)) == []

    def test_sphere_has_no_free_faces(self):
        assert free_faces(simplex_boundary([1, 2, 3, 4])) == []

    def test_trivial_pair_only_when_allowed(self):
        point = simplex([1])
        assert free_faces(point) == []
        assert free_faces(point, allow_trivial=True) == [StepPair(Face(), Face((1,)))]


class TestSteps:

    def test_collapse_removes_pair(self, triangle):
        result = apply_step(triangle, StepPair([1, 2], [1, 2, 3]))
        assert sorted(result.facets) == [Face((1, 3)), Face((2, 3))]

    def test_collapse_needs_maximal_coface(self, triangle):
        with pytest.raises(StepError, match='not maximal'):
            apply_step(triangle, StepPair([1], [1, 2]))

    def test_collapse_needs_free_face(self, hollow_triangle):
        with pytest.raises(StepError, match='larger faces'):
            apply_step(hollow_triangle, StepPair([1], [1, 2]))

    def test_anticollapse_fills_triangle(self, triangle):
        path = from_facets([[1, 2], [2, 3]])
        result = apply_step(path, StepPair([1, 3], [1, 2, 3], Direction.ANTICOLLAPSE))
        assert result == triangle

    def test_anticollapse_needs_other_boundary(self):
        edge = from_facets([[1, 2]], ground=range(1, 4))
        with pytest.raises(StepError, match='missing'):
            apply_step(edge, StepPair([1, 3], [1, 2, 3], Direction.ANTICOLLAPSE))

    def test_anticollapse_stays_in_ground(self):
        edge = from_facets([[1, 2]])
        with pytest.raises(StepError, match='ground'):
            apply_step(edge, StepPair([3], [2, 3], Direction.ANTICOLLAPSE))

    def test_trivial_step_is_gated(self):
        point = simplex([1])
        step = StepPair(Face(), Face((1,)))
        with pytest.raises(StepError, match='trivial'):
            apply_step(point, step)
        assert apply_step(point, step, allow_trivial=True).is_void

    def test_replay_names_failing_step(self, triangle):
        steps = [StepPair([1, 2], [1, 2, 3]), StepPair([1, 2], [1, 2, 3])]
        with pytest.raises(StepError, match='step 1'):
            replay(triangle, steps)

    def test_step_pair_must_be_hasse_edge(self):
        with pytest.raises(ComplexInputError):
            StepPair([1], [2, 3])


class TestSearchCollapse:

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_simplex_collapses_to_a_vertex(self, k):
        X = simplex(range(1, k + 2))
        certificate = search_collapse(X, seed=k)
        assert certificate is not None
        end = verify_certificate(X, certificate)
        assert len(end.vertices) == 1 and end.dimension == 0

    def test_y28_is_collapsible(self, y28):
        certificate = search_collapse(y28, seed=0)
        assert certificate is not None
        assert len(verify_certificate(y28, certificate).vertices) == 1

    def test_same_seed_same_certificate(self, y28):
        assert search_collapse(y28, seed=11) == search_collapse(y28, seed=11)

    def test_hollow_triangle_is_not_collapsible(self, hollow_triangle):
        assert search_collapse(hollow_triangle) is None

    def test_void_complex(self):
        assert search_collapse(from_facets([], ground=range(1, 3))) is None

    def test_tampered_certificate_is_rejected(self, triangle, hollow_triangle):
        certificate = search_collapse(triangle, seed=0)
        with pytest.raises(ComplexInputError, match='start digest'):
            verify_certificate(hollow_triangle, certificate)

    def test_build_certificate_pins_end(self, triangle):
        certificate = build_certificate(triangle, [StepPair([1, 2], [1, 2, 3])], Direction.COLLAPSE)
        assert len(certificate) == 1
        assert certificate.end_hash == from_facets([[1, 3], [2, 3]]).digest()


class TestCoreErosion:

    def test_triangle_is_d_collapsible(self, triangle):
        assert is_d_collapsible(triangle)
        assert d_core(triangle) is None

    def test_hollow_triangle_is_its_own_core(self, hollow_triangle):
        residue, collapsible = core_erosion(hollow_triangle)
        assert not collapsible
        assert residue == hollow_triangle

    def test_c38_has_core(self, c38):
        core = d_core(c38)
        assert core is not None
        assert core.dimension == c38.dimension and core.is_pure()

    def test_residue_is_order_independent(self, c38):
        residue, _ = core_erosion(c38)
        for seed in range(5):
            assert core_erosion(c38, seed=seed)[0] == residue

    def test_residue_agrees_across_orders_on_random_complexes(self, make_random_complex):
        checked = 0
        for seed in range(60):
            X = make_random_complex(seed)
            if X.dimension < 1:
                continue
            expected = core_erosion(X)
            for order in range(10):
                assert core_erosion(X, seed=derive_seed(seed, order)) == expected
            checked += 1
        assert checked >= 10

    def test_needs_positive_dimension(self):
        with pytest.raises(PreconditionError):
            core_erosion(simplex([1]))


class TestMatchings:

    def test_cyclic_matching_on_hollow_triangle(self, hollow_triangle):
        M = Matching.of([([1], [1, 2]), ([2], [2, 3]), ([3], [1, 3])])
        assert verify_matching_acyclic(hollow_triangle, M) is False
        assert find_cycle(hollow_triangle, M)

    def test_acyclic_matching_on_hollow_triangle(self, hollow_triangle):
        M = Matching.of([([1], [1, 2]), ([2], [2, 3])])
        assert verify_matching_acyclic(hollow_triangle, M) is True
        assert find_cycle(hollow_triangle, M) is None
        assert set(M.critical_cells(hollow_triangle)) == {Face((3,)), Face((1, 3))}

    def test_face_matched_twice(self, hollow_triangle):
        with pytest.raises(MatchingError):
            verify_matching_acyclic(hollow_triangle, Matching.of([([1], [1, 2]), ([1], [1, 3])]))

    def test_pair_must_be_hasse_edge(self, hollow_triangle):
        with pytest.raises(MatchingError):
            verify_matching_acyclic(hollow_triangle, Matching(frozenset({(Face((1,)), Face((2, 3)))})))

    def test_collapse_certificate_gives_acyclic_matching(self, triangle):
        M = matching_from_certificate(search_collapse(triangle, seed=3))
        assert verify_matching_acyclic(triangle, M)
        assert M.morse_vector(triangle).is_perfect_point()
        assert len(critical_subcomplex(triangle, M).vertices) == 1


class TestRandomDiscreteMorse:

    @pytest.mark.parametrize('k', [1, 2, 3, 4, 5, 6])
    def test_simplex_is_always_perfect(self, k):
        X = simplex(range(1, k + 2))
        for seed in range(100):
            vector, _ = random_discrete_morse(X, seed)
            assert vector.is_perfect_point(), f"seed {seed} gave {vector}"

    def test_dunce_hat_is_never_perfect(self, dunce_hat):
        for seed in range(20):
            vector, M = random_discrete_morse(dunce_hat, seed)
            assert not vector.is_perfect_point()
            assert vector.alternating_sum() == 1
            assert verify_matching_acyclic(dunce_hat, M)

    def test_alternating_sum_is_euler_characteristic(self, make_random_complex):
        for seed in range(40):
            X = make_random_complex(seed)
            if not X.vertices:
                continue
            vector, _ = random_discrete_morse(X, seed)
            assert vector.alternating_sum() == X.reduced_euler_characteristic() + 1

    def test_reproducible(self, rp2):
        assert random_discrete_morse(rp2, 5) == random_discrete_morse(rp2, 5)

    def test_needs_a_vertex(self):
        with pytest.raises(PreconditionError):
            random_discrete_morse(from_facets([], ground=[1]), 0)


class TestNonEvasive:

    def setup_method(self):
        clear_memo()

    def test_simplex_and_cone(self, hollow_triangle):
        assert is_non_evasive(simplex(range(1, 5)))
        assert is_non_evasive(cone(hollow_triangle, 4))

    @pytest.mark.parametrize('name', ['hollow_triangle', 'dunce_hat', 'rp2'])
    def test_evasive(self, name, request):
        assert not is_non_evasive(request.getfixturevalue(name))

    def test_path_is_non_evasive(self):
        assert is_non_evasive(from_facets([[1, 2], [2, 3], [3, 4]]))

    def test_empty_is_not(self):
        assert not is_non_evasive(from_facets([], ground=[1, 2]))

    def test_non_evasive_complexes_collapse(self, make_random_complex):
        # contractible complexes on at most 7 vertices never get stuck
        found = 0
        for seed in range(150):
            X = make_random_complex(seed, max_vertices=6)
            if is_non_evasive(X):
                found += 1
                certificate = search_collapse(X, seed=seed)
                assert certificate is not None, seed
                assert len(verify_certificate(X, certificate).vertices) == 1
        assert found >= 10


class TestInvariance:

    def test_random_moves_preserve_homotopy_invariants(self, make_random_complex):
        # every move can be undone, so a walk only stops if the start has no move at all
        moves = 0
        for seed in range(200):
            if moves >= 1000:
                break
            X = make_random_complex(seed, max_vertices=5, max_facets=4)
            rng = make_rng(seed)
            euler, profile = X.reduced_euler_characteristic(), _profile(X)
            for _ in range(50):
                options = free_faces(X) + _anticollapses(X)
                if not options:
                    break
                X = apply_step(X, options[int(rng.integers(len(options)))])
                moves += 1
                assert X.reduced_euler_characteristic() == euler
                assert _profile(X) == profile
        assert moves >= 1000


class TestSeeding:

    def test_derived_seeds_are_stable_and_distinct(self):
        assert derive_seed(7, 0) == derive_seed(7, 0)
        assert len({derive_seed(7, i) for i in range(50)}) == 50

    def test_resolve_seed(self):
        assert resolve_seed('42') == 42
        assert resolve_seed('0x10') == 16
        assert isinstance(resolve_seed('auto'), int)

    @pytest.mark.parametrize('raw', [None, 'soon'])
    def test_resolve_seed_rejects(self, raw):
        with pytest.raises(ComplexInputError):
            resolve_seed(raw)
