import os
from itertools import combinations

import pytest

import config
from models.complex import Face, SimplicialComplex
from services.complex.facet_io import read_facet_file
from services.complex.operations import from_facets, simplex, simplex_boundary, void_complex
from services.constructions.catalog import catalog_complex
from utils.seeding import make_rng


def random_complex(seed: int, max_vertices: int = 6, max_facets: int = 6):
    """A random complex on 1..n built from a handful of random facets."""
    rng = make_rng(seed)
    n = int(rng.integers(1, max_vertices + 1))
    facets = []
    for _ in range(int(rng.integers(0, max_facets + 1))):
        size = int(rng.integers(1, n + 1))
        facets.append(sorted(int(v) + 1 for v in rng.choice(n, size=size, replace=False)))
    return from_facets(facets, ground=range(1, n + 1))


def all_complexes(n: int):
    """Every simplicial complex on the ground set 1..n, the void complex included."""
    nonempty = [Face(c) for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]
    found = [void_complex(range(1, n + 1))]
    for mask in range(1 << len(nonempty)):
        chosen = {nonempty[i] for i in range(len(nonempty)) if mask >> i & 1}
        if all(sub in chosen for face in chosen if len(face) > 1 for sub in face.boundary()):
            found.append(SimplicialComplex(chosen | {Face()}, range(1, n + 1)))
    return found


@pytest.fixture
def make_random_complex():
    return random_complex


@pytest.fixture
def every_complex():
    return all_complexes


@pytest.fixture
def triangle():
    return simplex([1, 2, 3])


@pytest.fixture
def hollow_triangle():
    return simplex_boundary([1, 2, 3])


@pytest.fixture
def rp2():
    return catalog_complex('RP2_6')


@pytest.fixture
def y28():
    return catalog_complex('Y28_2')


@pytest.fixture
def y38():
    return catalog_complex('Y38_3')


@pytest.fixture
def c38():
    return catalog_complex('C38_3')


@pytest.fixture
def dunce_hat():
    return catalog_complex('DUNCE8_2')


@pytest.fixture
def data_file():
    def _path(name):
        return os.path.join(config.DATA_DIR, f'{name}.facets')
    return _path


@pytest.fixture
def golden(data_file):
    def _load(name):
        return read_facet_file(data_file(name))
    return _load
