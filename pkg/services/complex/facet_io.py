"""
Plain-text facet files.

One facet per line as space-separated positive integers; ``#`` starts a comment.
An optional first directive ``ground n`` fixes the ground set to 1..n, and
``vertices v1 v2 ...`` fixes an arbitrary ground set. A ``void`` directive marks
the complex with no faces at all. A blank facet list gives the empty complex.
"""
import os
from typing import Optional

from models.complex import SimplicialComplex
from services.complex.operations import from_facets, void_complex
from utils.exceptions import ComplexInputError
from utils.logging import setup_logger

logger = setup_logger(__name__)


def parse_facets(text: str, source: str = '<text>') -> SimplicialComplex:
    ground = None
    void = False
    facets = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(' ')
        if head == 'ground':
            try:
                size = int(rest.strip())
            except ValueError:
                raise ComplexInputError(f"{source}:{number}: 'ground' expects one integer, got '{rest.strip()}'")
            if size < 0:
                raise ComplexInputError(f"{source}:{number}: ground size must be non-negative")
            ground = range(1, size + 1)
            continue
        if head == 'vertices':
            ground = _parse_ints(rest, source, number)
            continue
        if head == 'void':
            void = True
            continue
        facets.append(_parse_ints(line, source, number))

    if void:
        if facets:
            raise ComplexInputError(f"{source}: a void complex cannot list facets")
        if ground is None:
            raise ComplexInputError(f"{source}: a void complex needs a ground directive")
        return void_complex(ground)
    return from_facets(facets, ground=ground)


def _parse_ints(text: str, source: str, number: int) -> list:
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise ComplexInputError(f"{source}:{number}: expected integers, got '{text}'")


def format_facets(X: SimplicialComplex, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {row}" for row in header.splitlines())
    ground = sorted(X.ground)
    if ground == list(range(1, len(ground) + 1)):
        lines.append(f"ground {len(ground)}")
    else:
        lines.append('vertices ' + ' '.join(str(v) for v in ground))
    if X.is_void:
        lines.append('void')
    for facet in sorted(X.facets):
        lines.append(' '.join(str(v) for v in facet))
    return '\n'.join(lines) + '\n'


def read_facet_file(path: str) -> SimplicialComplex:
    if not os.path.isfile(path):
        raise ComplexInputError(f"Facet file not found: {path}")
    with open(path, encoding='utf-8') as handle:
        return parse_facets(handle.read(), source=path)


def write_facet_file(X: SimplicialComplex, path: str, header: Optional[str] = None) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(format_facets(X, header))
    logger.debug(f"Wrote {len(X.facets)} facets to {path}")
    return path
