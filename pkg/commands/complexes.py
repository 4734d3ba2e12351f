"""Commands that inspect or transform one complex: homology, dual, stack, double-cone, nonevasive, catalog."""
import os

from commands.common import emit_complex, load_run_config
from decorators.command_handler import EXIT_FAILED, EXIT_OK, command_handler
from models.complex import Face
from services.collapse.evasiveness import is_non_evasive
from services.complex.facet_io import read_facet_file, write_facet_file
from services.constructions.catalog import catalog, catalog_names
from services.constructions.moves import double_cone, stacking_move
from services.duality.alexander import alexander_dual, check_alexander_duality
from services.homology.homology import betti_numbers, homology
from utils.general import create_response, parse_vertex_list


@command_handler
def homology_command(args):
    """
    Print the reduced homology of a facet file.

    Over Z the output has one line per dimension, ``dim k: betti=b torsion=[...]``;
    over a field only the Betti numbers are printed.
    """
    load_run_config(args)
    X = read_facet_file(args.facet_file)
    if args.ring.upper() in ('Z', 'ZZ'):
        profile = homology(X)
        lines = profile.lines()
        data = {'betti': profile.betti, 'torsion': {k: list(v) for k, v in profile.torsion.items()}}
    else:
        betti = betti_numbers(X, args.ring)
        lines = [f"dim {k}: betti={b}" for k, b in sorted(betti.items()) if k >= 0 or b]
        data = {'betti': betti}
    for line in lines:
        print(line)
    return create_response(success=True, data=data), EXIT_OK


@command_handler
def dual_command(args):
    run = load_run_config(args)
    X = read_facet_file(run.facet_file)
    dual = alexander_dual(X)
    emit_complex(dual, run.out, header=f"Alexander dual of {os.path.basename(run.facet_file)}")
    if args.check and not check_alexander_duality(X):
        return create_response(error="Betti numbers violate Alexander duality"), EXIT_FAILED
    return create_response(success=True, data={'facets': len(dual.facets)}), EXIT_OK


@command_handler
def stack_command(args):
    run = load_run_config(args)
    X = read_facet_file(run.facet_file)
    facet = Face.of(parse_vertex_list(args.facet)) if args.facet else X.facets[-1]
    Y = stacking_move(X, facet)
    emit_complex(Y, run.out, header=f"stacked at {facet!r}")
    return create_response(success=True, data={'vertices': Y.n, 'dimension': Y.dimension}), EXIT_OK


@command_handler
def double_cone_command(args):
    run = load_run_config(args)
    X = read_facet_file(run.facet_file)
    Y = double_cone(X, args.vertex)
    emit_complex(Y, run.out, header=f"double cone at vertex {args.vertex}")
    return create_response(success=True, data={'vertices': Y.n, 'dimension': Y.dimension}), EXIT_OK


@command_handler
def nonevasive_command(args):
    load_run_config(args)
    X = read_facet_file(args.facet_file)
    result = is_non_evasive(X)
    print('non-evasive' if result else 'evasive')
    return create_response(success=result, data={'non_evasive': result}), EXIT_OK if result else EXIT_FAILED


@command_handler
def catalog_command(args):
    """List the catalog, or verify one entry and optionally export it."""
    run = load_run_config(args)
    if not args.name:
        for name in catalog_names():
            print(name)
        return create_response(success=True, data={'names': catalog_names()}), EXIT_OK

    entry = catalog(args.name)
    print(f"{entry.name}: {len(entry.complex.facets)} facets, dimension {entry.complex.dimension}")
    for claim in sorted(entry.claims, key=lambda c: c.value):
        print(f"  {claim.value}: verified")
    if run.out:
        path = write_facet_file(entry.complex, os.path.join(run.out, f"{entry.name}.facets"), header=entry.name)
        print(f"written {path}")
    return create_response(success=True, data={'name': entry.name}), EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('homology', help='reduced homology of a facet file')
    parser.add_argument('facet_file')
    parser.add_argument('--ring', default='Z', help="Z (default), Q or a prime p")
    parser.set_defaults(handler=homology_command)

    parser = subparsers.add_parser('dual', help='Alexander dual over the ground set')
    parser.add_argument('facet_file')
    parser.add_argument('--out')
    parser.add_argument('--check', action='store_true', help='also check Alexander duality over Q')
    parser.set_defaults(handler=dual_command)

    parser = subparsers.add_parser('stack', help='stacking move on a top facet')
    parser.add_argument('facet_file')
    parser.add_argument('--facet', help='facet to stack, e.g. "1,2,3" (default: last top facet)')
    parser.add_argument('--out')
    parser.set_defaults(handler=stack_command)

    parser = subparsers.add_parser('double-cone', help='double cone at a vertex')
    parser.add_argument('facet_file')
    parser.add_argument('--vertex', type=int, required=True)
    parser.add_argument('--out')
    parser.set_defaults(handler=double_cone_command)

    parser = subparsers.add_parser('nonevasive', help='decide non-evasiveness')
    parser.add_argument('facet_file')
    parser.set_defaults(handler=nonevasive_command)

    parser = subparsers.add_parser('catalog', help='list, verify and export catalog complexes')
    parser.add_argument('name', nargs='?')
    parser.add_argument('--out', help='directory for the exported facet file')
    parser.set_defaults(handler=catalog_command)
