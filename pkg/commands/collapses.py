"""Commands around elementary moves: collapse, anticollapse, rdm, core, verify-cert."""
from commands.common import emit_complex, load_run_config, run_seed
from decorators.command_handler import EXIT_FAILED, EXIT_OK, command_handler
from services.collapse.certificate_io import read_certificate, write_certificate
from services.collapse.core import core_erosion
from services.collapse.morse import random_discrete_morse
from services.collapse.search import search_collapse
from services.collapse.steps import verify_certificate
from services.complex.facet_io import read_facet_file
from services.complex.operations import pure_part
from services.duality.alexander import is_anticollapsible
from utils.general import create_response
from utils.seeding import derive_seed


def _report_certificate(certificate, out, label):
    if certificate is None:
        print(f"no {label} found")
        return create_response(error=f"No {label} found within the budget"), EXIT_FAILED
    print(f"{label} found: {len(certificate)} moves, seed {certificate.seed}")
    if out:
        write_certificate(certificate, out)
        print(f"written {out}")
    return create_response(success=True, data={'moves': len(certificate)}), EXIT_OK


@command_handler
def collapse_command(args):
    run = load_run_config(args)
    seed = run_seed(run)
    X = read_facet_file(run.facet_file)
    certificate = search_collapse(X, restarts=run.restarts, seed=seed)
    return _report_certificate(certificate, run.out, 'collapse')


@command_handler
def anticollapse_command(args):
    run = load_run_config(args)
    seed = run_seed(run)
    X = read_facet_file(run.facet_file)
    certificate = is_anticollapsible(X, restarts=run.budget, seed=seed)
    return _report_certificate(certificate, run.out, 'anticollapse')


@command_handler
def rdm_command(args):
    """Random discrete Morse vectors, one per line; exit 0 when some trial reached a single critical vertex."""
    run = load_run_config(args)
    seed = run_seed(run)
    X = read_facet_file(run.facet_file)
    perfect = 0
    for trial in range(run.trials):
        vector, _ = random_discrete_morse(X, derive_seed(seed, trial))
        perfect += vector.is_perfect_point()
        print(vector)
    data = {'trials': run.trials, 'perfect': perfect}
    return create_response(success=bool(perfect), data=data), EXIT_OK if perfect else EXIT_FAILED


@command_handler
def core_command(args):
    run = load_run_config(args)
    X = read_facet_file(run.facet_file)
    residue, collapsible = core_erosion(X)
    if collapsible:
        print(f"{X.dimension}-collapsible")
        return create_response(success=True, data={'d_collapsible': True}), EXIT_OK
    core = pure_part(residue)
    print(f"{X.dimension}-core with {len(core.facets)} facets")
    emit_complex(core, run.out, header=f"{X.dimension}-core")
    return create_response(data={'d_collapsible': False, 'core_facets': len(core.facets)}), EXIT_FAILED


@command_handler
def verify_cert_command(args):
    run = load_run_config(args)
    X = read_facet_file(run.facet_file)
    certificate = read_certificate(run.cert_file)
    allow_trivial = run.allow_trivial or certificate.uses_trivial_step
    end = verify_certificate(X, certificate, allow_trivial=allow_trivial)
    print(f"{certificate.kind.value} certificate replays: {len(certificate)} moves, "
          f"ends with {len(end.facets)} facets on {len(end.vertices)} vertices")
    return create_response(success=True, data={'end_hash': end.digest()}), EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('collapse', help='search for a collapse to a vertex')
    parser.add_argument('facet_file')
    parser.add_argument('--seed')
    parser.add_argument('--restarts', type=int)
    parser.add_argument('--out', help='certificate file')
    parser.set_defaults(handler=collapse_command)

    parser = subparsers.add_parser('anticollapse', help='search for anticollapses to the simplex')
    parser.add_argument('facet_file')
    parser.add_argument('--seed')
    parser.add_argument('--budget', type=int, help='restarts of the collapse search on the dual')
    parser.add_argument('--out', help='certificate file')
    parser.set_defaults(handler=anticollapse_command)

    parser = subparsers.add_parser('rdm', help='random discrete Morse vectors')
    parser.add_argument('facet_file')
    parser.add_argument('--seed')
    parser.add_argument('--trials', type=int, default=1)
    parser.set_defaults(handler=rdm_command)

    parser = subparsers.add_parser('core', help='top-dimensional core erosion')
    parser.add_argument('facet_file')
    parser.add_argument('--out')
    parser.set_defaults(handler=core_command)

    parser = subparsers.add_parser('verify-cert', help='replay a certificate on a facet file')
    parser.add_argument('facet_file')
    parser.add_argument('cert_file')
    parser.add_argument('--allow-trivial', dest='allow_trivial', action='store_true')
    parser.set_defaults(handler=verify_cert_command)
