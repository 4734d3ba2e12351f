"""Commands for the stuck-complex constructor and the full reproduction run."""
import pandas as pd

from commands.common import load_run_config, output_path, run_seed
from decorators.command_handler import EXIT_FAILED, EXIT_OK, EXIT_REFUSED, command_handler
from models.reports import Claim, Refusal
from services.collapse.certificate_io import write_certificate
from services.complex.facet_io import format_facets, write_facet_file
from services.constructions.base_case import find_base_case
from services.constructions.reproduce import reproduce_paper
from services.constructions.theorem import refusal, theorem2_construct
from utils.exceptions import ComplexInputError
from utils.general import create_response


@command_handler
def construct_command(args):
    """
    Build a stuck complex for (n, d), or explain why none exists (exit code 3).
    """
    run = load_run_config(args)
    if run.n is None or run.d is None:
        raise ComplexInputError("--n and --d are required")
    result = refusal(run.n, run.d)
    if result is None:
        seed = run_seed(run)
        result = theorem2_construct(run.n, run.d, seed)
    if isinstance(result, Refusal):
        print(str(result))
        print(f"  {result.citation}")
        return create_response(error=str(result), reason=result.reason.value), EXIT_REFUSED

    header = f"stuck complex n={run.n} d={run.d}\nseed {seed}\n" + '\n'.join(result.plan)
    data = {'facets': len(result.complex.facets), 'moves': len(result.certificate), 'seed': seed}
    if run.out:
        stem = f'stuck_{run.n}_{run.d}'
        facets = write_facet_file(result.complex, output_path(run.out, f'{stem}.facets'), header=header)
        certificate = write_certificate(result.certificate, output_path(run.out, f'{stem}.anticollapse.cert'))
        print(f"written {facets}")
        print(f"written {certificate}")
        data.update(facet_file=facets, cert_file=certificate)
    else:
        print(format_facets(result.complex, header=header), end='')
    return create_response(success=True, data=data), EXIT_OK


@command_handler
def base_case_command(args):
    """Search for a base case on n vertices in dimension d and optionally freeze it as golden files."""
    run = load_run_config(args)
    if run.n is None or run.d is None:
        raise ComplexInputError("--n and --d are required")
    seed = run_seed(run)
    entry = find_base_case(seed=seed, budget=run.budget, n=run.n, d=run.d, out_dir=run.out)
    certificate = entry.certificates[Claim.ANTICOLLAPSIBLE]
    print(f"{entry.name}: {len(entry.complex.facets)} facets, {len(certificate)} moves")
    if not run.out:
        print(format_facets(entry.complex, header=entry.name), end='')
    return create_response(success=True, data={'name': entry.name, 'moves': len(certificate)}), EXIT_OK


@command_handler
def reproduce_command(args):
    run = load_run_config(args)
    seed = 0 if run.seed is None else run_seed(run)
    frame = reproduce_paper(quick=run.quick, seed=seed, data_dir=args.data_dir)
    with pd.option_context('display.max_rows', None, 'display.max_colwidth', 80, 'display.width', 160):
        print(frame.to_string(index=False))
    failed = frame[~frame['passed']]
    if len(failed):
        for check in failed['check']:
            print(f"FAILED: {check}")
        return create_response(error=f"{len(failed)} checks failed", data={'failed': list(failed['check'])}), EXIT_FAILED
    return create_response(success=True, data={'checks': len(frame)}), EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('construct', help='stuck complex for (n, d) or a refusal')
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--d', type=int, required=True)
    parser.add_argument('--seed')
    parser.add_argument('--out', help='output directory for the facet file and certificate')
    parser.set_defaults(handler=construct_command)

    parser = subparsers.add_parser('base-case', help='search for a stuck base case on few vertices')
    parser.add_argument('--n', type=int, default=8)
    parser.add_argument('--d', type=int, default=2)
    parser.add_argument('--seed')
    parser.add_argument('--budget', type=int, help='hypertrees to try')
    parser.add_argument('--out', help='output directory for the facet file and certificate')
    parser.set_defaults(handler=base_case_command)

    parser = subparsers.add_parser('reproduce', help='run the full verification matrix')
    parser.add_argument('--quick', action='store_true', help='skip survey rows')
    parser.add_argument('--seed', help='seed for the searches (default 0)')
    parser.add_argument('--data-dir', dest='data_dir')
    parser.set_defaults(handler=reproduce_command)
