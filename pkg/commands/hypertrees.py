"""Commands for random hypertrees: kruskal, survey, kalai."""
from commands.common import emit_complex, load_run_config, run_seed
from decorators.command_handler import EXIT_FAILED, EXIT_OK, command_handler
from services.hypertree.kalai import kalai_check
from services.hypertree.kruskal import kruskal_generate
from services.hypertree.survey import survey
from utils.exceptions import ComplexInputError
from utils.general import create_response


def _require_nd(run):
    if run.n is None or run.d is None:
        raise ComplexInputError("--n and --d are required")
    return run.n, run.d


@command_handler
def kruskal_command(args):
    run = load_run_config(args)
    n, d = _require_nd(run)
    seed = run_seed(run)
    X = kruskal_generate(n, d, seed, oracle=run.oracle)
    emit_complex(X, run.out, header=f"kruskal n={n} d={d}\nseed {seed}")
    return create_response(success=True, data={'facets': len(X.faces_of_dim(d)), 'seed': seed}), EXIT_OK


@command_handler
def survey_command(args):
    run = load_run_config(args)
    n, d = _require_nd(run)
    if run.trials is None:
        raise ComplexInputError("--trials is required")
    seed = run_seed(run)
    summary, _ = survey(n, d, run.trials, seed, workers=run.workers, restarts=run.restarts, out_csv=run.out)
    print(f"survey n={n} d={d} trials={run.trials} seed={seed}")
    print(f"  collapsible, not anticollapsible: {summary.collapsible_not_anticollapsible}")
    print(f"  neither: {summary.neither}")
    print(f"  no free faces (complex or dual): {summary.no_free_faces}")
    print(f"  invalid: {summary.invalid}")
    data = {
        'collapsible_not_anticollapsible': summary.collapsible_not_anticollapsible,
        'neither': summary.neither,
        'no_free_faces': summary.no_free_faces,
        'invalid': summary.invalid,
    }
    if summary.invalid:
        return create_response(error=f"{len(summary.invalid)} invalid hypertrees", data=data), EXIT_FAILED
    return create_response(success=True, data=data), EXIT_OK


@command_handler
def kalai_command(args):
    run = load_run_config(args)
    n, d = _require_nd(run)
    total, expected, ok = kalai_check(n, d, guard=args.guard)
    print(f"n={n} d={d}: weighted sum {total}, expected {expected}, {'ok' if ok else 'MISMATCH'}")
    data = {'sum': total, 'expected': expected}
    return create_response(success=ok, data=data), EXIT_OK if ok else EXIT_FAILED


def register(subparsers):
    parser = subparsers.add_parser('kruskal', help='random hypertree by the Kruskal algorithm')
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--d', type=int, required=True)
    parser.add_argument('--seed')
    parser.add_argument('--oracle', action='store_true', help='cross-check ranks by full recomputation')
    parser.add_argument('--out')
    parser.set_defaults(handler=kruskal_command)

    parser = subparsers.add_parser('survey', help='classify many random hypertrees')
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--d', type=int, required=True)
    parser.add_argument('--trials', type=int, required=True)
    parser.add_argument('--seed')
    parser.add_argument('--workers', type=int)
    parser.add_argument('--restarts', type=int)
    parser.add_argument('--out', help='CSV file, one row per trial')
    parser.set_defaults(handler=survey_command)

    parser = subparsers.add_parser('kalai', help="exhaustive check of Kalai's weighted count")
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--d', type=int, required=True)
    parser.add_argument('--guard', type=int)
    parser.set_defaults(handler=kalai_command)
