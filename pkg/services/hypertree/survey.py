"""
Seeded surveys of Kruskal hypertrees.

Each trial derives its own seed from the master seed and its index, so trials may
run on any number of workers and still reproduce. Rows are collected in trial order
and written once.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Optional, Tuple

import pandas as pd

import config
from decorators.measure_time import measure_execution_time
from models.reports import HypertreeReport, SurveySummary, Tri
from services.hypertree.kruskal import kruskal_generate
from services.hypertree.report import is_hypertree
from utils.general import binomial, validate_positive_int
from utils.logging import setup_logger
from utils.seeding import derive_seed

logger = setup_logger(__name__)

CSV_COLUMNS = ['trial', 'seed', 'facets', 'q_acyclic', 'torsion', 'dcollapsible',
               'collapsible', 'anticollapsible', 'free_faces', 'dual_free_faces']


def run_trial(n: int, d: int, seed: int, restarts: Optional[int] = None) -> HypertreeReport:
    return is_hypertree(kruskal_generate(n, d, seed), d, restarts=restarts, seed=seed)


def iter_survey(n: int, d: int, trials: int, seed: int, workers: Optional[int] = None,
                restarts: Optional[int] = None) -> Iterator[Tuple[int, HypertreeReport]]:
    """Yield (trial index, report) in trial order."""
    validate_positive_int(trials, 'trials')
    workers = config.SURVEY_WORKERS if workers is None else workers
    seeds = [derive_seed(seed, trial) for trial in range(trials)]
    if workers <= 1:
        for trial, trial_seed in enumerate(seeds):
            yield trial, run_trial(n, d, trial_seed, restarts)
        return
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = executor.map(lambda s: run_trial(n, d, s, restarts), seeds)
        for trial, report in enumerate(results):
            yield trial, report


def classify(summary: SurveySummary, trial: int, report: HypertreeReport, expected_facets: int):
    """Record the trial in every class of the summary it belongs to."""
    if report.facet_count != expected_facets or not report.q_acyclic:
        summary.invalid.append(trial)
    if report.collapsible is Tri.FOUND and report.anticollapsible is Tri.REFUTED:
        summary.collapsible_not_anticollapsible.append(trial)
    if report.collapsible is Tri.REFUTED and report.anticollapsible is Tri.REFUTED:
        summary.neither.append(trial)
    if report.no_free_faces or report.dual_no_free_faces:
        summary.no_free_faces.append(trial)


@measure_execution_time
def survey(n: int, d: int, trials: int, seed: int, workers: Optional[int] = None,
           restarts: Optional[int] = None, out_csv: Optional[str] = None) -> Tuple[SurveySummary, pd.DataFrame]:
    """
    Generate ``trials`` hypertrees, classify each one and tally the interesting classes.

    Args:
        n (int): number of vertices.
        d (int): dimension.
        trials (int): number of hypertrees.
        seed (int): master seed.
        workers (int): thread count; defaults to ``STUCK_SURVEY_WORKERS``.
        restarts (int): collapse-search restarts per check.
        out_csv (str): optional CSV path, one row per trial.

    Returns:
        tuple: (SurveySummary, DataFrame of the rows)
    """
    summary = SurveySummary(n=n, d=d, trials=trials, seed=seed)
    expected_facets = binomial(n - 1, d)
    rows = []
    for trial, report in iter_survey(n, d, trials, seed, workers, restarts):
        classify(summary, trial, report, expected_facets)
        rows.append({'trial': trial, **report.as_row()})
        if trial and trial % 1000 == 0:
            logger.info(f"Survey n={n} d={d}: {trial} of {trials} trials done")

    frame = pd.DataFrame(rows, columns=CSV_COLUMNS)
    if out_csv:
        frame.to_csv(out_csv, index=False)
        logger.info(f"Survey written to {out_csv}")
    logger.info(
        f"Survey n={n} d={d} seed={seed}: {len(summary.collapsible_not_anticollapsible)} collapsible only, "
        f"{len(summary.neither)} neither, {len(summary.no_free_faces)} without free faces, "
        f"{len(summary.invalid)} invalid"
    )
    return summary, frame
