"""
Verification matrix over the shipped complexes and the constructor.

Every row is one check with a pass flag and a short detail. Golden facet files in
the data directory are compared against pinned digests, so an edited file shows up
as a failing row, and the shipped base-case certificate is replayed.
"""
import os
from typing import List, Optional

import pandas as pd

import config
from decorators.measure_time import measure_execution_time
from models.reports import Refusal
from services.complex.facet_io import read_facet_file
from services.constructions.base_case import GOLDEN_NAME, golden_base_case, verify_base_case
from services.constructions.catalog import GOLDEN_DIGESTS, catalog, golden_path
from services.constructions.theorem import theorem2_construct
from services.hypertree.kalai import kalai_check
from services.hypertree.survey import survey
from utils.exceptions import StuckError
from utils.logging import setup_logger

logger = setup_logger(__name__)

GOLDEN_FILES = ['Y28_2', 'Y38_3', 'C38_3', 'RP2_6', 'DUNCE8_2']
CATALOG_ROWS = ['DUNCE8_2', 'dual_Y38_3', 'dual_Y28_2', 'C38_3', 'dual_C38_3', 'Y28_2', 'Y38_3', 'RP2_6']
CONSTRUCT_RANGE = range(8, 11)
KALAI_CASES = [(4, 2), (5, 2), (3, 1), (4, 1), (5, 1), (6, 1)]


def _row(check: str, passed: bool, detail: str = '') -> dict:
    return {'check': check, 'passed': bool(passed), 'detail': detail}


def golden_file_rows(data_dir: str) -> List[dict]:
    rows = []
    for name in GOLDEN_FILES:
        path = golden_path(name, data_dir)
        check = f'file {name}'
        if not os.path.isfile(path):
            rows.append(_row(check, False, f'missing {path}'))
            continue
        try:
            matches = read_facet_file(path).digest() == GOLDEN_DIGESTS[name]
        except StuckError as e:
            rows.append(_row(check, False, str(e)))
            continue
        rows.append(_row(check, matches, 'digest ok' if matches else 'digest mismatch'))
    check = f'certificate {GOLDEN_NAME}'
    try:
        X, certificate = golden_base_case(data_dir)
    except StuckError as e:
        rows.append(_row(check, False, str(e)))
    else:
        passed = verify_base_case(X, certificate)
        rows.append(_row(check, passed, f'{len(certificate)} moves' if passed else 'does not verify'))
    return rows


def catalog_rows(seed: int) -> List[dict]:
    rows = []
    for name in CATALOG_ROWS:
        try:
            entry = catalog(name, seed=seed)
            rows.append(_row(f'catalog {name}', True, ', '.join(sorted(c.value for c in entry.claims))))
        except StuckError as e:
            rows.append(_row(f'catalog {name}', False, str(e)))
    return rows


def construction_rows(seed: int) -> List[dict]:
    rows = []
    for n in CONSTRUCT_RANGE:
        for d in range(n):
            admissible = 2 <= d <= n - 4
            check = f'construct ({n}, {d})'
            try:
                result = theorem2_construct(n, d, seed)
            except StuckError as e:
                rows.append(_row(check, False, str(e)))
                continue
            if isinstance(result, Refusal):
                rows.append(_row(check, not admissible, str(result)))
            else:
                detail = f'{len(result.complex.facets)} facets, {len(result.certificate)} moves'
                rows.append(_row(check, admissible, detail))
    return rows


def kalai_rows() -> List[dict]:
    rows = []
    for n, d in KALAI_CASES:
        total, expected, ok = kalai_check(n, d)
        rows.append(_row(f'kalai ({n}, {d})', ok, f'{total} vs {expected}'))
    return rows


def survey_rows(seed: int, trials: int = 20) -> List[dict]:
    summary, frame = survey(5, 2, trials, seed)
    collapsible = bool((frame['collapsible'] == 'found').all())
    passed = collapsible and not summary.invalid
    return [_row(f'survey (5, 2) x{trials}', passed, 'all collapsible' if collapsible else 'a trial was not collapsed')]


@measure_execution_time
def reproduce_paper(quick: bool = False, seed: int = 0, data_dir: Optional[str] = None) -> pd.DataFrame:
    """
    Run the whole verification matrix.

    Args:
        quick (bool): skip the survey rows.
        seed (int): seed for every search involved.
        data_dir (str): directory with the golden facet files; defaults to ``STUCK_DATA_DIR``.

    Returns:
        pd.DataFrame: columns ``check``, ``passed``, ``detail``.
    """
    data_dir = config.DATA_DIR if data_dir is None else data_dir
    rows = golden_file_rows(data_dir) + catalog_rows(seed) + construction_rows(seed) + kalai_rows()
    if not quick:
        rows += survey_rows(seed)
    frame = pd.DataFrame(rows, columns=['check', 'passed', 'detail'])
    failed = int((~frame['passed']).sum())
    logger.info(f"Reproduction: {len(frame) - failed} of {len(frame)} checks passed")
    return frame
