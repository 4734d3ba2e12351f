import os
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Invalid value for {name}: expected an integer, got '{raw}'")


# Logging
LOG_LEVEL = os.getenv('STUCK_LOG_LEVEL', 'INFO').upper()

# Collapse search budgets
COLLAPSE_RESTARTS = _int_setting('STUCK_COLLAPSE_RESTARTS', 64)
BACKTRACK_FACE_LIMIT = _int_setting('STUCK_BACKTRACK_FACE_LIMIT', 25)

# Enumeration guard for the weighted hypertree count
KALAI_GUARD = _int_setting('STUCK_KALAI_GUARD', 25)

# Randomized base-case search
BASE_CASE_BUDGET = _int_setting('STUCK_BASE_CASE_BUDGET', 20000)

# Non-evasiveness memo size
NONEVASIVE_CACHE = _int_setting('STUCK_NONEVASIVE_CACHE', 200000)

# Survey fan-out
SURVEY_WORKERS = _int_setting('STUCK_SURVEY_WORKERS', 1)

# Golden files
DATA_DIR = os.getenv('STUCK_DATA_DIR', os.path.join(BASE_DIR, 'data'))
