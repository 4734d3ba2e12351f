from dataclasses import dataclass
from typing import Optional


@dataclass
class RunConfig:
    """Validated arguments of one CLI invocation."""
    subcommand: str
    seed: object = None
    restarts: Optional[int] = None
    budget: Optional[int] = None
    trials: Optional[int] = None
    workers: Optional[int] = None
    n: Optional[int] = None
    d: Optional[int] = None
    facet_file: Optional[str] = None
    cert_file: Optional[str] = None
    out: Optional[str] = None
    allow_trivial: bool = False
    oracle: bool = False
    quick: bool = False
