import os
from typing import Optional

from models.complex import SimplicialComplex
from models.run_config import RunConfig
from models.schemas import RunConfigSchema
from services.complex.facet_io import format_facets, write_facet_file
from utils.seeding import resolve_seed

run_config_schema = RunConfigSchema()


def load_run_config(args) -> RunConfig:
    """Validate parsed arguments; raises marshmallow ``ValidationError`` on bad values."""
    return run_config_schema.load({k: v for k, v in vars(args).items() if v is not None})


def run_seed(run: RunConfig) -> int:
    """The seed of a randomized command; ``auto`` draws one and reports it."""
    seed = resolve_seed(run.seed)
    if str(run.seed).strip().lower() == 'auto':
        print(f"seed: {seed}")
    return seed


def emit_complex(X: SimplicialComplex, out: Optional[str], header: Optional[str] = None) -> Optional[str]:
    """Write ``X`` to ``out`` when given, else print it."""
    if out:
        return write_facet_file(X, out, header=header)
    print(format_facets(X, header=header), end='')
    return None


def output_path(directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)
