from math import comb, prod

from utils.exceptions import ComplexInputError


def create_response(success=False, data=None, error=None, **kwargs):
    response = {
        'success': success,
        'data': data,
        'error': error,
        **kwargs
    }
    return response


def validate_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComplexInputError(f"Invalid {name}: expected an integer, got {value!r}")
    if value < 1:
        raise ComplexInputError(f"Invalid {name}: expected a positive integer, got {value}")
    return value


def validate_non_negative_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComplexInputError(f"Invalid {name}: expected an integer, got {value!r}")
    if value < 0:
        raise ComplexInputError(f"Invalid {name}: expected a non-negative integer, got {value}")
    return value


def parse_vertex_list(text: str) -> list:
    """Parse a whitespace or comma separated list of vertex labels."""
    tokens = text.replace(',', ' ').split()
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ComplexInputError(f"Invalid vertex list: '{text}'")


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def product(values) -> int:
    return prod(values, start=1)
