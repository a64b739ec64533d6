"""Global degree cap for the Bell-number-scale operations.

Basis changes, coproducts, and symmetrized lifts all enumerate set
partitions, so their cost grows like the Bell numbers.  The environment
variable ``NCSYM_MAX_DEGREE`` (default 8) caps the degree these operations
will accept.
"""

import os

DEFAULT_MAX_DEGREE = 8
_ENV_VAR = "NCSYM_MAX_DEGREE"


class DegreeLimitError(ValueError):
    """An operation would exceed the configured degree cap."""


def max_degree() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise DegreeLimitError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None


def check_degree(n: int) -> None:
    cap = max_degree()
    if n > cap:
        raise DegreeLimitError(
            f"degree {n} exceeds the cap {cap}; set {_ENV_VAR} to raise it"
        )
