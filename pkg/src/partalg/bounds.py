"""Size caps for enumerations that grow like Bell numbers.

``PARTALG_MAX_K`` raises every default cap to at least its value.
"""

import os


class BoundError(ValueError):
    """A request exceeds a configured enumeration bound."""


def cap(default: int) -> int:
    env = os.environ.get("PARTALG_MAX_K")
    if env:
        try:
            return max(default, int(env))
        except ValueError:
            raise BoundError(f"PARTALG_MAX_K is not an integer: {env!r}") from None
    return default


def check(value: int, default: int, what: str) -> None:
    limit = cap(default)
    if value > limit:
        raise BoundError(
            f"{what}={value} exceeds the bound {limit} (set PARTALG_MAX_K to raise it)"
        )
