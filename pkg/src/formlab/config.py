"""Run configuration: computation budgets and the default RNG seed.

Precedence everywhere is: explicit argument > environment variable > default.
Environment variables use the FORMLAB_ prefix (FORMLAB_BUDGET_ELEMENTS,
FORMLAB_BUDGET_LATTICE, FORMLAB_BUDGET_ISO, FORMLAB_SEED, ...).
"""

from __future__ import annotations

import dataclasses
import os

ENV_PREFIX = "FORMLAB_"

DEFAULT_SEED = 1729
DEFAULT_SAMPLE = 500


@dataclasses.dataclass(frozen=True)
class Budgets:
    """Hard caps that turn runaway computations into ResourceLimitError."""

    elements: int = 2_000_000   # max elements materialised per group closure
    lattice: int = 2000         # max |G| for full subgroup-lattice enumeration
    isomorphism: int = 2048     # max |G| for isomorphism backtracking

    def replace(self, **kw) -> "Budgets":
        return dataclasses.replace(self, **{k: v for k, v in kw.items() if v is not None})


def _env_int(name: str) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {ENV_PREFIX}{name} must be an integer, got {raw!r}")


def budgets_from_env(base: Budgets | None = None) -> Budgets:
    """Apply FORMLAB_BUDGET_* environment overrides on top of `base`."""
    base = base or Budgets()
    return base.replace(
        elements=_env_int("BUDGET_ELEMENTS"),
        lattice=_env_int("BUDGET_LATTICE"),
        isomorphism=_env_int("BUDGET_ISO"),
    )


DEFAULT_BUDGETS = Budgets()
