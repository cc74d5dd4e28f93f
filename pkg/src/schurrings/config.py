"""Resource caps shared by the search routines.

Every cap can be overridden through an ``SRL_``-prefixed environment
variable: ``SRL_MAX_ORDER`` (S-ring automorphism searches, same as the
``--max-order`` flag), ``SRL_TIME_BUDGET_SECS``, ``SRL_MAX_PRODUCT_ORDER``,
``SRL_MAX_AUT_GROUP_ORDER``, ``SRL_MAX_ENUM_ORDER`` and
``SRL_MAX_ENUM_ELEMENTS``.  Command line flags win over the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class CapExceeded(RuntimeError):
    """A configured size or time budget was exceeded."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get("SRL_" + name.upper())
    return int(raw) if raw else default


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get("SRL_" + name.upper())
    return float(raw) if raw else default


@dataclass
class Limits:
    max_order: int = 4096          # direct products
    max_aut_group_order: int = 64  # Group automorphism search
    max_sring_order: int = 256     # S-ring automorphism search
    max_enum_order: int = 12       # exhaustive S-ring enumeration
    max_enum_elements: int = 1 << 20
    time_budget_secs: float = 300.0

    @classmethod
    def from_env(cls) -> "Limits":
        base = cls()
        return cls(
            max_order=_env_int("max_product_order", base.max_order),
            max_aut_group_order=_env_int("max_aut_group_order", base.max_aut_group_order),
            max_sring_order=_env_int("max_order", base.max_sring_order),
            max_enum_order=_env_int("max_enum_order", base.max_enum_order),
            max_enum_elements=_env_int("max_enum_elements", base.max_enum_elements),
            time_budget_secs=_env_float("time_budget_secs", base.time_budget_secs),
        )


LIMITS = Limits.from_env()
