"""Size budgets for the exhaustive routines.

Defaults can be overridden with the ``SEPDEPTH_BUDGET`` environment variable,
a comma separated list of ``name=value`` pairs, e.g.
``SEPDEPTH_BUDGET="tw_exact=22,oracle_td=14"``.
"""
from __future__ import annotations

import os

from .errors import BudgetError, InputError

DEFAULTS = {
    "vertex_set": 1024,  # widest graph accepted by Graph/VertexSet
    "oracle_td": 12,  # treedepth_bruteforce
    "oracle_sep": 16,  # minimal_separators_bruteforce
    "oracle_tw": 8,  # treewidth_bruteforce (n! orderings)
    "tw_exact": 20,  # subset DP treewidth
    "minor": 16,  # branch-set minor search
    "corpus_exhaustive": 7,  # exhaustive connected corpus
    "top_separators": 64,  # analyze: per-separator heights for the optimal set
}

ENV_VAR = "SEPDEPTH_BUDGET"


def _parse(text: str) -> dict[str, int]:
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULTS:
            raise InputError(f"bad {ENV_VAR} entry {item!r}; known names: {', '.join(DEFAULTS)}")
        try:
            out[key] = int(value)
        except ValueError:
            raise InputError(f"bad {ENV_VAR} value {value!r} for {key}") from None
        if out[key] < 0:
            raise InputError(f"{ENV_VAR} value for {key} must be non-negative")
    return out


def get(name: str) -> int:
    """Current budget ``name``; the environment is re-read on every call."""
    overrides = _parse(os.environ.get(ENV_VAR, ""))
    return overrides.get(name, DEFAULTS[name])


def check(name: str, size: int, what: str) -> None:
    limit = get(name)
    if size > limit:
        raise BudgetError(f"{what}: {size} vertices exceeds the {name} budget of {limit}")
