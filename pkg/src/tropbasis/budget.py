"""Enumeration guards, overridable through the ``TROPMAT_BUDGET`` environment variable.

``TROPMAT_BUDGET`` is either a bare integer (a multiplier applied to every
guard) or a comma list of ``name=value`` pairs, e.g. ``zero_one_n=26,det_size=10``.
"""

import os

DEFAULTS = {
    "ground_set": 64,  # one machine word per subset
    "zero_one_n": 24,  # exhaustive 2^n point enumeration
    "cycle_edges": 24,
    "bond_vertices": 16,
    "det_size": 9,  # 9! permutations
    "set_cover_nodes": 2_000_000,
    "minors": 10_000,
    "support_n": 12,
    "rank_submatrices": 2_000_000,
}


def limit(name):
    value = DEFAULTS[name]
    raw = os.environ.get("TROPMAT_BUDGET", "").strip()
    if not raw:
        return value
    if raw.isdigit():
        # a bare integer only scales the node/count budgets, never the bit-width caps
        return value if name in ("ground_set", "zero_one_n", "det_size") else value * int(raw)
    for item in raw.split(","):
        key, _, val = item.partition("=")
        if key.strip() == name:
            return int(val)
    return value
