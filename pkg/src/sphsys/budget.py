"""Search budget shared by the combinatorial kernels.

SPHSYS_MAX_STATES bounds state explosion in the Hilbert basis completion and
the inequality elimination; both fault loudly instead of degrading.
"""

import os

_DEFAULT = 1_000_000


def max_states() -> int:
    raw = os.environ.get("SPHSYS_MAX_STATES", "")
    return int(raw) if raw.isdigit() else _DEFAULT


class BudgetExceeded(RuntimeError):
    pass
