"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``RESURGENCE_PURE_PYTHON`` is set to a non-empty value, the pure-Python
kernels are used. ``BACKEND`` names the active choice.
"""
import os

from . import _pykernels
from ._pykernels import BudgetExceeded

DEFAULT_NODE_BUDGET = 10**7


def _load_compiled():
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = None if os.environ.get("RESURGENCE_PURE_PYTHON") else _load_compiled()
_active = _compiled if _compiled is not None else _pykernels
BACKEND = "cython" if _compiled is not None else "python"

minimalize = _active.minimalize
product_min = _active.product_min
intersect_min = _active.intersect_min
member_of_power = _active.member_of_power
enumerate_symbolic = _active.enumerate_symbolic


def available_backends():
    """Map backend name to module, for benchmarks and equivalence tests."""
    out = {"python": _pykernels}
    compiled = _load_compiled()
    if compiled is not None:
        out["cython"] = compiled
    return out


def node_budget():
    """Membership search budget, overridable through RESURGENCE_NODE_BUDGET."""
    raw = os.environ.get("RESURGENCE_NODE_BUDGET")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"RESURGENCE_NODE_BUDGET must be an integer, got {raw!r}")
        if value <= 0:
            raise ValueError("RESURGENCE_NODE_BUDGET must be positive")
        return value
    return DEFAULT_NODE_BUDGET


__all__ = [
    "BACKEND", "BudgetExceeded", "DEFAULT_NODE_BUDGET", "available_backends",
    "enumerate_symbolic", "intersect_min", "member_of_power", "minimalize",
    "node_budget", "product_min",
]
