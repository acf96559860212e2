"""Exact invariants and proved bounds for edge ideals of clutters."""

import json as _json

from ._core import (
    MAX_VERTICES,
    Clutter,
    __version__,
    add_set,
    alexander_dual,
    bound_report_json,
    contract,
    cosize,
    homological_invariants,
    minimalize,
    random_clutter,
    reduce,
    size,
    stanley_depth,
    stanley_regularity,
)


def bound_report(clutter, witnesses=False):
    """Full invariant/bound/verdict record as a dict."""
    return _json.loads(bound_report_json(clutter, witnesses))


__all__ = [
    "MAX_VERTICES",
    "Clutter",
    "__version__",
    "add_set",
    "alexander_dual",
    "bound_report",
    "bound_report_json",
    "contract",
    "cosize",
    "homological_invariants",
    "minimalize",
    "random_clutter",
    "reduce",
    "size",
    "stanley_depth",
    "stanley_regularity",
]
