"""Configurable size guards.

Exhaustive algorithms refuse inputs above these limits instead of running for
hours. Limits can be changed for a block of code::

    with guards.override(fractures=1_000_000):
        ...
"""

from contextlib import contextmanager
from contextvars import ContextVar

from fraclab.errors import GuardExceeded

DEFAULTS = {
    "fractures": 100_000,          # rows of the fracture matrix
    "hom_pattern_vertices": 8,     # uncoloured brute-force hom/sub/indsub
    "invariant_vertices": 20,      # exhaustive invariants
    "treewidth_vertices": 18,
    "minor_host_vertices": 9,
    "edge_subsets_edges": 12,      # rows of the edge-subset matrix = 2**this
    "automorphism_vertices": 9,
    "colour_subsets": 16,          # inclusion-exclusion over 2**this colour sets
    "enumeration": 10**8,          # binomial bound for matching / indset counts
}

_overrides: ContextVar[dict] = ContextVar("fraclab_guard_overrides", default={})


def get(name):
    if name not in DEFAULTS:
        raise KeyError(f"unknown guard {name!r}")
    return _overrides.get().get(name, DEFAULTS[name])


def check(name, actual):
    limit = get(name)
    if actual > limit:
        raise GuardExceeded(name, limit, actual)


@contextmanager
def override(**limits):
    for key in limits:
        if key not in DEFAULTS:
            raise KeyError(f"unknown guard {key!r}")
    token = _overrides.set({**_overrides.get(), **limits})
    try:
        yield
    finally:
        _overrides.reset(token)
