"""Exact invariants of rational tangles, Montesinos links, and Seifert
fibered surgeries, with the twist-path bookkeeping of the Seifert Surgery
Network. Thin wrapper over the C++ core."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import _verify_json

__all__ = [name for name in dir() if not name.startswith("_")] + ["verify"]


def verify(suite, l=(-8, 8), m=(-8, 8), n=(-8, 8), p=(-8, 8),
           enforce_mp_zero=True, cap=10_000_000, jobs=1):
    """Run one verification sweep and return the report as a dict.

    Suites: h1-slope, cf-fractions, path-realization, isotopy-identity,
    annular-composition, homology-claims, hypothesis-implications, all.
    """
    return _json.loads(
        _verify_json(suite, tuple(l), tuple(m), tuple(n), tuple(p),
                     enforce_mp_zero, cap, jobs))
