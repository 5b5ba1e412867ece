"""Exact domination polynomials, graph joins and D-equivalence checks."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import _atlas_json, _check_kk_json, _verify_json


def verify(claim, *params):
    """Run a claim check (fact1, thm2, thm3, thm4, counterexample); returns a dict."""
    return _json.loads(_verify_json(claim, list(params)))


def check_kk(sets):
    """Shadow-size report for a uniform family given as lists of vertices."""
    return _json.loads(_check_kk_json([list(s) for s in sets]))


def build_atlas(graphs):
    """Bucket graphs of one order by domination polynomial."""
    return _json.loads(_atlas_json(list(graphs)))
