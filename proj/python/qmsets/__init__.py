"""Quantum mechanics over sets: GF(2) kets, partitions, attributes and measurement."""

import json as _json

from ._qmsets import *  # noqa: F401,F403
from ._qmsets import run_scenario


def run_records(text, seed=None, cyclic_order=False):
    """Run scenario text and return the structured records as a dict."""
    return _json.loads(run_scenario(text, format="json", seed=seed, cyclic_order=cyclic_order))
