"""Exact computations with induced Whittaker modules over affine sl(n).

Configurations are given either as a preset name (see ``presets()``), a JSON
string, or a dict in the configuration schema.  Solver results come back as
the same JSON reports the command line tool writes.
"""

import json as _json

from ._affwhit import (  # noqa: F401
    AffwhitError,
    Sequence,
    bracket,
    is_strongly_generic_set,
    pairing,
    presets,
    window_rank_check,
)
from . import _affwhit


def _source(config):
    if isinstance(config, dict):
        return _json.dumps(config)
    return config


def describe(config):
    return _json.loads(_affwhit._describe(_source(config)))


def check_sequences(config):
    return _json.loads(_affwhit._check_sequences(_source(config)))


def whittaker(config, D=None, E=None, J=None):
    return _json.loads(_affwhit._whittaker(_source(config), D, E, J))


def tensor(left, right, D=None, E=None, J=None):
    return _json.loads(_affwhit._tensor(_source(left), _source(right), D, E, J))
