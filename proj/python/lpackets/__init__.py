"""Discrete-series L-packets of real reductive groups: packet structure,
transfer factors, and numerical verification of the endoscopic character
identities. Thin dict-based wrapper over the C++ core."""

import json as _json

from ._lpackets import (  # noqa: F401
    LpacketsError,
    builtin_groups,
    weyl_order,
)
from . import _lpackets as _core

__all__ = [
    "LpacketsError",
    "builtin_groups",
    "weyl_order",
    "describe",
    "packet",
    "endoscopy",
    "verify",
    "oracle",
]


def _call(fn, config):
    if isinstance(config, dict):
        config = _json.dumps(config)
    return _json.loads(fn(config))


def describe(config):
    """Root datum, dual, gradings, cohomology and component groups."""
    return _call(_core.describe_json, config)


def packet(config):
    """Packet members with classes, pairings, and generic flags."""
    return _call(_core.packet_json, config)


def endoscopy(config):
    """Endoscopic side summary: H roots, epsilon, q-invariants."""
    return _call(_core.endoscopy_json, config)


def verify(config):
    """Numerically verify the endoscopic character identity."""
    return _call(_core.verify_json, config)


def oracle(family):
    """Matrix-model cross check; family is 'A1-sc' or 'A1-adj'."""
    return _json.loads(_core.oracle_json(family))
