"""Coulomb branches of abelian theories, brane diagrams and S-dual pairs."""

import json

from . import _core
from ._core import (
    Error,
    chain_to_orbit,
    diagram_hw,
    diagram_linking,
    diagram_sdual,
    orbit_dim,
    partitions_of,
    quiver_to_diagram,
    transpose,
)

__all__ = [
    "Error",
    "chain_to_orbit",
    "coulomb",
    "coulomb_relation",
    "diagram_hw",
    "diagram_linking",
    "diagram_sdual",
    "orbit_dim",
    "partitions_of",
    "quiver_to_diagram",
    "sdual_space",
    "structure_constant",
    "transpose",
    "verify",
]


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def coulomb(theory):
    """Presentation of a rank-1 Coulomb branch as a dict."""
    return json.loads(_core.coulomb_presentation(_text(theory)))


def coulomb_relation(theory):
    return _core.coulomb_relation(_text(theory))


def structure_constant(theory, lam, mu):
    return _core.structure_constant(_text(theory), list(lam), list(mu))


def sdual_space(descriptor):
    return json.loads(_core.sdual_space(_text(descriptor)))


def verify(filter="", seed=None):
    """Run the verification suite; returns a list of (name, passed, detail)."""
    if seed is None:
        return _core.verify(filter)
    return _core.verify(filter, seed)
