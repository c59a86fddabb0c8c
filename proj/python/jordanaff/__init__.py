"""Real Jordan algebras, their structure Lie algebras and the induced
equiaffine symmetric hypersurfaces. Rationals cross the boundary as strings."""

import json

from ._jordanaff import (  # noqa: F401
    Algebra,
    AlgebraError,
    Model,
    build_family,
    build_model,
    compose,
    direct_sum,
    families,
    reconstruct,
)
from . import _jordanaff


def verify(algebra, kind, samples=100, seed=1, L1="-1"):
    """Run a check suite; returns the report as a dict."""
    return json.loads(_jordanaff.verify(algebra, kind, samples, seed, str(L1)))


def verify_det_formula(family, m=0, gamma=(), q=(), samples=20, seed=1):
    return json.loads(_jordanaff.verify_det_formula(family, m, list(gamma), list(q), samples, seed))
