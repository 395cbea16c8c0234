"""Newton-polygon strata, deformations and monodromy certificates."""

import json

from . import _slopekit
from ._slopekit import SlopekitError

__all__ = [
    "SlopekitError",
    "as_reducible",
    "certify",
    "commutator_check",
    "deform",
    "generation_check",
    "np_attain",
    "np_compare",
    "polygon",
    "run_cli",
    "strata",
]


def _frac(x):
    return x if isinstance(x, str) else str(x)


def polygon(text):
    return json.loads(_slopekit.polygon(text))


def np_compare(a, b):
    return _slopekit.np_compare(a, b)


def np_attain(poly, lam):
    return json.loads(_slopekit.np_attain(poly, _frac(lam)))


def strata(d, c, lam, base=""):
    return json.loads(_slopekit.strata(d, c, _frac(lam), base))


def deform(base, lam, p=3, precision=0):
    return json.loads(_slopekit.deform(base, _frac(lam), p, precision))


def certify(base, lam, p=3, seed=0):
    return json.loads(_slopekit.certify(base, _frac(lam), p, seed))


def as_reducible(A, p, s, q):
    return json.loads(_slopekit.as_reducible(A, p, s, q))


def generation_check(p, s, n, covered, lam="", seed=0):
    return json.loads(_slopekit.generation_check(p, s, n, list(covered), _frac(lam), seed))


def commutator_check(p, s, r, x, y, n):
    return json.loads(_slopekit.commutator_check(p, s, r, x, y, n))


def run_cli(args):
    """Runs the command-line tool in process; returns (status, stdout bytes, stderr)."""
    return _slopekit.run_cli([str(a) for a in args])
