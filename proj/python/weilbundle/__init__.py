"""Exact Weil algebras, prolonged Poisson structures and truncated Poisson cohomology."""
import json

from ._weilcore import (  # noqa: F401
    Error,
    MismatchError,
    ParseError,
    PoissonStructure,
    ValidationError,
    WeilAlgebra,
    algebra_from_json,
    bracket,
    center,
    eval,
    jet,
    prolong,
    real,
    so3,
    structure_from_json,
    symplectic,
    verify,
    zero_structure,
)
from ._weilcore import _betti_json


def betti(structure, complex="base", degree=2, algebra=None, pmin=0, pmax=None, seed=None):
    """Cohomology report as a dict with the same layout as `weil cohomology`."""
    return json.loads(_betti_json(structure, complex, degree, algebra, pmin, pmax, seed))
