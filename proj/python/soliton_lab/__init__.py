"""Python interface to the soliton_lab C++ core."""

import json

from . import _core
from ._core import (
    Error,
    associate_isothermal_defect,
    conjugacy_defect,
    identity_names,
    isothermal_defect,
    run_cli,
    soliton_point,
    solution_names,
    surface_names,
    surface_point,
    we_closed_form,
    we_data_names,
    we_integrate,
    whitham_constraint_defect,
    whitham_defect,
)

__all__ = [
    "Error",
    "associate_isothermal_defect",
    "classify",
    "conjugacy_defect",
    "identity",
    "identity_names",
    "isothermal_defect",
    "residual",
    "run_cli",
    "soliton_point",
    "solution_names",
    "surface_names",
    "surface_point",
    "we_closed_form",
    "we_data_names",
    "we_integrate",
    "whitham_constraint_defect",
    "whitham_defect",
]


def residual(name, grid="", backend="exact_jet", h=1e-4, k=1.0, margin=1e-2, points=False):
    """Residual report of a catalog solution as a dict."""
    return json.loads(_core.residual_json(name, grid, backend, h, k, margin, points))


def classify(solution, y, z):
    """Causal class, fundamental forms, normal and H of a graph point."""
    return json.loads(_core.classify_json(solution, y, z))


def identity(name, K=(100, 1000, 10000), X=0, A=0, zeta=2, tail=False, margin=1e-2):
    """Truncation table of a series or product identity."""
    return json.loads(_core.identity_json(name, list(K), complex(X), complex(A), complex(zeta), tail, margin))
