"""Python bindings for the hslab verification toolkit."""

import json

from ._core import (
    AdmissibilityError,
    ConfigError,
    DomainError,
    Error,
    NotFoundError,
    PoleError,
    QuadratureError,
    SupportError,
    UnsupportedModelError,
    bessel_j,
    evaluate,
    first_variation,
    fresnel_bessel,
    gamma,
    geometry,
    version,
)
from . import _core

__all__ = [
    "AdmissibilityError",
    "ConfigError",
    "DomainError",
    "Error",
    "NotFoundError",
    "PoleError",
    "QuadratureError",
    "SupportError",
    "UnsupportedModelError",
    "bessel_j",
    "describe",
    "evaluate",
    "exit_status",
    "families",
    "first_variation",
    "fresnel_bessel",
    "gamma",
    "geometry",
    "sweep",
    "twistor_residuals",
    "verify",
    "version",
]


def families(tier=None, ambient=None):
    """Registry manifest entries, optionally filtered by tier ("A", "B", "control") or ambient prefix."""
    out = json.loads(_core.manifest_json())
    if tier is not None:
        out = [f for f in out if f["tier"] == tier]
    if ambient is not None:
        out = [f for f in out if f["ambient"].startswith(ambient)]
    return out


def describe(family):
    for f in json.loads(_core.manifest_json()):
        if f["id"] == family:
            return f
    raise NotFoundError(f"no family with id '{family}'")


def verify(family, params=None, grid=200, nested=50, seed=1, variant="", tol_profile="default", workers=0):
    """Run every check on one family; returns the list of report dicts."""
    return json.loads(
        _core.verify_json(family, params or {}, grid, nested, seed, variant, tol_profile, workers)
    )


def sweep(config):
    """Batch run from a configuration dict with the same keys as the sweep config file."""
    return json.loads(_core.sweep_json(json.dumps(config)))


def twistor_residuals(solution="", params=None, grid=1000, seed=1):
    return json.loads(_core.twistor_json(solution, params or {}, grid, seed))


def _passed(report):
    if report["error"]:
        return False
    return all(c["pass"] != c["expected_fail"] for c in report["checks"])


def exit_status(reports):
    """0 when every required check passes, 1 otherwise (same rule as the command-line tool)."""
    for r in reports:
        if _passed(r):
            continue
        if r["tier"] == "B" and r["discrepancy"]:
            continue
        return 1
    return 0
