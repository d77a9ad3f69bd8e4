"""Shared fixtures: the seeded 200-instance random suite and named cases.

The suite spans dimensions 2, 3 and 4 with fixed seeds so every run sees
the same polytopes. Full analysis reports are computed once per session
and shared by the tests that need them.
"""

from __future__ import annotations

import pytest

from polyadj import analyze
from polyadj.generators import cube, fig1, random_lattice_polytope, scaled_simplex

# (dim, points, box, first seed, count); 100 + 70 + 30 = 200 instances.
SUITE_SPECS = (
    (2, 7, 5, 1000, 100),
    (3, 7, 3, 2000, 70),
    (4, 6, 2, 4000, 30),
)


def suite_params():
    out = []
    for d, n, box, seed0, count in SUITE_SPECS:
        out.extend((d, n, box, seed0 + i) for i in range(count))
    return out


@pytest.fixture(scope="session")
def suite():
    """All 200 random lattice polytopes, keyed by dimension and seed."""
    return tuple((f"d{d}-s{seed}", random_lattice_polytope(d, n, seed, box=box))
                 for d, n, box, seed in suite_params())


@pytest.fixture(scope="session")
def suite_reports(suite):
    """Full analysis of every suite instance, computed once per session."""
    return {key: analyze(p) for key, p in suite}


@pytest.fixture(scope="session")
def named():
    out = {"fig1": fig1()}
    for d in (2, 3, 4):
        out[f"cube{d}"] = cube(d)
        out[f"simplex{d}"] = scaled_simplex(d, 1)
    out["simplex2x3"] = scaled_simplex(2, 3)
    return out
