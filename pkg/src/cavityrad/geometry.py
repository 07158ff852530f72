"""Cavity geometries, boundary conditions and Weyl geometry descriptors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "BoundaryCondition",
    "FilmGeometry",
    "RodGeometry",
    "BoxGeometry",
    "SphereGeometry",
    "GeometryDescriptors",
    "descriptors_for",
]


class BoundaryCondition(Enum):
    """Wavevector quantization rule on the constrained directions."""

    PERIODIC = "periodic"
    ANTIPERIODIC = "antiperiodic"
    DIRICHLET = "dirichlet"


def _require_positive(name, *values):
    for v in values:
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            raise ValueError("%s must be a positive finite length" % name)


@dataclass(frozen=True)
class FilmGeometry:
    """Two infinite parallel plates a distance L1 apart (m)."""

    L1: float

    def __post_init__(self):
        _require_positive("L1", self.L1)


@dataclass(frozen=True)
class RodGeometry:
    """Infinite rod with finite transverse cross-section L1 x L2 (m)."""

    L1: float
    L2: float

    def __post_init__(self):
        _require_positive("L1, L2", self.L1, self.L2)


@dataclass(frozen=True)
class BoxGeometry:
    """Closed rectangular box with edge lengths L1, L2, L3 (m)."""

    L1: float
    L2: float
    L3: float

    def __post_init__(self):
        _require_positive("L1, L2, L3", self.L1, self.L2, self.L3)

    @property
    def volume(self):
        return self.L1 * self.L2 * self.L3


@dataclass(frozen=True)
class SphereGeometry:
    """Closed sphere of the given diameter (m)."""

    diameter: float

    def __post_init__(self):
        _require_positive("diameter", self.diameter)

    @property
    def radius(self):
        return 0.5 * self.diameter

    @property
    def volume(self):
        return 4.0 / 3.0 * math.pi * self.radius**3


@dataclass(frozen=True)
class GeometryDescriptors:
    """Volume V (m^3), surface area A (m^2) and integrated mean curvature M (m).

    M is the surface integral of (kappa_1 + kappa_2)/2; for polyhedra it
    concentrates on the edges as sum(edge length * exterior angle)/2, which
    gives pi*(L1 + L2 + L3) for a box.
    """

    V: float
    A: float
    M: float


def descriptors_for(geom):
    """Weyl descriptors (V, A, M) for a box or a sphere."""
    if isinstance(geom, BoxGeometry):
        l1, l2, l3 = geom.L1, geom.L2, geom.L3
        return GeometryDescriptors(
            V=l1 * l2 * l3,
            A=2.0 * (l1 * l2 + l2 * l3 + l3 * l1),
            M=math.pi * (l1 + l2 + l3),
        )
    if isinstance(geom, SphereGeometry):
        r = geom.radius
        return GeometryDescriptors(
            V=4.0 / 3.0 * math.pi * r**3,
            A=4.0 * math.pi * r**2,
            M=4.0 * math.pi * r,
        )
    raise TypeError("descriptors are defined for BoxGeometry and SphereGeometry only")
