"""Ground/air positions and the distance and elevation primitives.

Ground devices sit at altitude zero. Angles are exchanged in degrees.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# relative slack when comparing a slant distance against the altitude
_SLANT_RTOL = 1e-12


@dataclass(frozen=True)
class GroundPosition:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"ground coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class AirPosition:
    """UAV position; ``z`` is the altitude above ground."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise DomainError(f"air coordinates must be finite, got ({self.x}, {self.y}, {self.z})")
        if self.z <= 0:
            raise DomainError(f"altitude must be positive, got {self.z}")

    @property
    def ground(self) -> GroundPosition:
        return GroundPosition(self.x, self.y)


def distance_3d(g: GroundPosition, u: AirPosition) -> float:
    """Slant distance from a ground device to the UAV."""
    return math.sqrt((g.x - u.x) ** 2 + (g.y - u.y) ** 2 + u.z**2)


def distance_2d(a: GroundPosition, b: GroundPosition) -> float:
    """Horizontal distance between two ground devices (D2D link length)."""
    return math.hypot(a.x - b.x, a.y - b.y)


def ground_range(g: GroundPosition, u: AirPosition) -> float:
    """Horizontal distance from ``g`` to the point directly below the UAV."""
    return math.hypot(g.x - u.x, g.y - u.y)


def elevation_angle_deg(altitude: float, slant_distance: float) -> float:
    """Elevation angle in degrees seen from the ground, ``asin(H/d)``.

    Raises DomainError when the geometry is impossible (``d < H`` or ``d == 0``).
    A slant distance that falls short of ``H`` only by rounding is treated as vertical.
    """
    if altitude <= 0:
        raise DomainError(f"altitude must be positive, got {altitude}")
    if slant_distance <= 0 or slant_distance < altitude * (1 - _SLANT_RTOL):
        raise DomainError(
            f"slant distance {slant_distance} is below altitude {altitude}"
        )
    ratio = min(altitude / slant_distance, 1.0)
    return math.degrees(math.asin(ratio))
