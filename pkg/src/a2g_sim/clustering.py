"""Ground-device population and cluster formation.

Devices are dropped as a homogeneous Poisson point process on a disc centred
at the origin, each with a residual energy drawn uniformly from [0, 1].
Devices at or above the energy threshold become cluster heads; every other
device joins the nearest head within D2D range, or stays uncovered.

Random numbers come from numpy's PCG64 bit generator seeded with the 64-bit
``seed``; draws are taken in a fixed order (count, radii, angles, energies)
so a seed always reproduces the same population.
"""
from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .emit import fmt6
from .errors import CapacityError, DomainError
from .geometry import GroundPosition, distance_2d

DEFAULT_MAX_DEVICES = 1_000_000
DEVICE_CSV_HEADER = ("id", "x_m", "y_m", "energy", "role", "head_id")


class Role(str, enum.Enum):
    HEAD = "head"
    MEMBER = "member"
    UNCOVERED = "uncovered"


@dataclass(frozen=True)
class Device:
    id: int
    position: GroundPosition
    residual_energy: float
    role: Role = Role.UNCOVERED
    head_id: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.residual_energy <= 1.0:
            raise DomainError(f"residual energy must lie in [0, 1], got {self.residual_energy}")
        if (self.role is Role.MEMBER) != (self.head_id is not None):
            raise DomainError("head_id is set exactly when the device is a member")


@dataclass(frozen=True)
class Cluster:
    head_id: int
    member_ids: tuple[int, ...] = ()


@dataclass(frozen=True)
class ClusteringParams:
    region_radius: float = 500.0
    density: float = 1e-4
    energy_threshold: float = 0.5
    d2d_range: float = 50.0
    seed: int = 0
    max_devices: int = DEFAULT_MAX_DEVICES

    def __post_init__(self) -> None:
        if not self.region_radius > 0:
            raise DomainError("region_radius must be positive")
        if not self.density >= 0:
            raise DomainError("density must be non-negative")
        if not self.d2d_range > 0:
            raise DomainError("d2d_range must be positive")
        if not 0.0 <= self.energy_threshold <= 1.0:
            raise DomainError("energy_threshold must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class ClusteringReport:
    total: int
    heads: int
    members: int
    uncovered: int
    mean_cluster_size: float
    max_member_distance_m: float
    coverage_fraction: float

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "heads": self.heads,
            "members": self.members,
            "uncovered": self.uncovered,
            "mean_cluster_size": self.mean_cluster_size,
            "max_member_distance_m": self.max_member_distance_m,
            "coverage_fraction": self.coverage_fraction,
        }


def generate_devices_ppp(params: ClusteringParams) -> list[Device]:
    """Draw a Poisson point population on the disc of radius ``params.region_radius``."""
    rng = np.random.Generator(np.random.PCG64(params.seed))
    mean = params.density * math.pi * params.region_radius**2
    n = int(rng.poisson(mean)) if mean > 0 else 0
    if n > params.max_devices:
        raise CapacityError(f"{n} devices drawn, cap is {params.max_devices}")
    # sqrt of a uniform gives an area-uniform radius
    r = params.region_radius * np.sqrt(rng.random(n))
    phi = 2.0 * math.pi * rng.random(n)
    energy = rng.random(n)
    xs = r * np.cos(phi)
    ys = r * np.sin(phi)
    return [
        Device(i, GroundPosition(float(xs[i]), float(ys[i])), float(energy[i]))
        for i in range(n)
    ]


def elect_cluster_heads(devices: Iterable[Device], energy_threshold: float) -> list[int]:
    return sorted(d.id for d in devices if d.residual_energy >= energy_threshold)


def assign_members(
    devices: Sequence[Device], head_ids: Sequence[int], d2d_range: float
) -> tuple[list[Cluster], list[int]]:
    """Attach each non-head device to its nearest head within ``d2d_range``.

    Equidistant heads resolve to the lowest id. Returns the clusters (ordered
    by head id, members by device id) and the ids left uncovered.
    """
    by_id = {d.id: d for d in devices}
    heads = sorted(set(head_ids))
    for h in heads:
        if h not in by_id:
            raise DomainError(f"head id {h} is not a device")
    members: dict[int, list[int]] = {h: [] for h in heads}
    uncovered: list[int] = []
    head_set = set(heads)
    others = sorted(i for i in by_id if i not in head_set)

    for i in others:
        p = by_id[i].position
        best, best_d = None, math.inf
        # heads are scanned in ascending id order, so strict < keeps the lowest id on ties
        for h in heads:
            dist = distance_2d(p, by_id[h].position)
            if dist < best_d:
                best, best_d = h, dist
        if best is not None and best_d <= d2d_range:
            members[best].append(i)
        else:
            uncovered.append(i)

    clusters = [Cluster(h, tuple(members[h])) for h in heads]
    return clusters, uncovered


def apply_roles(
    devices: Sequence[Device], clusters: Sequence[Cluster], uncovered: Sequence[int]
) -> list[Device]:
    """Return copies of ``devices`` with roles set from a clustering result."""
    role: dict[int, tuple[Role, int | None]] = {i: (Role.UNCOVERED, None) for i in uncovered}
    for c in clusters:
        role[c.head_id] = (Role.HEAD, None)
        for m in c.member_ids:
            role[m] = (Role.MEMBER, c.head_id)
    return [replace(d, role=role[d.id][0], head_id=role[d.id][1]) for d in devices]


def clustering_report(
    clusters: Sequence[Cluster], uncovered: Sequence[int], devices: Sequence[Device]
) -> ClusteringReport:
    """Summary counts; an empty population counts as fully covered."""
    by_id = {d.id: d for d in devices}
    n_heads = len(clusters)
    n_members = sum(len(c.member_ids) for c in clusters)
    total = len(devices)
    max_dist = 0.0
    for c in clusters:
        head = by_id[c.head_id].position
        for m in c.member_ids:
            max_dist = max(max_dist, distance_2d(head, by_id[m].position))
    return ClusteringReport(
        total=total,
        heads=n_heads,
        members=n_members,
        uncovered=len(uncovered),
        mean_cluster_size=n_members / n_heads if n_heads else 0.0,
        max_member_distance_m=max_dist,
        coverage_fraction=(n_heads + n_members) / total if total else 1.0,
    )


def devices_to_csv(devices: Sequence[Device]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DEVICE_CSV_HEADER)
    for d in devices:
        writer.writerow(
            [
                d.id,
                fmt6(d.position.x),
                fmt6(d.position.y),
                fmt6(d.residual_energy),
                d.role.value,
                "" if d.head_id is None else d.head_id,
            ]
        )
    return buf.getvalue()


def devices_from_csv(text: str) -> list[Device]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != DEVICE_CSV_HEADER:
        raise DomainError(f"unexpected device CSV header {reader.fieldnames}")
    out = []
    for row in reader:
        out.append(
            Device(
                int(row["id"]),
                GroundPosition(float(row["x_m"]), float(row["y_m"])),
                float(row["energy"]),
                Role(row["role"]),
                int(row["head_id"]) if row["head_id"] else None,
            )
        )
    return out
