"""Evaluated scenarios: per-head uplink reports, figure sweeps, altitude planning."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence, TypeVar

from . import channel
from .channel import URBAN, Environment, LinkBudget
from .clustering import (
    Cluster,
    ClusteringParams,
    ClusteringReport,
    Device,
    apply_roles,
    assign_members,
    clustering_report,
    elect_cluster_heads,
    generate_devices_ppp,
)
from .errors import ConfigError, DomainError, InfeasibleError, ScenarioError
from .geometry import AirPosition, GroundPosition, distance_3d, elevation_angle_deg

THREADS_ENV = "A2G_SIM_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def _workers() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map ``fn`` over ``items``, possibly in threads; results keep input order."""
    items = list(items)
    n = _workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class ManualDevice:
    """Explicitly placed device appended after the Poisson population."""

    x: float
    y: float
    energy: float


@dataclass(frozen=True)
class Scenario:
    uav: AirPosition = AirPosition(0.0, 0.0, 100.0)
    environment: Environment = URBAN
    link_budget: LinkBudget = LinkBudget()
    clustering: ClusteringParams = ClusteringParams()
    manual_devices: tuple[ManualDevice, ...] = ()


@dataclass(frozen=True)
class LinkReport:
    ch_id: int
    slant_distance_m: float
    elevation_deg: float
    p_los: float
    los_feasible: bool
    rx_power_dbm: float
    min_tx_power_w: float
    ber: float

    def as_dict(self) -> dict:
        return {
            "ch_id": self.ch_id,
            "slant_distance_m": self.slant_distance_m,
            "elevation_deg": self.elevation_deg,
            "p_los": self.p_los,
            "los_feasible": self.los_feasible,
            "rx_power_dbm": self.rx_power_dbm,
            "min_tx_power_w": self.min_tx_power_w,
            "ber": self.ber,
        }


@dataclass(frozen=True)
class CurveSeries:
    label: str
    x_name: str
    x_unit: str
    y_name: str
    y_unit: str
    points: tuple[tuple[float, float], ...] = ()

    def __post_init__(self) -> None:
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ConfigError(f"series {self.label!r}: x must be strictly increasing")

    @property
    def x(self) -> list[float]:
        return [p[0] for p in self.points]

    @property
    def y(self) -> list[float]:
        return [p[1] for p in self.points]


def evaluate_link(ch: GroundPosition, scenario: Scenario, ch_id: int = 0) -> LinkReport:
    """Evaluate one head-to-UAV uplink at the scenario's UAV position."""
    uav, env, lb = scenario.uav, scenario.environment, scenario.link_budget
    d = distance_3d(ch, uav)
    theta = elevation_angle_deg(uav.z, d)
    p_los = channel.los_probability(theta, env)
    rx = channel.received_power_dbm(lb, d)
    return LinkReport(
        ch_id=ch_id,
        slant_distance_m=d,
        elevation_deg=theta,
        p_los=p_los,
        los_feasible=p_los >= lb.los_threshold,
        rx_power_dbm=rx,
        min_tx_power_w=channel.min_tx_power_watts(lb, d),
        ber=channel.bit_error_rate(lb, rx),
    )


def grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid ``start, start+step, ... <= stop``."""
    if not step > 0:
        raise ConfigError(f"grid step must be positive, got {step}")
    if stop < start:
        return []
    n = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(n + 1)]


def sweep_plos_vs_distance(
    altitudes: Sequence[float],
    d_max_m: float = 1000.0,
    step_m: float = 5.0,
    env: Environment = URBAN,
) -> list[CurveSeries]:
    """LoS probability against slant distance, one series per altitude, from d = H."""
    if not altitudes or any(h <= 0 for h in altitudes):
        raise ConfigError("altitudes must be a non-empty list of positive values")
    if d_max_m < min(altitudes):
        raise ConfigError(f"d_max_m={d_max_m} is below the lowest altitude {min(altitudes)}")

    def one(h: float) -> CurveSeries:
        pts = tuple(
            (d, channel.los_probability(elevation_angle_deg(h, d), env))
            for d in grid(h, d_max_m, step_m)
        )
        return CurveSeries(f"H={h:g} m", "distance", "m", "p_los", "", pts)

    return _ordered_map(one, altitudes)


def sweep_plos_vs_elevation(
    theta_min_deg: float = 0.0,
    theta_max_deg: float = 90.0,
    step_deg: float = 0.5,
    env: Environment = URBAN,
    altitudes: Sequence[float] | None = None,
    d_max_m: float = 1000.0,
) -> list[CurveSeries]:
    """LoS probability against elevation angle.

    The first series is the analytic curve over the whole range. With
    ``altitudes``, one extra series per altitude keeps only the angles a head
    can see within slant distance ``d_max_m``, i.e. ``theta >= asin(H / d_max_m)``.
    """
    if not 0.0 <= theta_min_deg < theta_max_deg <= 90.0:
        raise ConfigError(f"invalid elevation range [{theta_min_deg}, {theta_max_deg}]")
    if d_max_m <= 0:
        raise ConfigError("d_max_m must be positive")
    thetas = grid(theta_min_deg, theta_max_deg, step_deg)
    values = [channel.los_probability(t, env) for t in thetas]
    out = [CurveSeries("analytic", "elevation", "deg", "p_los", "", tuple(zip(thetas, values)))]
    for h in altitudes or ():
        if h <= 0:
            raise ConfigError("altitudes must be positive")
        floor_deg = math.degrees(math.asin(min(h / d_max_m, 1.0)))
        pts = tuple((t, v) for t, v in zip(thetas, values) if t >= floor_deg)
        out.append(CurveSeries(f"H={h:g} m", "elevation", "deg", "p_los", "", pts))
    return out


def sweep_elevation_vs_distance(
    altitudes: Sequence[float],
    d_min_m: float | None = None,
    d_max_m: float = 1000.0,
    step_m: float = 5.0,
) -> list[CurveSeries]:
    """Elevation angle against slant distance per altitude.

    ``d_min_m=None`` starts each series at its own altitude; otherwise grid
    points below the altitude are dropped from that series.
    """
    if not altitudes or any(h <= 0 for h in altitudes):
        raise ConfigError("altitudes must be a non-empty list of positive values")

    def one(h: float) -> CurveSeries:
        start = h if d_min_m is None else d_min_m
        pts = tuple((d, elevation_angle_deg(h, d)) for d in grid(start, d_max_m, step_m) if d >= h)
        return CurveSeries(f"H={h:g} m", "distance", "m", "elevation", "deg", pts)

    return _ordered_map(one, altitudes)


def sweep_rx_power_vs_elevation(
    alphas: Sequence[float] = (2.0, 2.5, 3.0),
    altitude: float = 100.0,
    theta_min_deg: float = 5.0,
    theta_max_deg: float = 90.0,
    step_deg: float = 1.0,
    lb: LinkBudget = LinkBudget(),
) -> list[CurveSeries]:
    """Received power at the UAV against head elevation, one series per path-loss exponent.

    Each angle maps to distance ``altitude / sin(theta)``.
    """
    if theta_min_deg <= 0.0:
        raise ConfigError("elevation must stay above 0 deg (zero means infinite distance)")
    if not theta_min_deg < theta_max_deg <= 90.0:
        raise ConfigError(f"invalid elevation range [{theta_min_deg}, {theta_max_deg}]")
    if altitude <= 0:
        raise ConfigError("altitude must be positive")
    thetas = grid(theta_min_deg, theta_max_deg, step_deg)
    dists = [altitude / math.sin(math.radians(t)) for t in thetas]

    def one(alpha: float) -> CurveSeries:
        lba = replace(lb, path_loss_exponent=alpha)
        pts = tuple((t, channel.received_power_dbm(lba, d)) for t, d in zip(thetas, dists))
        return CurveSeries(f"alpha={alpha:g}", "elevation", "deg", "rx_power", "dBm", pts)

    return _ordered_map(one, alphas)


def sweep_ber_vs_rx_power(
    p_min_dbm: float = -150.0,
    p_max_dbm: float = -90.0,
    step_db: float = 0.5,
    lb: LinkBudget = LinkBudget(),
) -> CurveSeries:
    if not p_min_dbm < p_max_dbm:
        raise ConfigError(f"invalid power range [{p_min_dbm}, {p_max_dbm}]")
    pts = tuple((p, channel.bit_error_rate(lb, p)) for p in grid(p_min_dbm, p_max_dbm, step_db))
    return CurveSeries("qpsk", "rx_power", "dBm", "ber", "", pts)


def min_altitude_for_coverage(
    ch_positions: Sequence[GroundPosition],
    uav_xy: GroundPosition,
    epsilon: float,
    env: Environment = URBAN,
) -> float:
    """Lowest UAV altitude at which every head meets the LoS threshold.

    Returns 0.0 when no positive altitude is needed (all heads directly below,
    or a threshold that holds at every elevation).
    """
    if not ch_positions:
        raise DomainError("at least one cluster head is required")
    theta = channel.los_threshold_angle(epsilon, env)
    r_max = max(math.hypot(p.x - uav_xy.x, p.y - uav_xy.y) for p in ch_positions)
    if r_max == 0.0 or theta == 0.0:
        return 0.0
    if theta == 90.0:
        raise InfeasibleError("threshold needs a vertical link but a head is off-axis")
    h = r_max * math.tan(math.radians(theta))
    # The closed form sits exactly on the boundary; step up a few ulps so the
    # forward computation used by evaluate_link agrees that every head passes.
    for _ in range(64):
        uav = AirPosition(uav_xy.x, uav_xy.y, h)
        if all(
            channel.los_probability(elevation_angle_deg(h, distance_3d(p, uav)), env) >= epsilon
            for p in ch_positions
        ):
            break
        h = math.nextafter(h, math.inf)
    return h


@dataclass(frozen=True)
class ScenarioResult:
    devices: tuple[Device, ...]
    clusters: tuple[Cluster, ...]
    uncovered: tuple[int, ...]
    clustering: ClusteringReport
    links: tuple[LinkReport, ...]
    min_coverage_altitude_m: float
    infeasible_heads: tuple[int, ...]
    ber_below_floor_heads: tuple[int, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "clustering": self.clustering.as_dict(),
            "links": [lr.as_dict() for lr in self.links],
            "min_coverage_altitude_m": self.min_coverage_altitude_m,
            "infeasible_heads": list(self.infeasible_heads),
            "ber_floor": channel.BER_FLOOR,
            "ber_below_floor_heads": list(self.ber_below_floor_heads),
            "clusters": [
                {"head_id": c.head_id, "member_ids": list(c.member_ids)} for c in self.clusters
            ],
            "uncovered": list(self.uncovered),
        }


def build_devices(scenario: Scenario) -> list[Device]:
    """Poisson population followed by the manual devices, ids contiguous from 0."""
    devices = generate_devices_ppp(scenario.clustering)
    n = len(devices)
    for k, m in enumerate(scenario.manual_devices):
        devices.append(Device(n + k, GroundPosition(m.x, m.y), m.energy))
    return devices


def cluster_devices(scenario: Scenario) -> tuple[list[Device], list[Cluster], list[int]]:
    """Generate, elect and assign. Raises ScenarioError when nobody qualifies as head."""
    params = scenario.clustering
    devices = build_devices(scenario)
    heads = elect_cluster_heads(devices, params.energy_threshold)
    if not heads:
        raise ScenarioError(f"no cluster heads elected among {len(devices)} devices")
    clusters, uncovered = assign_members(devices, heads, params.d2d_range)
    return apply_roles(devices, clusters, uncovered), clusters, uncovered


def run_scenario(scenario: Scenario) -> ScenarioResult:
    devices, clusters, uncovered = cluster_devices(scenario)
    by_id = {d.id: d for d in devices}
    head_ids = [c.head_id for c in clusters]
    links = _ordered_map(lambda h: evaluate_link(by_id[h].position, scenario, h), head_ids)
    altitude = min_altitude_for_coverage(
        [by_id[h].position for h in head_ids],
        scenario.uav.ground,
        scenario.link_budget.los_threshold,
        scenario.environment,
    )
    return ScenarioResult(
        devices=tuple(devices),
        clusters=tuple(clusters),
        uncovered=tuple(uncovered),
        clustering=clustering_report(clusters, uncovered, devices),
        links=tuple(links),
        min_coverage_altitude_m=altitude,
        infeasible_heads=tuple(lr.ch_id for lr in links if not lr.los_feasible),
        ber_below_floor_heads=tuple(lr.ch_id for lr in links if lr.ber == 0.0),
    )
