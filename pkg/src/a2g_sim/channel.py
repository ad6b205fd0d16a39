"""Ground-to-air channel and uplink budget.

Covers the sigmoid LoS-probability model, the elevation threshold it implies,
the coverage distance for a given altitude, free-space-plus-excess path loss,
the minimum head transmit power for a BER target, and QPSK bit-error rate.

Power convention: dBm in the log domain, watts (W/Hz for noise density) in
the linear domain, ``dBm = 10*log10(W) + 30``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError

SPEED_OF_LIGHT = 299_792_458.0  # m/s

# Q(x) below this is reported as 0.0 and flagged as below the numeric floor
BER_FLOOR = 1e-250

_INV_Q_LO = -10.0
_INV_Q_HI = 10.0
_INV_Q_XTOL = 1e-13
_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class Environment:
    """S-curve parameters ``a`` and ``b`` for one propagation environment."""

    name: str
    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"environment parameters must be positive, got a={self.a}, b={self.b}")


URBAN = Environment("urban", 9.6, 0.16)
ENVIRONMENTS = {"urban": URBAN}


@dataclass(frozen=True)
class LinkBudget:
    """Radio parameters of the head-to-UAV uplink.

    ``bandwidth_hz`` is carried for configuration fidelity only; no formula
    consumes it.
    """

    tx_power_dbm: float = 13.0
    carrier_freq_hz: float = 3.5e9
    path_loss_exponent: float = 2.0
    excess_loss_db: float = 5.0
    noise_psd_dbm_hz: float = -170.0
    bit_rate_bps: float = 200e3
    bandwidth_hz: float = 200e3
    ber_target: float = 1e-8
    los_threshold: float = 0.95

    def __post_init__(self) -> None:
        if not self.carrier_freq_hz > 0:
            raise DomainError("carrier_freq_hz must be positive")
        if not self.bit_rate_bps > 0:
            raise DomainError("bit_rate_bps must be positive")
        if not self.path_loss_exponent >= 1:
            raise DomainError("path_loss_exponent must be >= 1")
        if not 0 < self.ber_target < 0.5:
            raise DomainError("ber_target must lie in (0, 0.5)")
        if not 0 < self.los_threshold < 1:
            raise DomainError("los_threshold must lie in (0, 1)")

    @property
    def noise_psd_w_hz(self) -> float:
        return dbm_to_watts(self.noise_psd_dbm_hz)


def dbm_to_watts(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watts_to_dbm(p_w: float) -> float:
    if p_w <= 0:
        return -math.inf
    return 10.0 * math.log10(p_w) + 30.0


def q_function(x: float) -> float:
    """Gaussian tail probability ``Q(x) = P(N(0,1) > x)``."""
    return 0.5 * math.erfc(x / _SQRT2)


def inv_q_function(p: float) -> float:
    """Inverse of :func:`q_function`.

    Safeguarded Newton iteration inside the bracket ``[-10, 10]``; a Newton
    step that leaves the current bracket is replaced by bisection.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"inverse Q needs p in (0, 1), got {p}")
    lo, hi = _INV_Q_LO, _INV_Q_HI
    if not q_function(hi) <= p <= q_function(lo):
        raise DomainError(f"p={p} maps outside [{lo}, {hi}]")

    x = 0.0
    for _ in range(200):
        f = q_function(x) - p
        if f == 0.0:
            return x
        # Q is decreasing: a positive residual means the root lies to the right
        if f > 0:
            lo = x
        else:
            hi = x
        density = _INV_SQRT_2PI * math.exp(-0.5 * x * x)
        x_new = x + f / density if density > 0 else math.nan
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= _INV_Q_XTOL * max(1.0, abs(x)) or hi - lo <= _INV_Q_XTOL:
            return x_new
        x = x_new
    return x


def los_probability(theta_deg: float, env: Environment) -> float:
    """LoS probability for an elevation angle in degrees, ``1/(1 + a*exp(-b*(theta - a)))``."""
    if not 0.0 <= theta_deg <= 90.0:
        raise DomainError(f"elevation angle must lie in [0, 90] degrees, got {theta_deg}")
    return 1.0 / (1.0 + env.a * math.exp(-env.b * (theta_deg - env.a)))


def los_threshold_angle(epsilon: float, env: Environment) -> float:
    """Smallest elevation angle (degrees) whose LoS probability reaches ``epsilon``.

    Thresholds already met at the horizon return 0.0. Raises InfeasibleError
    when the angle would exceed 90 degrees.
    """
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"LoS threshold must lie in (0, 1), got {epsilon}")
    theta = env.a - math.log((1.0 - epsilon) / (env.a * epsilon)) / env.b
    if theta > 90.0:
        raise InfeasibleError(
            f"LoS probability {epsilon} needs elevation {theta:.4g} deg > 90 in {env.name!r}"
        )
    return max(theta, 0.0)


def max_slant_distance(altitude: float, epsilon: float, env: Environment) -> float:
    """Largest head-to-UAV distance that still meets the LoS threshold.

    Returns ``inf`` when the threshold holds at every elevation.
    """
    if altitude <= 0:
        raise DomainError(f"altitude must be positive, got {altitude}")
    theta = los_threshold_angle(epsilon, env)
    if theta == 0.0:
        return math.inf
    return altitude / math.sin(math.radians(theta))


def coverage_ground_radius(altitude: float, epsilon: float, env: Environment) -> float:
    """Ground projection of :func:`max_slant_distance`."""
    if altitude <= 0:
        raise DomainError(f"altitude must be positive, got {altitude}")
    theta = los_threshold_angle(epsilon, env)
    if theta == 0.0:
        return math.inf
    if theta == 90.0:
        return 0.0
    return altitude / math.tan(math.radians(theta))


def _path_gain_ratio(lb: LinkBudget, d: float) -> float:
    if d <= 0:
        raise DomainError(f"distance must be positive, got {d}")
    return 4.0 * math.pi * lb.carrier_freq_hz * d / SPEED_OF_LIGHT


def received_power_dbm(lb: LinkBudget, d: float) -> float:
    """Power at the UAV (dBm) for a head transmitting ``lb.tx_power_dbm`` over ``d`` metres."""
    ratio = _path_gain_ratio(lb, d)
    return lb.tx_power_dbm - 10.0 * lb.path_loss_exponent * math.log10(ratio) - lb.excess_loss_db


def min_tx_power_watts(lb: LinkBudget, d: float) -> float:
    """Smallest head transmit power (W) that meets ``lb.ber_target`` at distance ``d``.

    The distance term carries the budget's path-loss exponent, so the value is
    the exact inverse of :func:`received_power_dbm` followed by
    :func:`bit_error_rate` for any exponent.
    """
    ratio = _path_gain_ratio(lb, d)
    q_inv = inv_q_function(lb.ber_target)
    return (
        q_inv**2
        * lb.bit_rate_bps
        * lb.noise_psd_w_hz
        / 2.0
        * 10.0 ** (lb.excess_loss_db / 10.0)
        * ratio**lb.path_loss_exponent
    )


def bit_error_rate(lb: LinkBudget, rx_power_dbm: float) -> float:
    """QPSK bit-error rate at the UAV for a received power in dBm.

    Values under :data:`BER_FLOOR` are returned as 0.0.
    """
    if math.isnan(rx_power_dbm) or rx_power_dbm == math.inf:
        raise DomainError(f"received power must be finite, got {rx_power_dbm}")
    p_w = dbm_to_watts(rx_power_dbm)
    snr = 2.0 * p_w / (lb.bit_rate_bps * lb.noise_psd_w_hz)
    ber = q_function(math.sqrt(snr))
    return 0.0 if ber < BER_FLOOR else ber
