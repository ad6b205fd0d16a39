"""Simulator of UAV emergency coverage for clustered ground devices."""
from .channel import (
    BER_FLOOR,
    ENVIRONMENTS,
    SPEED_OF_LIGHT,
    URBAN,
    Environment,
    LinkBudget,
    bit_error_rate,
    coverage_ground_radius,
    dbm_to_watts,
    inv_q_function,
    los_probability,
    los_threshold_angle,
    max_slant_distance,
    min_tx_power_watts,
    q_function,
    received_power_dbm,
    watts_to_dbm,
)
from .clustering import (
    Cluster,
    ClusteringParams,
    ClusteringReport,
    Device,
    Role,
    assign_members,
    clustering_report,
    elect_cluster_heads,
    generate_devices_ppp,
)
from .errors import (
    A2GError,
    CapacityError,
    ConfigError,
    DomainError,
    InfeasibleError,
    ScenarioError,
)
from .geometry import (
    AirPosition,
    GroundPosition,
    distance_2d,
    distance_3d,
    elevation_angle_deg,
    ground_range,
)
from .scenario import (
    CurveSeries,
    LinkReport,
    ManualDevice,
    Scenario,
    ScenarioResult,
    evaluate_link,
    min_altitude_for_coverage,
    run_scenario,
    sweep_ber_vs_rx_power,
    sweep_elevation_vs_distance,
    sweep_plos_vs_distance,
    sweep_plos_vs_elevation,
    sweep_rx_power_vs_elevation,
)

__version__ = "0.1.0"

__all__ = [
    "A2GError",
    "AirPosition",
    "BER_FLOOR",
    "CapacityError",
    "Cluster",
    "ClusteringParams",
    "ClusteringReport",
    "ConfigError",
    "CurveSeries",
    "Device",
    "DomainError",
    "ENVIRONMENTS",
    "Environment",
    "GroundPosition",
    "InfeasibleError",
    "LinkBudget",
    "LinkReport",
    "ManualDevice",
    "Role",
    "SPEED_OF_LIGHT",
    "Scenario",
    "ScenarioError",
    "ScenarioResult",
    "URBAN",
    "assign_members",
    "bit_error_rate",
    "clustering_report",
    "coverage_ground_radius",
    "dbm_to_watts",
    "distance_2d",
    "distance_3d",
    "elect_cluster_heads",
    "elevation_angle_deg",
    "evaluate_link",
    "generate_devices_ppp",
    "ground_range",
    "inv_q_function",
    "los_probability",
    "los_threshold_angle",
    "max_slant_distance",
    "min_altitude_for_coverage",
    "min_tx_power_watts",
    "q_function",
    "received_power_dbm",
    "run_scenario",
    "sweep_ber_vs_rx_power",
    "sweep_elevation_vs_distance",
    "sweep_plos_vs_distance",
    "sweep_plos_vs_elevation",
    "sweep_rx_power_vs_elevation",
    "watts_to_dbm",
    "__version__",
]
