"""Decision layer: classifier cascade, AR direction/zone rules, impedance
measurement with zone checks, and the published reference coefficient tables."""

from .ar_rules import (ArRelayConfig, ar_direction, ar_zone, direction_from_phi2,
                       phase_ar_coefficients, zone_from_phi7)
from .cascade import (DISTURBANCE_CLASSES, SWING_DETECT_CLASSES, CascadeConfig,
                      CascadeModel, RelayDecision, StageSpec, SwingCapture,
                      build_cascade, classify_event, classify_swing,
                      default_stage_specs, expected_feature_width)
from .impedance import ImpedanceParams, in_zone, k0_factor, measure_impedance
from .reference_tables import (DIRECTION_ROWS, KNOWN_RULE_VIOLATIONS, ZONE_ROWS,
                               DirectionRow, ZoneRow, dfig_direction_rows,
                               grid_direction_rows)

__all__ = [
    "ArRelayConfig", "CascadeConfig", "CascadeModel", "DIRECTION_ROWS",
    "DISTURBANCE_CLASSES", "DirectionRow", "ImpedanceParams",
    "KNOWN_RULE_VIOLATIONS", "RelayDecision", "SWING_DETECT_CLASSES", "StageSpec",
    "SwingCapture", "ZONE_ROWS", "ZoneRow", "ar_direction", "ar_zone",
    "build_cascade", "classify_event", "classify_swing", "default_stage_specs",
    "dfig_direction_rows", "direction_from_phi2", "expected_feature_width",
    "grid_direction_rows", "in_zone", "k0_factor", "measure_impedance",
    "phase_ar_coefficients", "zone_from_phi7",
]
