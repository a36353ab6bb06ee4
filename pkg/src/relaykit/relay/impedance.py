"""Phase-to-ground impedance measurement with zero-sequence compensation and
zone reach checks in the secondary impedance plane."""

from __future__ import annotations

import cmath
from dataclasses import dataclass


@dataclass(frozen=True)
class ImpedanceParams:
    z1_per_km: complex
    z0_per_km: complex
    line_km: float
    ct_ratio: float
    vt_ratio: float
    zone1_reach: float = 0.8
    zone2_reach: float = 1.2
    zone_shape: str = "mho_circle"     # or "quadrilateral"
    r_reach: float | None = None       # quadrilateral resistive reach (secondary ohms)
    x_reach: float | None = None       # quadrilateral reactive reach (secondary ohms)

    def __post_init__(self):
        if not 0 < self.zone1_reach <= 2 or not 0 < self.zone2_reach <= 2:
            raise ValueError("zone reaches must lie in (0, 2]")
        if self.ct_ratio <= 0 or self.vt_ratio <= 0:
            raise ValueError("instrument ratios must be positive")
        if self.line_km <= 0:
            raise ValueError("line length must be positive")
        if self.zone_shape not in ("mho_circle", "quadrilateral"):
            raise ValueError("zone_shape must be 'mho_circle' or 'quadrilateral'")

    @property
    def secondary_scale(self) -> float:
        return self.ct_ratio / self.vt_ratio

    def reach_impedance(self, zone: int) -> complex:
        reach = self.zone1_reach if zone == 1 else self.zone2_reach
        return reach * self.line_km * self.z1_per_km * self.secondary_scale


def k0_factor(p: ImpedanceParams) -> complex:
    """Zero-sequence compensation (z0 - z1) / (3 z1)."""
    return (p.z0_per_km - p.z1_per_km) / (3.0 * p.z1_per_km)


def measure_impedance(v_a: complex, i_a: complex, i_0: complex,
                      p: ImpedanceParams) -> complex:
    """Phase-a-to-ground loop impedance, scaled to secondary ohms."""
    comp = i_a + 3.0 * k0_factor(p) * i_0
    if abs(comp) == 0.0:
        raise ValueError("compensated current is zero; impedance undefined")
    return v_a / comp * p.secondary_scale


def in_zone(z: complex, p: ImpedanceParams, zone: int) -> bool:
    """Zone check in the secondary plane; both shapes are forward-looking."""
    if zone not in (1, 2):
        raise ValueError("zone must be 1 or 2")
    if not (cmath.isfinite(z)):
        raise ValueError("impedance must be finite")
    z_reach = p.reach_impedance(zone)
    if p.zone_shape == "mho_circle":
        return abs(z - z_reach / 2.0) <= abs(z_reach) / 2.0
    # quadrilateral reaches describe zone 1; zone 2 scales by the reach ratio
    x1 = p.x_reach if p.x_reach is not None else p.reach_impedance(1).imag
    r1 = p.r_reach if p.r_reach is not None else 3.0 * abs(x1)
    scale = 1.0 if zone == 1 else p.zone2_reach / p.zone1_reach
    x_reach, r_reach = x1 * scale, r1 * scale
    return (0.0 <= z.imag <= x_reach) and (-r_reach / 10.0 <= z.real <= r_reach)
