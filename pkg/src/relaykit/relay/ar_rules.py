"""Autoregressive-coefficient relay rules: fault direction and zone from the
second and seventh AR coefficients of the three phase currents.

Currents are mean-removed and peak-normalized before the AR fit (run without an
intercept), which makes the thresholds independent of units and of uniform
scaling of all three phases.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..features import ar_fit, normalized_for_ar
from ..waveform import ThreePhaseRecord

DIRECTIONS = ("dfig_fed", "grid_fed")
ZONES = ("zone1", "zone2")


@dataclass(frozen=True)
class ArRelayConfig:
    lag: int = 10
    th1: float = -0.7    # direction threshold on phi_2
    th2: float = -0.1    # zone threshold on phi_7

    def __post_init__(self):
        if self.lag < 8:
            raise ValueError("lag must be at least 8 to cover phi_7")


def direction_from_phi2(phi2, cfg: ArRelayConfig = ArRelayConfig()) -> str:
    """dfig_fed iff the second AR coefficient of every phase is <= th1."""
    a, b, c = phi2
    return "dfig_fed" if (a <= cfg.th1 and b <= cfg.th1 and c <= cfg.th1) else "grid_fed"


def zone_from_phi7(phi7, cfg: ArRelayConfig = ArRelayConfig()) -> str:
    """zone2 iff the seventh AR coefficient of every phase is <= th2."""
    a, b, c = phi7
    return "zone2" if (a <= cfg.th2 and b <= cfg.th2 and c <= cfg.th2) else "zone1"


def phase_ar_coefficients(record: ThreePhaseRecord, lag: int, index: int) -> tuple:
    """The index-th AR coefficient of each normalized phase current."""
    out = []
    for i in range(3):
        fit = ar_fit(normalized_for_ar(record.phases[i]), lag, with_intercept=False)
        out.append(float(fit["phi"][index - 1]))
    return tuple(out)


def ar_direction(record: ThreePhaseRecord, cfg: ArRelayConfig = ArRelayConfig()) -> str:
    return direction_from_phi2(phase_ar_coefficients(record, cfg.lag, 2), cfg)


def ar_zone(record: ThreePhaseRecord, cfg: ArRelayConfig = ArRelayConfig()) -> str:
    return zone_from_phi7(phase_ar_coefficients(record, cfg.lag, 7), cfg)
