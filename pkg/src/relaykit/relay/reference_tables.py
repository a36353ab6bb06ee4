"""Published autoregressive-coefficient tables for the direction and zone rules.

Each direction row carries the phase-a/b/c second AR coefficients of a balanced
fault, the test system it came from, the fault resistance and crowbar resistance
of the case, and the feeding side (location 2 = grid-fed, location 4 = wind-farm
fed). Zone rows carry the seventh AR coefficients with their zone label.

Four of the published rows contradict the decision rules they accompany; they
are transcribed unmodified and enumerated in KNOWN_RULE_VIOLATIONS so tests can
pin the discrepancy instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DirectionRow:
    system: str          # "4bus", "9bus", "39bus"
    fed_by: str          # "grid_fed" or "dfig_fed"
    fault_ohm: float
    crowbar_ohm: float
    phi2: tuple


@dataclass(frozen=True)
class ZoneRow:
    zone: str            # "zone1" or "zone2"
    fault_ohm: float
    crowbar_ohm: float
    phi7: tuple


def _rows(system, fed_by, triples, fr_values=(2.0, 20.0, 200.0)):
    out = []
    cb_values = (0.0, 0.01, 0.1)
    i = 0
    for fr in fr_values:
        for cb in cb_values:
            out.append(DirectionRow(system, fed_by, fr, cb, triples[i]))
            i += 1
    return out


DIRECTION_ROWS: tuple = tuple(
    _rows("4bus", "grid_fed", [
        (0.238, 0.268, 0.262), (0.212, 0.220, 0.212), (-0.178, -0.209, -0.227),
        (0.238, 0.268, 0.262), (0.212, 0.220, 0.212), (-0.178, -0.209, -0.227),
        (0.237, 0.267, 0.261), (0.212, 0.220, 0.212), (-0.180, -0.211, -0.229),
    ])
    + _rows("4bus", "dfig_fed", [
        (-1.429, -1.258, -1.065), (-2.157, -1.777, -1.417), (-1.022, -1.676, -1.255),
        (-1.439, -1.163, -1.086), (-2.080, -1.693, -1.382), (-1.001, -1.650, -1.198),
        (-1.494, -1.214, -1.057), (-2.082, -1.783, -1.475), (-1.040, -1.628, -1.203),
    ])
    + _rows("9bus", "grid_fed", [
        (0.483, 0.307, 0.434), (0.495, 0.369, 0.436), (0.463, 0.403, 0.420),
        (0.482, 0.307, 0.435), (0.492, 0.368, 0.436), (0.451, 0.399, 0.421),
        (0.483, 0.306, 0.433), (0.493, 0.367, 0.435), (0.454, 0.398, 0.416),
    ])
    + _rows("9bus", "dfig_fed", [
        (-1.868, -1.659, -1.331), (-2.398, -2.237, -1.823), (-2.192, -2.451, -1.788),
        (-1.879, -1.645, -1.467), (-2.195, -2.584, -1.771), (-1.133, -1.583, -0.932),
        (-1.936, -1.621, -1.333), (-2.374, -2.136, -1.818), (-2.168, -2.530, -1.734),
    ])
    + _rows("39bus", "grid_fed", [
        (0.206, 0.169, -0.087), (0.250, 0.079, -0.090), (0.032, -0.082, -0.176),
        (0.207, 0.170, -0.087), (0.251, 0.080, -0.091), (0.035, -0.080, -0.179),
        (0.207, 0.170, -0.086), (0.252, 0.080, -0.092), (0.036, -0.079, -0.178),
    ])
    + _rows("39bus", "dfig_fed", [
        (-1.170, -0.667, -1.441), (-2.270, -1.972, -2.047), (-2.289, -2.287, -1.963),
        (-1.266, -0.762, -1.506), (-2.202, -1.930, -2.098), (-2.239, -2.170, -1.826),
        (-1.202, -0.708, -1.534), (-2.244, -2.009, -2.072), (-2.195, -2.231, -1.892),
    ])
)


def _zone_rows(zone, triples, fr_values):
    out = []
    i = 0
    for fr in fr_values:
        for cb in (0.0, 0.01, 0.1):
            out.append(ZoneRow(zone, fr, cb, triples[i]))
            i += 1
    return out


ZONE_ROWS: tuple = tuple(
    _zone_rows("zone1", [
        (1.141, 0.834, 0.799), (1.036, 0.843, 0.814), (1.066, 0.925, 0.828),
        (0.880, 0.953, 1.002), (0.775, 0.951, 0.901), (0.813, 1.090, 0.976),
        (1.042, 1.152, 0.818), (1.005, 1.154, 0.764), (1.074, 1.165, 0.863),
    ], fr_values=(2.0, 20.0, 200.0))
    + _zone_rows("zone2", [
        (-0.400, -0.997, -0.926), (-0.417, -0.947, -0.903), (-0.485, -0.945, -0.902),
        (0.123, -0.906, -0.828), (-0.366, -1.008, -0.967), (-0.382, -1.004, -0.961),
        (-0.417, -0.947, -0.903), (0.093, -0.916, -0.834), (0.159, -0.917, -0.839),
    ], fr_values=(2.0, 20.0, 50.0))
)

#: published rows whose coefficients violate the stated threshold rules
#: (phase-b phi2 above -0.7, or a positive phase-a phi7 in a zone-2 case)
KNOWN_RULE_VIOLATIONS = {
    "direction": (("39bus", "dfig_fed", 2.0, 0.0),),
    "zone": (("zone2", 20.0, 0.0), ("zone2", 50.0, 0.01), ("zone2", 50.0, 0.1)),
}


def dfig_direction_rows() -> tuple:
    return tuple(r for r in DIRECTION_ROWS if r.fed_by == "dfig_fed")


def grid_direction_rows() -> tuple:
    return tuple(r for r in DIRECTION_ROWS if r.fed_by == "grid_fed")
