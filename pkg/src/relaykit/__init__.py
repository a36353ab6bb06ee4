"""relaykit: protection analytics for power-system transients.

Synthesizes labeled three-phase transient waveforms, detects events on
differential or relay currents, extracts the feature catalog, trains the
classifier cascade, and executes the relay decision rules.
"""

__version__ = "0.1.0"
