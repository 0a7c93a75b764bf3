"""Multiply constant-weight codes: constructions, bounds, rate curves, loop-PUF simulation."""

__version__ = "0.1.0"

from .codes import (  # noqa: F401
    BinaryCode,
    QaryCode,
    WeightProfile,
    hamming_distance,
    find_systematic_set,
    verify_code,
)
