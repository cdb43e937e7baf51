"""vlbridge: hyperbolic volume verification for virtlink exports.

Drives the bundled angle-structure engine on exported triangulations and DT
codes and compares the computed volumes against the reference table, halving
the engine volume for doubled manifolds.
"""

from .engine import NON_HYPERBOLIC, UNKNOWN, Complex, EngineError, geometrize
from .verify import TOLERANCE, VolumeResult, verify_volumes, volume_of_export

__all__ = [
    "NON_HYPERBOLIC",
    "UNKNOWN",
    "Complex",
    "EngineError",
    "geometrize",
    "TOLERANCE",
    "VolumeResult",
    "verify_volumes",
    "volume_of_export",
]

__version__ = "0.1.0"
