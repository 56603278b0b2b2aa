"""
tvgnet - Time-varying graph analytics for co-authorship citation networks
"""
__version__ = "0.1.0"
__description__ = "Time-varying graph analytics for co-authorship citation networks"

from .core.timeline import Interval, MultiInterval
from .core.tvg import TimeVaryingGraph
from .core.config import RunConfig

__all__ = [
    "__version__",
    "__description__",
    "Interval",
    "MultiInterval",
    "TimeVaryingGraph",
    "RunConfig",
]
