"""Semi-online makespan scheduling on identical machines with known Decr and Sum.

Exact-rational policies (2DS, I2DS, 3DS, I3DS, SD, LS, LPT), optimum
references, adversary game trees and exhaustive bound audits.
"""

from .algorithms import PolicyKind, PolicyState, assign_online, lpt_offline, run_online
from .core import (
    Instance,
    PatternClass,
    ScheduleOutcome,
    TraceStep,
    apply_assignment,
    build_instance,
    classify_pattern,
    to_rational,
)
from .errors import *  # noqa: F401,F403
from .oracle import OptReference, RatioKind, competitive_ratio, opt_exact, opt_lower_bound

__version__ = "0.1.0"
