"""Hedonic diversity games.

Two colours of agents, each ranking the possible fractions of red agents in
a coalition.  The package checks core, Nash and individual stability of
partitions, builds individually stable and (in special cases) core-stable
partitions, and enumerates partitions exhaustively for small games.
"""

from .core import core_common_preference, core_single_red
from .dynamics import DynamicsTrace, run_dynamics
from .enumeration import (
    bell,
    core_brute_force,
    is_brute_force,
    nash_brute_force,
    restricted_growth_strings,
)
from .errors import (
    DiversityGameError,
    DomainError,
    InvalidGameError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .individual import HalfResult, half, half_blue, solve_individually_stable
from .model import DiversityGame, Partition, build_theta, coalition, members
from .preferences import (
    blue_mirror,
    make_bakers_millers,
    make_example3,
    make_homophilic,
    peak_at_least_half,
    random_single_peaked,
    verify_single_peaked,
    virtual_peak,
)
from .reduction import AnonymousGame, anon_core_brute_force, check_reduction_equivalence, reduce_to_diversity
from .stability import (
    accepts,
    enumerate_is_deviations,
    enumerate_ns_deviations,
    find_blocking_coalition,
    is_core_stable,
    is_individually_stable,
    is_nash_stable,
)

__version__ = "0.1.0"
