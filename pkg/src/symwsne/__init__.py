"""Approximate well-supported Nash equilibria of symmetric bimatrix games."""
from .algorithm import Path, Solution, half_wsne
from .estimators import ExistenceSampler, HalfWsneSolver, SupportEnumeration
from .exceptions import (
    BudgetExceededError,
    DimensionError,
    GameFormatError,
    GuaranteeViolatedError,
    MalformedSystemError,
    NotSymmetricError,
    WsneError,
)
from .game import (
    BimatrixGame,
    MixedStrategy,
    RegretReport,
    StrategyProfile,
    ensure_normalized,
    is_symmetric,
    normalize,
    payoffs,
    prevents_exceeding,
    pure_response_values,
    well_supports,
    wsne_epsilon,
)
from .io import generate_game, parse_game, parse_profile, render_game, render_profile
from .oracle import NeRecord, support_enumeration_ne, symmetric_ne
from .prevent_exceed import PeParams, build_pe, solve_pe, symmetric_pe
from .sampling import (
    SampleConfig,
    SampleOutcome,
    demonstrate_existence,
    hoeffding_tail,
    sample_k_uniform,
    union_bound_value,
)
from .simplex import LinearSystem, solve_feasible
from .well_support import (
    Multiset,
    WsParams,
    check_ws,
    enumerate_multisets,
    kappa,
    search_ws,
    strategy_from_multiset,
)

__version__ = "0.1.0"
