"""Split-Hamiltonian quantum dynamics with interaction-free-evolution analysis."""

from .errors import (
    BadOrderingError,
    CutoffTooSmallError,
    DimensionMismatchError,
    EvaluationError,
    IndexOutOfRangeError,
    InvalidDepthError,
    LengthMismatchError,
    NoConvergenceError,
    NotHermitianError,
    ScenarioParseError,
    UnknownModelError,
)
from .ife import (
    IFE,
    NOT_IFE,
    IFEReport,
    IFESubspace,
    LadderReport,
    StaticCriterionResult,
    accumulated_phase,
    check_ife_candidate,
    check_ife_interaction_picture,
    check_sufficient_ladder,
    check_time_independent,
    default_residual_tol,
    find_ife_subspaces,
)
from .linalg import (
    hermitian_eigendecompose,
    hermitian_eigenspaces,
    rayleigh_quotient,
    residual_norm,
    subspace_intersection,
    unitary_exp,
)
from .models import (
    CATALOG,
    ModelDescriptor,
    jc_multiphoton,
    jc_sum,
    spin_half_rotating,
    spin_one_model,
    stirap_model,
)
from .operators import (
    ScalarSchedule,
    SplitHamiltonian,
    TimeDependentOperator,
    TimeGrid,
    cumulative_trapezoid,
    evaluate,
    phase_integral,
    running_integral,
)
from .propagation import (
    EvolutionTrace,
    apply,
    auto_grid,
    auto_steps,
    interaction_picture,
    propagate,
    propagate_rk4_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BadOrderingError",
    "CutoffTooSmallError",
    "DimensionMismatchError",
    "EvaluationError",
    "IndexOutOfRangeError",
    "InvalidDepthError",
    "LengthMismatchError",
    "NoConvergenceError",
    "NotHermitianError",
    "ScenarioParseError",
    "UnknownModelError",
    "IFE",
    "NOT_IFE",
    "IFEReport",
    "IFESubspace",
    "LadderReport",
    "StaticCriterionResult",
    "accumulated_phase",
    "check_ife_candidate",
    "check_ife_interaction_picture",
    "check_sufficient_ladder",
    "check_time_independent",
    "default_residual_tol",
    "find_ife_subspaces",
    "hermitian_eigendecompose",
    "hermitian_eigenspaces",
    "rayleigh_quotient",
    "residual_norm",
    "subspace_intersection",
    "unitary_exp",
    "CATALOG",
    "ModelDescriptor",
    "jc_multiphoton",
    "jc_sum",
    "spin_half_rotating",
    "spin_one_model",
    "stirap_model",
    "ScalarSchedule",
    "SplitHamiltonian",
    "TimeDependentOperator",
    "TimeGrid",
    "cumulative_trapezoid",
    "evaluate",
    "phase_integral",
    "running_integral",
    "EvolutionTrace",
    "apply",
    "auto_grid",
    "auto_steps",
    "interaction_picture",
    "propagate",
    "propagate_rk4_oracle",
    "__version__",
]
