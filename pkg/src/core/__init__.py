from .characteristic import (
    char_function,
    chi,
    chi_magnitude,
    is_chi_zero,
    p_alpha,
    p_alpha_evaluation,
    q_tilde,
    q_tilde_evaluation,
    tanh_complement,
    transition_matrix,
    w_tilde,
)
from .common_types import (
    CharacteristicEvaluation,
    CharacteristicForm,
    HomogenisedLimit,
    LaminateProfile,
    LimitCase,
    Regime,
    TransitionMatrix,
)
from .errors import (
    ContractViolation,
    ConvergenceError,
    LaminateError,
    PoleError,
    ProfileError,
    WellPosednessError,
)
from .polynomial import (
    count_roots_exact,
    p_alpha_coefficients,
    p_alpha_polynomial,
    polynomial_roots,
    real_roots,
)
