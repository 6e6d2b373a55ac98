from .common_types import (
    CoefficientKind,
    FDOperator1D,
    GalerkinCoefficient,
    GalerkinProjection,
    PollutionReport,
)
from .fd import assemble_fd_1d, min_singular_value, smallest_eigs, solve, sturm_count
from .galerkin import assemble_galerkin, cosine_moments, galerkin_spectrum, stable_eigenvalues
from .triplets import dump_triplets, load_triplets
