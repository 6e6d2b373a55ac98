from .analysis import (
    DEGENERATE_POINTER,
    g_limit_1d,
    inner_spectrum_1d,
    is_degenerate,
    is_well_posed_1d,
    mean,
    mean_inv,
    mean_resolvent,
    mean_zero_numerator,
    projected_residual,
    solve_projected_1d,
)
from .common_types import GridFunction, SpectrumReport1D, midpoints
