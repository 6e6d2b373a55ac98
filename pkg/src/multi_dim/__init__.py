from .common_types import (
    CriterionChain,
    CriterionStep,
    DiscreteSequence,
    QCriterionResult,
    ScanRoot,
    SequenceSource,
    SpectrumReportDD,
    UniformBoundResult,
    Witness,
)
from .criterion import (
    DEFAULT_DELTA_GRID,
    asymptotic_cutoff,
    criterion_chain,
    dirichlet_eigenvalues,
    positive_roots,
    qcrit_check,
    uniform_bound_check,
    well_posed_dd,
)
from .scan import inner_spectrum_dd, scan_parameters, shifted_numerator
