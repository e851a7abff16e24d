"""qlmarket: a finite quantum-mechanical stock-market simulator.

States live on the price lattice {0..N-1}; a unitary finite Fourier
transform connects the price picture to the ownership picture; the stock
price evolves under a Schrodinger-type equation with a driven potential,
integrated by two independent schemes. The `qlm` command line runs archived
scenario files and emits plot-ready CSV/JSON tables.
"""
from ._kernels import HAVE_COMPILED, backend_name
from .errors import (
    DimensionMismatchError,
    DuplicateIndexError,
    EigendecompositionError,
    IndexOutOfRangeError,
    NotHermitianError,
    NotNormalizedError,
    ParseError,
    QlmError,
    StepBudgetExceededError,
    TimeOutOfTableRangeError,
    UnknownKeyError,
    ValidationError,
    ZeroVectorError,
)
from .evolve import (
    DEFAULT_MAX_STEPS,
    INTEGRATORS,
    NORM_DRIFT_TOL,
    EvolutionConfig,
    Trajectory,
    evolve,
    step_expm,
    step_split,
)
from .fourier import dft, dft_matrix, idft
from .observe import ObservationRecord, observe_state, observe_trajectory
from .operators import (
    HamiltonianParams,
    LatticeOperator,
    apply,
    expectation,
    hamiltonian_at,
    is_hermitian,
    ownership_operator,
    price_operator,
)
from .potentials import PotentialSpec, potential_values
from .scenario import (
    CSV_HEADER,
    Scenario,
    emit_records,
    load_packaged_scenario,
    packaged_scenario_names,
    parse_scenario,
    records_from_json,
    render_csv,
    render_json,
    run_scenario,
    with_overrides,
)
from .state import (
    EXACT_TOL,
    PIPELINE_TOL,
    Distribution,
    StateVector,
    inner_product,
    make_state,
    norm,
    probabilities,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "DEFAULT_MAX_STEPS",
    "Distribution",
    "EXACT_TOL",
    "EvolutionConfig",
    "HAVE_COMPILED",
    "HamiltonianParams",
    "INTEGRATORS",
    "LatticeOperator",
    "NORM_DRIFT_TOL",
    "ObservationRecord",
    "PIPELINE_TOL",
    "PotentialSpec",
    "Scenario",
    "StateVector",
    "Trajectory",
    "apply",
    "backend_name",
    "dft",
    "dft_matrix",
    "emit_records",
    "evolve",
    "expectation",
    "hamiltonian_at",
    "idft",
    "inner_product",
    "is_hermitian",
    "load_packaged_scenario",
    "make_state",
    "norm",
    "observe_state",
    "observe_trajectory",
    "ownership_operator",
    "packaged_scenario_names",
    "parse_scenario",
    "potential_values",
    "price_operator",
    "probabilities",
    "records_from_json",
    "render_csv",
    "render_json",
    "run_scenario",
    "step_expm",
    "step_split",
    "with_overrides",
    # errors
    "QlmError",
    "IndexOutOfRangeError",
    "DuplicateIndexError",
    "ZeroVectorError",
    "DimensionMismatchError",
    "NotNormalizedError",
    "NotHermitianError",
    "TimeOutOfTableRangeError",
    "EigendecompositionError",
    "StepBudgetExceededError",
    "ParseError",
    "ValidationError",
    "UnknownKeyError",
]
