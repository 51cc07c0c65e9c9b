"""Coherence measures, mutually unbiased bases, and spectral entropy tools."""

from .bounds import (
    RelationId,
    RelationReport,
    applicable_relations,
    evaluate_relation,
    srd_qubit_limit,
    subentropy_bound_table,
    tau_lower,
)
from .errors import (
    BlochNormExceeded,
    CoherenceError,
    ConvergenceFailure,
    DimensionMismatch,
    InconsistentStatistics,
    InvalidDimension,
    InvalidEpsilon,
    InvalidRank,
    InvalidSpectrum,
    MalformedDistribution,
    NonHermitianInput,
    NonPrimeDimension,
    NonUnitVector,
    NotApplicable,
    NotQubit,
    TooFewSamples,
)
from .haar_average import (
    EstimateResult,
    closed_form_targets,
    mean_basis_entropy,
    mean_classical_purity,
    mean_coherence,
    mean_relent_closed_form,
    rms_coherence,
)
from .linalg import (
    Basis,
    RngStream,
    computational_basis,
    hermitian_eigensystem,
    is_hermitian,
    is_unitary,
    rotate_basis,
    sample_haar_unitaries,
    sample_haar_unitary,
)
from .measures import (
    CoherenceReport,
    basis_entropy,
    classical_purity,
    coherence_l1,
    coherence_l2,
    coherence_radius_l1,
    coherence_radius_l2,
    coherence_relent,
    coherence_report,
    mub_constant,
    qubit_rms_error,
    state_subentropy,
    subentropy,
)
from .mub import (
    MubSet,
    basis_probabilities,
    build_complete_mub,
    diagonal_part,
    is_prime,
    ivanovic_reconstruct,
    unbiasedness_deviation,
)
from .states import (
    DensityOperator,
    bloch_vector,
    epsilon_state,
    from_bloch,
    quantum_purity,
    sample_random_density,
    von_neumann_entropy,
)

__version__ = "0.1.0"
