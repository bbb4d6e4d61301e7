"""Locus-aligned reference-frame transforms for unbalanced three-phase signals.

An unbalanced sinusoidal three-phase triple traces an ellipse in abc space.
This package builds a basis aligned with that locus from two evaluations a
quarter period apart, inverts the resulting 3x3 frame matrix in closed form,
and maps the signal into coordinates that are unit-amplitude quadrature
sinusoids with a null third channel, hence constant after a synchronous
rotation.  Classical Clarke/Park pipelines and Fortescue symmetrical
components are included for comparison.
"""

from .locus import (
    CircularLocusError,
    DegenerateLocusError,
    InsufficientRateError,
    InsufficientSpanError,
    LocusBasis,
    LocusError,
    MAX_NORM,
    MeasurementError,
    NormProfile,
    NotQuarterPeriodError,
    PHASE_A_PEAK,
    UndefinedOrientationError,
    basis_from_samples,
    basis_from_stream,
    basis_from_vectors,
    basis_vectors,
    build_basis,
    degeneracy_metric,
    norm_profile,
    normal_vector,
    resolve_orientation,
    theta_max_norm,
    theta_phase_a_peak,
)
from .sequence import (
    PhasorTriple,
    SequenceComponents,
    ZeroPositiveSequenceError,
    fortescue,
    reconstruct,
    to_phasors,
    unbalance_metrics,
)
from .transform import (
    FRAME_KINDS,
    FrameTransform,
    SingularMatrixError,
    TransformedSeries,
    abc_series,
    apply,
    assemble,
    clarke_matrix,
    park_rotate,
    pipeline_clarke_park,
    pipeline_locus,
)
from .waveform import (
    PhasorScenario,
    SampleFrame,
    ScenarioError,
    ScenarioSegment,
    evaluate,
    evaluate_scenario,
    load_scenario,
    parse_scenario,
    sample_series,
    segment_at,
    total_phases,
    wrap_angle,
)

__version__ = "0.1.0"

__all__ = [
    "CircularLocusError",
    "DegenerateLocusError",
    "FRAME_KINDS",
    "FrameTransform",
    "InsufficientRateError",
    "InsufficientSpanError",
    "LocusBasis",
    "LocusError",
    "MAX_NORM",
    "MeasurementError",
    "NormProfile",
    "NotQuarterPeriodError",
    "PHASE_A_PEAK",
    "PhasorScenario",
    "PhasorTriple",
    "SampleFrame",
    "ScenarioError",
    "ScenarioSegment",
    "SequenceComponents",
    "SingularMatrixError",
    "TransformedSeries",
    "UndefinedOrientationError",
    "ZeroPositiveSequenceError",
    "abc_series",
    "apply",
    "assemble",
    "basis_from_samples",
    "basis_from_stream",
    "basis_from_vectors",
    "basis_vectors",
    "build_basis",
    "clarke_matrix",
    "degeneracy_metric",
    "evaluate",
    "evaluate_scenario",
    "fortescue",
    "load_scenario",
    "norm_profile",
    "normal_vector",
    "park_rotate",
    "parse_scenario",
    "pipeline_clarke_park",
    "pipeline_locus",
    "reconstruct",
    "resolve_orientation",
    "sample_series",
    "segment_at",
    "theta_max_norm",
    "theta_phase_a_peak",
    "to_phasors",
    "total_phases",
    "unbalance_metrics",
    "wrap_angle",
]
