"""Delayed-feedback dynamics of an emitter in front of a dielectric mirror.

Thin python layer over the C++ core; see the package README for the model
conventions (c = hbar = eps0 = 1).
"""

from ._core import (  # noqa: F401
    AmplitudeHistory,
    CompareQuantity,
    ContinuumCheck,
    DielectricGeometry,
    DielectricSpec,
    EffectiveModel,
    FeedbackIdentity,
    MirrorNetwork,
    ModelParams,
    OpticsReport,
    ReflectionProvenance,
    ReflectionSpec,
    SeriesMetrics,
    TimeSeries,
    ValidateReport,
    anticommutator_value,
    breaking_points,
    closed_form,
    commensurate_depth,
    compare_series,
    continuum_sum_check,
    derive_params,
    feedback_identity,
    fresnel_reflection,
    integrate_effective,
    integrate_network,
    integrate_reduced,
    noise_prefactor,
    refraction_index,
    run_fig2,
    run_validate,
    solve_alpha,
    susceptibility,
    validity_warning,
    weak_limit_reflection,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
