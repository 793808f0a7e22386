"""Spectral counting for two-dimensional dipole-type Schrodinger and Dirac
operators: Mathieu channel decomposition, imaginary-order Bessel zeros,
eigenvalue counting by independent routes, accumulation slopes, and
eigenvalue-count bounds."""

from ._core import (
    Boundary,
    Channel,
    ChannelCount,
    ChannelSet,
    CountingCurve,
    CurveSample,
    DipoleSpec,
    GridInadequate,
    HypothesisReport,
    LineGrid,
    MathieuSpectrum,
    McLachlanGroundState,
    NoConvergence,
    NoSignChange,
    RadialGrid,
    RearrangedProfile,
    RearrangementArg,
    SampledPotential,
    ShargorodskyTerms,
    Tolerances,
    Tridiagonal,
    UnderflowError,
    ZeroEntry,
    ZeroTable,
    count_eigenvalues,
    count_negative_radial,
    count_zeros_above,
    count_zeros_above_floor,
    counting_curve,
    decompose,
    decreasing_rearrangement,
    dirac_slope,
    eval_k,
    ground_state_mclachlan,
    hypothesis_check,
    make_zero_table,
    mathieu_matrix,
    mathieu_spectrum,
    oracle_auto_grid,
    oracle_count_below,
    phase,
    shargorodsky_functional,
    sturm_count,
    trace_sqrt_neg,
    tridiag_eigenvalue,
    zero_asymptotic,
    zero_refined,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
