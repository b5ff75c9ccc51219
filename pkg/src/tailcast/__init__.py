"""Heavy-tail severity fitting and event-count forecasting.

Two halves share one catalog format: power-law tail estimation for event
severities (threshold selection, piecewise fits, bootstrap, sample-max
analytics) and a doubly stochastic Poisson count model with
mean-reverting log-intensity for multi-year forecasts.
"""

from .catalog import (
    BinnedCounts,
    EventCatalog,
    EventRecord,
    LoadWarnings,
    bin_events,
    day_number,
    day_to_date,
    filter_tail,
    load_catalog,
    write_catalog,
)
from .errors import (
    AdaptationError,
    CatalogFormatError,
    DegenerateSampleError,
    TailcastError,
)
from .kernels import BACKEND
from .lgcp import (
    ForecastDistribution,
    LatentPath,
    McmcConfig,
    OuParams,
    PosteriorDraws,
    PriorConfig,
    forecast_counts,
    grad_log_posterior,
    log_posterior,
    mala_step,
    ou_moments,
    sample_posterior,
    update_params,
)
from .powerlaw import (
    BootstrapResult,
    PiecewiseModel,
    PowerLawModel,
    TailFit,
    bootstrap_fit,
    cv_select_xmin,
    empirical_tail_cdf,
    exceedance_probability,
    extreme_tail_ks,
    fit_piecewise,
    ks_distance,
    likelihood_ratio_test,
    log_likelihood,
    mle_alpha,
    sample_max_quantile,
    select_xmin,
    tail_cdf,
    tail_survival,
)
from .rng import substream
from .synth import (
    SynthSpec,
    sample_piecewise,
    sample_power_law,
    simulate_lgcp_counts,
    synthetic_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # catalog
    "BinnedCounts",
    "EventCatalog",
    "EventRecord",
    "LoadWarnings",
    "bin_events",
    "day_number",
    "day_to_date",
    "filter_tail",
    "load_catalog",
    "write_catalog",
    # errors
    "AdaptationError",
    "CatalogFormatError",
    "DegenerateSampleError",
    "TailcastError",
    # power law
    "BootstrapResult",
    "PiecewiseModel",
    "PowerLawModel",
    "TailFit",
    "bootstrap_fit",
    "cv_select_xmin",
    "empirical_tail_cdf",
    "exceedance_probability",
    "extreme_tail_ks",
    "fit_piecewise",
    "ks_distance",
    "likelihood_ratio_test",
    "log_likelihood",
    "mle_alpha",
    "sample_max_quantile",
    "select_xmin",
    "tail_cdf",
    "tail_survival",
    # count model
    "ForecastDistribution",
    "LatentPath",
    "McmcConfig",
    "OuParams",
    "PosteriorDraws",
    "PriorConfig",
    "forecast_counts",
    "grad_log_posterior",
    "log_posterior",
    "mala_step",
    "ou_moments",
    "sample_posterior",
    "update_params",
    # synthetic generators
    "SynthSpec",
    "sample_piecewise",
    "sample_power_law",
    "simulate_lgcp_counts",
    "synthetic_catalog",
    # utilities
    "substream",
]
