"""Historical market volatility via the fuzzy transform.

The library decomposes a daily return series into a smooth baseline and an
absolute-return envelope over a uniform fuzzy partition of the trading-day
axis; their gap is the volatility measure. A rolling standard-deviation
estimator and alignment/correlation tooling support side-by-side comparison,
and the CLI ties ingestion, estimation, reporting, and synthetic data
generation together.
"""

__version__ = "0.1.0"

from .analysis import (
    AlignedPairs,
    ComparisonReport,
    HorizonResult,
    align,
    compare,
    compare_detailed,
    pearson,
)
from .errors import FuzzyvolError
from .ftransform import (
    FTransformResult,
    direct_continuous,
    direct_discrete,
    error_functional,
    inverse_discrete,
)
from .partition import (
    FuzzyPartition,
    build_uniform,
    partition_for_series,
    series_node_count,
)
from .timeseries import (
    PriceSeries,
    ReturnSeries,
    SynthSpec,
    load_prices,
    log_returns,
    simple_returns,
    synth_prices,
)
from .volatility import (
    FtVolDecomposition,
    LuceRiskParams,
    VolatilitySeries,
    annualize,
    deviation_upper_bound,
    ft_volatility,
    luce_pointwise_risk,
    luce_risk,
    rolling_mean,
    std_volatility,
    theta_deviation,
)

__all__ = [
    "AlignedPairs",
    "ComparisonReport",
    "FTransformResult",
    "FtVolDecomposition",
    "FuzzyPartition",
    "FuzzyvolError",
    "HorizonResult",
    "LuceRiskParams",
    "PriceSeries",
    "ReturnSeries",
    "SynthSpec",
    "VolatilitySeries",
    "align",
    "annualize",
    "build_uniform",
    "compare",
    "compare_detailed",
    "deviation_upper_bound",
    "direct_continuous",
    "direct_discrete",
    "error_functional",
    "ft_volatility",
    "inverse_discrete",
    "load_prices",
    "log_returns",
    "luce_pointwise_risk",
    "luce_risk",
    "partition_for_series",
    "pearson",
    "rolling_mean",
    "series_node_count",
    "simple_returns",
    "std_volatility",
    "synth_prices",
    "theta_deviation",
]
