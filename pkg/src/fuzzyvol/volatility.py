"""Volatility estimators: fuzzy-transform deviation and rolling standard deviation.

The FT route builds a uniform partition over the return index (first node on
the first sample, one node per full horizon T of data), transforms the
returns and their absolute values, and reconstructs two smooth curves:

    baseline  b_t = sum_i B_i A_i(t)   with  B_i the transform of r_t
    envelope  h_t = sum_i H_i A_i(t)   with  H_i the transform of |r_t|

The volatility measure is their gap, the deviation

    d_t = h_t - b_t  >=  0

which vanishes wherever no negative return is in reach: for r_t >= 0 the
absolute and signed transforms agree term by term, so an all-nonnegative
series yields an identically zero deviation. The classical route is the
standard deviation of returns over a rolling window of the same length T,
centered by default so the two measures need no lag to line up.

Deviation is a scale-equivariant risk measure in Luce's sense: scaling every
return by alpha > 0 scales b, h, and d by alpha, and d admits an additive
pointwise form that weights only negative-return frequencies (see
luce_pointwise_risk).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    AlreadyAnnualized,
    BadArgument,
    BadHorizon,
    BadTheta,
    EmptySeries,
    SeriesTooShort,
)
from .ftransform import EXACT, PAPER, NORMALIZATIONS
from .partition import HAT, FuzzyPartition, partition_for_series
from .timeseries import ReturnSeries

FT = "FT"
STD = "STD"

POPULATION = "population"
SAMPLE = "sample"

TRADING_DAYS_PER_YEAR = 252.0


@dataclass(frozen=True)
class VolatilitySeries:
    """Per-day volatility values with undefined entries masked out.

    values holds NaN wherever defined is False (window does not fit, or the
    index lies beyond the last partition node); defined values are >= 0.
    """

    index: np.ndarray
    values: np.ndarray
    method: str
    horizon: int
    annualized: bool
    defined: np.ndarray

    def __post_init__(self):
        index = np.array(self.index, dtype=np.int64)
        values = np.array(self.values, dtype=float)
        defined = np.array(self.defined, dtype=bool)
        for arr in (index, values, defined):
            arr.setflags(write=False)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "defined", defined)
        if not (len(index) == len(values) == len(defined)):
            raise BadArgument("index, values and defined must share one length")
        if self.method not in (FT, STD):
            raise BadArgument(f"unknown method {self.method!r}")

    def defined_values(self) -> np.ndarray:
        return self.values[self.defined]


@dataclass(frozen=True)
class FtVolDecomposition:
    """Everything the FT route produces for one horizon.

    Component vectors hold one entry per partition node; the per-day curves
    (baseline, envelope, deviation) are aligned with `index` and carry NaN
    where the index falls outside the partition domain.
    """

    index: np.ndarray
    defined: np.ndarray
    baseline_components: np.ndarray
    envelope_components: np.ndarray
    baseline: np.ndarray
    envelope: np.ndarray
    deviation: np.ndarray
    partition: FuzzyPartition
    normalization: str
    horizon: int

    def __post_init__(self):
        for name in ("index", "defined", "baseline_components", "envelope_components",
                     "baseline", "envelope", "deviation"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def deviation_series(self) -> VolatilitySeries:
        return VolatilitySeries(
            index=self.index,
            values=self.deviation,
            method=FT,
            horizon=self.horizon,
            annualized=False,
            defined=self.defined,
        )


@dataclass(frozen=True)
class LuceRiskParams:
    """Weights and exponent of the two-sided power risk functional."""

    k_pos: float = 1.0
    k_neg: float = 1.0
    theta: float = 2.0

    def __post_init__(self):
        if self.k_pos < 0 or self.k_neg < 0:
            raise BadArgument("risk weights must be >= 0")
        if self.theta <= 0:
            raise BadTheta(f"theta must be > 0, got {self.theta}")


def _check_horizon(horizon: int) -> int:
    if int(horizon) != horizon or horizon < 1:
        raise BadHorizon(f"horizon must be a positive integer, got {horizon}")
    return int(horizon)


def ft_volatility(
    returns: ReturnSeries,
    horizon: int,
    shape: str = HAT,
    normalization: str = EXACT,
) -> FtVolDecomposition:
    """Fuzzy-transform volatility decomposition at one horizon.

    Builds the series-anchored partition (length // horizon nodes), computes
    component vectors for returns and absolute returns, reconstructs baseline
    and envelope at every in-domain index, and takes deviation = envelope -
    baseline. Samples trailing past the last node are outside the partition
    domain: they enter no component and stay undefined in the output.

    Args:
        returns: Daily return series on a dense index.
        horizon: Node spacing T in trading days, >= 1.
        shape: Basic-function shape, "hat" or "zshaped".
        normalization: "exact" (weighted mean) or "paper" (fixed 1/T).
    """
    horizon = _check_horizon(horizon)
    if normalization not in NORMALIZATIONS:
        raise BadArgument(f"unknown normalization {normalization!r}")
    m = len(returns)
    if m < 2 * horizon + 1:
        raise SeriesTooShort(f"need at least {2 * horizon + 1} returns for horizon {horizon}, got {m}")

    part = partition_for_series(float(returns.index[0]), m, horizon, shape)
    defined = returns.index <= part.end
    t = returns.index[defined].astype(float)
    r = returns.values[defined]

    weights = part.membership_matrix(t)
    coverage = weights.sum(axis=1)
    denominator = float(horizon) if normalization == PAPER else coverage
    b_components = (weights @ r) / denominator
    h_components = (weights @ np.abs(r)) / denominator

    baseline = np.full(m, np.nan)
    envelope = np.full(m, np.nan)
    baseline[defined] = b_components @ weights
    envelope[defined] = h_components @ weights
    deviation = envelope - baseline

    return FtVolDecomposition(
        index=returns.index.copy(),
        defined=defined,
        baseline_components=b_components,
        envelope_components=h_components,
        baseline=baseline,
        envelope=envelope,
        deviation=deviation,
        partition=part,
        normalization=normalization,
        horizon=horizon,
    )


def _window_offset(window: int, centered: bool) -> int:
    return window // 2 if centered else window - 1


def _rolling(values: np.ndarray, window: int) -> np.ndarray:
    return np.lib.stride_tricks.sliding_window_view(values, window)


def std_volatility(
    returns: ReturnSeries,
    window: int,
    centered: bool = True,
    estimator: str = POPULATION,
) -> VolatilitySeries:
    """Rolling standard deviation of returns.

    At index t the window spans [t - floor(T/2), t + ceil(T/2) - 1] when
    centered (the default, so no lag against the fixed-node FT measure) or
    [t - T + 1, t] when trailing. Indices lacking a full window stay
    undefined -- zero would be a meaningful volatility value, so edges are
    masked, never filled.

    Args:
        returns: Daily return series.
        window: Window length T in trading days, >= 2.
        centered: Window placement relative to t.
        estimator: "population" (divide by N) or "sample" (N - 1).
    """
    if int(window) != window or window < 2:
        raise BadHorizon(f"window must be an integer >= 2, got {window}")
    window = int(window)
    if estimator not in (POPULATION, SAMPLE):
        raise BadArgument(f"unknown estimator {estimator!r}")
    m = len(returns)
    if m < window:
        raise SeriesTooShort(f"need at least {window} returns, got {m}")

    ddof = 0 if estimator == POPULATION else 1
    stds = _rolling(returns.values, window).std(axis=1, ddof=ddof)
    offset = _window_offset(window, centered)
    values = np.full(m, np.nan)
    values[offset:offset + len(stds)] = stds
    defined = ~np.isnan(values)
    return VolatilitySeries(
        index=returns.index.copy(),
        values=values,
        method=STD,
        horizon=window,
        annualized=False,
        defined=defined,
    )


def rolling_mean(returns: ReturnSeries, window: int, centered: bool = True) -> np.ndarray:
    """Rolling window mean with the same placement as std_volatility; NaN at edges."""
    if int(window) != window or window < 1:
        raise BadHorizon(f"window must be a positive integer, got {window}")
    window = int(window)
    if len(returns) < window:
        raise SeriesTooShort(f"need at least {window} returns, got {len(returns)}")
    means = _rolling(returns.values, window).mean(axis=1)
    offset = _window_offset(window, centered)
    values = np.full(len(returns), np.nan)
    values[offset:offset + len(means)] = means
    return values


def annualize(series: VolatilitySeries, periods_per_year: float = TRADING_DAYS_PER_YEAR) -> VolatilitySeries:
    """Scale per-day volatility to a yearly figure by sqrt(periods_per_year)."""
    if series.annualized:
        raise AlreadyAnnualized("series is already annualized")
    if periods_per_year <= 0:
        raise BadArgument(f"periods_per_year must be > 0, got {periods_per_year}")
    return replace(series, values=series.values * np.sqrt(periods_per_year), annualized=True)


def theta_deviation(returns: ReturnSeries, theta: float) -> float:
    """Generalized deviation E[|r - mean|^theta].

    theta = 2 is the population variance, theta = 1 the mean absolute
    deviation.
    """
    if len(returns) == 0:
        raise EmptySeries("theta_deviation needs a nonempty series")
    if theta <= 0:
        raise BadTheta(f"theta must be > 0, got {theta}")
    values = returns.values
    return float(np.mean(np.abs(values - values.mean()) ** theta))


def luce_risk(returns: ReturnSeries, params: LuceRiskParams) -> float:
    """Empirical two-sided power risk functional.

    R = k_pos * (1/q) sum_{r > 0} |r|^theta + k_neg * (1/q) sum_{r < 0} |r|^theta

    with q the sample count -- the density in the defining integral replaced
    by empirical frequency. Scaling returns by alpha scales R by alpha^theta.
    """
    if len(returns) == 0:
        raise EmptySeries("luce_risk needs a nonempty series")
    values = returns.values
    q = len(values)
    powered = np.abs(values) ** params.theta
    positive = float(powered[values > 0].sum()) / q
    negative = float(powered[values < 0].sum()) / q
    return params.k_pos * positive + params.k_neg * negative


def luce_pointwise_risk(
    freq: float,
    value: float,
    sample_count: int,
    horizon: int,
    membership_energy: float = 1.0,
) -> float:
    """Additive pointwise form of the deviation measure.

    For a return value occurring with empirical frequency `freq` among
    `sample_count` observations, the risk contribution is

        (2 * q * energy / T) * freq   for value < 0
        0                             for value >= 0

    so zero frequency (and any nonnegative return) contributes nothing.
    `membership_energy` is the sum of squared memberships at the evaluation
    point, a diagnostic constant in (0, 1] supplied by the caller.
    """
    if not 0.0 <= freq <= 1.0:
        raise BadArgument(f"freq must lie in [0, 1], got {freq}")
    if sample_count < 1:
        raise BadArgument(f"sample_count must be >= 1, got {sample_count}")
    if horizon < 1:
        raise BadArgument(f"horizon must be >= 1, got {horizon}")
    if not 0.0 < membership_energy <= 1.0:
        raise BadArgument(f"membership_energy must lie in (0, 1], got {membership_energy}")
    if value >= 0:
        return 0.0
    return (2.0 * sample_count * membership_energy / horizon) * freq


def deviation_upper_bound(returns: ReturnSeries, horizon: int, shape: str = HAT) -> np.ndarray:
    """Pointwise bound on the deviation from negative returns in reach.

    At index t the bound is (2/T) * sum |r_s| over negative returns s lying
    in the support of any basic function active at t. Under the fixed-1/T
    normalization d_t never exceeds it, since each cross-membership weight
    sum_i A_i(s) A_i(t) is at most 1. Returns NaN outside the partition
    domain, aligned with ft_volatility's defined mask.
    """
    horizon = _check_horizon(horizon)
    m = len(returns)
    if m < 2 * horizon + 1:
        raise SeriesTooShort(f"need at least {2 * horizon + 1} returns for horizon {horizon}, got {m}")

    part = partition_for_series(float(returns.index[0]), m, horizon, shape)
    defined = returns.index <= part.end
    t = returns.index[defined].astype(float)
    r = returns.values[defined]

    weights = part.membership_matrix(t)
    active = weights > 0.0
    positions = np.arange(len(t))
    # Per node, the first/last covered sample position; supports are contiguous.
    lo = np.where(active, positions[None, :], len(t)).min(axis=1)
    hi = np.where(active, positions[None, :], -1).max(axis=1)
    # Per sample position, the covered range of the nodes active there.
    lo_t = np.where(active, lo[:, None], len(t)).min(axis=0)
    hi_t = np.where(active, hi[:, None], -1).max(axis=0)

    negative_mass = np.where(r < 0, -r, 0.0)
    prefix = np.concatenate(([0.0], np.cumsum(negative_mass)))
    bound = (2.0 / horizon) * (prefix[hi_t + 1] - prefix[lo_t])

    values = np.full(m, np.nan)
    values[defined] = bound
    return values
