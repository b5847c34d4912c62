"""Direct and inverse fuzzy transform, discrete and continuous.

The discrete direct transform maps samples (t_j, f_j) to one component per
partition node. Under the default `exact` normalization

    F_i = sum_j f_j A_i(t_j) / sum_j A_i(t_j)

which is the weighted mean minimizing the error functional

    Phi_i(c) = sum_j (f_j - c)^2 A_i(t_j).

The alternative `paper` normalization replaces the denominator with the
constant node spacing T. On an integer sample grid with hat functions and
integer T the two coincide at interior nodes (the cardinality there is
exactly T) and diverge at boundary nodes, whose truncated supports sum to
less than T. `exact` keeps every component a weighted average of covered
samples; `paper` reproduces the fixed-1/T convention verbatim.

The inverse transform reconstructs a smooth approximation

    f(t) ~= sum_i F_i A_i(t)

and the continuous direct transform evaluates the component integrals
numerator / denominator = integral(f * A_i) / integral(A_i) with the same
composite quadrature rule on both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadArgument, BadQuadratureSpec, EmptySupport, IndexOutOfRange
from .partition import FuzzyPartition

EXACT = "exact"
PAPER = "paper"
NORMALIZATIONS = (EXACT, PAPER)

SIMPSON = "simpson"
TRAPEZOID = "trapezoid"


@dataclass(frozen=True)
class FTransformResult:
    """Component vector bound to the partition that produced it."""

    components: np.ndarray
    partition: FuzzyPartition
    normalization: str

    def __post_init__(self):
        components = np.array(self.components, dtype=float)
        components.setflags(write=False)
        object.__setattr__(self, "components", components)
        if len(components) != self.partition.n:
            raise IndexOutOfRange(
                f"{len(components)} components for {self.partition.n} nodes"
            )


def _check_normalization(normalization: str) -> None:
    if normalization not in NORMALIZATIONS:
        raise BadArgument(
            f"unknown normalization {normalization!r}; expected one of {NORMALIZATIONS}"
        )


def direct_discrete(
    sample_points,
    sample_values,
    p: FuzzyPartition,
    normalization: str = EXACT,
) -> FTransformResult:
    """Discrete direct transform of samples (t_j, f_j) over partition p.

    Every node must cover at least one sample with positive membership;
    a node with empty support would yield an undefined component, which is
    an error rather than a silently skipped entry.
    """
    _check_normalization(normalization)
    t = np.asarray(sample_points, dtype=float)
    f = np.asarray(sample_values, dtype=float)
    if t.shape != f.shape:
        raise BadArgument("sample points and values differ in length")
    weights = p.membership_matrix(t)
    coverage = weights.sum(axis=1)
    empty = np.nonzero(coverage == 0.0)[0]
    if empty.size:
        raise EmptySupport(f"node(s) {empty.tolist()} cover no sample")
    numerator = weights @ f
    denominator = p.spacing if normalization == PAPER else coverage
    return FTransformResult(
        components=numerator / denominator,
        partition=p,
        normalization=normalization,
    )


def inverse_discrete(ft: FTransformResult, eval_points) -> np.ndarray:
    """Inverse transform sum_i F_i A_i(t) at in-domain evaluation points."""
    weights = ft.partition.membership_matrix(eval_points)
    return ft.components @ weights


def error_functional(sample_points, sample_values, p: FuzzyPartition, i: int, candidate: float) -> float:
    """Weighted squared residual Phi_i(c) = sum_j (f_j - c)^2 A_i(t_j)."""
    p._check_index(i)
    t = np.asarray(sample_points, dtype=float)
    f = np.asarray(sample_values, dtype=float)
    row = p._degrees(t)[i]
    residual = f - candidate
    return float(np.sum(residual * residual * row))


def _panel_weights(rule: str, lo: float, hi: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature abscissae and weights on [lo, hi] with `panels` subintervals."""
    grid = np.linspace(lo, hi, panels + 1)
    h = (hi - lo) / panels
    if rule == SIMPSON:
        w = np.ones(panels + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    else:
        w = np.full(panels + 1, h)
        w[0] = w[-1] = h / 2.0
    return grid, w


def _sample(f, x: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(x), dtype=float)
        if values.shape == x.shape:
            return values
    except (TypeError, ValueError):
        pass
    return np.array([float(f(xi)) for xi in x])


def direct_continuous(
    f,
    p: FuzzyPartition,
    rule: str = SIMPSON,
    points_per_interval: int = 64,
) -> FTransformResult:
    """Continuous direct transform via composite quadrature per inter-node interval.

    Args:
        f: Sampler over the partition domain (vectorized or scalar callable).
        p: Partition whose components to compute.
        rule: "simpson" (default) or "trapezoid".
        points_per_interval: Quadrature panels per inter-node interval, >= 2;
            Simpson needs an even count.
    """
    if rule not in (SIMPSON, TRAPEZOID):
        raise BadQuadratureSpec(f"unknown rule {rule!r}")
    if points_per_interval < 2:
        raise BadQuadratureSpec(f"need >= 2 panels per interval, got {points_per_interval}")
    if rule == SIMPSON and points_per_interval % 2:
        raise BadQuadratureSpec("Simpson needs an even panel count")

    components = np.empty(p.n)
    for i in range(p.n):
        numerator = 0.0
        denominator = 0.0
        for lo, hi in _support_intervals(p, i):
            grid, w = _panel_weights(rule, lo, hi, points_per_interval)
            degrees = p._degrees(grid)[i]
            values = _sample(f, grid)
            numerator += float(np.sum(w * values * degrees))
            denominator += float(np.sum(w * degrees))
        components[i] = numerator / denominator
    return FTransformResult(components=components, partition=p, normalization=EXACT)


def _support_intervals(p: FuzzyPartition, i: int) -> list[tuple[float, float]]:
    """Inter-node intervals making up node i's (possibly truncated) support."""
    intervals = []
    if i > 0:
        intervals.append((float(p.nodes[i - 1]), float(p.nodes[i])))
    if i < p.n - 1:
        intervals.append((float(p.nodes[i]), float(p.nodes[i + 1])))
    return intervals
