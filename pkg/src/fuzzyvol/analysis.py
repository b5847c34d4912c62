"""Alignment, correlation, and the FT-vs-STD comparison report.

For each requested horizon the comparison computes both volatility series,
intersects their defined masks (optionally after lagging the STD series),
and reports the Pearson correlation of the aligned pairs together with node
and pair counts and the two means. When an output directory is given it
emits per-horizon point-wise, scatter, and adjusted-return CSVs plus a
report JSON, and can render figures alongside them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegenerateVariance, NoOverlap, TooFewPairs
from .ftransform import EXACT
from .io_utils import write_csv, write_json, write_sidecar
from .partition import HAT
from .timeseries import ReturnSeries, format_value
from .volatility import (
    POPULATION,
    FtVolDecomposition,
    VolatilitySeries,
    annualize,
    ft_volatility,
    rolling_mean,
    std_volatility,
)

DEFAULT_HORIZONS = (("yearly", 252), ("monthly", 21), ("weekly", 5))


@dataclass(frozen=True)
class AlignedPairs:
    """Index-matched (FT, STD) value pairs after lagging."""

    indices: np.ndarray
    x: np.ndarray
    y: np.ndarray
    lag: int

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class HorizonResult:
    name: str
    horizon: int
    nodes: int
    pairs: int
    pearson: float | None
    mean_ft: float | None
    mean_std: float | None


@dataclass(frozen=True)
class ComparisonReport:
    rows: int
    start: str | None
    end: str | None
    return_kind: str
    horizons: tuple[HorizonResult, ...]

    def to_dict(self) -> dict:
        return {
            "input": {
                "rows": self.rows,
                "start": self.start,
                "end": self.end,
                "return_kind": self.return_kind,
            },
            "horizons": [
                {
                    "name": h.name,
                    "T": h.horizon,
                    "nodes": h.nodes,
                    "pairs": h.pairs,
                    "pearson": h.pearson,
                    "mean_ft": h.mean_ft,
                    "mean_std": h.mean_std,
                }
                for h in self.horizons
            ],
        }


@dataclass(frozen=True)
class HorizonDetail:
    """Per-horizon working set behind one report record (for emission)."""

    name: str
    horizon: int
    decomposition: FtVolDecomposition
    ft: VolatilitySeries
    std: VolatilitySeries
    pairs: AlignedPairs | None
    baseline_adjusted: np.ndarray
    mean_adjusted: np.ndarray


def align(ft: VolatilitySeries, std: VolatilitySeries, lag: int = 0) -> AlignedPairs:
    """Pair ft[t] with std[t - lag] wherever both are defined.

    The default lag of 0 assumes a centered STD window, which already
    compensates the half-period shift a trailing window would introduce.
    """
    ft_index = ft.index[ft.defined]
    std_index = std.index[std.defined] + lag
    common = np.intersect1d(ft_index, std_index)
    if common.size == 0:
        raise NoOverlap("no index where both series are defined")
    ft_pos = {int(t): k for k, t in enumerate(ft.index)}
    std_pos = {int(t): k for k, t in enumerate(std.index)}
    x = np.array([ft.values[ft_pos[int(t)]] for t in common])
    y = np.array([std.values[std_pos[int(t) - lag]] for t in common])
    return AlignedPairs(indices=common, x=x, y=y, lag=lag)


def pearson(pairs: AlignedPairs) -> float:
    """Product-moment correlation of the aligned pairs."""
    if len(pairs) < 2:
        raise TooFewPairs(f"need >= 2 pairs, got {len(pairs)}")
    dx = pairs.x - pairs.x.mean()
    dy = pairs.y - pairs.y.mean()
    sx = float(np.sqrt(np.sum(dx * dx)))
    sy = float(np.sqrt(np.sum(dy * dy)))
    if sx == 0.0 or sy == 0.0:
        raise DegenerateVariance("zero variance in at least one coordinate")
    return float(np.sum(dx * dy) / (sx * sy))


def compare(
    returns: ReturnSeries,
    horizons=DEFAULT_HORIZONS,
    shape: str = HAT,
    normalization: str = EXACT,
    estimator: str = POPULATION,
    centered: bool = True,
    lag: int = 0,
    annualized: bool = False,
    out_dir: Path | str | None = None,
    render: bool = False,
    config: dict | None = None,
) -> ComparisonReport:
    """FT-vs-STD comparison across horizons.

    Horizons are processed independently; an undefined correlation (constant
    input, no overlap) is reported as an explicit null, never NaN. With
    out_dir set, per-horizon data files and the report JSON are written
    there; render additionally draws figures next to them.
    """
    report, details = compare_detailed(
        returns,
        horizons,
        shape=shape,
        normalization=normalization,
        estimator=estimator,
        centered=centered,
        lag=lag,
        annualized=annualized,
    )
    if out_dir is not None:
        effective = dict(config or {})
        effective.setdefault("shape", shape)
        effective.setdefault("normalization", normalization)
        effective.setdefault("estimator", estimator)
        effective.setdefault("centered", centered)
        effective.setdefault("lag", lag)
        effective.setdefault("annualized", annualized)
        effective.setdefault("return_kind", returns.kind)
        effective.setdefault("horizons", [[name, t] for name, t in horizons])
        write_comparison_outputs(Path(out_dir), report, details, returns, effective)
        if render:
            from .figures import render_comparison_figures

            render_comparison_figures(Path(out_dir), details, returns, annualized=annualized)
    return report


def compare_detailed(
    returns: ReturnSeries,
    horizons=DEFAULT_HORIZONS,
    shape: str = HAT,
    normalization: str = EXACT,
    estimator: str = POPULATION,
    centered: bool = True,
    lag: int = 0,
    annualized: bool = False,
) -> tuple[ComparisonReport, list[HorizonDetail]]:
    """compare() without emission; returns the per-horizon working sets too."""
    details: list[HorizonDetail] = []
    records: list[HorizonResult] = []
    for name, horizon in horizons:
        dec = ft_volatility(returns, horizon, shape=shape, normalization=normalization)
        ft_series = dec.deviation_series()
        std_series = std_volatility(returns, horizon, centered=centered, estimator=estimator)
        if annualized:
            ft_series = annualize(ft_series)
            std_series = annualize(std_series)
        means = rolling_mean(returns, horizon, centered=centered)
        try:
            pairs = align(ft_series, std_series, lag=lag)
        except NoOverlap:
            pairs = None
        correlation: float | None
        if pairs is None:
            correlation = None
        else:
            try:
                correlation = pearson(pairs)
            except (DegenerateVariance, TooFewPairs):
                correlation = None
        records.append(
            HorizonResult(
                name=name,
                horizon=horizon,
                nodes=dec.partition.n,
                pairs=0 if pairs is None else len(pairs),
                pearson=correlation,
                mean_ft=None if pairs is None else float(pairs.x.mean()),
                mean_std=None if pairs is None else float(pairs.y.mean()),
            )
        )
        details.append(
            HorizonDetail(
                name=name,
                horizon=horizon,
                decomposition=dec,
                ft=ft_series,
                std=std_series,
                pairs=pairs,
                baseline_adjusted=returns.values - dec.baseline,
                mean_adjusted=returns.values - means,
            )
        )
    start = returns.dates[0].isoformat() if returns.dates else None
    end = returns.dates[-1].isoformat() if returns.dates else None
    report = ComparisonReport(
        rows=len(returns),
        start=start,
        end=end,
        return_kind=returns.kind,
        horizons=tuple(records),
    )
    return report, details


def _cell(value: float) -> str:
    return "" if math.isnan(value) else format_value(value)


def _date_labels(returns: ReturnSeries) -> list[str]:
    if returns.dates is None:
        return [""] * len(returns)
    return [d.isoformat() for d in returns.dates]


def write_comparison_outputs(
    out_dir: Path,
    report: ComparisonReport,
    details: list[HorizonDetail],
    returns: ReturnSeries,
    config: dict,
) -> list[Path]:
    """Emit report.json plus per-horizon point-wise / scatter / adjusted CSVs."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    labels = _date_labels(returns)

    for detail in details:
        ft, std = detail.ft, detail.std
        lines = []
        for k in range(len(returns)):
            if not ft.defined[k]:
                continue
            lines.append(
                f"{ft.index[k]},{labels[k]},{format_value(ft.values[k])},"
                f"{_cell(std.values[k])},{int(std.defined[k])}"
            )
        written.append(
            write_csv(out_dir / f"pointwise_{detail.name}.csv",
                      "index,date,ft,std,defined_std", lines, config)
        )

        lines = []
        if detail.pairs is not None:
            for t, x, y in zip(detail.pairs.indices, detail.pairs.x, detail.pairs.y):
                lines.append(f"{t},{format_value(x)},{format_value(y)}")
        written.append(
            write_csv(out_dir / f"scatter_{detail.name}.csv", "index,ft,std", lines, config)
        )

        lines = []
        for k in range(len(returns)):
            lines.append(
                f"{returns.index[k]},{labels[k]},{format_value(returns.values[k])},"
                f"{_cell(detail.baseline_adjusted[k])},{_cell(detail.mean_adjusted[k])}"
            )
        written.append(
            write_csv(out_dir / f"adjusted_returns_{detail.name}.csv",
                      "index,date,return,baseline_adj,mean_adj", lines, config)
        )

    report_path = out_dir / "report.json"
    write_json(report_path, report.to_dict())
    write_sidecar(report_path, config)
    written.append(report_path)
    return written
