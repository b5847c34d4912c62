"""Daily price ingestion, return computation, and synthetic path generation.

Time is a dense trading-day index: position 0..m-1 in the sorted price file.
Calendar dates are carried for labelling only and never enter the math, so
weekends and holidays are invisible to everything downstream.

Returns come in two kinds:

    simple:  r_t = (p_t - p_{t-1}) / p_{t-1}
    log:     r_t = ln(p_t / p_{t-1})

Both are dimensionless per-day quantities indexed 1..m-1.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateDate,
    InvalidSpec,
    MalformedCsv,
    NonPositivePrice,
    TooShort,
)

DATE_COLUMN = "date"
CLOSE_COLUMN = "close"

SIMPLE = "simple"
LOG = "log"

_DAYFIRST_FORMATS = ("%d-%m-%Y", "%d/%m/%Y")


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PriceSeries:
    """Ordered daily closing prices on a dense trading-day index.

    Attributes:
        dates: Strictly increasing calendar dates, informational only.
        prices: Positive closing prices, one per date.
    """

    dates: tuple[dt.date, ...]
    prices: np.ndarray

    def __post_init__(self):
        prices = _frozen_array(self.prices, float)
        object.__setattr__(self, "prices", prices)
        object.__setattr__(self, "dates", tuple(self.dates))
        if len(self.dates) != len(prices):
            raise MalformedCsv("dates and prices differ in length")
        if len(prices) < 2:
            raise TooShort(f"need at least 2 prices, got {len(prices)}")
        if not np.all(np.isfinite(prices)):
            raise MalformedCsv("non-finite price")
        if np.any(prices <= 0):
            raise NonPositivePrice("all prices must be > 0")
        for a, b in zip(self.dates, self.dates[1:]):
            if b <= a:
                raise DuplicateDate(f"dates not strictly increasing at {b}")

    def __len__(self) -> int:
        return len(self.prices)

    @property
    def index(self) -> np.ndarray:
        """Trading-day ordinals 0..m-1."""
        return np.arange(len(self.prices))


@dataclass(frozen=True)
class ReturnSeries:
    """Daily returns on a dense trading-day index.

    Attributes:
        index: Trading-day ordinals (1..m-1 when derived from prices).
        values: Return values, dimensionless.
        kind: "simple" or "log".
        dates: Optional calendar dates aligned with index, labelling only.
    """

    index: np.ndarray
    values: np.ndarray
    kind: str
    dates: tuple[dt.date, ...] | None = None

    def __post_init__(self):
        index = _frozen_array(self.index, np.int64)
        values = _frozen_array(self.values, float)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "values", values)
        if self.kind not in (SIMPLE, LOG):
            raise InvalidSpec(f"unknown return kind {self.kind!r}")
        if len(index) != len(values):
            raise InvalidSpec("index and values differ in length")
        if len(index) > 1 and not np.all(np.diff(index) == 1):
            raise InvalidSpec("return index must be dense (consecutive ordinals)")
        if self.dates is not None:
            object.__setattr__(self, "dates", tuple(self.dates))
            if len(self.dates) != len(values):
                raise InvalidSpec("dates and values differ in length")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SynthSpec:
    """Parameters for a seeded geometric-Brownian-motion price path.

    regimes, when given, is a list of (start_index, vol) pairs with strictly
    increasing start indices in [0, length); from each start onward the daily
    volatility switches to the paired value.
    """

    drift: float = 0.0
    vol: float = 0.01
    initial_price: float = 100.0
    length: int = 252
    seed: int = 0
    regimes: tuple[tuple[int, float], ...] | None = None

    def __post_init__(self):
        if self.length < 2:
            raise InvalidSpec(f"length must be >= 2, got {self.length}")
        if self.initial_price <= 0:
            raise InvalidSpec("initial price must be > 0")
        if self.vol < 0:
            raise InvalidSpec("volatility must be >= 0")
        if self.regimes is not None:
            object.__setattr__(self, "regimes", tuple((int(s), float(v)) for s, v in self.regimes))
            prev = -1
            for start, vol in self.regimes:
                if not 0 <= start < self.length:
                    raise InvalidSpec(f"regime start {start} outside [0, {self.length})")
                if start <= prev:
                    raise InvalidSpec("regime starts must be strictly increasing")
                if vol < 0:
                    raise InvalidSpec("regime volatility must be >= 0")
                prev = start


def _parse_date(text: str, dayfirst: bool) -> dt.date:
    text = text.strip()
    if dayfirst:
        for fmt in _DAYFIRST_FORMATS:
            try:
                return dt.datetime.strptime(text, fmt).date()
            except ValueError:
                continue
        raise MalformedCsv(f"cannot parse day-first date {text!r}")
    try:
        return dt.date.fromisoformat(text)
    except ValueError as exc:
        raise MalformedCsv(f"cannot parse ISO date {text!r}") from exc


def _read_text(source) -> str:
    if hasattr(source, "read"):
        raw = source.read()
    elif isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            raw = fh.read()
    else:
        raise MalformedCsv(f"unsupported source {type(source).__name__}")
    if isinstance(raw, bytes):
        try:
            return raw.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise MalformedCsv("input is not valid UTF-8") from exc
    return raw.lstrip("﻿")


def load_prices(source, *, dayfirst: bool = False) -> PriceSeries:
    """Parse a close-price CSV into a PriceSeries.

    The header must contain `date` and `close` columns (matched by name,
    case-insensitive); extra columns are ignored. Rows are sorted by date, so
    shuffled input yields the same series. Duplicate dates, missing cells,
    non-numeric or non-positive prices are hard errors -- nothing is
    interpolated.

    Args:
        source: Path, byte stream, or text stream of UTF-8 CSV data.
        dayfirst: Parse dates as DD-MM-YYYY / DD/MM/YYYY instead of ISO-8601.
    """
    text = _read_text(source)
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedCsv("empty input: no header row") from None
    names = [cell.strip().lower() for cell in header]
    try:
        date_col = names.index(DATE_COLUMN)
        close_col = names.index(CLOSE_COLUMN)
    except ValueError:
        raise MalformedCsv(
            f"header must contain {DATE_COLUMN!r} and {CLOSE_COLUMN!r} columns, got {header!r}"
        ) from None

    rows: list[tuple[dt.date, float]] = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) <= max(date_col, close_col):
            raise MalformedCsv(f"row {lineno}: expected at least {max(date_col, close_col) + 1} cells")
        date = _parse_date(row[date_col], dayfirst)
        cell = row[close_col].strip()
        if not cell:
            raise MalformedCsv(f"row {lineno}: missing close price")
        try:
            price = float(cell)
        except ValueError:
            raise MalformedCsv(f"row {lineno}: non-numeric price {cell!r}") from None
        if not math.isfinite(price):
            raise MalformedCsv(f"row {lineno}: non-finite price {cell!r}")
        if price <= 0:
            raise NonPositivePrice(f"row {lineno}: price {price} is not > 0")
        rows.append((date, price))

    rows.sort(key=lambda item: item[0])
    for (d1, _), (d2, _) in zip(rows, rows[1:]):
        if d1 == d2:
            raise DuplicateDate(f"duplicate date {d1.isoformat()}")
    if len(rows) < 2:
        raise TooShort(f"need at least 2 price rows, got {len(rows)}")
    dates = tuple(d for d, _ in rows)
    prices = np.array([p for _, p in rows])
    return PriceSeries(dates=dates, prices=prices)


def simple_returns(prices: PriceSeries) -> ReturnSeries:
    """Simple daily returns r_t = (p_t - p_{t-1}) / p_{t-1}."""
    p = prices.prices
    values = (p[1:] - p[:-1]) / p[:-1]
    return ReturnSeries(
        index=np.arange(1, len(p)),
        values=values,
        kind=SIMPLE,
        dates=prices.dates[1:],
    )


def log_returns(prices: PriceSeries) -> ReturnSeries:
    """Logarithmic daily returns r_t = ln(p_t / p_{t-1})."""
    p = prices.prices
    values = np.log(p[1:] / p[:-1])
    return ReturnSeries(
        index=np.arange(1, len(p)),
        values=values,
        kind=LOG,
        dates=prices.dates[1:],
    )


def trading_dates(n: int, start: dt.date = dt.date(2000, 1, 3)) -> tuple[dt.date, ...]:
    """n consecutive weekdays from `start` (synthetic calendar labels)."""
    out: list[dt.date] = []
    day = start
    while len(out) < n:
        if day.weekday() < 5:
            out.append(day)
        day += dt.timedelta(days=1)
    return tuple(out)


def synth_prices(spec: SynthSpec) -> PriceSeries:
    """Seeded geometric Brownian motion with optional volatility regimes.

    Prices accumulate in log space, so they stay positive; the step leaving
    day i uses the regime volatility in force at day i. Identical specs give
    identical series.
    """
    steps = spec.length - 1
    vol = np.full(steps, spec.vol)
    if spec.regimes:
        for start, v in spec.regimes:
            vol[start:] = v
    rng = np.random.default_rng(spec.seed)
    shocks = rng.standard_normal(steps)
    increments = (spec.drift - 0.5 * vol**2) + vol * shocks
    log_prices = math.log(spec.initial_price) + np.concatenate(([0.0], np.cumsum(increments)))
    return PriceSeries(dates=trading_dates(spec.length), prices=np.exp(log_prices))


def format_value(x: float) -> str:
    """CSV cell with 10 significant digits."""
    return f"{x:.10g}"


def write_prices_csv(stream, prices: PriceSeries) -> None:
    """Write `date,close` rows, LF line endings, 10 significant digits."""
    stream.write(f"{DATE_COLUMN},{CLOSE_COLUMN}\n")
    for date, price in zip(prices.dates, prices.prices):
        stream.write(f"{date.isoformat()},{format_value(price)}\n")


def write_returns_csv(stream, returns: ReturnSeries) -> None:
    """Write `index,date,return` rows, LF line endings."""
    stream.write("index,date,return\n")
    dates = returns.dates or (None,) * len(returns)
    for idx, date, value in zip(returns.index, dates, returns.values):
        label = date.isoformat() if date is not None else ""
        stream.write(f"{idx},{label},{format_value(value)}\n")
