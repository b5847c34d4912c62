"""Command-line surface: synth, returns, ftvol, compare.

Exit codes are stable across commands: 0 success, 1 I/O failure, 2
validation failure (bad flags, malformed input, series too short). Every
output file is written atomically and paired with a metadata sidecar
capturing the effective configuration. The FUZZYVOL_OUT_DIR environment
variable, when set, overrides the output directory.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .analysis import DEFAULT_HORIZONS, compare
from .errors import BadHorizon, FuzzyvolError
from .ftransform import EXACT, NORMALIZATIONS
from .io_utils import write_csv
from .partition import HAT, ZSHAPED
from .timeseries import (
    LOG,
    SIMPLE,
    ReturnSeries,
    SynthSpec,
    format_value,
    load_prices,
    log_returns,
    simple_returns,
    synth_prices,
    write_prices_csv,
    write_returns_csv,
)
from .volatility import POPULATION, SAMPLE, annualize, ft_volatility

OUT_DIR_ENV = "FUZZYVOL_OUT_DIR"

_SHAPE_ALIASES = {"hat": HAT, "z": ZSHAPED, "zshaped": ZSHAPED}


@dataclass(frozen=True)
class RunConfig:
    """Effective configuration of one CLI invocation."""

    command: str
    input: str | None = None
    kind: str = SIMPLE
    shape: str = HAT
    normalization: str = EXACT
    horizons: tuple[tuple[str, int], ...] = ()
    centered: bool = True
    estimator: str = POPULATION
    annualize: bool = False
    out_dir: Path = Path(".")
    seed: int = 0
    lag: int = 0
    dayfirst: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        for _, horizon in self.horizons:
            if horizon < 2:
                raise BadHorizon(f"horizon must be >= 2, got {horizon}")

    def to_metadata(self) -> dict:
        meta = {
            "tool": f"fuzzyvol {__version__}",
            "command": self.command,
            "input": self.input,
            "return_kind": self.kind,
            "shape": self.shape,
            "normalization": self.normalization,
            "horizons": [[name, t] for name, t in self.horizons],
            "window": "centered" if self.centered else "trailing",
            "estimator": self.estimator,
            "annualized": self.annualize,
            "lag": self.lag,
            "seed": self.seed,
            "dayfirst": self.dayfirst,
        }
        meta.update(self.extra)
        return meta


def parse_horizons(text: str) -> tuple[tuple[str, int], ...]:
    """Parse 'yearly:252,monthly:21' into ((name, T), ...)."""
    horizons = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, value = chunk.partition(":")
        if not value:
            raise argparse.ArgumentTypeError(f"horizon {chunk!r} is not name:days")
        try:
            horizons.append((name.strip(), int(value)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"horizon days {value!r} is not an integer") from None
    if not horizons:
        raise argparse.ArgumentTypeError("need at least one horizon")
    return tuple(horizons)


def parse_regimes(text: str) -> tuple[tuple[int, float], ...]:
    """Parse '0:0.005,1000:0.03' into ((start, vol), ...)."""
    regimes = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        start, _, vol = chunk.partition(":")
        try:
            regimes.append((int(start), float(vol)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"regime {chunk!r} is not start:vol") from None
    if not regimes:
        raise argparse.ArgumentTypeError("need at least one regime")
    return tuple(regimes)


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


_CONFIG_PARSERS = {
    "horizon": int,
    "lag": int,
    "seed": int,
    "days": int,
    "drift": float,
    "vol": float,
    "initial": float,
    "annualize": _parse_bool,
    "trailing": _parse_bool,
    "dayfirst": _parse_bool,
    "no_figures": _parse_bool,
    "horizons": parse_horizons,
    "regimes": parse_regimes,
}


def load_config_file(path: str) -> dict:
    """Read `key = value` lines; '#' starts a comment; keys use underscores."""
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FuzzyvolError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key = key.strip().replace("-", "_")
        value = value.strip()
        parser = _CONFIG_PARSERS.get(key, str)
        try:
            values[key] = parser(value)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise FuzzyvolError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return values


def _resolve_out_dir(args) -> Path:
    env = os.environ.get(OUT_DIR_ENV)
    return Path(env) if env else Path(args.out_dir)


def _load_returns(args) -> ReturnSeries:
    prices = load_prices(args.input, dayfirst=args.dayfirst)
    return log_returns(prices) if args.kind == LOG else simple_returns(prices)


def _series_lines(index, dates, values, defined) -> list[str]:
    labels = [d.isoformat() for d in dates] if dates else [""] * len(index)
    lines = []
    for k in range(len(index)):
        cell = format_value(values[k]) if defined[k] else ""
        lines.append(f"{index[k]},{labels[k]},{cell},{int(defined[k])}")
    return lines


def cmd_synth(args) -> int:
    spec = SynthSpec(
        drift=args.drift,
        vol=args.vol,
        initial_price=args.initial,
        length=args.days,
        seed=args.seed,
        regimes=args.regimes,
    )
    prices = synth_prices(spec)
    out_dir = _resolve_out_dir(args)
    out_dir.mkdir(parents=True, exist_ok=True)
    config = RunConfig(
        command="synth",
        seed=args.seed,
        out_dir=out_dir,
        extra={"days": args.days, "drift": args.drift, "vol": args.vol,
               "initial": args.initial,
               "regimes": None if args.regimes is None else [list(r) for r in args.regimes]},
    )
    buffer = io.StringIO()
    write_prices_csv(buffer, prices)
    path = out_dir / "prices.csv"
    write_csv(path, *_reparse(buffer.getvalue()), config.to_metadata())
    print(f"wrote {path} ({len(prices)} rows)")
    return 0


def _reparse(text: str) -> tuple[str, list[str]]:
    lines = text.rstrip("\n").split("\n")
    return lines[0], lines[1:]


def cmd_returns(args) -> int:
    returns = _load_returns(args)
    out_dir = _resolve_out_dir(args)
    out_dir.mkdir(parents=True, exist_ok=True)
    config = RunConfig(
        command="returns", input=args.input, kind=args.kind,
        dayfirst=args.dayfirst, out_dir=out_dir,
    )
    buffer = io.StringIO()
    write_returns_csv(buffer, returns)
    path = out_dir / "returns.csv"
    write_csv(path, *_reparse(buffer.getvalue()), config.to_metadata())
    print(f"wrote {path} ({len(returns)} rows)")
    return 0


def cmd_ftvol(args) -> int:
    returns = _load_returns(args)
    shape = _SHAPE_ALIASES[args.shape]
    dec = ft_volatility(returns, args.horizon, shape=shape, normalization=args.normalization)
    deviation = dec.deviation_series()
    if args.annualize:
        deviation = annualize(deviation)

    out_dir = _resolve_out_dir(args)
    out_dir.mkdir(parents=True, exist_ok=True)
    config = RunConfig(
        command="ftvol", input=args.input, kind=args.kind, shape=shape,
        normalization=args.normalization, horizons=(("ftvol", args.horizon),),
        annualize=args.annualize, dayfirst=args.dayfirst, out_dir=out_dir,
    )
    dates = returns.dates
    meta = config.to_metadata()
    series = (
        ("deviation.csv", deviation.values, dict(meta, series="deviation", method="FT")),
        ("baseline.csv", dec.baseline, dict(meta, series="baseline", method="FT", annualized=False)),
        ("envelope.csv", dec.envelope, dict(meta, series="envelope", method="FT", annualized=False)),
    )
    for name, values, sidecar in series:
        lines = _series_lines(returns.index, dates, values, dec.defined)
        write_csv(out_dir / name, "index,date,value,defined", lines, sidecar)
    print(f"wrote deviation/baseline/envelope to {out_dir} "
          f"({dec.partition.n} nodes, horizon {args.horizon})")
    return 0


def cmd_compare(args) -> int:
    returns = _load_returns(args)
    shape = _SHAPE_ALIASES[args.shape]
    out_dir = _resolve_out_dir(args)
    config = RunConfig(
        command="compare", input=args.input, kind=args.kind, shape=shape,
        normalization=args.normalization, horizons=args.horizons,
        centered=not args.trailing, estimator=args.estimator,
        annualize=args.annualize, lag=args.lag, dayfirst=args.dayfirst,
        out_dir=out_dir,
    )
    report = compare(
        returns,
        horizons=args.horizons,
        shape=shape,
        normalization=args.normalization,
        estimator=args.estimator,
        centered=not args.trailing,
        lag=args.lag,
        annualized=args.annualize,
        out_dir=out_dir,
        render=not args.no_figures,
        config=config.to_metadata(),
    )
    for record in report.horizons:
        r_text = "undefined" if record.pearson is None else f"{record.pearson:.4f}"
        print(f"{record.name}: T={record.horizon} nodes={record.nodes} "
              f"pairs={record.pairs} pearson={r_text}")
    print(f"wrote report to {out_dir / 'report.json'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyvol",
        description="Historical volatility via the fuzzy transform, with a rolling-STD comparison.",
    )
    parser.add_argument("--version", action="version", version=f"fuzzyvol {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="key = value config file; explicit flags override it")
        p.add_argument("--out-dir", default=".",
                       help=f"output directory (env {OUT_DIR_ENV} overrides)")

    def add_input(p):
        p.add_argument("--input", required=True, help="close-price CSV (date and close columns)")
        p.add_argument("--kind", choices=(SIMPLE, LOG), default=SIMPLE,
                       help="return kind (default: simple)")
        p.add_argument("--dayfirst", action="store_true",
                       help="parse dates as DD-MM-YYYY instead of ISO")

    p = sub.add_parser("synth", help="generate a seeded synthetic price CSV")
    add_common(p)
    p.add_argument("--days", type=int, default=1000, help="number of price rows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--drift", type=float, default=0.0, help="per-day drift")
    p.add_argument("--vol", type=float, default=0.01, help="per-day volatility")
    p.add_argument("--initial", type=float, default=100.0, help="initial price")
    p.add_argument("--regimes", type=parse_regimes, default=None,
                   help="volatility regimes as start:vol,start:vol,...")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("returns", help="compute daily returns from a price CSV")
    add_common(p)
    add_input(p)
    p.set_defaults(func=cmd_returns)

    p = sub.add_parser("ftvol", help="fuzzy-transform volatility decomposition")
    add_common(p)
    add_input(p)
    p.add_argument("--horizon", type=int, required=True, help="node spacing T in trading days")
    p.add_argument("--shape", choices=sorted(_SHAPE_ALIASES), default="hat")
    p.add_argument("--normalization", choices=NORMALIZATIONS, default=EXACT)
    p.add_argument("--annualize", action="store_true",
                   help="scale the deviation series by sqrt(252)")
    p.set_defaults(func=cmd_ftvol)

    p = sub.add_parser("compare", help="FT vs STD comparison report")
    add_common(p)
    add_input(p)
    p.add_argument("--horizons", type=parse_horizons, default=DEFAULT_HORIZONS,
                   help="name:days list (default yearly:252,monthly:21,weekly:5)")
    p.add_argument("--shape", choices=sorted(_SHAPE_ALIASES), default="hat")
    p.add_argument("--normalization", choices=NORMALIZATIONS, default=EXACT)
    p.add_argument("--estimator", choices=(POPULATION, SAMPLE), default=POPULATION)
    p.add_argument("--trailing", action="store_true",
                   help="trailing STD window instead of centered")
    p.add_argument("--lag", type=int, default=0, help="pair ft[t] with std[t-lag]")
    p.add_argument("--annualize", action="store_true",
                   help="emit annualized values in data files")
    p.add_argument("--no-figures", action="store_true",
                   help="skip figure rendering next to the CSVs")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        try:
            overrides = load_config_file(args.config)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except FuzzyvolError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        namespace = argparse.Namespace(**overrides)
        args = parser.parse_args(argv, namespace=namespace)
    try:
        return args.func(args)
    except FuzzyvolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
