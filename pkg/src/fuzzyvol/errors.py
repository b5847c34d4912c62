"""Exception hierarchy for the fuzzyvol library.

Every error raised on a validated code path derives from FuzzyvolError so
callers (and the CLI) can distinguish domain validation failures from I/O
problems with a single except clause.
"""


class FuzzyvolError(Exception):
    """Base class for all fuzzyvol domain errors."""


# --- timeseries ---------------------------------------------------------

class MalformedCsv(FuzzyvolError):
    """CSV input cannot be parsed: bad header, bad row, or undecodable bytes."""


class NonPositivePrice(FuzzyvolError):
    """A price cell parsed to a value <= 0."""


class DuplicateDate(FuzzyvolError):
    """Two input rows carry the same calendar date."""


class TooShort(FuzzyvolError):
    """A price series needs at least two rows."""


class InvalidSpec(FuzzyvolError):
    """A synthetic-path specification violates its invariants."""


# --- partition ----------------------------------------------------------

class BadSpacing(FuzzyvolError):
    """Node spacing is non-positive or exceeds the domain width."""


class IndexOutOfRange(FuzzyvolError):
    """Node index outside 0..n-1."""


class OutOfDomain(FuzzyvolError):
    """Evaluation point outside the partition domain [first node, last node]."""


# --- ftransform ---------------------------------------------------------

class EmptySupport(FuzzyvolError):
    """Some basic function covers no sample with positive membership."""


class BadQuadratureSpec(FuzzyvolError):
    """Unknown rule, too few panels, or an odd panel count for Simpson."""


# --- volatility ---------------------------------------------------------

class SeriesTooShort(FuzzyvolError):
    """Return series too short for the requested horizon or window."""


class BadHorizon(FuzzyvolError):
    """Horizon / window length outside its valid range."""


class AlreadyAnnualized(FuzzyvolError):
    """Attempt to annualize a series twice."""


class EmptySeries(FuzzyvolError):
    """Operation requires a nonempty return series."""


class BadTheta(FuzzyvolError):
    """Deviation exponent must be positive."""


class BadArgument(FuzzyvolError):
    """Scalar argument outside its documented range."""


# --- analysis -----------------------------------------------------------

class NoOverlap(FuzzyvolError):
    """Two series share no index where both are defined."""


class DegenerateVariance(FuzzyvolError):
    """Correlation undefined: one coordinate has zero variance."""


class TooFewPairs(FuzzyvolError):
    """Correlation needs at least two aligned pairs."""
