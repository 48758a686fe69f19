"""Exception hierarchy shared across the package."""


class MetricMagError(Exception):
    """Base class for all errors raised by metricmag."""


class DuplicatePoint(MetricMagError, ValueError):
    pass


class DimensionMismatch(MetricMagError, ValueError):
    pass


class NonpositiveScale(MetricMagError, ValueError):
    pass


class InvalidMetric(MetricMagError, ValueError):
    """Raised when a distance matrix fails the metric axioms.

    The offending :class:`~metricmag.metric.ValidationReport` is attached as
    ``report``.
    """

    def __init__(self, report):
        self.report = report
        kinds = sorted({v.kind for v in report.violations})
        super().__init__(f"metric axioms violated: {', '.join(kinds)}")


class SingularMatrix(MetricMagError, ArithmeticError):
    def __init__(self, message, rcond=0.0):
        super().__init__(message)
        self.rcond = rcond


class MagnitudeUndefined(MetricMagError, ArithmeticError):
    pass


class NotHomogeneous(MetricMagError, ValueError):
    pass


class NoConvergence(MetricMagError, ArithmeticError):
    pass


class OutOfRange(MetricMagError, ValueError):
    pass
