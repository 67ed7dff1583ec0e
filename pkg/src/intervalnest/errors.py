"""Exception hierarchy shared by every module."""


class IntervalNestError(Exception):
    """Base class for all errors raised by this package."""


class DigraphError(IntervalNestError, ValueError):
    """Invalid digraph construction input."""


class OrderingError(IntervalNestError, ValueError):
    """An ordering is not a permutation of the digraph's vertices."""


class NotReflexiveError(IntervalNestError, ValueError):
    """An operation defined only for reflexive digraphs got a loopless vertex."""

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(
            "digraph is not reflexive; vertices without loops: %s"
            % ", ".join(map(str, self.missing))
        )


class BoundExceededError(IntervalNestError):
    """Exhaustive computation requested beyond the declared bound."""

    def __init__(self, what, n, bound):
        self.n = n
        self.bound = bound
        super().__init__("%s supports n <= %d (got n = %d)" % (what, bound, n))


class NotNestOrderingError(IntervalNestError):
    """The ordering handed to the model construction is not a nest ordering."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        super().__init__("ordering is not a nest ordering (first violation: %s)" % (first,))


class NotNestModelError(IntervalNestError, ValueError):
    """Some destination interval is not contained in its origin interval."""


class ModelFormatError(IntervalNestError, ValueError):
    """Malformed JSON interval model."""


class EdgeListError(IntervalNestError, ValueError):
    """Malformed edge-list text; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class InvariantError(IntervalNestError, AssertionError):
    """An internal guarantee failed. Always indicates a bug."""
