"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so new failure modes should
subclass one of the three branches below rather than raising bare
ValueError/RuntimeError.
"""


class TwclustError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(TwclustError):
    """Malformed graph input: bad indices, self loops, unreadable files."""


class DegenerateGraphError(TwclustError):
    """Graph too small or otherwise outside an operation's domain."""


class DegenerateDensityError(TwclustError):
    """Edge density is 0 or 1, so the centered/scaled matrix is undefined.

    Callers inside the recursion treat this as "declare leaf, do not test".
    """


class IsolatedNodeError(TwclustError):
    """A zero-degree node makes the degree-normalized matrix undefined.

    Remove isolated nodes first (see ``graphs.remove_isolated_nodes``).
    """


class DegenerateBootstrapError(TwclustError):
    """All bootstrap replicates produced the same statistic (zero spread)."""


class EigensolverError(TwclustError):
    """Iterative eigensolver did not converge; carries the best estimate."""

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
