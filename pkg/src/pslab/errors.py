"""Exception hierarchy.

Everything raised on purpose derives from :class:`PslabError`, which the CLI
maps to exit status 1.
"""


class PslabError(Exception):
    pass


class MalformedDecimal(PslabError, ValueError):
    pass


class AlphaNotGreaterThanOne(PslabError, ValueError):
    pass


class DomainError(PslabError, ValueError):
    pass


class SizeCapExceeded(PslabError, OverflowError):
    """A big integer grew past the configured bit cap."""


class CapExceeded(PslabError, ValueError):
    """Brute-force oracle asked for an input above its cap."""


class NoConvergence(PslabError, ArithmeticError):
    pass


class HypothesisViolated(PslabError):
    """The hypotheses of a derivative test do not hold on the interval."""


class IntervalTooLarge(PslabError, ValueError):
    pass


class EmptyInterval(PslabError, ArithmeticError):
    """A feasibility interval came out empty; this indicates a bug."""


class RepresentationNotFound(PslabError, LookupError):
    pass


class OutputError(PslabError, OSError):
    pass
