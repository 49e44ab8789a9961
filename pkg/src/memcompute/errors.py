"""Exception hierarchy shared across the package.

Everything raised by the library derives from MemcomputeError so the CLI can
map any module failure to a single resource/precision exit code.
"""


class MemcomputeError(Exception):
    """Base class for all library errors."""


class SetFormatError(MemcomputeError):
    """An input set file or element list failed validation."""


class BudgetExceededError(MemcomputeError):
    """A computation would exceed its configured memory/sample budget."""


class PrecisionLossError(MemcomputeError):
    """A spectral coefficient strayed too far from the nearest integer."""


class RecoveryError(MemcomputeError):
    """Subset recovery contradicted the decision test (precision problem)."""


class UnboundConnectionError(MemcomputeError):
    """A memprocessor was stepped without values for all its connections."""


class BlankCellError(MemcomputeError):
    """A grid operation touched an unassigned cell."""


class StuckConfigurationError(MemcomputeError):
    """A machine reached a configuration with no applicable transition."""


class TransitionError(MemcomputeError):
    """A machine transition was malformed or addressed unknown cells."""
