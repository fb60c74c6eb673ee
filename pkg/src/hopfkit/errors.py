"""Exception hierarchy shared by all hopfkit modules."""


class HopfkitError(Exception):
    """Base class for all errors raised by hopfkit."""


class InputError(HopfkitError):
    """Malformed or out-of-contract input (bad prime, shape mismatch, bad id)."""


class UnsupportedOperation(HopfkitError):
    """The operation's mathematical precondition is not met for this input."""


class ResourceLimitError(HopfkitError):
    """A size or step guard was exceeded before the computation finished."""


class NotHopfError(HopfkitError):
    """The presentation fails a Hopf axiom that the operation requires."""


class TheoremViolation(HopfkitError):
    """A verified theorem-backed identity failed; signals a genuine test failure."""


class OperationCancelled(HopfkitError):
    """A cooperative cancellation callback asked a long-running loop to stop."""
