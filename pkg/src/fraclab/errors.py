"""Exception hierarchy.

Every error carries a short machine-readable ``kind`` so the CLI can map it to
an exit status without string matching.
"""


class LabError(Exception):
    """Base class for all errors raised by fraclab."""

    exit_code = 1


class InvalidInput(LabError, ValueError):
    """An argument violates a precondition (bad graph, bad colouring, ...)."""

    exit_code = 2


class InvalidColouring(InvalidInput):
    """A colour map is not a homomorphism into the pattern (or is malformed)."""


class GuardExceeded(LabError):
    """A configurable size guard would be exceeded."""

    exit_code = 3

    def __init__(self, guard, limit, actual):
        super().__init__(f"guard '{guard}' exceeded: {actual} > {limit}")
        self.guard = guard
        self.limit = limit
        self.actual = actual


class PromiseViolation(LabError):
    """An oracle query fell outside the oracle's declared promise class."""

    exit_code = 4


class InconsistentFlags(InvalidInput):
    """Class-invariant flags contradict a known implication."""

    def __init__(self, message, rule):
        super().__init__(f"{message} (violates: {rule})")
        self.rule = rule


class SingularMatrix(LabError):
    """Raised by the exact solver; ``kind`` is 'inconsistent' or 'underdetermined'."""

    exit_code = 5

    def __init__(self, kind, rank, dim):
        super().__init__(f"singular matrix ({kind}): rank {rank} < {dim}")
        self.kind = kind
        self.rank = rank
        self.dim = dim


class InternalConsistencyError(LabError):
    """A postcondition that holds mathematically failed; signals a bug."""

    exit_code = 5
