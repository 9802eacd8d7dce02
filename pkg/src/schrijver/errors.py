"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parameter/regime problems exit 3,
violated invariants and rejected certificates exit 2.
"""


class SchrijverError(Exception):
    """Base class for all library errors."""


class ParameterError(SchrijverError):
    """Invalid (n, k), element out of range, malformed set text, ..."""


class RegimeError(ParameterError):
    """Inputs are well-formed but outside the regime an operation covers."""


class DegenerateInputError(ParameterError):
    """Operation refuses a degenerate pair (equal or disjoint vertices)."""


class InvariantError(SchrijverError):
    """A structural fact the theory guarantees failed to hold at runtime."""


class CertificateError(SchrijverError):
    """A path certificate failed independent verification."""
