"""Exception hierarchy shared by all modules.

Three failure modes are distinguished:

* ``InputError`` -- malformed user-supplied data: unparseable files, vertex
  labels out of range, certificates that are structurally broken.  The CLI
  maps these to exit code 2.
* ``PreconditionError`` -- well-formed input that violates a documented
  precondition of an operation (e.g. asking for the longest geodesic path
  of a disconnected graph).  A subclass of ``InputError`` so callers that
  only care about "bad input" can catch one type.
* ``InternalInvariantError`` -- a "cannot happen" branch was reached.  These
  indicate a bug in this library, never a problem with the input, and are
  deliberately not caught anywhere.
"""


class InputError(ValueError):
    """Raised for malformed graphs, certificates, or CLI arguments."""


class FormatError(InputError):
    """Raised when parsing a text artifact fails; carries file position."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InputError):
    """Raised when an operation's documented precondition is violated."""


class InternalInvariantError(AssertionError):
    """Raised when an internal invariant that should be unbreakable broke."""
