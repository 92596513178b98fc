"""Exception taxonomy.

Two families matter to callers: bad input (rejected data, violated
preconditions on what the user handed us) and internal inconsistency
(a cross-check between two independently computed quantities failed,
which means a bug, never bad input).  The CLI maps the first family to
exit code 2 and the second to exit code 3.
"""

from __future__ import annotations


class InputError(ValueError):
    """Invalid user input or violated precondition on input data."""


class PolynomialSyntaxError(InputError):
    """Raised by the polynomial parser; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SupportSchemaError(InputError):
    """Malformed JSON support description."""


class NotConvenientError(InputError):
    """Newton polyhedron misses a coordinate axis."""

    def __init__(self, axis_name: str):
        super().__init__(
            f"support is not convenient: no monomial on the {axis_name} axis"
        )
        self.axis_name = axis_name


class SizeGuardError(InputError):
    """Input exceeds the desk-scale guard and --unsafe-large was not given."""


class InternalConsistencyError(RuntimeError):
    """Two independently computed quantities disagree: a bug, not bad input."""
