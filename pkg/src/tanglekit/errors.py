"""Shared exception types.

Input-side problems (bad syntax, out-of-range slots, violated word
conditions) raise ValueError subclasses and map to exit code 1 in the CLI.
InternalInvariantError marks states the library promises can never be
reached (rewrite watchdog, closure iteration bound, method disagreement);
the CLI maps it to exit code 2.
"""


class InternalInvariantError(RuntimeError):
    """A guaranteed-impossible condition was observed; this is a bug."""


class ParseError(ValueError):
    """Bad word text.  `position` is the 1-based token position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position
