"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed text input. ``offset`` is the 1-based character position."""

    def __init__(self, offset: int, reason: str):
        self.offset = offset
        self.reason = reason
        super().__init__(f"at character {offset}: {reason}")


class SubsetError(ValueError):
    """Rejected subset input. ``code`` is 'size', 'range' or 'divisibility'."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


class CacheError(ValueError):
    """Unusable count-table text. ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed condition failed; this signals a bug."""
