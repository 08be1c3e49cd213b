"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError to 2, everything else
here to 3 (domain errors).
"""


class ParseError(ValueError):
    """Malformed word text. ``offset`` is the byte position of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class DomainError(ValueError):
    """Operation invoked outside its domain (m = 0, |m| != 1 for the
    matrix representation, structured graph queries in the divisor case)."""


class WordConditionError(ValueError):
    """A word failed a required reduction state (not freely reduced, or
    contains a pinch) for an operation that demands it."""


class NotANodeError(ValueError):
    """Integer is not a node label of the intersection graph."""


class NoPathError(ValueError):
    """No directed path between two intersection-graph nodes within the
    search bound."""


class BudgetError(RuntimeError):
    """A size budget (tree-ball vertex count) would be exceeded."""


class InvariantError(AssertionError):
    """An internal cross-check that is expected to hold unconditionally
    failed; indicates a bug, not bad input."""
