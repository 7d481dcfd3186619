"""Exception types shared across the package."""


class SingwordsError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(SingwordsError, ValueError):
    """A letter is not in the alphabet, or two operands use different alphabets."""


class DomainError(SingwordsError, ValueError):
    """An argument lies outside the domain of the operation."""


class SizeError(SingwordsError, ValueError):
    """An exhaustive computation was asked to exceed its configured cap."""


class ScopeError(SingwordsError, ValueError):
    """A finite language is too short to answer the question reliably."""
