"""Exception hierarchy shared by all modules."""


class DomainError(Exception):
    """A precondition of an operation was violated (bad sizes, colors, ...)."""


class CompositionError(DomainError):
    """The two arrows do not share a middle object / color count."""


class DecodeError(DomainError):
    """A word cannot be decoded into a morphism (star count mismatch)."""


class FitError(DomainError):
    """No eventual polynomial of admissible degree fits the count sequence."""


class FormatError(Exception):
    """Malformed textual/JSON input (unparseable, missing fields)."""
