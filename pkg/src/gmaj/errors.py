"""Exception hierarchy shared by all gmaj modules."""


class GmajError(Exception):
    """Base class for domain errors (bad input, violated precondition)."""


class ParseError(GmajError):
    """A text form (word, content, bipartition, relation JSON) failed to parse."""


class ClassTooLargeError(GmajError):
    """A rearrangement class exceeds the configured enumeration limit."""


class CompatibilityError(GmajError):
    """An operation restricted to compatible bipartitions got a non-compatible one."""


class ShapeError(GmajError):
    """A structured image (labeled word, row system) violates its shape invariants."""


class GuardError(GmajError):
    """An exhaustive scan was requested beyond its default size guard."""
