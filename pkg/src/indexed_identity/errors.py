"""Exception hierarchy.

Domain errors derive from :class:`IndexedSystemError`; malformed input
documents raise :class:`DocumentError` subclasses instead, so callers (the
CLI in particular) can tell "bad data" from "bad syntax".
"""


class IndexedSystemError(ValueError):
    """Base class for every domain-level failure."""


class UnknownLabelError(IndexedSystemError, KeyError):
    def __init__(self, label, what="element"):
        self.label = label
        self.what = what
        super().__init__(f"unknown {what} label: {label!r}")

    # KeyError.__str__ wraps the message in quotes.
    def __str__(self):
        return self.args[0]


class AxiomViolation(IndexedSystemError):
    """A matrix offered as a trusted system breaks one of F1-F7."""

    def __init__(self, axiom, message, labels=()):
        self.axiom = axiom
        self.labels = tuple(labels)
        super().__init__(f"{axiom}: {message}")


class DuplicateProfileError(IndexedSystemError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(
            f"objects {a!r} and {b!r} agree on every predicate; "
            "merge the labels or add a predicate that tells them apart"
        )


class MetricViolation(IndexedSystemError):
    def __init__(self, axiom, message, labels=()):
        self.axiom = axiom
        self.labels = tuple(labels)
        super().__init__(f"{axiom}: {message}")


class DomainMismatchError(IndexedSystemError):
    pass


class DuplicateSetError(IndexedSystemError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"sets {a!r} and {b!r} have identical grades; merge them")


class MembershipError(IndexedSystemError):
    """A grade is not achieved by any element against its point."""


class EmptyExtensionError(IndexedSystemError):
    pass


class ShapeError(IndexedSystemError):
    pass


class DocumentError(Exception):
    """Base class for document parsing problems."""

    def __init__(self, message, source=None):
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(prefix + message)


class DocumentSyntaxError(DocumentError):
    def __init__(self, message, line, column, source=None):
        self.line = line
        self.column = column
        super().__init__(f"line {line} column {column}: {message}", source)


class SchemaError(DocumentError):
    pass


class RangeError(DocumentError):
    pass
