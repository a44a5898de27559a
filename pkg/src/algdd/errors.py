"""Exception types shared across the package."""


class AlgddError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AlgddError):
    """A value lies outside the algebra's carrier set."""


class DimensionError(AlgddError):
    """Vector operands have different dimensions."""


class ArithmeticDomainError(AlgddError):
    """A partial operation was applied outside its domain (e.g. division by zero).

    ``index``/``category`` identify the offending vector component when known.
    """

    def __init__(self, message, *, index=None, category=None):
        super().__init__(message)
        self.index = index
        self.category = category


class ConfigurationError(AlgddError):
    """An operation or variable was requested that the manager does not know."""


class OwnershipError(AlgddError):
    """A node reference was used with a manager that does not own it."""


class InputError(AlgddError):
    """An evaluation input is incomplete or malformed."""


class ParseError(AlgddError):
    """Malformed model text. ``location`` is a character offset or node id."""

    def __init__(self, message, *, location=None):
        super().__init__(message)
        self.location = location


class ValidationError(AlgddError):
    """A structurally well-formed model violates a model invariant."""

    def __init__(self, message, *, location=None):
        super().__init__(message)
        self.location = location


class UnknownDiagramError(AlgddError):
    """A composition references a diagram name that is not bound."""

    def __init__(self, name):
        super().__init__(f"unknown diagram '{name}'")
        self.name = name


class CodegenError(AlgddError):
    """The requested code-generation target cannot represent the diagram."""
