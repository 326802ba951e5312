"""Exception types shared across the couplaw package."""


class CouplawError(Exception):
    """Base class for all couplaw errors."""


class MalformedSource(CouplawError):
    """A source file could not be parsed at the declaration level."""

    def __init__(self, file_name, line, message):
        super().__init__(f"{file_name}:{line}: {message}")
        self.file_name = file_name
        self.line = line


class DuplicateClass(CouplawError):
    """Two files declare the same qualified class name."""

    def __init__(self, qualified_name):
        super().__init__(f"duplicate class declaration: {qualified_name}")
        self.qualified_name = qualified_name


class EmptyCorpus(CouplawError):
    """A scan produced zero class summaries."""


class FormatError(CouplawError):
    """An interchange file does not conform to couplaw-summary/1."""

    def __init__(self, message, context=None):
        if context is not None:
            message = f"{message} (at {context})"
        super().__init__(message)
        self.context = context


class UnknownRelationship(CouplawError):
    """A relationship name is not one of the twelve known series."""


class EmptyInput(CouplawError):
    """An operation received an empty value list."""


class DegenerateFit(CouplawError):
    """Regression is impossible because all bucket midpoints coincide."""


class ZeroVariance(CouplawError):
    """A correlation column is constant."""

    def __init__(self, label):
        super().__init__(f"zero variance in column: {label}")
        self.label = label


class InvalidParams(CouplawError):
    """Synthetic-generation or sampling parameters are out of range."""
