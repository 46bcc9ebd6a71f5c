"""Exception types raised across the package."""


class WordlengthError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WordlengthError):
    """A numeric argument is outside the mathematical domain of an operation."""


class EmptyTextError(WordlengthError):
    """A text or token stream contains no tokens."""


class DegenerateSpectrumError(WordlengthError):
    """The rank spectrum carries no rank information (a single frequency block)."""


class RulePackError(WordlengthError):
    """A language rule pack file is malformed."""


class UnknownLanguageError(WordlengthError):
    """No rule pack is available for the requested language code."""


class ManifestError(WordlengthError):
    """A corpus manifest failed to parse; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DuplicateIdError(WordlengthError):
    """A manifest declares the same text_id twice."""


class EmptyTableError(WordlengthError):
    """Classification was requested against a reference table with no anchors."""


class EmptyResultsError(WordlengthError):
    """A plot was requested for an empty result list."""


class UnknownGroupError(WordlengthError):
    """A reference language/genre is not present in the plotted results."""
