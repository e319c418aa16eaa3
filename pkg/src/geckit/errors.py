"""Exception hierarchy shared across the toolkit.

Input-data problems (bad files, mismatched corpora) raise GecKitError
subclasses; the CLI maps those to exit code 2. Anything else escaping to the
CLI is a bug and maps to exit code 1.
"""


class GecKitError(Exception):
    """Base class for all user-input errors."""


class ConlluParseError(GecKitError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PairingError(GecKitError):
    """Original and corrected corpora cannot be paired."""


class M2ParseError(GecKitError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class M2EmitError(GecKitError):
    """Edits handed to the M2 writer violate its ordering contract."""


class EvaluationError(GecKitError):
    """Hypothesis and reference corpora do not line up."""


class ProfileError(GecKitError):
    """A language profile or one of its resource files is unusable."""
