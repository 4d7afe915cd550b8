"""Custom exceptions for complex correntropy."""


class CorrentropyError(Exception):
    """Base exception for all complex correntropy errors."""

    exit_code = 1

    def __init__(self, message: str, details: str | None = None):
        """Initialize the exception.

        Args:
            message: Main error message
            details: Additional details or suggestions
        """
        self.message = message
        self.details = details
        super().__init__(self.format_message())

    def format_message(self) -> str:
        """Format the complete error message.

        Returns:
            Formatted error message with details
        """
        if self.details:
            return f"{self.message}\n\nDetails: {self.details}"
        return self.message

    def __reduce__(self):
        return (self.__class__, (self.message, self.details))


class ShapeError(CorrentropyError):
    """Exception raised when array dimensions or sequence lengths disagree."""

    exit_code = 2


class DomainError(CorrentropyError):
    """Exception raised for non-finite or otherwise inadmissible values."""

    exit_code = 2


class ConfigurationError(CorrentropyError):
    """Exception raised for configuration errors."""

    exit_code = 2


class SingularMatrixError(CorrentropyError):
    """Exception raised when a weighted autocorrelation matrix cannot be solved."""

    exit_code = 3

    def __init__(self, message: str, smallest_pivot: float, details: str | None = None):
        self.smallest_pivot = smallest_pivot
        super().__init__(message, details)

    def __reduce__(self):
        return (self.__class__, (self.message, self.smallest_pivot, self.details))


class NumericError(CorrentropyError):
    """Exception raised when an iteration produces non-finite values."""

    exit_code = 3

    def __init__(self, message: str, sweep: int | None = None, details: str | None = None):
        self.sweep = sweep
        super().__init__(message, details)

    def __reduce__(self):
        return (self.__class__, (self.message, self.sweep, self.details))


class ExperimentError(CorrentropyError):
    """Exception raised when a Monte Carlo trial fails.

    Carries the trial and iteration at which the underlying error surfaced.
    """

    exit_code = 3

    def __init__(
        self,
        message: str,
        trial_index: int,
        iteration: int | None = None,
        details: str | None = None,
    ):
        self.trial_index = trial_index
        self.iteration = iteration
        super().__init__(message, details)

    def __reduce__(self):
        return (self.__class__, (self.message, self.trial_index, self.iteration, self.details))
