"""Exception hierarchy shared by the compute modules and the CLI."""

from typing import Any

from weightdirac.schemas.error import ErrorResponse

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3


class WeightDiracError(Exception):
    """Base error carrying a stable code and structured metadata."""

    error_code = "WEIGHTDIRAC_ERROR"
    exit_code = EXIT_PRECONDITION

    def __init__(self, detail: str, **metadata: Any):
        super().__init__(detail)
        self.detail = detail
        self.metadata = {key: str(value) for key, value in metadata.items()}

    def to_response(self) -> ErrorResponse:
        """Render the error as an ErrorResponse."""
        return ErrorResponse(
            detail=self.detail,
            error_code=self.error_code,
            exit_code=self.exit_code,
            metadata=self.metadata or None,
        )


class ConfigError(WeightDiracError):
    """Job configuration could not be parsed or validated."""

    error_code = "CONFIG_ERROR"
    exit_code = EXIT_CONFIG

    def __init__(self, detail: str, line: int | None = None, column: int | None = None, **metadata: Any):
        if line is not None:
            metadata["line"] = line
        if column is not None:
            metadata["column"] = column
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{detail}{location}", **metadata)
        self.line = line
        self.column = column


class UnknownRootSystemError(WeightDiracError, ValueError):
    """Root system label outside the supported tables."""

    error_code = "UNKNOWN_ROOT_SYSTEM"
    exit_code = EXIT_CONFIG


class PreconditionError(WeightDiracError):
    """A mathematical precondition of an operation is violated."""

    error_code = "PRECONDITION_VIOLATED"


class NotCuspidalError(PreconditionError):
    error_code = "NOT_CUSPIDAL"


class NotBijectiveError(PreconditionError):
    error_code = "NOT_BIJECTIVE"


class NonCommutingRootsError(PreconditionError):
    error_code = "NON_COMMUTING_ROOTS"


class InfinitesimalCharacterError(PreconditionError):
    error_code = "NO_INFINITESIMAL_CHARACTER"


class SupportNotCertifiedError(PreconditionError):
    error_code = "SUPPORT_NOT_CERTIFIED"


class WindowTooSmallError(PreconditionError):
    error_code = "WINDOW_TOO_SMALL"


class UnsupportedModuleError(PreconditionError):
    error_code = "UNSUPPORTED_MODULE"


class VerificationMismatchError(WeightDiracError):
    """A verification report contains at least one failed check."""

    error_code = "VERIFICATION_MISMATCH"
    exit_code = EXIT_MISMATCH
