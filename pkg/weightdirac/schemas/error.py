"""Error schemas."""

from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, Field


class ErrorResponse(BaseModel):
    """Error response schema printed by the CLI on failure."""

    detail: str = Field(..., description="Error detail message")
    error_code: str = Field(..., description="Error code")
    exit_code: int = Field(..., description="Process exit code")
    timestamp: datetime = Field(
        default_factory=lambda: datetime.now(timezone.utc), description="Error timestamp"
    )
    metadata: dict[str, Any] | None = Field(default=None, description="Additional error metadata")

    model_config = {"json_schema_extra": {
        "example": {
            "detail": "cuspidal_sl2 needs non-integral parameters, got mu0=2",
            "error_code": "NOT_CUSPIDAL",
            "exit_code": 2,
            "timestamp": "2026-02-11T07:00:00Z",
            "metadata": {"mu0": "2", "mu1": "1/2"},
        }
    }}
