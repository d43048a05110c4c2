"""Pydantic schemas."""

from weightdirac.schemas.ep import AuditEntry, EPMethod, EPResult
from weightdirac.schemas.error import ErrorResponse
from weightdirac.schemas.job import (
    AlgebraSection,
    CommandSection,
    JobConfig,
    ModuleSection,
    ParabolicSection,
    WindowSection,
)
from weightdirac.schemas.records import (
    CheckRecord,
    CohomologyRecord,
    DescribeRecord,
    DiracRecord,
    IndexRecord,
    PairRecord,
    VerifyRecord,
)
from weightdirac.schemas.reports import (
    CheckStatus,
    CorrespondenceReport,
    IdentityCheck,
    IndexIdentityReport,
    InjectivityBounds,
    Main2Report,
    Mismatch,
)

__all__ = [
    "AlgebraSection",
    "AuditEntry",
    "CheckRecord",
    "CheckStatus",
    "CohomologyRecord",
    "CommandSection",
    "CorrespondenceReport",
    "DescribeRecord",
    "DiracRecord",
    "EPMethod",
    "EPResult",
    "ErrorResponse",
    "IdentityCheck",
    "IndexIdentityReport",
    "IndexRecord",
    "InjectivityBounds",
    "JobConfig",
    "Main2Report",
    "Mismatch",
    "ModuleSection",
    "PairRecord",
    "ParabolicSection",
    "VerifyRecord",
    "WindowSection",
]
