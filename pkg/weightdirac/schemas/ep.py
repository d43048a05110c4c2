"""Pydantic schemas for Euler-Poincare pairings."""

from enum import Enum

from pydantic import BaseModel, Field


class EPMethod(str, Enum):
    """How an Euler-Poincare value was obtained."""

    INDUCED_COLLAPSE = "induced-collapse"
    VERMA_DECOMPOSITION = "verma-decomposition"
    DUAL_FLIP = "dual-flip"
    THEOREM_BASED = "theorem-based"


class AuditEntry(BaseModel):
    """One reduction step applied while computing a pairing."""
    step: str = Field(..., description="Reduction that fired")
    anchor: str = Field(..., description="Statement the reduction relies on")
    detail: str | None = Field(None, description="Values or parameters involved")


class EPResult(BaseModel):
    """Euler-Poincare pairing with its provenance."""
    value: int = Field(..., description="sum_i (-1)^i dim Ext^i(M, N)")
    method: EPMethod = Field(..., description="Method tag")
    audit: list[AuditEntry] = Field(default_factory=list, description="Audit trail")

    model_config = {"json_schema_extra": {
        "example": {
            "value": 1,
            "method": "induced-collapse",
            "audit": [
                {
                    "step": "induced-collapse",
                    "anchor": "EP(M_p(V), N) = sum_i (-1)^i EP_l(V, H^i(u, N))",
                    "detail": "H^0 contributes 1 at [0]",
                }
            ],
        }
    }}
