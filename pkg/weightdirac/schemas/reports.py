"""Pydantic schemas for verification reports."""

from enum import Enum

from pydantic import BaseModel, Field

from weightdirac.schemas.ep import AuditEntry, EPMethod


class CheckStatus(str, Enum):
    """Outcome of a single verification check."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


# ============================================================================
# Correspondence between Clifford-side operators and Lie (co)homology
# ============================================================================

class CorrespondenceReport(BaseModel):
    """C against the u-bar coboundary and C^- against -2 times the u boundary on one block."""
    weight: list[str] = Field(..., description="Total weight of the block")
    block_dimension: int = Field(..., description="Dimension of (M tensor S) at the weight")
    c_matches_coboundary: bool = Field(..., description="matrix(C) == matrix(d)")
    c_minus_matches_boundary: bool = Field(..., description="matrix(C^-) == -2 matrix(boundary)")
    first_mismatch: str | None = Field(None, description="First differing entry, if any")

    @property
    def passed(self) -> bool:
        return self.c_matches_coboundary and self.c_minus_matches_boundary


class InjectivityBounds(BaseModel):
    """Dirac cohomology dimension against the four (co)homology bounds at one weight."""
    weight: list[str] = Field(..., description="Total weight")
    dirac_total: int = Field(..., description="dim H_D^+ + dim H_D^-")
    ubar_cohomology: int = Field(..., description="Total dim of H(u-bar, M) shifted by rho(u-bar)")
    u_homology: int = Field(..., description="Total dim of H(u, M) homology shifted by rho(u-bar)")
    u_cohomology: int = Field(..., description="Total dim of H(u, M) shifted by rho(u)")
    ubar_homology: int = Field(..., description="Total dim of H(u-bar, M) homology shifted by rho(u)")

    @property
    def holds(self) -> bool:
        return self.dirac_total <= min(
            self.ubar_cohomology, self.u_homology, self.u_cohomology, self.ubar_homology
        )


# ============================================================================
# Index identities
# ============================================================================

class Mismatch(BaseModel):
    """Pointwise disagreement of two virtual characters."""
    weight: list[str] = Field(..., description="Weight where the sides differ")
    left: int = Field(..., description="Value of the left-hand side")
    right: int = Field(..., description="Value of the right-hand side")


class IdentityCheck(BaseModel):
    """One identity evaluated on every weight of a window."""
    check: str = Field(..., description="Check label a-f")
    description: str = Field(..., description="Identity being checked")
    status: CheckStatus = Field(..., description="Outcome")
    mismatches: list[Mismatch] = Field(default_factory=list, description="Pointwise failures")
    note: str | None = Field(None, description="Why a check was skipped, or extra context")


class IndexIdentityReport(BaseModel):
    """All index identities for one module and parabolic."""
    module: str = Field(..., description="Module descriptor")
    parabolic: str = Field(..., description="Parabolic datum")
    window_size: int = Field(..., description="Number of window weights checked")
    epsilon: int = Field(..., description="Sign (-1)^{dim u} relating the u-bar and u sides")
    checks: list[IdentityCheck] = Field(default_factory=list, description="Individual checks")

    @property
    def passed(self) -> bool:
        return all(c.status != CheckStatus.FAILED for c in self.checks)


# ============================================================================
# Euler-Poincare pairing against the index pairing
# ============================================================================

class Main2Report(BaseModel):
    """EP(M, N) against the pairing of spin indices."""
    first: str = Field(..., description="Descriptor of M")
    second: str = Field(..., description="Descriptor of N")
    ep: int = Field(..., description="Euler-Poincare pairing")
    method: EPMethod = Field(..., description="How the EP value was obtained")
    index_pair: int | None = Field(None, description="Pairing of the spin indices, when certified")
    equal: bool | None = Field(None, description="ep == index_pair when both are independent")
    consistent_by_construction: bool = Field(
        default=False, description="EP side came from the pairing theorem itself"
    )
    corollary: CheckStatus = Field(
        default=CheckStatus.SKIPPED, description="EP(M,N) = EP(N,M) = 0 for simple non-highest-weight M"
    )
    index_vanishing: CheckStatus = Field(
        default=CheckStatus.SKIPPED, description="Spin indices of cuspidal inputs vanish"
    )
    audit: list[AuditEntry] = Field(default_factory=list, description="Reductions that fired")

    @property
    def passed(self) -> bool:
        return (
            self.equal is not False
            and self.corollary != CheckStatus.FAILED
            and self.index_vanishing != CheckStatus.FAILED
        )
