"""Pydantic schemas for emitted result records.

Field order is the JSON-lines key order and, after the weight coordinates, the
CSV column order.
"""

from pydantic import BaseModel, ConfigDict, Field


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DescribeRecord(_Record):
    """Block dimension of a module at one window weight."""
    weight: list[str] = Field(..., description="Weight in fundamental coordinates")
    dim: int = Field(..., description="Dimension of the weight space")


class CohomologyRecord(_Record):
    """Per-degree (co)homology dimensions at one weight."""
    weight: list[str] = Field(..., description="Weight in fundamental coordinates")
    direction: str = Field(..., description="ubar-cohomology, u-cohomology, u-homology or ubar-homology")
    dims: list[int] = Field(..., description="Dimension in degree 0, 1, ..., dim u")


class DiracRecord(_Record):
    """Dirac cohomology dimensions split by spin parity."""
    weight: list[str] = Field(..., description="Total weight")
    dim_plus: int = Field(..., description="Even part")
    dim_minus: int = Field(..., description="Odd part")


class IndexRecord(_Record):
    """Nonzero value of a virtual character."""
    weight: list[str] = Field(..., description="Weight in fundamental coordinates")
    value: int = Field(..., description="Integer multiplicity")


class PairRecord(_Record):
    """Euler-Poincare pairing of two modules."""
    first: str = Field(..., description="Module name of the first argument")
    second: str = Field(..., description="Module name of the second argument")
    ep: int = Field(..., description="Pairing value")
    method: str = Field(..., description="EP method tag")


class VerifyRecord(_Record):
    """EP side against the index side for a pair of modules."""
    first: str = Field(..., description="Module name of the first argument")
    second: str = Field(..., description="Module name of the second argument")
    ep: int = Field(..., description="Euler-Poincare pairing")
    index_pair: int | None = Field(None, description="Pairing of the spin indices")
    equal: bool | None = Field(None, description="Whether both sides agree")
    method: str = Field(..., description="EP method tag")


class CheckRecord(_Record):
    """Outcome of a verification check over the window."""
    check: str = Field(..., description="Check name")
    status: str = Field(..., description="passed, failed or skipped")
    detail: str | None = Field(None, description="First failure or note")
