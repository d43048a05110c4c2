"""Pydantic schemas for job configuration files."""

from fractions import Fraction
from typing import Annotated, Any, Literal

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, model_validator

CommandName = Literal["describe", "cohomology", "dirac", "index", "pair", "verify"]
Direction = Literal["ubar-cohomology", "u-cohomology", "u-homology", "ubar-homology"]
ModuleKindName = Literal[
    "verma",
    "simple_hw",
    "cuspidal_sl2",
    "sl2_monomial",
    "levi_cuspidal",
    "character",
    "dual-of",
    "twist-of",
    "induced",
]


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        numerator, _, denominator = text.partition("/")
        try:
            if denominator:
                return Fraction(int(numerator), int(denominator))
            return Fraction(int(numerator))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise ValueError(f"expected a rational, got {type(value).__name__}")


Rational = Annotated[Fraction, BeforeValidator(_to_fraction), PlainSerializer(str, return_type=str)]
WeightValue = list[Rational]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True, populate_by_name=True)


class AlgebraSection(_Section):
    """Root system of g."""
    type: str = Field(..., description="A1, A1xA1, A2 or B2")


class ParabolicSection(_Section):
    """Levi subset of the simple roots, 1-based."""
    levi: list[int] = Field(default_factory=list, description="Simple roots in the Levi factor")


class ModuleSection(_Section):
    """One named module; only the keys of its kind may be present."""
    name: str = Field(..., description="Name from the section header")
    kind: ModuleKindName = Field(..., description="Constructor")
    lambda_: WeightValue | None = Field(None, alias="lambda", description="Highest or base weight")
    mu0: Rational | None = Field(None, description="First sl(2) monomial exponent")
    mu1: Rational | None = Field(None, description="Second sl(2) monomial exponent")
    root: int | None = Field(None, ge=1, description="Simple root of the sl(2) Levi factor, 1-based")
    base: WeightValue | None = Field(None, description="Base weight of a Levi cuspidal module")
    of: str | None = Field(None, description="Name of the module this one is built from")
    gamma: list[WeightValue] | None = Field(None, description="Twisting roots in simple-root coordinates")
    x: list[Rational] | None = Field(None, description="Twisting exponents, one per root")

    @model_validator(mode="after")
    def _check_keys(self) -> "ModuleSection":
        required: dict[str, tuple[str, ...]] = {
            "verma": ("lambda_",),
            "simple_hw": ("lambda_",),
            "character": ("lambda_",),
            "cuspidal_sl2": ("mu0", "mu1"),
            "sl2_monomial": ("mu0", "mu1"),
            "levi_cuspidal": ("root", "mu0", "mu1"),
            "dual-of": ("of",),
            "twist-of": ("of", "gamma", "x"),
            "induced": ("of",),
        }
        optional = {"levi_cuspidal": ("base",)}
        allowed = set(required[self.kind]) | set(optional.get(self.kind, ()))
        for key in ("lambda_", "mu0", "mu1", "root", "base", "of", "gamma", "x"):
            present = getattr(self, key) is not None
            label = key.rstrip("_")
            if key in required[self.kind] and not present:
                raise ValueError(f"module {self.name!r} of kind {self.kind} needs key {label!r}")
            if present and key not in allowed:
                raise ValueError(f"key {label!r} is not allowed for kind {self.kind}")
        if self.kind == "twist-of" and len(self.gamma or []) != len(self.x or []):
            raise ValueError(f"module {self.name!r}: gamma and x need the same length")
        return self


class WindowSection(_Section):
    """Box base + sum k_i alpha_i with |k_i| <= radius."""
    base: WeightValue = Field(..., description="Center of the window")
    radius: int = Field(..., gt=0, description="Box radius in simple-root steps")


class CommandSection(_Section):
    """Command options; the command itself comes from the command line."""
    name: CommandName | None = Field(None, description="Optional command name, must match the command line")
    module: str | None = Field(None, description="Module the command acts on")
    second: str | None = Field(None, description="Second module for pair and verify")
    direction: Direction | None = Field(None, description="Complex for the cohomology command")


class JobConfig(_Section):
    """Validated job configuration."""
    algebra: AlgebraSection
    parabolic: ParabolicSection = Field(default_factory=ParabolicSection)
    modules: dict[str, ModuleSection] = Field(default_factory=dict)
    window: WindowSection
    command: CommandSection = Field(default_factory=CommandSection)

    @model_validator(mode="after")
    def _check_references(self) -> "JobConfig":
        for name, module in self.modules.items():
            if module.of is not None and module.of not in self.modules:
                raise ValueError(f"module {name!r} refers to unknown module {module.of!r}")
        for name in self.modules:
            seen = {name}
            current = self.modules[name].of
            while current is not None:
                if current in seen:
                    raise ValueError(f"module {name!r} is defined in terms of itself")
                seen.add(current)
                current = self.modules[current].of
        for key in ("module", "second"):
            ref = getattr(self.command, key)
            if ref is not None and ref not in self.modules:
                raise ValueError(f"command {key} refers to unknown module {ref!r}")
        return self
