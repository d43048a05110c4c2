"""Runs a validated job: builds the named modules and dispatches the command."""

import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from pydantic import BaseModel

from weightdirac.core import linalg
from weightdirac.core.block_pool import BlockPool
from weightdirac.core.cohomology import (
    Direction,
    correspondence_check,
    dirac_block,
    dirac_cohomology,
    injectivity_bounds,
    lie_cohomology,
)
from weightdirac.core.eppair import ep_pair, verify_main2
from weightdirac.core.errors import ConfigError, PreconditionError
from weightdirac.core.index import spin_index, verify_index_identities
from weightdirac.core.liestruct import chevalley_basis
from weightdirac.core.modules import (
    WeightModule,
    character_module,
    cuspidal_sl2,
    dual,
    induce_parabolic,
    levi_cuspidal,
    simple_hw,
    sl2_monomial,
    twist,
    verma,
)
from weightdirac.core.rootdata import ParabolicDatum, RootDatum, Weight, build_root_system, parabolic, window_weights
from weightdirac.logging_config import get_logger
from weightdirac.schemas.job import JobConfig, ModuleSection
from weightdirac.schemas.records import (
    CheckRecord,
    CohomologyRecord,
    DescribeRecord,
    DiracRecord,
    IndexRecord,
    PairRecord,
    VerifyRecord,
)
from weightdirac.schemas.reports import CheckStatus

logger = get_logger(__name__)


@dataclass
class JobResult:
    """Records of one command plus whether every verification passed."""

    command: str
    record_type: type[BaseModel]
    records: list[BaseModel] = field(default_factory=list)
    passed: bool = True


class JobExecutor:
    """Builds the modules of a job on demand and runs one command over its window."""

    def __init__(self, config: JobConfig, max_workers: int = 1):
        self.config = config
        self.rd: RootDatum = build_root_system(config.algebra.type)
        levi = []
        for index in config.parabolic.levi:
            if not 1 <= index <= self.rd.rank:
                raise ConfigError(f"Levi index {index} outside 1..{self.rd.rank}")
            levi.append(index - 1)
        self.pd: ParabolicDatum = parabolic(self.rd, levi)
        self.window_base = self.weight(config.window.base, "window.base")
        self.window = window_weights(self.rd, self.window_base, config.window.radius)
        self.pool = BlockPool(max_workers)
        self._modules: dict[str, WeightModule] = {}

    def weight(self, values: Sequence[Fraction], where: str) -> Weight:
        if len(values) != self.rd.rank:
            raise ConfigError(f"{where}: expected {self.rd.rank} coordinates, got {len(values)}")
        return Weight(tuple(Fraction(v) for v in values))

    # Modules

    def module(self, name: str) -> WeightModule:
        if name not in self._modules:
            self._modules[name] = self._build(self.config.modules[name])
            logger.debug("module_built", name=name, descriptor=str(self._modules[name].descriptor))
        return self._modules[name]

    def _build(self, section: ModuleSection) -> WeightModule:
        where = f"modules.{section.name}"
        kind = section.kind
        if kind in ("verma", "simple_hw", "character"):
            assert section.lambda_ is not None
            weight = self.weight(section.lambda_, f"{where}.lambda")
            if kind == "verma":
                return verma(self.rd, weight)
            if kind == "simple_hw":
                return simple_hw(self.rd, weight)
            try:
                return character_module(chevalley_basis(self.rd), weight, self.pd.levi_roots)
            except ValueError as exc:
                raise PreconditionError(str(exc), module=section.name) from exc
        if kind in ("cuspidal_sl2", "sl2_monomial"):
            assert section.mu0 is not None and section.mu1 is not None
            build = cuspidal_sl2 if kind == "cuspidal_sl2" else sl2_monomial
            return build(section.mu0, section.mu1, self.rd)
        if kind == "levi_cuspidal":
            assert section.root is not None and section.mu0 is not None and section.mu1 is not None
            if section.root > self.rd.rank:
                raise ConfigError(f"{where}.root: simple root {section.root} outside 1..{self.rd.rank}")
            base = None if section.base is None else self.weight(section.base, f"{where}.base")
            return levi_cuspidal(self.pd, section.root - 1, section.mu0, section.mu1, base)
        assert section.of is not None
        inner = self.module(section.of)
        if kind == "dual-of":
            return dual(inner)
        if kind == "twist-of":
            assert section.gamma is not None and section.x is not None
            gammas = []
            for coords in section.gamma:
                if len(coords) != self.rd.rank:
                    raise ConfigError(f"{where}.gamma: roots need {self.rd.rank} simple-root coordinates")
                gammas.append(self.rd.from_root_coords(coords))
            return twist(inner, gammas, section.x, self.window)
        return induce_parabolic(self.pd, inner)

    def _required(self, key: str) -> str:
        value = getattr(self.config.command, key)
        if value is None:
            raise ConfigError(f"command.{key} is required for this command")
        return value

    # Commands

    def run(self, command: str) -> JobResult:
        declared = self.config.command.name
        if declared is not None and declared != command:
            raise ConfigError(f"config declares command {declared!r} but {command!r} was requested")
        handlers: dict[str, Callable[[], JobResult]] = {
            "describe": self.describe,
            "cohomology": self.cohomology,
            "dirac": self.dirac,
            "index": self.index,
            "pair": self.pair,
            "verify": self.verify,
        }
        started = time.perf_counter()
        result = handlers[command]()
        logger.info(
            "job_finished",
            command=command,
            algebra=self.rd.label,
            parabolic=str(self.pd),
            window_base=str(self.window_base),
            window_radius=self.config.window.radius,
            records=len(result.records),
            passed=result.passed,
            blocks_computed=sum(m.blocks_computed for m in self._modules.values()),
            cache_hits=sum(m.cache_hits for m in self._modules.values()),
            elapsed=round(time.perf_counter() - started, 3),
        )
        return result

    def describe(self) -> JobResult:
        module = self.module(self._required("module"))
        dims = self.pool.run(module.dim, self.window)
        records = [DescribeRecord(weight=w.as_strings(), dim=d) for w, d in zip(self.window, dims)]
        return JobResult("describe", DescribeRecord, records)

    def cohomology(self) -> JobResult:
        module = self.module(self._required("module"))
        direction = Direction(self._required("direction"))

        def compute(weight: Weight) -> list[int]:
            return lie_cohomology(module, self.pd, weight, direction).homology_dims()

        dims = self.pool.run(compute, self.window)
        records = [
            CohomologyRecord(weight=w.as_strings(), direction=direction.value, dims=d)
            for w, d in zip(self.window, dims)
        ]
        return JobResult("cohomology", CohomologyRecord, records)

    def dirac(self) -> JobResult:
        module = self.module(self._required("module"))
        results = self.pool.run(lambda w: dirac_cohomology(module, self.pd, w), self.window)
        records = [
            DiracRecord(weight=r.weight.as_strings(), dim_plus=r.dim_plus, dim_minus=r.dim_minus) for r in results
        ]
        return JobResult("dirac", DiracRecord, records)

    def index(self) -> JobResult:
        module = self.module(self._required("module"))
        character = spin_index(module, self.pd)
        values = self.pool.run(character, self.window)
        records = [
            IndexRecord(weight=w.as_strings(), value=v) for w, v in zip(self.window, values) if v
        ]
        return JobResult("index", IndexRecord, records)

    def pair(self) -> JobResult:
        first_name, second_name = self._required("module"), self._required("second")
        result = ep_pair(self.module(first_name), self.module(second_name), self.window)
        record = PairRecord(first=first_name, second=second_name, ep=result.value, method=result.method.value)
        return JobResult("pair", PairRecord, [record])

    def verify(self) -> JobResult:
        first_name = self._required("module")
        if self.config.command.second is not None:
            second_name = self.config.command.second
            report = verify_main2(
                self.module(first_name), self.module(second_name), self.window, (first_name, second_name)
            )
            record = VerifyRecord(
                first=first_name,
                second=second_name,
                ep=report.ep,
                index_pair=report.index_pair,
                equal=report.equal,
                method=report.method.value,
            )
            return JobResult("verify", VerifyRecord, [record], report.passed)
        records = self._module_checks(self.module(first_name))
        passed = all(r.status != CheckStatus.FAILED.value for r in records)
        return JobResult("verify", CheckRecord, list(records), passed)

    def _module_checks(self, module: WeightModule) -> list[CheckRecord]:
        records: list[CheckRecord] = []

        reports = self.pool.run(lambda w: correspondence_check(module, self.pd, w), self.window)
        failed = [r for r in reports if not r.passed]
        records.append(
            CheckRecord(
                check="correspondence",
                status=(CheckStatus.FAILED if failed else CheckStatus.PASSED).value,
                detail=f"{failed[0].weight}: {failed[0].first_mismatch}" if failed else None,
            )
        )

        def squares(weight: Weight) -> str | None:
            block = dirac_block(module, self.pd, weight)
            if not linalg.is_zero(linalg.matmul(block.c, block.c)):
                return f"C^2 != 0 at {weight}"
            if not linalg.is_zero(linalg.matmul(block.c_minus, block.c_minus)):
                return f"(C^-)^2 != 0 at {weight}"
            for direction in Direction:
                if not lie_cohomology(module, self.pd, weight, direction).squares_vanish():
                    return f"d^2 != 0 for {direction.value} at {weight}"
            return None

        problems = [p for p in self.pool.run(squares, self.window) if p]
        records.append(
            CheckRecord(
                check="squares",
                status=(CheckStatus.FAILED if problems else CheckStatus.PASSED).value,
                detail=problems[0] if problems else None,
            )
        )

        if module.has_infinitesimal_character:
            bounds = self.pool.run(lambda w: injectivity_bounds(module, self.pd, w), self.window)
            broken = [b for b in bounds if not b.holds]
            records.append(
                CheckRecord(
                    check="injectivity-bounds",
                    status=(CheckStatus.FAILED if broken else CheckStatus.PASSED).value,
                    detail=f"{broken[0].weight}: dirac total {broken[0].dirac_total}" if broken else None,
                )
            )
        else:
            records.append(
                CheckRecord(check="injectivity-bounds", status=CheckStatus.SKIPPED.value, detail="no infinitesimal character")
            )

        identities = verify_index_identities(module, self.pd, self.window)
        for check in identities.checks:
            detail = check.note
            if check.mismatches:
                first = check.mismatches[0]
                detail = f"{first.weight}: {first.left} != {first.right}"
            records.append(CheckRecord(check=f"index-{check.check}", status=check.status.value, detail=detail))
        return records


def execute(config: JobConfig, command: str, max_workers: int = 1) -> JobResult:
    """Build the modules of ``config`` and run ``command`` over its window."""
    return JobExecutor(config, max_workers).run(command)
