"""Structural checks of weight modules on a finite window of weights."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from weightdirac.core import linalg
from weightdirac.core.liestruct import localized_generator
from weightdirac.core.modules.base import WeightModule
from weightdirac.core.rootdata import Weight


@dataclass
class BijectivityReport:
    """Injectivity and surjectivity of one root vector on a window."""

    name: str
    injective: bool = True
    surjective: bool = True
    first_failure: Weight | None = None

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass
class CuspidalityReport:
    reports: list[BijectivityReport] = field(default_factory=list)

    @property
    def is_cuspidal(self) -> bool:
        """Every root vector acts injectively on the window."""
        return all(r.injective for r in self.reports)

    @property
    def is_bijective(self) -> bool:
        return all(r.bijective for r in self.reports)

    def failures(self) -> list[BijectivityReport]:
        return [r for r in self.reports if not r.bijective]


@dataclass(frozen=True)
class BracketFailure:
    left: str
    right: str
    weight: Weight


def is_root_vector_bijective(module: WeightModule, index: int, window: Iterable[Weight]) -> BijectivityReport:
    """Check that a root vector is injective and surjective block by block.

    Surjectivity at weight w means the block into w + wt(x) is onto.
    """
    report = BijectivityReport(module.algebra.names[index])
    for weight in window:
        matrix = module.act_basis(index, weight)
        rank = linalg.rank(matrix)
        injective = rank == matrix.shape[1]
        surjective = rank == matrix.shape[0]
        if not (injective and surjective) and report.first_failure is None:
            report.first_failure = weight
        report.injective &= injective
        report.surjective &= surjective
    return report


def cuspidality_report(module: WeightModule, window: Sequence[Weight]) -> CuspidalityReport:
    algebra = module.algebra
    indices = [i for i in sorted(module.acting) if algebra.kind(i) != "h"]
    return CuspidalityReport([is_root_vector_bijective(module, i, window) for i in indices])


def module_degree(module: WeightModule, window: Iterable[Weight]) -> int:
    """Largest block dimension on the window."""
    return max((module.dim(w) for w in window), default=0)


def character(module: WeightModule, window: Iterable[Weight]) -> dict[Weight, int]:
    return module.character(window)


def bracket_compatibility(
    module: WeightModule, window: Iterable[Weight], indices: Sequence[int] | None = None
) -> list[BracketFailure]:
    """Pairs of basis vectors whose commutator of block matrices differs from the bracket."""
    algebra = module.algebra
    basis = sorted(module.acting) if indices is None else list(indices)
    failures = []
    for weight in window:
        for i, a in enumerate(basis):
            for b in basis[i + 1:]:
                wa, wb = algebra.weights[a], algebra.weights[b]
                ab = linalg.matmul(module.act_basis(a, weight + wb), module.act_basis(b, weight))
                ba = linalg.matmul(module.act_basis(b, weight + wa), module.act_basis(a, weight))
                bracket = algebra.bracket(algebra.element(a), algebra.element(b))
                if bracket.is_zero():
                    expected = linalg.zeros(*ab.shape)
                else:
                    expected = module.act(bracket, weight)
                if not linalg.equal(linalg.sub(ab, ba), expected):
                    failures.append(BracketFailure(algebra.names[a], algebra.names[b], weight))
    return failures


def koszul_vanishing(module: WeightModule, gamma: Weight, weight: Weight) -> tuple[int, int]:
    """(dim H^0, dim H^1) at ``weight`` of the line spanned by f_gamma with coefficients in the module.

    H^0 is the kernel of f_gamma out of the weight space and H^1 the cokernel of
    f_gamma into the shifted one; both vanish when f_gamma is bijective.
    """
    f = localized_generator(module.algebra, gamma)
    out_of = module.act_basis(f, weight)
    kernel = out_of.shape[1] - linalg.rank(out_of)
    into = module.act_basis(f, weight + gamma)
    cokernel = into.shape[0] - linalg.rank(into)
    return kernel, cokernel


def sl2_invariant_scalars(
    module: WeightModule, window: Iterable[Weight], root_index: int = 0
) -> dict[Weight, tuple[Fraction, Fraction]]:
    """Scalars of e f and f e on one-dimensional blocks, invariant under diagonal rescaling."""
    algebra = module.algebra
    alpha = module.rd.simple_roots[root_index]
    e, f = algebra.e(alpha), algebra.f(alpha)
    scalars: dict[Weight, tuple[Fraction, Fraction]] = {}
    for weight in window:
        dim = module.dim(weight)
        if dim == 0:
            continue
        if dim != 1:
            raise ValueError(f"block at {weight} has dimension {dim}; scalars need one-dimensional blocks")
        ef = linalg.matmul(module.act_basis(e, weight - alpha), module.act_basis(f, weight))
        fe = linalg.matmul(module.act_basis(f, weight + alpha), module.act_basis(e, weight))
        scalars[weight] = (_scalar(ef), _scalar(fe))
    return scalars


def _scalar(matrix: object) -> Fraction:
    if 0 in matrix.shape:  # type: ignore[attr-defined]
        return Fraction(0)
    return linalg.entry(matrix, 0, 0)  # type: ignore[arg-type]
