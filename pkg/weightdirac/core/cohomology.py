"""Chevalley-Eilenberg (co)homology per weight block and the Dirac operators C, C^-, D.

All complexes at a fixed weight are finite dimensional, so every result is
exact; windows only decide which weights get enumerated.

Conventions for a side n with ordered basis y_0, ..., y_{N-1}:

    (d phi)(y_{s_0}, ..., y_{s_p}) = sum_a (-1)^a y_{s_a} phi(..., ^y_{s_a}, ...)
                                   + sum_{a<b} (-1)^{a+b} phi([y_{s_a}, y_{s_b}], ...)

    boundary(m (x) y_{s_1} ^ ... ^ y_{s_p}) = sum_a (-1)^a y_{s_a} m (x) (..., ^y_{s_a}, ...)
                                            + sum_{a<b} (-1)^{a+b} m (x) [y_{s_a}, y_{s_b}] ^ ...

with positions a counted from 0 for cochains and from 1 for chains. A cochain
phi with phi(y_S) = m is identified with m (x) u_S in M (x) S, which is how the
Dirac operators are compared with these differentials.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.liestruct import LieElement
from weightdirac.core.modules.base import WeightModule
from weightdirac.core.rootdata import ParabolicDatum, Weight
from weightdirac.core.spinor import SpinRealization, Subset, spin_realization
from weightdirac.logging_config import get_logger
from weightdirac.schemas.reports import CorrespondenceReport, InjectivityBounds

logger = get_logger(__name__)

Label = tuple[Subset, int]


class Direction(str, Enum):
    """Which (co)homology of which nilradical."""

    UBAR_COHOMOLOGY = "ubar-cohomology"
    U_COHOMOLOGY = "u-cohomology"
    U_HOMOLOGY = "u-homology"
    UBAR_HOMOLOGY = "ubar-homology"

    @property
    def is_cohomology(self) -> bool:
        return self in (Direction.UBAR_COHOMOLOGY, Direction.U_COHOMOLOGY)

    @property
    def uses_ubar(self) -> bool:
        return self in (Direction.UBAR_COHOMOLOGY, Direction.UBAR_HOMOLOGY)


class _Side:
    """Ordered basis of a nilpotent subalgebra, each vector a multiple of a Chevalley vector."""

    def __init__(self, elements: Sequence[LieElement]):
        self.elements = list(elements)
        self.algebra = self.elements[0].algebra if self.elements else None
        self.weights: list[Weight] = []
        self._position: dict[int, tuple[int, Fraction]] = {}
        for k, y in enumerate(self.elements):
            ((index, scale),) = y.terms
            self._position[index] = (k, scale)
            assert y.weight is not None
            self.weights.append(y.weight)
        self._brackets: dict[tuple[int, int], dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def expand(self, z: LieElement) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for index, c in z.terms:
            if index not in self._position:
                raise ValueError(f"{z} leaves the subalgebra")
            k, scale = self._position[index]
            out[k] = c / scale
        return out

    def bracket(self, a: int, b: int) -> dict[int, Fraction]:
        key = (a, b)
        if key not in self._brackets:
            assert self.algebra is not None
            self._brackets[key] = self.expand(self.algebra.bracket(self.elements[a], self.elements[b]))
        return self._brackets[key]

    def weight_of(self, subset: Subset, rank: int) -> Weight:
        total = Weight.zero(rank)
        for k in subset:
            total = total + self.weights[k]
        return total


@dataclass
class BlockComplex:
    """(Co)chain complex of one weight block.

    ``outgoing[p]`` is the differential leaving degree p: towards p + 1 for
    cohomology, towards p - 1 for homology.
    """

    weight: Weight
    direction: Direction
    bases: list[list[Label]]
    outgoing: dict[int, DomainMatrix] = field(default_factory=dict)

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def _rank(self, p: int) -> int:
        matrix = self.outgoing.get(p)
        return 0 if matrix is None else linalg.rank(matrix)

    def homology_dims(self) -> list[int]:
        ranks = [self._rank(p) for p in range(len(self.bases))]
        step = -1 if self.direction.is_cohomology else 1
        out = []
        for p, dim in enumerate(self.dims):
            incoming = p + step
            incoming_rank = ranks[incoming] if 0 <= incoming < len(ranks) else 0
            out.append(dim - ranks[p] - incoming_rank)
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * d for p, d in enumerate(self.dims))

    def squares_vanish(self) -> bool:
        step = 1 if self.direction.is_cohomology else -1
        for p, matrix in self.outgoing.items():
            following = self.outgoing.get(p + step)
            if following is not None and not linalg.is_zero(linalg.matmul(following, matrix)):
                return False
        return True

    def total_matrix(self, position: dict[Label, int], size: int) -> DomainMatrix:
        """Sum of all differentials as one operator on a basis indexed by ``position``."""
        builder = linalg.DokBuilder()
        step = 1 if self.direction.is_cohomology else -1
        for p, matrix in self.outgoing.items():
            rows = self.bases[p + step]
            cols = self.bases[p]
            for (i, j), value in linalg.entries(matrix).items():
                builder.add(position[rows[i]], position[cols[j]], value)
        return builder.build(size, size)


def _side_for(pd: ParabolicDatum, ubar: bool) -> _Side:
    spin = spin_realization(pd)
    return _Side(spin.u_dual_basis if ubar else spin.u_basis)


def _wedge(k: int, rest: Subset) -> tuple[int, Subset]:
    return SpinRealization.wedge(k, rest)


def _cochain_basis(module: WeightModule, side: _Side, weight: Weight, p: int) -> list[Label]:
    labels = []
    for subset in combinations(range(len(side)), p):
        block = weight + side.weight_of(subset, weight.rank)
        labels.extend((subset, m) for m in range(module.dim(block)))
    return labels


def _chain_basis(module: WeightModule, side: _Side, weight: Weight, p: int) -> list[Label]:
    labels = []
    for subset in combinations(range(len(side)), p):
        block = weight - side.weight_of(subset, weight.rank)
        labels.extend((subset, m) for m in range(module.dim(block)))
    return labels


class _ActionColumns:
    """Columns of block actions, memoized per (side vector, source weight)."""

    def __init__(self, module: WeightModule, side: _Side):
        self.module = module
        self.side = side
        self._cache: dict[tuple[int, Weight], dict[int, dict[int, Fraction]]] = {}

    def column(self, k: int, weight: Weight, m: int) -> dict[int, Fraction]:
        key = (k, weight)
        if key not in self._cache:
            columns: dict[int, dict[int, Fraction]] = {}
            matrix = self.module.act(self.side.elements[k], weight)
            for (i, j), value in linalg.entries(matrix).items():
                columns.setdefault(j, {})[i] = value
            self._cache[key] = columns
        return self._cache[key].get(m, {})


def _coboundary(
    module: WeightModule, side: _Side, weight: Weight, source: list[Label], target: list[Label]
) -> DomainMatrix:
    position = {label: i for i, label in enumerate(target)}
    actions = _ActionColumns(module, side)
    builder = linalg.DokBuilder()
    n = len(side)
    for j, (subset, m) in enumerate(source):
        block = weight + side.weight_of(subset, weight.rank)
        for k in range(n):
            sign, grown = _wedge(k, subset)
            if not sign:
                continue
            for r, value in actions.column(k, block, m).items():
                builder.add(position[(grown, r)], j, sign * value)
        for k in subset:
            rest = tuple(s for s in subset if s != k)
            sign_k, _ = _wedge(k, rest)
            for a, b in combinations(range(n), 2):
                if a in rest or b in rest:
                    continue
                c = side.bracket(a, b).get(k)
                if not c:
                    continue
                grown = tuple(sorted(rest + (a, b)))
                i, jj = grown.index(a), grown.index(b)
                builder.add(position[(grown, m)], j, (-1) ** (i + jj) * c * sign_k)
    return builder.build(len(target), len(source))


def _boundary(
    module: WeightModule, side: _Side, weight: Weight, source: list[Label], target: list[Label]
) -> DomainMatrix:
    position = {label: i for i, label in enumerate(target)}
    actions = _ActionColumns(module, side)
    builder = linalg.DokBuilder()
    for j, (subset, m) in enumerate(source):
        block = weight - side.weight_of(subset, weight.rank)
        for a, k in enumerate(subset, start=1):
            rest = subset[: a - 1] + subset[a:]
            for r, value in actions.column(k, block, m).items():
                builder.add(position[(rest, r)], j, (-1) ** a * value)
        for (i, a), (jj, b) in combinations(enumerate(subset, start=1), 2):
            rest = tuple(s for s in subset if s not in (a, b))
            for k, c in side.bracket(a, b).items():
                sign, shrunk = _wedge(k, rest)
                if sign:
                    builder.add(position[(shrunk, m)], j, (-1) ** (i + jj) * c * sign)
    return builder.build(len(target), len(source))


def lie_cohomology(
    module: WeightModule, pd: ParabolicDatum, weight: Weight, direction: Direction | str
) -> BlockComplex:
    """Chevalley-Eilenberg complex of u or u-bar with coefficients in the module at one weight.

    Cochains of weight ``weight`` send y_S into M_{weight + wt(y_S)}; chains of
    weight ``weight`` are m (x) y_S with m in M_{weight - wt(y_S)}.

    Example:
        >>> from weightdirac.core.modules import verma
        >>> from weightdirac.core.rootdata import build_root_system, parabolic
        >>> rd = build_root_system("A1")
        >>> lie_cohomology(verma(rd, Weight.of(0)), parabolic(rd, ()), Weight.of(0), "ubar-homology").homology_dims()
        [1, 0]
    """
    direction = Direction(direction)
    side = _side_for(pd, direction.uses_ubar)
    top = len(side)
    if direction.is_cohomology:
        bases = [_cochain_basis(module, side, weight, p) for p in range(top + 1)]
        outgoing = {
            p: _coboundary(module, side, weight, bases[p], bases[p + 1]) for p in range(top)
        }
    else:
        bases = [_chain_basis(module, side, weight, p) for p in range(top + 1)]
        outgoing = {
            p: _boundary(module, side, weight, bases[p], bases[p - 1]) for p in range(1, top + 1)
        }
    return BlockComplex(weight, direction, bases, outgoing)


# ============================================================================
# Dirac operators
# ============================================================================

@dataclass
class DiracBlock:
    """(M (x) S)_weight with the matrices of C, C^- and D = C + C^-."""

    weight: Weight
    basis: list[Label]
    parity: list[int]
    c: DomainMatrix
    c_minus: DomainMatrix

    @property
    def d(self) -> DomainMatrix:
        return linalg.add(self.c, self.c_minus)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def even(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 0]

    @property
    def odd(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 1]

    def position(self) -> dict[Label, int]:
        return {label: i for i, label in enumerate(self.basis)}


def _dirac_basis(module: WeightModule, spin: SpinRealization, weight: Weight) -> tuple[list[Label], list[int]]:
    basis: list[Label] = []
    parity: list[int] = []
    for element in spin.basis:
        block = weight - element.weight
        for m in range(module.dim(block)):
            basis.append((element.subset, m))
            parity.append(element.parity)
    return basis, parity


def _assemble(
    module: WeightModule,
    spin: SpinRealization,
    weight: Weight,
    basis: list[Label],
    pairs: list[tuple[LieElement, LieElement]],
    cubic: DomainMatrix,
) -> DomainMatrix:
    """sum x_M (x) v_S over ``pairs`` plus 1 (x) cubic."""
    position = {label: i for i, label in enumerate(basis)}
    spin_weight = {element.subset: element.weight for element in spin.basis}
    builder = linalg.DokBuilder()
    for x_m, v_s in pairs:
        columns: dict[Weight, dict[int, dict[int, Fraction]]] = {}
        for j, (subset, m) in enumerate(basis):
            spin_image = spin.clifford_act(v_s, {subset: Fraction(1)})
            if not spin_image:
                continue
            block = weight - spin_weight[subset]
            if block not in columns:
                grouped: dict[int, dict[int, Fraction]] = {}
                for (r, c), value in linalg.entries(module.act(x_m, block)).items():
                    grouped.setdefault(c, {})[r] = value
                columns[block] = grouped
            for image, s in spin_image.items():
                for r, a in columns[block].get(m, {}).items():
                    builder.add(position[(image, r)], j, s * a)
    cubic_columns: dict[int, dict[int, Fraction]] = {}
    for (r, c), value in linalg.entries(cubic).items():
        cubic_columns.setdefault(c, {})[r] = value
    for j, (subset, m) in enumerate(basis):
        for r, value in cubic_columns.get(spin.position[subset], {}).items():
            builder.add(position[(spin.basis[r].subset, m)], j, value)
    size = len(basis)
    return builder.build(size, size)


def _cubic(spin: SpinRealization, left: list[LieElement], right: list[LieElement]) -> DomainMatrix:
    """-1/4 sum_{i,j} left_i left_j [right_i, right_j] in the Clifford action."""
    algebra = spin.algebra
    terms = []
    n = len(left)
    for i in range(n):
        for j in range(n):
            bracket = algebra.bracket(right[i], right[j])
            if bracket.is_zero():
                continue
            product = linalg.matmul(spin.matrix(left[i]), spin.matrix(left[j]), spin.matrix(bracket))
            terms.append((Fraction(-1, 4), product))
    return linalg.combine(terms, spin.dimension, spin.dimension)


def dirac_block(module: WeightModule, pd: ParabolicDatum, weight: Weight) -> DiracBlock:
    """C = sum u_i^* (x) u_i - 1/4 sum 1 (x) u_i u_j [u_i^*, u_j^*] and
    C^- = sum u_i (x) u_i^* - 1/4 sum 1 (x) u_i^* u_j^* [u_i, u_j] on the weight block."""
    spin = spin_realization(pd)
    basis, parity = _dirac_basis(module, spin, weight)
    u, u_dual = spin.u_basis, spin.u_dual_basis
    c = _assemble(module, spin, weight, basis, list(zip(u_dual, u)), _cubic(spin, u, u_dual))
    c_minus = _assemble(module, spin, weight, basis, list(zip(u, u_dual)), _cubic(spin, u_dual, u))
    logger.debug("dirac_block_built", module=str(module.descriptor), weight=str(weight), dimension=len(basis))
    return DiracBlock(weight, basis, parity, c, c_minus)


@dataclass
class DiracCohomology:
    """ker D / (ker D cap im D) on one weight block, split by spin parity.

    Representatives are columns in the coordinates of the full block basis.
    """

    weight: Weight
    dim_plus: int
    dim_minus: int
    plus_representatives: DomainMatrix
    minus_representatives: DomainMatrix

    @property
    def total(self) -> int:
        return self.dim_plus + self.dim_minus

    @property
    def index(self) -> int:
        return self.dim_plus - self.dim_minus


def _parity_part(d: DomainMatrix, source: list[int], target: list[int], size: int) -> tuple[int, DomainMatrix]:
    out = linalg.extract(d, target, source)
    back = linalg.extract(d, source, target)
    kernel = linalg.nullspace(out)
    chosen = linalg.independent_modulo(back, kernel)
    picked = linalg.extract(kernel, range(len(source)), chosen)
    embedded = {(source[i], j): value for (i, j), value in linalg.entries(picked).items()}
    return len(chosen), linalg.from_entries(embedded, size, len(chosen))


def dirac_cohomology(module: WeightModule, pd: ParabolicDatum, weight: Weight) -> DiracCohomology:
    """Dirac cohomology dimensions with representatives.

    Example:
        >>> from weightdirac.core.modules import cuspidal_sl2
        >>> from weightdirac.core.rootdata import build_root_system, parabolic
        >>> result = dirac_cohomology(cuspidal_sl2("1/2", "1/2"), parabolic(build_root_system("A1"), ()), Weight.of(1))
        >>> result.dim_plus, result.dim_minus
        (0, 0)
    """
    block = dirac_block(module, pd, weight)
    d = block.d
    size = block.dimension
    dim_plus, plus = _parity_part(d, block.even, block.odd, size)
    dim_minus, minus = _parity_part(d, block.odd, block.even, size)
    return DiracCohomology(weight, dim_plus, dim_minus, plus, minus)


def correspondence_check(module: WeightModule, pd: ParabolicDatum, weight: Weight) -> CorrespondenceReport:
    """Compare C with the u-bar coboundary and C^- with -2 times the u boundary entrywise."""
    block = dirac_block(module, pd, weight)
    position = block.position()
    size = block.dimension
    shifted = weight - pd.rho_ubar
    coboundary = lie_cohomology(module, pd, shifted, Direction.UBAR_COHOMOLOGY).total_matrix(position, size)
    boundary = lie_cohomology(module, pd, shifted, Direction.U_HOMOLOGY).total_matrix(position, size)
    expected_minus = linalg.scale(boundary, -2)
    mismatch = _first_mismatch("C", block, block.c, coboundary) or _first_mismatch(
        "C-", block, block.c_minus, expected_minus
    )
    report = CorrespondenceReport(
        weight=weight.as_strings(),
        block_dimension=size,
        c_matches_coboundary=linalg.equal(block.c, coboundary),
        c_minus_matches_boundary=linalg.equal(block.c_minus, expected_minus),
        first_mismatch=mismatch,
    )
    if not report.passed:
        logger.warning("correspondence_mismatch", module=str(module.descriptor), weight=str(weight), detail=mismatch)
    return report


def _first_mismatch(name: str, block: DiracBlock, actual: DomainMatrix, expected: DomainMatrix) -> str | None:
    if block.dimension == 0:
        return None
    difference = linalg.entries(linalg.sub(actual, expected))
    if not difference:
        return None
    i, j = min(difference)
    return (
        f"{name}[{block.basis[i]} <- {block.basis[j]}] = {linalg.entry(actual, i, j)}, "
        f"expected {linalg.entry(expected, i, j)}"
    )


def injectivity_bounds(module: WeightModule, pd: ParabolicDatum, weight: Weight) -> InjectivityBounds:
    """Dirac cohomology against H(u-bar, M), H(u, M) homology (shift rho(u-bar)) and H(u, M), H(u-bar, M) homology (shift rho(u))."""
    dirac = dirac_cohomology(module, pd, weight)
    lower = weight - pd.rho_ubar
    upper = weight - pd.rho_u

    def total(at: Weight, direction: Direction) -> int:
        return sum(lie_cohomology(module, pd, at, direction).homology_dims())

    return InjectivityBounds(
        weight=weight.as_strings(),
        dirac_total=dirac.total,
        ubar_cohomology=total(lower, Direction.UBAR_COHOMOLOGY),
        u_homology=total(lower, Direction.U_HOMOLOGY),
        u_cohomology=total(upper, Direction.U_COHOMOLOGY),
        ubar_homology=total(upper, Direction.UBAR_HOMOLOGY),
    )
