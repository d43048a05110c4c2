"""Uniform block-matrix interface shared by every weight module constructor."""

import threading
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from weightdirac.config import settings
from weightdirac.core import linalg
from weightdirac.core.liestruct import LieAlgebra, LieElement
from weightdirac.core.rootdata import Weight
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)

Vector = dict[int, Fraction]


class ModuleKind(str, Enum):
    """Constructor that produced a module."""

    VERMA = "verma"
    INDUCED = "induced"
    SIMPLE_HW = "simple_hw"
    CUSPIDAL_SL2 = "cuspidal_sl2"
    SL2_MONOMIAL = "sl2_monomial"
    LEVI_CUSPIDAL = "levi_cuspidal"
    CHARACTER = "character"
    DUAL = "dual"
    TWIST = "twist"


class CharacterShape(str, Enum):
    """What is known about the character, used to certify index supports."""

    HIGHEST_WEIGHT = "highest_weight"
    CUSPIDAL = "cuspidal"
    INDUCED_FROM_CUSPIDAL = "induced_from_cuspidal"
    FINITE = "finite"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ModuleDescriptor:
    """Constructor kind with its parameters, rendered as e.g. ``twist(gamma=[-2], x=1/2)[cuspidal_sl2(...)]``."""

    kind: ModuleKind
    parameters: tuple[tuple[str, str], ...] = ()
    children: tuple["ModuleDescriptor", ...] = field(default=())

    def __str__(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters)
        inner = "".join(f"[{child}]" for child in self.children)
        return f"{self.kind.value}({params}){inner}"


class WeightModule(ABC):
    """Admissible weight module exposed through exact block matrices.

    Subclasses provide the ordered basis labels of each weight space and the
    action of a single Chevalley basis vector between weight spaces. Results are
    memoized per module; concurrent inserts of identical values are harmless.
    """

    kind: ModuleKind
    has_infinitesimal_character: bool = True
    shape: CharacterShape = CharacterShape.UNKNOWN

    def __init__(
        self,
        algebra: LieAlgebra,
        descriptor: ModuleDescriptor,
        acting: Iterable[int] | None = None,
    ):
        self.algebra = algebra
        self.rd = algebra.rd
        self.descriptor = descriptor
        self.acting = frozenset(range(algebra.dimension) if acting is None else acting)
        self._basis_cache: dict[Weight, tuple[Hashable, ...]] = {}
        self._action_cache: dict[tuple[int, Weight], DomainMatrix] = {}
        self._lock = threading.Lock()
        self.blocks_computed = 0
        self.cache_hits = 0

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"

    # Metadata

    @property
    @abstractmethod
    def support_representative(self) -> Weight:
        """A weight whose root-lattice coset contains the support."""

    @property
    def highest_weight(self) -> Weight | None:
        """Highest weight for highest-weight-type modules, otherwise None."""
        return None

    @property
    def is_g_module(self) -> bool:
        return len(self.acting) == self.algebra.dimension

    def in_support_coset(self, weight: Weight) -> bool:
        return self.rd.in_root_lattice(weight - self.support_representative)

    # Subclass hooks

    @abstractmethod
    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        """Ordered basis labels of the weight space."""

    @abstractmethod
    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        """Matrix of a basis vector from the weight space to the shifted one."""

    # Cached access

    def _store(self, cache: dict, key: object, value: object) -> None:  # type: ignore[type-arg]
        limit = settings.block_cache_size
        with self._lock:
            if limit and len(cache) >= limit:
                cache.clear()
            cache[key] = value

    def basis(self, weight: Weight) -> tuple[Hashable, ...]:
        with self._lock:
            cached = self._basis_cache.get(weight)
        if cached is not None:
            return cached
        labels = tuple(self._compute_basis(weight)) if self.in_support_coset(weight) else ()
        self._store(self._basis_cache, weight, labels)
        return labels

    def dim(self, weight: Weight) -> int:
        return len(self.basis(weight))

    def act_basis(self, index: int, weight: Weight) -> DomainMatrix:
        """Matrix of the basis vector ``index`` from M_weight to M_{weight + wt}."""
        if index not in self.acting:
            raise ValueError(f"{self.algebra.names[index]} does not act on {self.descriptor}")
        key = (index, weight)
        with self._lock:
            cached = self._action_cache.get(key)
            if cached is not None:
                self.cache_hits += 1
                return cached
        target = weight + self.algebra.weights[index]
        rows, cols = self.dim(target), self.dim(weight)
        if rows == 0 or cols == 0:
            matrix = linalg.zeros(rows, cols)
        else:
            matrix = self._compute_action(index, weight)
            if matrix.shape != (rows, cols):
                raise RuntimeError(
                    f"{self.descriptor}: action of {self.algebra.names[index]} at {weight} "
                    f"has shape {matrix.shape}, expected {(rows, cols)}"
                )
        self._store(self._action_cache, key, matrix)
        with self._lock:
            self.blocks_computed += 1
        return matrix

    def act(self, x: LieElement, weight: Weight) -> DomainMatrix:
        """Matrix of a homogeneous Lie element from M_weight to M_{weight + wt(x)}."""
        if x.is_zero():
            raise ValueError("cannot infer the target block of the zero element")
        shift = x.weight
        if shift is None:
            raise ValueError(f"{x} is not a weight vector")
        target = weight + shift
        return linalg.combine(
            ((c, self.act_basis(i, weight)) for i, c in x.terms), self.dim(target), self.dim(weight)
        )

    def apply(self, index: int, weight: Weight, vector: Vector) -> Vector:
        """Apply a basis vector to a coordinate vector of M_weight."""
        out: Vector = {}
        if not vector:
            return out
        matrix = linalg.entries(self.act_basis(index, weight))
        for (i, j), c in matrix.items():
            if j in vector:
                out[i] = out.get(i, Fraction(0)) + c * vector[j]
        return {i: c for i, c in out.items() if c}

    def character(self, weights: Iterable[Weight]) -> dict[Weight, int]:
        """Block dimensions on the given weights."""
        return {w: self.dim(w) for w in weights}


class CharacterModule(WeightModule):
    """One-dimensional C_lambda of the Levi factor: h acts by lambda, Levi root vectors by zero."""

    kind = ModuleKind.CHARACTER
    shape = CharacterShape.FINITE

    def __init__(self, algebra: LieAlgebra, weight: Weight, levi_roots: Iterable[Weight] = ()):
        levi = list(levi_roots)
        acting = set(algebra.h_indices)
        for beta in levi:
            acting.add(algebra.e(beta))
            acting.add(algebra.f(beta))
        for beta in levi:
            if algebra.rd.coroot_pairing(weight, beta) != 0:
                raise ValueError(f"C_{weight} is not a module over a Levi containing the root {beta}")
        descriptor = ModuleDescriptor(self.kind, (("lambda", str(weight)),))
        super().__init__(algebra, descriptor, acting)
        self.weight = weight

    @property
    def support_representative(self) -> Weight:
        return self.weight

    @property
    def highest_weight(self) -> Weight | None:
        return self.weight

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        return [()] if weight == self.weight else []

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        if self.algebra.kind(index) != "h":
            return linalg.zeros(self.dim(weight + self.algebra.weights[index]), 1)
        i = self.algebra.h_indices.index(index)
        return linalg.from_rows([[weight.coords[i]]])


def block_action(module: WeightModule, x: LieElement, weight: Weight) -> DomainMatrix:
    """Exact matrix of x from M_weight to M_{weight + wt(x)}; empty shapes for zero blocks."""
    return module.act(x, weight)


def character_module(algebra: LieAlgebra, weight: Weight, levi_roots: Iterable[Weight] = ()) -> CharacterModule:
    return CharacterModule(algebra, weight, levi_roots)
