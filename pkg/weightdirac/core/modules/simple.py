"""Simple highest-weight modules L(lambda) as Verma quotients by the contravariant radical."""

from collections.abc import Hashable

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.liestruct import chevalley_basis
from weightdirac.core.modules.base import CharacterShape, ModuleDescriptor, ModuleKind, WeightModule
from weightdirac.core.modules.induced import InducedModule, verma
from weightdirac.core.rootdata import RootDatum, Weight
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)


class _QuotientBlock:
    """Gram matrix of one weight space with its pivot basis and coordinate projector."""

    def __init__(self, gram: DomainMatrix):
        self.gram = gram
        size = gram.shape[0]
        self.pivots = linalg.rref(gram)[1]
        if not self.pivots:
            self.projector = linalg.zeros(0, size)
            return
        principal = linalg.extract(gram, self.pivots, self.pivots)
        inverse = linalg.try_inverse(principal)
        if inverse is None:
            raise ArithmeticError("principal pivot block of a symmetric Gram matrix is singular")
        self.projector = linalg.matmul(inverse, linalg.extract(gram, self.pivots, range(size)))


class SimpleHighestWeightModule(WeightModule):
    """L(lambda) on the pivot columns of the Shapovalov Gram matrices of M(lambda).

    The class of a Verma vector x in L(lambda)_mu has coordinates
    G[P, P]^{-1} G[P, :] x on the pivot basis P, since x - E_P c lies in the radical.
    """

    kind = ModuleKind.SIMPLE_HW
    shape = CharacterShape.HIGHEST_WEIGHT

    def __init__(self, rd: RootDatum, weight: Weight):
        self.verma: InducedModule = verma(rd, weight)
        self.weight = weight
        self._blocks: dict[Weight, _QuotientBlock] = {}
        super().__init__(chevalley_basis(rd), ModuleDescriptor(self.kind, (("lambda", str(weight)),)))

    @property
    def support_representative(self) -> Weight:
        return self.weight

    @property
    def highest_weight(self) -> Weight | None:
        return self.weight

    def gram(self, mu: Weight) -> DomainMatrix:
        """Contravariant form on M(lambda)_mu: entry (I, J) is the v-coefficient of tau(f_I) f_J v."""
        if not self.rd.is_below(mu, self.weight):
            return linalg.zeros(0, 0)
        rows = []
        size = self.verma.dim(mu)
        for label in self.verma.basis(mu):
            exponents, _ = label  # type: ignore[misc]
            operator = linalg.identity(size)
            current = mu
            # tau(f_I) = e_{beta_n}^{a_n} ... e_{beta_1}^{a_1}, so e_{beta_1} acts first
            for a, beta in zip(exponents, self.verma.pd.nilradical_roots):
                for _ in range(a):
                    operator = linalg.matmul(self.verma.act_basis(self.algebra.e(beta), current), operator)
                    current = current + beta
            rows.append(linalg.to_rows(operator)[0])
        return linalg.from_rows(rows, size)

    def _block(self, mu: Weight) -> _QuotientBlock:
        with self._lock:
            cached = self._blocks.get(mu)
        if cached is not None:
            return cached
        block = _QuotientBlock(self.gram(mu))
        self._store(self._blocks, mu, block)
        logger.debug("shapovalov_block", highest_weight=str(self.weight), weight=str(mu), rank=len(block.pivots))
        return block

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        if not self.rd.is_below(weight, self.weight):
            return []
        labels = self.verma.basis(weight)
        return [labels[p] for p in self._block(weight).pivots]

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        target = weight + self.algebra.weights[index]
        action = self.verma.act_basis(index, weight)
        restricted = linalg.extract(action, range(action.shape[0]), self._block(weight).pivots)
        return linalg.matmul(self._block(target).projector, restricted)


def simple_hw(rd: RootDatum, weight: Weight) -> SimpleHighestWeightModule:
    """L(lambda) for any rational lambda.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system
        >>> module = simple_hw(build_root_system("A1"), Weight.of(3))
        >>> [module.dim(Weight.of(k)) for k in (3, 1, -1, -3, -5)]
        [1, 1, 1, 1, 0]
    """
    return SimpleHighestWeightModule(rd, weight)


def shapovalov_gram(rd: RootDatum, weight: Weight, mu: Weight) -> DomainMatrix:
    """Gram matrix of the contravariant form on M(weight)_mu; empty unless mu <= weight."""
    return SimpleHighestWeightModule(rd, weight).gram(mu)
