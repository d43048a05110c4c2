"""Restricted duals M^v = sum of (M_mu)^* with (X.f)(v) = f(tau(X).v)."""

from collections.abc import Hashable

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.modules.base import CharacterShape, ModuleDescriptor, ModuleKind, WeightModule
from weightdirac.core.rootdata import Weight


class DualModule(WeightModule):
    """Restricted dual; the action of x out of weight mu is the transpose of tau(x) into mu."""

    kind = ModuleKind.DUAL

    def __init__(self, module: WeightModule):
        self.module = module
        acting = {module.algebra.tau_index(i) for i in module.acting}
        super().__init__(module.algebra, ModuleDescriptor(self.kind, (), (module.descriptor,)), acting)
        self.has_infinitesimal_character = module.has_infinitesimal_character

    @property
    def shape(self) -> CharacterShape:  # type: ignore[override]
        return self.module.shape

    @property
    def highest_weight(self) -> Weight | None:
        return self.module.highest_weight

    @property
    def support_representative(self) -> Weight:
        return self.module.support_representative

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        return list(self.module.basis(weight))

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        shifted = weight + self.algebra.weights[index]
        return linalg.transpose(self.module.act_basis(self.algebra.tau_index(index), shifted))


def dual(module: WeightModule) -> DualModule:
    return DualModule(module)
