"""The monomial modules F_mu = t^mu C[t0^{+-1}, t1^{+-1}]_0 of an sl(2).

Basis monomials t^{(mu0 + k, mu1 - k)}, k in Z, with e = t0 d/dt1, f = t1 d/dt0
and h = t0 d/dt0 - t1 d/dt1. The sl(2) may be all of g (type A1) or the Levi
factor of a single simple root, in which case the remaining coroots act through
a base weight.
"""

from collections.abc import Hashable, Iterable
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.errors import NotCuspidalError, PreconditionError, UnsupportedModuleError
from weightdirac.core.liestruct import LieAlgebra, chevalley_basis
from weightdirac.core.modules.base import CharacterShape, ModuleDescriptor, ModuleKind, WeightModule
from weightdirac.core.rootdata import ParabolicDatum, RootDatum, Weight, build_root_system


def _is_integral(value: Fraction) -> bool:
    return value.denominator == 1


class SL2MonomialModule(WeightModule):
    """F_mu on the sl(2) of the simple root ``root_index``."""

    kind = ModuleKind.SL2_MONOMIAL

    def __init__(
        self,
        algebra: LieAlgebra,
        root_index: int,
        mu0: Fraction,
        mu1: Fraction,
        base: Weight,
        acting: Iterable[int] | None = None,
        kind: ModuleKind = ModuleKind.SL2_MONOMIAL,
    ):
        if base.coords[root_index] != mu0 - mu1:
            raise PreconditionError(
                f"base weight {base} must pair with the coroot to mu0 - mu1 = {mu0 - mu1}",
                base=base,
                mu0=mu0,
                mu1=mu1,
            )
        self.kind = kind
        self.root_index = root_index
        self.mu0 = Fraction(mu0)
        self.mu1 = Fraction(mu1)
        self.base = base
        self.alpha = algebra.rd.simple_roots[root_index]
        self._e = algebra.e(self.alpha)
        self._f = algebra.f(self.alpha)
        descriptor = ModuleDescriptor(
            kind,
            (("root", str(root_index + 1)), ("mu0", str(self.mu0)), ("mu1", str(self.mu1)), ("base", str(base))),
        )
        super().__init__(algebra, descriptor, acting)

    @property
    def is_cuspidal(self) -> bool:
        return not _is_integral(self.mu0) and not _is_integral(self.mu1)

    @property
    def shape(self) -> CharacterShape:  # type: ignore[override]
        return CharacterShape.CUSPIDAL if self.is_cuspidal else CharacterShape.UNKNOWN

    @property
    def support_representative(self) -> Weight:
        return self.base

    def label_of(self, weight: Weight) -> int | None:
        coords = self.rd.root_coords(weight - self.base)
        if any(c != 0 for j, c in enumerate(coords) if j != self.root_index):
            return None
        k = coords[self.root_index]
        return int(k) if _is_integral(k) else None

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        k = self.label_of(weight)
        return [] if k is None else [k]

    def exponents(self, k: int) -> tuple[Fraction, Fraction]:
        """Exponents (a, b) of the monomial t0^a t1^b with label k."""
        return self.mu0 + k, self.mu1 - k

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        k = self.label_of(weight)
        assert k is not None
        a, b = self.exponents(k)
        if index == self._e:
            value = b
        elif index == self._f:
            value = a
        elif self.algebra.kind(index) == "h":
            value = weight.coords[self.algebra.h_indices.index(index)]
        else:
            raise ValueError(f"{self.algebra.names[index]} does not act on {self.descriptor}")
        return linalg.from_rows([[value]])


def sl2_monomial(mu0: Fraction | int | str, mu1: Fraction | int | str, rd: RootDatum | None = None) -> SL2MonomialModule:
    """F_mu over sl(2) for arbitrary rational mu (cuspidal only when mu0, mu1 are not integers)."""
    rd = rd or build_root_system("A1")
    if rd.rank != 1:
        raise UnsupportedModuleError(f"sl(2) monomial modules need type A1, got {rd.label}", type=rd.label)
    mu0, mu1 = Fraction(mu0), Fraction(mu1)
    return SL2MonomialModule(chevalley_basis(rd), 0, mu0, mu1, Weight((mu0 - mu1,)))


def cuspidal_sl2(mu0: Fraction | int | str, mu1: Fraction | int | str, rd: RootDatum | None = None) -> SL2MonomialModule:
    """Cuspidal F_mu; raises NotCuspidalError when mu0 or mu1 is an integer.

    Example:
        >>> module = cuspidal_sl2("1/2", "1/2")
        >>> module.dim(Weight.of(0)), module.dim(Weight.of(1))
        (1, 0)
    """
    mu0, mu1 = Fraction(mu0), Fraction(mu1)
    if _is_integral(mu0) or _is_integral(mu1):
        raise NotCuspidalError(
            "F_mu is cuspidal only for mu0, mu1 not integers", mu0=mu0, mu1=mu1
        )
    rd = rd or build_root_system("A1")
    if rd.rank != 1:
        raise UnsupportedModuleError(f"cuspidal_sl2 needs type A1, got {rd.label}", type=rd.label)
    module = sl2_monomial(mu0, mu1, rd)
    module.kind = ModuleKind.CUSPIDAL_SL2
    module.descriptor = ModuleDescriptor(
        ModuleKind.CUSPIDAL_SL2, (("mu0", str(mu0)), ("mu1", str(mu1)))
    )
    return module


def levi_cuspidal(
    pd: ParabolicDatum,
    root_index: int,
    mu0: Fraction | int | str,
    mu1: Fraction | int | str,
    base: Weight | None = None,
) -> SL2MonomialModule:
    """Cuspidal F_mu of the sl(2) Levi factor of one simple root, extended to h by ``base``.

    The base weight defaults to (mu0 - mu1) on the Levi coroot and 0 elsewhere.
    """
    mu0, mu1 = Fraction(mu0), Fraction(mu1)
    if pd.levi != frozenset({root_index}):
        raise UnsupportedModuleError(
            f"Levi cuspidal modules need a Levi with the single simple root {root_index + 1}",
            parabolic=pd,
        )
    if _is_integral(mu0) or _is_integral(mu1):
        raise NotCuspidalError("F_mu is cuspidal only for mu0, mu1 not integers", mu0=mu0, mu1=mu1)
    algebra = chevalley_basis(pd.rd)
    if base is None:
        coords = [Fraction(0)] * pd.rd.rank
        coords[root_index] = mu0 - mu1
        base = Weight(tuple(coords))
    alpha = pd.rd.simple_roots[root_index]
    acting = set(algebra.h_indices) | {algebra.e(alpha), algebra.f(alpha)}
    return SL2MonomialModule(algebra, root_index, mu0, mu1, base, acting, ModuleKind.LEVI_CUSPIDAL)
