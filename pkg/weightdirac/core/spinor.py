"""Spin module realized as the exterior algebra of u shifted by rho(u-bar).

Basis vectors are wedge monomials u_T = e_{beta_t1} ^ ... ^ e_{beta_tp} with
t1 < ... < tp in the positive-root order of the nilradical. The root vector
e_beta acts by wedging on the left; f_beta acts by 2 (e_beta, f_beta) times
contraction, which gives v w + w v = 2 (v, w) for the invariant form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.characters import Provenance, VirtualCharacter
from weightdirac.core.liestruct import LieAlgebra, LieElement, chevalley_basis
from weightdirac.core.rootdata import ParabolicDatum, Weight

Subset = tuple[int, ...]


@dataclass(frozen=True)
class SpinBasisElement:
    """Wedge monomial of a subset of the nilradical roots."""

    subset: Subset
    weight: Weight

    @property
    def parity(self) -> int:
        return len(self.subset) % 2


def _subsets(n: int) -> list[Subset]:
    subsets = [c for k in range(n + 1) for c in combinations(range(n), k)]
    return sorted(subsets)


class SpinRealization:
    """Clifford module of s = u + u-bar on the wedge monomials of u."""

    def __init__(self, pd: ParabolicDatum):
        self.pd = pd
        self.algebra: LieAlgebra = chevalley_basis(pd.rd)
        self.roots = pd.nilradical_roots
        self.basis = [
            SpinBasisElement(subset, self._weight(subset)) for subset in _subsets(len(self.roots))
        ]
        self.position = {b.subset: i for i, b in enumerate(self.basis)}
        self._wedge_index = {self.algebra.e(beta): t for t, beta in enumerate(self.roots)}
        self._contract_index = {self.algebra.f(beta): t for t, beta in enumerate(self.roots)}

    def _weight(self, subset: Subset) -> Weight:
        weight = self.pd.rho_ubar
        for t in subset:
            weight = weight + self.roots[t]
        return weight

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def in_s(self, index: int) -> bool:
        return index in self._wedge_index or index in self._contract_index

    # Exterior operators without Clifford scaling

    @staticmethod
    def wedge(t: int, subset: Subset) -> tuple[int, Subset]:
        """Left wedge by u_t: sign and resulting subset (sign 0 when t is present)."""
        if t in subset:
            return 0, subset
        before = sum(1 for s in subset if s < t)
        return (-1) ** before, tuple(sorted(subset + (t,)))

    @staticmethod
    def contract(t: int, subset: Subset) -> tuple[int, Subset]:
        """Contraction with the dual of u_t: sign from its 0-based position."""
        if t not in subset:
            return 0, subset
        position = subset.index(t)
        return (-1) ** position, subset[:position] + subset[position + 1:]

    def act_basis(self, index: int, subset: Subset) -> dict[Subset, Fraction]:
        """Clifford action of a basis vector of s on a wedge monomial."""
        if index in self._wedge_index:
            sign, result = self.wedge(self._wedge_index[index], subset)
            return {result: Fraction(sign)} if sign else {}
        if index in self._contract_index:
            t = self._contract_index[index]
            sign, result = self.contract(t, subset)
            if not sign:
                return {}
            scale = 2 * self.algebra.form_on_root_pair(self.roots[t])
            return {result: scale * sign}
        raise ValueError(f"{self.algebra.names[index]} does not lie in u + u-bar")

    def clifford_act(self, v: LieElement, x: dict[Subset, Fraction]) -> dict[Subset, Fraction]:
        """Action of an element of s on a spin vector given as subset -> coefficient."""
        out: dict[Subset, Fraction] = {}
        for index, c in v.terms:
            for subset, d in x.items():
                for result, e in self.act_basis(index, subset).items():
                    out[result] = out.get(result, Fraction(0)) + c * d * e
        return {k: v for k, v in out.items() if v}

    def matrix(self, v: LieElement) -> DomainMatrix:
        """Matrix of the Clifford action of ``v`` on the full spin basis."""
        entries: dict[tuple[int, int], Fraction] = {}
        for j, element in enumerate(self.basis):
            for result, c in self.clifford_act(v, {element.subset: Fraction(1)}).items():
                entries[(self.position[result], j)] = c
        return linalg.from_entries(entries, self.dimension, self.dimension)

    # Dual bases for the Dirac operator

    @cached_property
    def u_basis(self) -> list[LieElement]:
        """u_i = e_beta."""
        return [self.algebra.element(self.algebra.e(beta)) for beta in self.roots]

    @cached_property
    def u_dual_basis(self) -> list[LieElement]:
        """u_i^* = f_beta / (e_beta, f_beta), so that (u_i, u_j^*) = delta_ij."""
        return [
            self.algebra.element(self.algebra.f(beta), 1 / self.algebra.form_on_root_pair(beta))
            for beta in self.roots
        ]

    def character(self) -> tuple[VirtualCharacter, VirtualCharacter]:
        plus: dict[Weight, int] = {}
        minus: dict[Weight, int] = {}
        for element in self.basis:
            table = minus if element.parity else plus
            table[element.weight] = table.get(element.weight, 0) + 1
        return (
            VirtualCharacter.explicit(plus, Provenance.EXPLICIT, "S+"),
            VirtualCharacter.explicit(minus, Provenance.EXPLICIT, "S-"),
        )


@lru_cache(maxsize=None)
def spin_realization(pd: ParabolicDatum) -> SpinRealization:
    return SpinRealization(pd)


def spin_basis(pd: ParabolicDatum) -> list[SpinBasisElement]:
    """Wedge-monomial basis in lexicographic subset order.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system, parabolic
        >>> [(b.subset, str(b.weight), b.parity) for b in spin_basis(parabolic(build_root_system("A1"), ()))]
        [((), '[-1]', 0), ((0,), '[1]', 1)]
    """
    return spin_realization(pd).basis


def clifford_act(pd: ParabolicDatum, v: LieElement, x: dict[Subset, Fraction]) -> dict[Subset, Fraction]:
    return spin_realization(pd).clifford_act(v, x)


def spin_character(pd: ParabolicDatum) -> tuple[VirtualCharacter, VirtualCharacter]:
    """(ch S+, ch S-) for the wedge-parity grading."""
    return spin_realization(pd).character()
