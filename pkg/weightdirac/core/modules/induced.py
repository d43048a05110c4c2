"""Parabolically induced modules M_p(V) = U(g) (x)_{U(p)} V, Verma modules included.

Basis vectors are f-monomials of the opposite nilradical tensored with basis
vectors of V. A basis vector of g acts by straightening x * f^a in the PBW order
(nilradical f's, Levi f's, Cartan, e's): the nilradical prefix gives the new
monomial, nilradical e's kill V and the Levi part acts on V.
"""

from collections.abc import Hashable, Iterator
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.errors import UnsupportedModuleError
from weightdirac.core.liestruct import PBWBasis, chevalley_basis
from weightdirac.core.modules.base import (
    CharacterModule,
    CharacterShape,
    ModuleDescriptor,
    ModuleKind,
    Vector,
    WeightModule,
)
from weightdirac.core.rootdata import ParabolicDatum, RootDatum, Weight, parabolic, parabolic_height
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)

Exponents = tuple[int, ...]


def _compositions(heights: list[int], total: int) -> Iterator[Exponents]:
    """Exponent vectors a >= 0 with sum a_i * heights_i == total."""
    if not heights:
        if total == 0:
            yield ()
        return
    first, rest = heights[0], heights[1:]
    for a in range(total // first + 1):
        for tail in _compositions(rest, total - a * first):
            yield (a,) + tail


class InducedModule(WeightModule):
    """M_p(V) for an admissible (l, h)-module V with u acting trivially."""

    kind = ModuleKind.INDUCED

    def __init__(self, pd: ParabolicDatum, inducing: WeightModule, kind: ModuleKind = ModuleKind.INDUCED):
        if inducing.rd != pd.rd:
            raise UnsupportedModuleError(
                f"V lives over {inducing.rd.label}, the parabolic over {pd.rd.label}",
                module=inducing.descriptor,
            )
        algebra = chevalley_basis(pd.rd)
        levi_indices = set(algebra.h_indices)
        for beta in pd.levi_roots:
            levi_indices |= {algebra.e(beta), algebra.f(beta)}
        if not set(algebra.h_indices) <= inducing.acting:
            raise UnsupportedModuleError("V is not h-semisimple", module=inducing.descriptor)
        if not levi_indices <= inducing.acting:
            raise UnsupportedModuleError(
                f"V is not a module over the Levi factor of {pd}", module=inducing.descriptor
            )
        self.kind = kind
        self.pd = pd
        self.inducing = inducing
        self._nil_f = [algebra.f(beta) for beta in pd.nilradical_roots]
        self._nil_f_position = {index: i for i, index in enumerate(self._nil_f)}
        self._nil_e = frozenset(algebra.e(beta) for beta in pd.nilradical_roots)
        self._heights = [int(parabolic_height(pd, beta)) for beta in pd.nilradical_roots]
        levi_f = [algebra.f(beta) for beta in pd.levi_roots]
        self.pbw = PBWBasis(algebra, self._nil_f + levi_f + algebra.h_indices + algebra.e_indices)
        if kind == ModuleKind.VERMA:
            descriptor = ModuleDescriptor(kind, (("lambda", str(inducing.support_representative)),))
        else:
            descriptor = ModuleDescriptor(kind, (("levi", str(sorted(i + 1 for i in pd.levi))),), (inducing.descriptor,))
        super().__init__(algebra, descriptor)
        self.has_infinitesimal_character = inducing.has_infinitesimal_character

    @property
    def support_representative(self) -> Weight:
        return self.inducing.support_representative

    @property
    def shape(self) -> CharacterShape:  # type: ignore[override]
        if self.pd.dim_u == 0:
            return self.inducing.shape
        if self.inducing.shape == CharacterShape.FINITE:
            return CharacterShape.HIGHEST_WEIGHT
        if self.inducing.shape == CharacterShape.CUSPIDAL:
            return CharacterShape.INDUCED_FROM_CUSPIDAL
        return CharacterShape.UNKNOWN

    @property
    def highest_weight(self) -> Weight | None:
        if self.shape == CharacterShape.HIGHEST_WEIGHT:
            return self.inducing.highest_weight
        return None

    def inducing_weight(self, weight: Weight, exponents: Exponents) -> Weight:
        """Weight of the V-component of f^a (x) v in M_weight."""
        for a, beta in zip(exponents, self.pd.nilradical_roots):
            if a:
                weight = weight + beta * a
        return weight

    def exponent_vectors(self, weight: Weight) -> list[Exponents]:
        total = parabolic_height(self.pd, self.inducing.support_representative - weight)
        if total.denominator != 1 or total < 0:
            return []
        return sorted(_compositions(self._heights, int(total)))

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        labels: list[Hashable] = []
        for exponents in self.exponent_vectors(weight):
            v_weight = self.inducing_weight(weight, exponents)
            labels.extend((exponents, v) for v in range(self.inducing.dim(v_weight)))
        return labels

    def monomial(self, exponents: Exponents) -> tuple[int, ...]:
        word: list[int] = []
        for a, index in zip(exponents, self._nil_f):
            word.extend([index] * a)
        return tuple(word)

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        target = weight + self.algebra.weights[index]
        position = {label: i for i, label in enumerate(self.basis(target))}
        builder = linalg.DokBuilder()
        for j, label in enumerate(self.basis(weight)):
            exponents, v = label  # type: ignore[misc]
            v_weight = self.inducing_weight(weight, exponents)
            word = (index,) + self.monomial(exponents)
            for normal, c in self.pbw.normal_form_word(word).items():
                split = 0
                while split < len(normal) and normal[split] in self._nil_f_position:
                    split += 1
                rest = normal[split:]
                if any(letter in self._nil_e for letter in rest):
                    continue
                new_exponents = [0] * len(self._nil_f)
                for letter in normal[:split]:
                    new_exponents[self._nil_f_position[letter]] += 1
                vector: Vector = {v: Fraction(1)}
                current = v_weight
                for letter in reversed(rest):
                    vector = self.inducing.apply(letter, current, vector)
                    current = current + self.algebra.weights[letter]
                    if not vector:
                        break
                for w, d in vector.items():
                    builder.add(position[(tuple(new_exponents), w)], j, c * d)
        return builder.build(self.dim(target), self.dim(weight))


def induce_parabolic(pd: ParabolicDatum, inducing: WeightModule) -> InducedModule:
    """M_p(V) for V built by ``character_module`` or ``levi_cuspidal``."""
    return InducedModule(pd, inducing)


def verma(rd: RootDatum, weight: Weight) -> InducedModule:
    """Verma module M(lambda), induced from C_lambda over the Borel.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system
        >>> rd = build_root_system("A2")
        >>> verma(rd, Weight.of(0, 0)).dim(-(rd.simple_roots[0] + rd.simple_roots[1]))
        2
    """
    borel = parabolic(rd, ())
    return InducedModule(borel, CharacterModule(chevalley_basis(rd), weight), ModuleKind.VERMA)
