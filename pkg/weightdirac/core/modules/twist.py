"""Twisting functors: the action of u on M^nu is the action of Theta(u) on M.

For a single root gamma with localized generator f = f_gamma (weight -gamma)
and a rational exponent x,

    Theta_x(u) = sum_k binom(x, k) (ad f)^k(u) f^(-k),

a finite sum because ad f is nilpotent. f^(-k) is realized by inverting the
chain of f-blocks M_{mu + k gamma} -> ... -> M_mu, so the input must be
bijective for f on every block the action touches. Commuting sets of roots are
handled by applying the single-root twists in turn.
"""

from collections.abc import Hashable, Sequence
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.errors import NonCommutingRootsError, NotBijectiveError, PreconditionError
from weightdirac.core.liestruct import localized_generator, theta_twist_element
from weightdirac.core.modules.base import CharacterShape, ModuleDescriptor, ModuleKind, WeightModule
from weightdirac.core.modules.checks import is_root_vector_bijective
from weightdirac.core.rootdata import Weight
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)


class TwistModule(WeightModule):
    """Twist of a gamma-bijective module by binom expansions of f_gamma^x."""

    kind = ModuleKind.TWIST
    shape = CharacterShape.UNKNOWN

    def __init__(self, module: WeightModule, gamma: Weight, x: Fraction):
        if not module.rd.is_root(gamma):
            raise PreconditionError(f"{gamma} is not a root of {module.rd.label}", gamma=gamma)
        self.module = module
        self.gamma = gamma
        self.x = Fraction(x)
        self.nu = gamma * self.x
        self._f = localized_generator(module.algebra, gamma)
        if self._f not in module.acting:
            raise PreconditionError(f"f_gamma for gamma = {gamma} does not act on {module.descriptor}")
        self._inverse_chains: dict[tuple[Weight, int], DomainMatrix] = {}
        descriptor = ModuleDescriptor(
            self.kind, (("gamma", str(gamma)), ("x", str(self.x))), (module.descriptor,)
        )
        super().__init__(module.algebra, descriptor, module.acting)
        self.has_infinitesimal_character = module.has_infinitesimal_character

    @property
    def support_representative(self) -> Weight:
        return self.module.support_representative + self.nu

    def _compute_basis(self, weight: Weight) -> list[Hashable]:
        return list(self.module.basis(weight - self.nu))

    def inverse_chain(self, base: Weight, k: int) -> DomainMatrix:
        """Inverse of f^k : M_{base + k gamma} -> M_base."""
        key = (base, k)
        with self._lock:
            cached = self._inverse_chains.get(key)
        if cached is not None:
            return cached
        top = base + self.gamma * k
        chain = linalg.identity(self.module.dim(top))
        for j in range(k, 0, -1):
            step = self.module.act_basis(self._f, base + self.gamma * j)
            chain = linalg.matmul(step, chain)
        inverse = linalg.try_inverse(chain)
        if inverse is None:
            logger.warning("twist_block_singular", gamma=str(self.gamma), weight=str(base), power=k)
            raise NotBijectiveError(
                f"f_gamma is not bijective between {top} and {base}; the twist needs a gamma-bijective module",
                gamma=self.gamma,
                weight=base,
                power=k,
            )
        self._store(self._inverse_chains, key, inverse)
        return inverse

    def _compute_action(self, index: int, weight: Weight) -> DomainMatrix:
        base = weight - self.nu
        u = self.algebra.element(index)
        target_dim = self.dim(weight + self.algebra.weights[index])
        terms = []
        for term in theta_twist_element(self.algebra, self.gamma, self.x, u):
            lifted = base + self.gamma * term.inverse_power
            inner = self.module.act(term.element, lifted)
            if term.inverse_power:
                inner = linalg.matmul(inner, self.inverse_chain(base, term.inverse_power))
            terms.append((term.coefficient, inner))
        return linalg.combine(terms, target_dim, self.dim(weight))


def check_commuting(module: WeightModule, gammas: Sequence[Weight]) -> None:
    """Raise NonCommutingRootsError unless f_gamma pairwise commute and no two roots are opposite or equal."""
    algebra = module.algebra
    for i, a in enumerate(gammas):
        for b in gammas[i + 1:]:
            if a == b or a == -b:
                raise NonCommutingRootsError(f"roots {a} and {b} are not distinct and non-opposite", left=a, right=b)
            fa = algebra.element(localized_generator(algebra, a))
            fb = algebra.element(localized_generator(algebra, b))
            if not algebra.bracket(fa, fb).is_zero() or algebra.rd.is_root(a + b):
                raise NonCommutingRootsError(f"roots {a} and {b} do not commute", left=a, right=b)


def twist(
    module: WeightModule,
    gammas: Sequence[Weight],
    exponents: Sequence[Fraction | int | str],
    window: Sequence[Weight] | None = None,
) -> WeightModule:
    """Twist by nu = sum x_i gamma_i for a commuting set of roots.

    Args:
        module: Input module, bijective for every f_gamma
        gammas: Commuting roots
        exponents: Rational x_i, one per root
        window: When given, bijectivity of every f_gamma block on these weights is checked up front

    Returns:
        The twisted module; nu = 0 returns identical action matrices

    Raises:
        NonCommutingRootsError: If the roots do not commute
        NotBijectiveError: If an f_gamma block needed by the action is not invertible
    """
    if len(gammas) != len(exponents):
        raise PreconditionError("one exponent is needed per twisting root")
    check_commuting(module, gammas)
    if window is not None:
        for gamma in gammas:
            report = is_root_vector_bijective(module, localized_generator(module.algebra, gamma), window)
            if not report.bijective:
                raise NotBijectiveError(
                    f"f_gamma for gamma = {gamma} is not bijective on the window",
                    gamma=gamma,
                    weight=report.first_failure,
                )
    result = module
    for gamma, x in zip(gammas, exponents):
        result = TwistModule(result, gamma, Fraction(x))
    logger.debug("twist_built", descriptor=str(result.descriptor))
    return result
