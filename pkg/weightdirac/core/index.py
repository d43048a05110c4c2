"""Spin index, Dirac index, the pairing of virtual characters and the index identities.

With S = wedge(u) (x) C_{rho(u-bar)} graded by wedge parity,

    I(M)(lambda) = sum_T (-1)^{|T|} dim M_{lambda - rho(u-bar) - sum T}.

The u-bar side and the u side of the Euler characteristic identities differ by
the global sign epsilon = (-1)^{dim u}; both are checked with that sign made
explicit.
"""

from collections.abc import Callable, Sequence
from fractions import Fraction
from itertools import combinations

from weightdirac.config import settings
from weightdirac.core.characters import Provenance, VirtualCharacter
from weightdirac.core.cohomology import Direction, dirac_cohomology, lie_cohomology
from weightdirac.core.errors import InfinitesimalCharacterError, SupportNotCertifiedError
from weightdirac.core.modules import (
    CharacterShape,
    DualModule,
    InducedModule,
    TwistModule,
    WeightModule,
    character_module,
    cuspidality_report,
    dual,
    induce_parabolic,
)
from weightdirac.core.rootdata import ParabolicDatum, Weight, dot_orbit, parabolic, window_weights
from weightdirac.core.spinor import spin_realization
from weightdirac.logging_config import get_logger
from weightdirac.schemas.reports import CheckStatus, IdentityCheck, IndexIdentityReport, Mismatch

logger = get_logger(__name__)

_MISMATCH_LIMIT = 10


def epsilon(pd: ParabolicDatum) -> int:
    """(-1)^{dim u}."""
    return -1 if pd.dim_u % 2 else 1


# ============================================================================
# Support certification
# ============================================================================

def _halo(pd: ParabolicDatum, centers: Sequence[Weight]) -> list[Weight]:
    radius = settings.certification_halo
    seen: set[Weight] = set()
    for center in centers:
        seen.update(window_weights(pd.rd, center, radius))
    return pd.rd.sorted_weights(seen)


def _inducing_parabolic(module: WeightModule) -> ParabolicDatum | None:
    """Parabolic a module is induced from, looking through duals and twists."""
    current: object = module
    while isinstance(current, (DualModule, TwistModule)):
        current = current.module
    if isinstance(current, InducedModule):
        return current.pd
    return None


def _candidate_support(module: WeightModule, pd: ParabolicDatum) -> list[Weight] | None:
    """Weights outside which the index provably vanishes, or None when nothing is known.

    Highest weight modules with infinitesimal character over l = h have index
    supported on W(lambda + rho). Modules whose character is constant along a
    root of u have index zero.
    """
    shape = module.shape
    if shape == CharacterShape.HIGHEST_WEIGHT and module.has_infinitesimal_character and pd.is_borel:
        top = module.highest_weight
        if top is None:
            return None
        rho = pd.rd.rho
        return pd.rd.sorted_weights({w + rho for _, w in dot_orbit(pd.rd, top)})
    if pd.dim_u == 0:
        return None
    if shape == CharacterShape.CUSPIDAL:
        algebra = module.algebra
        if any(algebra.e(beta) in module.acting for beta in pd.nilradical_roots):
            return []
        return None
    if shape == CharacterShape.INDUCED_FROM_CUSPIDAL:
        inducing = _inducing_parabolic(module)
        if inducing is not None and set(inducing.levi_roots) & set(pd.nilradical_roots):
            return []
        return None
    if shape == CharacterShape.UNKNOWN and module.is_g_module:
        window = window_weights(pd.rd, module.support_representative, settings.certification_halo)
        if cuspidality_report(module, window).is_bijective:
            return []
    return None


def _certify(character: VirtualCharacter, candidates: list[Weight], pd: ParabolicDatum, module: WeightModule) -> None:
    """Attach ``candidates`` as support when the evaluator vanishes on the surrounding halo."""
    centers = candidates or [module.support_representative]
    allowed = set(candidates)
    for weight in _halo(pd, centers):
        if weight not in allowed and character(weight):
            logger.warning(
                "support_certification_failed",
                module=str(module.descriptor),
                parabolic=str(pd),
                weight=str(weight),
            )
            return
    character.certify(candidates)
    logger.debug("support_certified", module=str(module.descriptor), size=len(candidates))


# ============================================================================
# Indices
# ============================================================================

def spin_index(module: WeightModule, pd: ParabolicDatum) -> VirtualCharacter:
    """I(M) = M (x) S^+ - M (x) S^-, evaluated pointwise from block dimensions.

    Example:
        >>> from weightdirac.core.modules import verma
        >>> from weightdirac.core.rootdata import build_root_system
        >>> rd = build_root_system("A1")
        >>> index = spin_index(verma(rd, Weight.of(0)), parabolic(rd, ()))
        >>> index(Weight.of(1)), index(Weight.of(-1)), sorted(map(str, index.certified_support))
        (-1, 0, ['[1]'])
    """
    basis = spin_realization(pd).basis

    def evaluate(weight: Weight) -> int:
        total = 0
        for element in basis:
            dim = module.dim(weight - element.weight)
            if dim:
                total += -dim if element.parity else dim
        return total

    character = VirtualCharacter(evaluate, None, Provenance.SPIN_INDEX, f"I({module.descriptor})")
    candidates = _candidate_support(module, pd)
    if candidates is not None:
        _certify(character, candidates, pd, module)
    return character


def dirac_index(module: WeightModule, pd: ParabolicDatum) -> VirtualCharacter:
    """H_D^+ - H_D^- as a virtual character.

    Raises:
        InfinitesimalCharacterError: If the module has no infinitesimal character
    """
    if not module.has_infinitesimal_character:
        raise InfinitesimalCharacterError(
            "the Dirac index agrees with the spin index only for modules with infinitesimal character",
            module=module.descriptor,
        )

    def evaluate(weight: Weight) -> int:
        return dirac_cohomology(module, pd, weight).index

    character = VirtualCharacter(evaluate, None, Provenance.DIRAC_INDEX, f"H_D({module.descriptor})")
    candidates = _candidate_support(module, pd)
    if candidates is not None:
        _certify(character, candidates, pd, module)
    return character


def pair_virtual(left: VirtualCharacter, right: VirtualCharacter) -> int:
    """[A, B] = sum_lambda A(lambda) B(lambda) over a certified support.

    Raises:
        SupportNotCertifiedError: If neither argument has a certified support
    """
    if left.certified_support is not None and right.certified_support is not None:
        support = left.certified_support & right.certified_support
    elif left.certified_support is not None:
        support = left.certified_support
    elif right.certified_support is not None:
        support = right.certified_support
    else:
        raise SupportNotCertifiedError(
            "neither virtual character has a certified finite support",
            left=left.label,
            right=right.label,
        )
    return sum(left(w) * right(w) for w in support)


def levi_index(character: VirtualCharacter, pd: ParabolicDatum) -> VirtualCharacter:
    """I_{l,h} applied to a virtual character: the (l, h) spin factor on the positive Levi roots."""
    roots = pd.levi_roots
    rho_lbar = Weight.zero(pd.rd.rank)
    for beta in roots:
        rho_lbar = rho_lbar - beta * Fraction(1, 2)
    terms: list[tuple[int, Weight]] = []
    for k in range(len(roots) + 1):
        for subset in combinations(roots, k):
            weight = rho_lbar
            for beta in subset:
                weight = weight + beta
            terms.append((-1 if k % 2 else 1, weight))

    def evaluate(weight: Weight) -> int:
        return sum(sign * character(weight - spin_weight) for sign, spin_weight in terms)

    return VirtualCharacter(evaluate, None, character.provenance, f"I_l({character.label})")


# ============================================================================
# Identity checks
# ============================================================================

def _compare(
    check: str,
    description: str,
    window: Sequence[Weight],
    left: Callable[[Weight], int],
    right: Callable[[Weight], int],
) -> IdentityCheck:
    mismatches: list[Mismatch] = []
    for weight in window:
        a, b = left(weight), right(weight)
        if a != b:
            mismatches.append(Mismatch(weight=weight.as_strings(), left=a, right=b))
            if len(mismatches) >= _MISMATCH_LIMIT:
                break
    status = CheckStatus.FAILED if mismatches else CheckStatus.PASSED
    return IdentityCheck(check=check, description=description, status=status, mismatches=mismatches)


def _skipped(check: str, description: str, note: str) -> IdentityCheck:
    return IdentityCheck(check=check, description=description, status=CheckStatus.SKIPPED, note=note)


def _euler(module: WeightModule, pd: ParabolicDatum, direction: Direction, shift: Weight) -> Callable[[Weight], int]:
    def evaluate(weight: Weight) -> int:
        dims = lie_cohomology(module, pd, weight - shift, direction).homology_dims()
        return sum(-d if p % 2 else d for p, d in enumerate(dims))

    return evaluate


def _induced_comparison(module: WeightModule, pd: ParabolicDatum) -> tuple[WeightModule, WeightModule] | None:
    """(M_p(V), V) for the induced-module check, when the module determines a V."""
    if isinstance(module, InducedModule) and module.pd == pd:
        return module, module.inducing
    top = module.highest_weight
    if top is None:
        return None
    if any(pd.rd.coroot_pairing(top, beta) != 0 for beta in pd.levi_roots):
        return None
    inducing = character_module(module.algebra, top, pd.levi_roots)
    return induce_parabolic(pd, inducing), inducing


def _cuspidal_along_levi(module: WeightModule, pd: ParabolicDatum) -> bool:
    if pd.is_borel:
        return False
    return module.shape in (CharacterShape.CUSPIDAL, CharacterShape.INDUCED_FROM_CUSPIDAL)


def verify_index_identities(module: WeightModule, pd: ParabolicDatum, window: Sequence[Weight]) -> IndexIdentityReport:
    """Check the index identities pointwise on ``window``.

    (a) I(M) against the Euler characteristic of H(u-bar, M) shifted by rho(u-bar)
    (b) I(M) against epsilon times that of H(u, M) shifted by rho(u)
    (c) Dirac index against spin index (infinitesimal character, locally l-finite)
    (d) I_{g,h}(M) against I_{l,h}(I_{g,l}(M))
    (e) I(M_p(V)) against epsilon ch V shifted by rho(u)
    (f) I(M^v) against I(M)
    """
    eps = epsilon(pd)
    index = spin_index(module, pd)
    checks = [
        _compare(
            "a",
            "spin index = sum (-1)^i dim H^i(u-bar, M) (x) C_rho(u-bar)",
            window,
            index,
            _euler(module, pd, Direction.UBAR_COHOMOLOGY, pd.rho_ubar),
        )
    ]
    u_side = _euler(module, pd, Direction.U_COHOMOLOGY, pd.rho_u)
    checks.append(
        _compare(
            "b",
            "spin index = epsilon sum (-1)^i dim H^i(u, M) (x) C_rho(u)",
            window,
            index,
            lambda w: eps * u_side(w),
        )
    )

    description_c = "Dirac index = spin index"
    if not module.has_infinitesimal_character:
        checks.append(_skipped("c", description_c, "module has no infinitesimal character"))
    elif _cuspidal_along_levi(module, pd):
        checks.append(_skipped("c", description_c, "a Levi root vector acts bijectively, so M is not locally l-finite"))
    else:
        checks.append(_compare("c", description_c, window, dirac_index(module, pd), index))

    borel = parabolic(pd.rd, ())
    checks.append(
        _compare(
            "d",
            "I_{g,h}(M) = I_{l,h}(I_{g,l}(M))",
            window,
            spin_index(module, borel),
            levi_index(index, pd),
        )
    )

    description_e = "I(M_p(V)) = epsilon ch V (x) C_rho(u)"
    pair = _induced_comparison(module, pd)
    if pair is None:
        checks.append(_skipped("e", description_e, "module is not induced from this parabolic"))
    else:
        induced, inducing = pair
        induced_index = index if induced is module else spin_index(induced, pd)
        checks.append(
            _compare(
                "e",
                description_e,
                window,
                induced_index,
                lambda w: eps * inducing.dim(w - pd.rho_u),
            )
        )

    checks.append(_compare("f", "I(M^v) = I(M)", window, spin_index(dual(module), pd), index))

    report = IndexIdentityReport(
        module=str(module.descriptor),
        parabolic=str(pd),
        window_size=len(window),
        epsilon=eps,
        checks=checks,
    )
    logger.info(
        "index_identities_checked",
        module=report.module,
        parabolic=report.parabolic,
        failed=[c.check for c in checks if c.status == CheckStatus.FAILED],
    )
    return report
