"""Euler-Poincare pairings by reduction to Lie algebra cohomology, and their index-side check.

Only alternating sums are computed. A pairing with a parabolically induced first
argument collapses to u-cohomology of the second argument; simple highest weight
modules are resolved by Verma modules inside their dot orbit; cuspidal first
arguments are flipped through the restricted dual; whatever remains is the
pairing of spin indices, tagged as such.
"""

from collections.abc import Sequence
from fractions import Fraction

from weightdirac.core.characters import VirtualCharacter
from weightdirac.core.cohomology import Direction, lie_cohomology
from weightdirac.core.errors import (
    SupportNotCertifiedError,
    UnsupportedModuleError,
    VerificationMismatchError,
    WindowTooSmallError,
    WeightDiracError,
)
from weightdirac.core.index import levi_index, pair_virtual, spin_index
from weightdirac.core.modules import (
    CharacterModule,
    CharacterShape,
    DualModule,
    InducedModule,
    SimpleHighestWeightModule,
    WeightModule,
    cuspidality_report,
    dual,
    simple_hw,
    verma,
)
from weightdirac.core.rootdata import ParabolicDatum, RootDatum, Weight, dot_orbit, parabolic
from weightdirac.logging_config import get_logger
from weightdirac.schemas.ep import AuditEntry, EPMethod, EPResult
from weightdirac.schemas.reports import CheckStatus, Main2Report

logger = get_logger(__name__)

INDUCED_ANCHOR = "EP(M_p(V), N) = sum_i (-1)^i EP_l(V, H^i(u, N))"
SEMISIMPLE_ANCHOR = "EP_h(C_lambda, H) = dim H_lambda, semisimple h-modules have no higher Ext"
ADDITIVITY_ANCHOR = "EP is additive on exact sequences in the first argument"
FLIP_ANCHOR = "Ext^i(M, N) = Ext^i(N^v, M^v) for the restricted dual"
SELF_DUAL_ANCHOR = "simple highest weight modules are self-dual"
PAIRING_ANCHOR = "EP(M, N) = [I(M), I(N)] for modules with infinitesimal character"
TWIST_ANCHOR = "twisting functors preserve Ext between bijective modules"
LEVI_ANCHOR = "EP_l(V, H) = [I_l(V), I_l(H)] one rank down"


# ============================================================================
# Induced first argument
# ============================================================================

def _require_in_window(weights: Sequence[Weight], window: Sequence[Weight], what: str) -> None:
    inside = set(window)
    missing = [w for w in weights if w not in inside]
    if missing:
        raise WindowTooSmallError(
            f"{what} needs weights outside the window",
            weight=missing[0],
            missing=len(missing),
        )


def ep_induced(pd: ParabolicDatum, inducing: WeightModule, module: WeightModule, window: Sequence[Weight]) -> EPResult:
    """EP(M_p(V), N) as the alternating sum of EP_l(V, H^i(u, N)).

    For l = h and V = C_lambda the inner pairing is dim H^i(u, N)_lambda. For a
    proper Levi factor it is the index pairing over l, and the result is tagged
    theorem-based.

    Raises:
        UnsupportedModuleError: If V has no finite known support
        WindowTooSmallError: If a contributing weight lies outside the window
    """
    if pd.is_borel:
        if not isinstance(inducing, CharacterModule):
            raise UnsupportedModuleError("over h the inducing module must be a character", module=inducing.descriptor)
        weight = inducing.weight
        _require_in_window([weight], window, "the induced pairing")
        dims = lie_cohomology(module, pd, weight, Direction.U_COHOMOLOGY).homology_dims()
        value = sum(-d if i % 2 else d for i, d in enumerate(dims))
        audit = [
            AuditEntry(step="induced-collapse", anchor=INDUCED_ANCHOR, detail=f"H^*(u, N)_{weight} = {dims}"),
            AuditEntry(step="semisimple-inner", anchor=SEMISIMPLE_ANCHOR, detail=str(weight)),
        ]
        return EPResult(value=value, method=EPMethod.INDUCED_COLLAPSE, audit=audit)

    levi_side = _certified_levi_index(inducing, pd)
    if levi_side.certified_support is None:
        raise UnsupportedModuleError(
            "the Levi index of the inducing module has no certified support", module=inducing.descriptor
        )
    support = sorted(levi_side.certified_support, key=pd.rd.sort_key)
    _require_in_window(support, window, "the Levi index pairing")

    def euler(weight: Weight) -> int:
        return lie_cohomology(module, pd, weight, Direction.U_COHOMOLOGY).euler_characteristic()

    cohomology_side = levi_index(VirtualCharacter(euler, label="H(u, N)"), pd)
    value = pair_virtual(levi_side, cohomology_side)
    audit = [
        AuditEntry(step="induced-collapse", anchor=INDUCED_ANCHOR, detail=f"Levi of {pd}"),
        AuditEntry(step="levi-index-pairing", anchor=LEVI_ANCHOR, detail=f"{len(support)} contributing weights"),
    ]
    return EPResult(value=value, method=EPMethod.THEOREM_BASED, audit=audit)


def _character_of(module: WeightModule) -> VirtualCharacter:
    return VirtualCharacter(module.dim, label=f"ch {module.descriptor}")


def _certified_levi_index(inducing: WeightModule, pd: ParabolicDatum) -> VirtualCharacter:
    """I_l(V) with a certified support: one point set for characters, empty for cuspidal V."""
    character = levi_index(_character_of(inducing), pd)
    if isinstance(inducing, CharacterModule):
        shifted = inducing.weight
        for beta in pd.levi_roots:
            shifted = shifted - beta * Fraction(1, 2)
        candidates = {shifted}
        for beta in pd.levi_roots:
            candidates |= {w + beta for w in candidates}
        return character.certify(w for w in candidates if character(w))
    if inducing.shape == CharacterShape.CUSPIDAL and pd.levi_roots:
        return character.certify(())
    return character


# ============================================================================
# Verma decomposition of simple highest weight modules
# ============================================================================

def verma_coefficients(rd: RootDatum, weight: Weight, window: Sequence[Weight]) -> list[tuple[Weight, int]]:
    """Integers c_mu with ch L(lambda) = sum c_mu ch M(mu), mu in the dot orbit below lambda.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system, window_weights
        >>> rd = build_root_system("A1")
        >>> [(str(mu), c) for mu, c in verma_coefficients(rd, Weight.of(0), window_weights(rd, Weight.of(0), 4))]
        [('[0]', 1), ('[-2]', -1)]

    Raises:
        WindowTooSmallError: If a candidate lies outside the window
        VerificationMismatchError: If the solved coefficients fail to reproduce ch L on the window
    """
    candidates = sorted(
        {mu for _, mu in dot_orbit(rd, weight) if rd.is_below(mu, weight)},
        key=lambda mu: (rd.height(weight - mu), rd.sort_key(mu)),
    )
    _require_in_window(candidates, window, "the Verma decomposition")
    simple = simple_hw(rd, weight)
    vermas = {mu: verma(rd, mu) for mu in candidates}
    coefficients: dict[Weight, int] = {}
    for mu in candidates:
        remainder = simple.dim(mu) - sum(c * vermas[nu].dim(mu) for nu, c in coefficients.items())
        coefficients[mu] = remainder
    for w in window:
        expected = simple.dim(w)
        actual = sum(c * vermas[mu].dim(w) for mu, c in coefficients.items())
        if expected != actual:
            raise VerificationMismatchError(
                "Verma coefficients do not reproduce the simple character", weight=w, expected=expected, actual=actual
            )
    result = [(mu, c) for mu, c in coefficients.items() if c]
    logger.debug("verma_coefficients", highest_weight=str(weight), terms=len(result))
    return result


# ============================================================================
# Dispatch
# ============================================================================

def _is_cuspidal_type(module: WeightModule, window: Sequence[Weight]) -> bool:
    """Simple and not of highest weight type: cuspidal, or induced from a cuspidal Levi module."""
    if module.shape in (CharacterShape.CUSPIDAL, CharacterShape.INDUCED_FROM_CUSPIDAL):
        return True
    if module.shape == CharacterShape.UNKNOWN and module.is_g_module and window:
        return cuspidality_report(module, window).is_bijective
    return False


def _flip_partner(module: WeightModule) -> tuple[WeightModule, list[AuditEntry]] | None:
    """A module isomorphic to the restricted dual, when one with a direct dispatch is known."""
    if isinstance(module, DualModule):
        return module.module, []
    if isinstance(module, SimpleHighestWeightModule):
        return module, [AuditEntry(step="self-dual", anchor=SELF_DUAL_ANCHOR, detail=str(module.descriptor))]
    return None


def _direct(first: WeightModule, second: WeightModule, window: Sequence[Weight]) -> EPResult | None:
    if isinstance(first, InducedModule):
        return ep_induced(first.pd, first.inducing, second, window)
    if isinstance(first, SimpleHighestWeightModule):
        borel = parabolic(first.rd, ())
        value = 0
        audit = [AuditEntry(step="verma-decomposition", anchor=ADDITIVITY_ANCHOR, detail=str(first.descriptor))]
        theorem_based = False
        for mu, c in verma_coefficients(first.rd, first.weight, window):
            term = ep_induced(borel, verma(first.rd, mu).inducing, second, window)
            theorem_based |= term.method == EPMethod.THEOREM_BASED
            value += c * term.value
            audit.append(AuditEntry(step="verma-term", anchor=INDUCED_ANCHOR, detail=f"{c} x EP(M({mu}), N) = {c} x {term.value}"))
        method = EPMethod.THEOREM_BASED if theorem_based else EPMethod.VERMA_DECOMPOSITION
        return EPResult(value=value, method=method, audit=audit)
    return None


def _flipped(first: WeightModule, second: WeightModule, window: Sequence[Weight]) -> EPResult | None:
    partner = _flip_partner(second)
    if partner is None:
        return None
    new_first, audit = partner
    inner = _direct(new_first, dual(first), window)
    if inner is None:
        return None
    audit = [AuditEntry(step="dual-flip", anchor=FLIP_ANCHOR, detail=f"{second.descriptor} <-> {first.descriptor}")] + audit
    method = EPMethod.THEOREM_BASED if inner.method == EPMethod.THEOREM_BASED else EPMethod.DUAL_FLIP
    return EPResult(value=inner.value, method=method, audit=audit + inner.audit)


def _theorem_based(first: WeightModule, second: WeightModule, window: Sequence[Weight]) -> EPResult:
    borel = parabolic(first.rd, ())
    value = pair_virtual(spin_index(first, borel), spin_index(second, borel))
    audit = [AuditEntry(step="index-pairing", anchor=PAIRING_ANCHOR, detail=f"[I, I] = {value}")]
    if _is_cuspidal_type(first, window) and _is_cuspidal_type(second, window):
        audit.insert(0, AuditEntry(step="twisting", anchor=TWIST_ANCHOR, detail="both arguments are cuspidal"))
    return EPResult(value=value, method=EPMethod.THEOREM_BASED, audit=audit)


def ep_pair(
    first: WeightModule, second: WeightModule, window: Sequence[Weight], check_flip: bool = False
) -> EPResult:
    """Euler-Poincare pairing sum_i (-1)^i dim Ext^i(first, second).

    Args:
        first: M
        second: N
        window: Weights the computation may use; contributing weights outside it are an error
        check_flip: Also compute the dual-flipped value when available and record the comparison

    Returns:
        Value with method tag and audit trail

    Raises:
        UnsupportedModuleError: If an argument is not a g-module
        SupportNotCertifiedError: If the index pairing is needed and neither index is certified
    """
    for module in (first, second):
        if not module.is_g_module:
            raise UnsupportedModuleError(f"{module.descriptor} is not a g-module", module=module.descriptor)
    result = _direct(first, second, window)
    path = "direct"
    if result is None and (_is_cuspidal_type(first, window) or isinstance(first, DualModule)):
        result = _flipped(first, second, window)
        path = "flip"
    if result is None:
        result = _theorem_based(first, second, window)
        path = "index"
    elif check_flip and path == "direct":
        other = _flipped(first, second, window)
        if other is not None:
            agree = other.value == result.value
            result.audit.append(
                AuditEntry(
                    step="dual-flip-consistency",
                    anchor=FLIP_ANCHOR,
                    detail=f"flipped value {other.value} {'agrees' if agree else 'DIFFERS'}",
                )
            )
            if not agree:
                logger.warning("dual_flip_disagrees", first=str(first.descriptor), second=str(second.descriptor))
    logger.info(
        "ep_dispatch",
        first=str(first.descriptor),
        second=str(second.descriptor),
        path=path,
        method=result.method.value,
        value=result.value,
    )
    return result


# ============================================================================
# Pairing against the index side
# ============================================================================

def _index_vanishing(modules: Sequence[WeightModule], window: Sequence[Weight]) -> CheckStatus:
    cuspidal = [m for m in modules if _is_cuspidal_type(m, window)]
    if not cuspidal:
        return CheckStatus.SKIPPED
    for module in cuspidal:
        index = spin_index(module, parabolic(module.rd, ()))
        if index.nonzero_on(window):
            return CheckStatus.FAILED
    return CheckStatus.PASSED


def _corollary(first: WeightModule, second: WeightModule, window: Sequence[Weight], ep: int) -> CheckStatus:
    if not _is_cuspidal_type(first, window):
        return CheckStatus.SKIPPED
    try:
        reverse = ep_pair(second, first, window).value
    except WeightDiracError:
        return CheckStatus.SKIPPED
    return CheckStatus.PASSED if ep == 0 and reverse == 0 else CheckStatus.FAILED


def verify_main2(
    first: WeightModule,
    second: WeightModule,
    window: Sequence[Weight],
    names: tuple[str, str] | None = None,
) -> Main2Report:
    """EP(M, N) against [I(M), I(N)] with the corollary and index-vanishing checks."""
    ep = ep_pair(first, second, window, check_flip=True)
    borel = parabolic(first.rd, ())
    try:
        index_pair: int | None = pair_virtual(spin_index(first, borel), spin_index(second, borel))
    except SupportNotCertifiedError:
        index_pair = None
    by_construction = ep.method == EPMethod.THEOREM_BASED
    equal = None if by_construction or index_pair is None else ep.value == index_pair
    first_name, second_name = names or (str(first.descriptor), str(second.descriptor))
    report = Main2Report(
        first=first_name,
        second=second_name,
        ep=ep.value,
        method=ep.method,
        index_pair=index_pair,
        equal=equal,
        consistent_by_construction=by_construction,
        corollary=_corollary(first, second, window, ep.value),
        index_vanishing=_index_vanishing([first, second], window),
        audit=ep.audit,
    )
    if not report.passed:
        logger.warning("main2_mismatch", first=first_name, second=second_name, ep=ep.value, index_pair=index_pair)
    return report
