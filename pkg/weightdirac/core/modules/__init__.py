"""Admissible weight modules behind a uniform block-matrix interface."""

from weightdirac.core.modules.base import (
    CharacterModule,
    CharacterShape,
    ModuleDescriptor,
    ModuleKind,
    WeightModule,
    block_action,
    character_module,
)
from weightdirac.core.modules.checks import (
    bracket_compatibility,
    character,
    cuspidality_report,
    is_root_vector_bijective,
    koszul_vanishing,
    module_degree,
    sl2_invariant_scalars,
)
from weightdirac.core.modules.dual import DualModule, dual
from weightdirac.core.modules.induced import InducedModule, induce_parabolic, verma
from weightdirac.core.modules.simple import SimpleHighestWeightModule, shapovalov_gram, simple_hw
from weightdirac.core.modules.sl2 import SL2MonomialModule, cuspidal_sl2, levi_cuspidal, sl2_monomial
from weightdirac.core.modules.twist import TwistModule, twist

__all__ = [
    "CharacterModule",
    "CharacterShape",
    "DualModule",
    "InducedModule",
    "ModuleDescriptor",
    "ModuleKind",
    "SL2MonomialModule",
    "SimpleHighestWeightModule",
    "TwistModule",
    "WeightModule",
    "block_action",
    "bracket_compatibility",
    "character",
    "character_module",
    "cuspidal_sl2",
    "cuspidality_report",
    "dual",
    "induce_parabolic",
    "is_root_vector_bijective",
    "koszul_vanishing",
    "levi_cuspidal",
    "module_degree",
    "shapovalov_gram",
    "simple_hw",
    "sl2_invariant_scalars",
    "sl2_monomial",
    "twist",
    "verma",
]

