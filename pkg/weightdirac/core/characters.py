"""Virtual h-characters: integer-valued functions on weights."""

import threading
from collections.abc import Callable, Iterable, Mapping
from enum import Enum

from weightdirac.core.rootdata import Weight


class Provenance(str, Enum):
    """Where a virtual character came from."""

    SPIN_INDEX = "spin-index"
    DIRAC_INDEX = "dirac-index"
    EXPLICIT = "explicit"


class VirtualCharacter:
    """Lazily evaluated virtual character with an optional certified support.

    When ``certified_support`` is set, the evaluator is known to vanish outside it,
    so sums over all weights reduce to finite sums.
    """

    def __init__(
        self,
        evaluator: Callable[[Weight], int],
        certified_support: frozenset[Weight] | None = None,
        provenance: Provenance = Provenance.EXPLICIT,
        label: str = "",
    ):
        self._evaluator = evaluator
        self.certified_support = certified_support
        self.provenance = provenance
        self.label = label
        self._values: dict[Weight, int] = {}
        self._lock = threading.Lock()

    @classmethod
    def explicit(
        cls,
        values: Mapping[Weight, int],
        provenance: Provenance = Provenance.EXPLICIT,
        label: str = "",
    ) -> "VirtualCharacter":
        table = {w: int(v) for w, v in values.items() if v}
        return cls(lambda w: table.get(w, 0), frozenset(table), provenance, label)

    @classmethod
    def zero(cls, label: str = "0") -> "VirtualCharacter":
        return cls.explicit({}, label=label)

    @property
    def is_certified(self) -> bool:
        return self.certified_support is not None

    def __call__(self, weight: Weight) -> int:
        with self._lock:
            if weight in self._values:
                return self._values[weight]
        value = int(self._evaluator(weight))
        with self._lock:
            self._values[weight] = value
        return value

    def certify(self, support: Iterable[Weight]) -> "VirtualCharacter":
        """Attach a certified support; values are shared with this character."""
        self.certified_support = frozenset(support)
        return self

    def values_on(self, weights: Iterable[Weight]) -> dict[Weight, int]:
        return {w: self(w) for w in weights}

    def nonzero_on(self, weights: Iterable[Weight]) -> dict[Weight, int]:
        return {w: v for w, v in self.values_on(weights).items() if v}

    def shifted(self, nu: Weight) -> "VirtualCharacter":
        """Character of the tensor product with C_nu."""
        support = None if self.certified_support is None else frozenset(w + nu for w in self.certified_support)
        return VirtualCharacter(lambda w: self(w - nu), support, self.provenance, f"{self.label}(x)C{nu}")

    def scaled(self, factor: int) -> "VirtualCharacter":
        support = self.certified_support if factor else frozenset()
        return VirtualCharacter(lambda w: factor * self(w), support, self.provenance, self.label)

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        support = None
        if self.certified_support is not None and other.certified_support is not None:
            support = self.certified_support | other.certified_support
        return VirtualCharacter(lambda w: self(w) + other(w), support, Provenance.EXPLICIT)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + other.scaled(-1)

    def __repr__(self) -> str:
        support = "uncertified" if self.certified_support is None else f"{len(self.certified_support)} weights"
        return f"VirtualCharacter({self.label!r}, {self.provenance.value}, {support})"
