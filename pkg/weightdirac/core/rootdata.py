"""Root systems, Weyl groups, weights and parabolic data for A1, A1xA1, A2 and B2."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from weightdirac.core.errors import UnknownRootSystemError
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)

# Cartan matrices with A[i][j] = <alpha_i, alpha_j^vee>, so alpha_i is row i in
# fundamental-weight coordinates. B2 lists the long simple root first.
_CARTAN_TABLES: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
}

# Half squared lengths (alpha_i, alpha_i) / 2 with long roots of length 2.
_SYMMETRIZERS: dict[str, tuple[Fraction, ...]] = {
    "A1": (Fraction(1),),
    "A1xA1": (Fraction(1), Fraction(1)),
    "A2": (Fraction(1), Fraction(1)),
    "B2": (Fraction(1), Fraction(1, 2)),
}

_LABEL_ALIASES = {
    "A1": "A1",
    "A1XA1": "A1xA1",
    "A1×A1": "A1xA1",
    "A2": "A2",
    "B2": "B2",
    "C2": "B2",
}


@dataclass(frozen=True, order=True)
class Weight:
    """Element of h* in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *values: Fraction | int | str) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, factor: Fraction | int) -> "Weight":
        return Weight(tuple(a * factor for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def as_strings(self) -> list[str]:
        return [str(a) for a in self.coords]

    def __str__(self) -> str:
        return "[" + ", ".join(self.as_strings()) + "]"


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element as a reduced word s_{i1} ... s_{ik} in simple reflections."""

    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)


class RootDatum:
    """Root system data of a fixed rank <= 2 type.

    Positive roots are ordered by height and then by simple-root coordinates;
    this order is the one used for PBW monomials and for wedge monomials.
    """

    def __init__(self, label: str):
        if label not in _CARTAN_TABLES:
            raise UnknownRootSystemError(f"Unknown root system type: {label}", label=label)
        self.label = label
        self.cartan = _CARTAN_TABLES[label]
        self.symmetrizer = _SYMMETRIZERS[label]
        self.rank = len(self.cartan)
        self.simple_roots = [Weight(tuple(Fraction(a) for a in row)) for row in self.cartan]
        self._inverse_cartan = _invert(self.cartan)
        self.rho = Weight((Fraction(1),) * self.rank)
        self.positive_roots = self._generate_positive_roots()
        self.roots = self.positive_roots + [-beta for beta in self.positive_roots]
        self.weyl_group = self._generate_weyl_group()

        logger.debug(
            "root_system_built",
            label=label,
            positive_roots=len(self.positive_roots),
            weyl_order=len(self.weyl_group),
        )

    def __repr__(self) -> str:
        return f"RootDatum({self.label!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootDatum) and other.label == self.label

    def __hash__(self) -> int:
        return hash(self.label)

    # Coordinates and forms

    def root_coords(self, weight: Weight) -> tuple[Fraction, ...]:
        """Coordinates k with weight = sum k_i alpha_i."""
        return tuple(
            sum((weight.coords[j] * self._inverse_cartan[j][i] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def from_root_coords(self, coords: Sequence[Fraction | int]) -> Weight:
        total = Weight.zero(self.rank)
        for k, alpha in zip(coords, self.simple_roots):
            total = total + alpha * Fraction(k)
        return total

    def inner(self, left: Weight, right: Weight) -> Fraction:
        """Invariant form on h*, normalized so that long roots have squared length 2."""
        x = self.root_coords(left)
        y = self.root_coords(right)
        return sum(
            (x[i] * y[j] * self.cartan[i][j] * self.symmetrizer[j]
             for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def coroot_pairing(self, weight: Weight, root: Weight) -> Fraction:
        """<weight, root^vee> = 2 (weight, root) / (root, root)."""
        return 2 * self.inner(weight, root) / self.inner(root, root)

    def root_norm(self, root: Weight) -> Fraction:
        return self.inner(root, root)

    def in_root_lattice(self, weight: Weight) -> bool:
        return all(k.denominator == 1 for k in self.root_coords(weight))

    def height(self, weight: Weight) -> Fraction:
        return sum(self.root_coords(weight), Fraction(0))

    def is_below(self, mu: Weight, lam: Weight) -> bool:
        """True when lam - mu lies in the positive cone Q+ of the root lattice."""
        diff = self.root_coords(lam - mu)
        return all(k.denominator == 1 and k >= 0 for k in diff)

    def is_root(self, weight: Weight) -> bool:
        return weight in self._root_set

    def is_positive_root(self, weight: Weight) -> bool:
        return weight in self._positive_set

    def sort_key(self, weight: Weight) -> tuple[Fraction, ...]:
        return self.root_coords(weight)

    def sorted_weights(self, weights: Iterable[Weight]) -> list[Weight]:
        return sorted(set(weights), key=self.sort_key)

    # Weyl group

    def reflect(self, index: int, weight: Weight) -> Weight:
        return weight - self.simple_roots[index] * weight.coords[index]

    def weyl_act(self, element: WeylElement, weight: Weight) -> Weight:
        for index in reversed(element.word):
            weight = self.reflect(index, weight)
        return weight

    def dot_act(self, element: WeylElement, weight: Weight) -> Weight:
        return self.weyl_act(element, weight + self.rho) - self.rho

    def _generate_positive_roots(self) -> list[Weight]:
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new: list[Weight] = []
            for root in frontier:
                for i in range(self.rank):
                    image = self.reflect(i, root)
                    if image not in roots and all(k >= 0 for k in self.root_coords(image)):
                        roots.add(image)
                        new.append(image)
            frontier = new
        # height first, then alpha_1-heavy roots first so simple roots keep their index order
        ordered = sorted(
            roots, key=lambda r: (self.height(r), tuple(-k for k in self.root_coords(r)))
        )
        self._positive_set = frozenset(ordered)
        self._root_set = frozenset(ordered) | frozenset(-r for r in ordered)
        return ordered

    def _generate_weyl_group(self) -> list[WeylElement]:
        identity = WeylElement(())
        seen = {self.rho: identity}
        layer = [identity]
        elements = [identity]
        while layer:
            next_layer: list[WeylElement] = []
            for element in layer:
                image = self.weyl_act(element, self.rho)
                for i in range(self.rank):
                    candidate = self.reflect(i, image)
                    if candidate not in seen:
                        new_element = WeylElement((i,) + element.word)
                        seen[candidate] = new_element
                        next_layer.append(new_element)
            elements.extend(next_layer)
            layer = next_layer
        return elements


@dataclass(frozen=True)
class ParabolicDatum:
    """Parabolic p = l + u given by a subset I of the simple roots (0-based indices)."""

    rd: RootDatum
    levi: frozenset[int]
    levi_roots: tuple[Weight, ...] = field(init=False)
    nilradical_roots: tuple[Weight, ...] = field(init=False)
    rho_u: Weight = field(init=False)

    def __post_init__(self) -> None:
        levi_roots = []
        nil_roots = []
        for beta in self.rd.positive_roots:
            coords = self.rd.root_coords(beta)
            if all(coords[i] == 0 for i in range(self.rd.rank) if i not in self.levi):
                levi_roots.append(beta)
            else:
                nil_roots.append(beta)
        rho_u = Weight.zero(self.rd.rank)
        for beta in nil_roots:
            rho_u = rho_u + beta * Fraction(1, 2)
        object.__setattr__(self, "levi_roots", tuple(levi_roots))
        object.__setattr__(self, "nilradical_roots", tuple(nil_roots))
        object.__setattr__(self, "rho_u", rho_u)

    @property
    def rho_ubar(self) -> Weight:
        return -self.rho_u

    @property
    def opposite_roots(self) -> tuple[Weight, ...]:
        return tuple(-beta for beta in self.nilradical_roots)

    @property
    def dim_u(self) -> int:
        return len(self.nilradical_roots)

    @property
    def is_borel(self) -> bool:
        return not self.levi

    @property
    def levi_parabolic(self) -> "ParabolicDatum":
        """Borel of the Levi factor, viewed inside the same root datum."""
        return ParabolicDatum(self.rd, frozenset())

    def is_nilradical_closed(self) -> bool:
        roots = set(self.nilradical_roots)
        return all(
            (a + b) in roots
            for a in self.nilradical_roots
            for b in self.nilradical_roots
            if self.rd.is_root(a + b)
        )

    def __str__(self) -> str:
        return f"{self.rd.label}[I={sorted(i + 1 for i in self.levi)}]"


@lru_cache(maxsize=None)
def build_root_system(type_label: str) -> RootDatum:
    """Build the root datum for a type label.

    Args:
        type_label: One of ``A1``, ``A1xA1``, ``A2``, ``B2`` (``C2`` is accepted as ``B2``)

    Returns:
        Shared immutable RootDatum

    Raises:
        UnknownRootSystemError: If the label is not supported

    Example:
        >>> len(build_root_system("B2").weyl_group)
        8
    """
    normalized = _LABEL_ALIASES.get(type_label.strip().upper().replace("×", "X"))
    if normalized is None:
        raise UnknownRootSystemError(f"Unknown root system type: {type_label}", label=type_label)
    return RootDatum(normalized)


def parabolic(rd: RootDatum, levi: Iterable[int]) -> ParabolicDatum:
    """Parabolic datum for a subset of simple-root indices (0-based)."""
    indices = frozenset(levi)
    if not indices <= set(range(rd.rank)):
        raise ValueError(f"Levi subset {sorted(indices)} is not a subset of the simple roots")
    return ParabolicDatum(rd, indices)


def parabolic_height(pd: ParabolicDatum, nu: Weight) -> Fraction:
    """Sum of the simple-root coefficients of ``nu`` over simple roots outside the Levi."""
    if nu.rank != pd.rd.rank:
        raise ValueError(f"Weight {nu} does not lie in the span of the simple roots of {pd.rd.label}")
    coords = pd.rd.root_coords(nu)
    return sum((coords[i] for i in range(pd.rd.rank) if i not in pd.levi), Fraction(0))


def dot_orbit(rd: RootDatum, weight: Weight) -> list[tuple[WeylElement, Weight]]:
    """Orbit of ``weight`` under the rho-shifted action, duplicates collapsed.

    Elements are visited in order of length, so each orbit point keeps the shortest
    Weyl element reaching it.
    """
    seen: dict[Weight, WeylElement] = {}
    for element in rd.weyl_group:
        image = rd.dot_act(element, weight)
        if image not in seen:
            seen[image] = element
    return [(element, image) for image, element in seen.items()]


def window_weights(rd: RootDatum, base: Weight, radius: int) -> list[Weight]:
    """Weights base + sum k_i alpha_i with |k_i| <= radius, sorted by root coordinates."""
    if radius < 0:
        raise ValueError("window radius must be non-negative")
    steps = range(-radius, radius + 1)
    weights = [base + rd.from_root_coords(ks) for ks in product(steps, repeat=rd.rank)]
    return rd.sorted_weights(weights)


def _invert(matrix: tuple[tuple[int, ...], ...]) -> list[list[Fraction]]:
    """Inverse of a 1x1 or 2x2 integer matrix over the rationals."""
    n = len(matrix)
    if n == 1:
        return [[Fraction(1, matrix[0][0])]]
    (a, b), (c, d) = matrix
    det = Fraction(a * d - b * c)
    return [[d / det, -b / det], [-c / det, a / det]]
