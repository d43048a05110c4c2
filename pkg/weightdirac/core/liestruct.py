"""Chevalley basis, brackets, PBW normal forms, the anti-involution tau and twisting.

Basis vectors are indexed f-block first (positive-root order), then the simple
coroots h_i, then the e-block. Structure constants come from a concrete matrix
realization (sl2, sl2+sl2, sl3, sp4); non-simple root vectors are fixed by the
convention

    e_{beta + alpha_i} = [e_{alpha_i}, e_beta]   (smallest admissible i)

and each f_beta is the transpose of e_beta rescaled so that [e_beta, f_beta] is
the coroot h_beta. Jacobi then holds because brackets are matrix commutators.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy.polys.matrices import DomainMatrix

from weightdirac.core import linalg
from weightdirac.core.rootdata import RootDatum, Weight
from weightdirac.logging_config import get_logger

logger = get_logger(__name__)

MatrixRows = list[list[Fraction]]


def _unit(size: int, i: int, j: int) -> MatrixRows:
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[i][j] = Fraction(1)
    return rows


def _mat_add(*terms: tuple[Fraction | int, MatrixRows]) -> MatrixRows:
    size = len(terms[0][1])
    out = [[Fraction(0)] * size for _ in range(size)]
    for factor, m in terms:
        for i in range(size):
            for j in range(size):
                out[i][j] += factor * m[i][j]
    return out


def _mat_mul(a: MatrixRows, b: MatrixRows) -> MatrixRows:
    size = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(size)), Fraction(0)) for j in range(size)]
        for i in range(size)
    ]


def _commutator(a: MatrixRows, b: MatrixRows) -> MatrixRows:
    return _mat_add((1, _mat_mul(a, b)), (-1, _mat_mul(b, a)))


def _transpose(a: MatrixRows) -> MatrixRows:
    return [list(row) for row in zip(*a)]


def _realization(label: str) -> tuple[list[MatrixRows], list[MatrixRows]]:
    """Simple root vectors e_i and simple coroots h_i as matrices."""
    if label == "A1":
        e = [_unit(2, 0, 1)]
        h = [_mat_add((1, _unit(2, 0, 0)), (-1, _unit(2, 1, 1)))]
        return e, h
    if label == "A1xA1":
        e = [_unit(4, 0, 1), _unit(4, 2, 3)]
        h = [
            _mat_add((1, _unit(4, 0, 0)), (-1, _unit(4, 1, 1))),
            _mat_add((1, _unit(4, 2, 2)), (-1, _unit(4, 3, 3))),
        ]
        return e, h
    if label == "A2":
        e = [_unit(3, 0, 1), _unit(3, 1, 2)]
        h = [
            _mat_add((1, _unit(3, 0, 0)), (-1, _unit(3, 1, 1))),
            _mat_add((1, _unit(3, 1, 1)), (-1, _unit(3, 2, 2))),
        ]
        return e, h
    if label == "B2":
        # sp4 with alpha_1 = 2 eps_2 (long) and alpha_2 = eps_1 - eps_2 (short)
        e = [_unit(4, 1, 3), _mat_add((1, _unit(4, 0, 1)), (-1, _unit(4, 3, 2)))]
        h = [
            _mat_add((1, _unit(4, 1, 1)), (-1, _unit(4, 3, 3))),
            _mat_add(
                (1, _unit(4, 0, 0)), (-1, _unit(4, 1, 1)), (-1, _unit(4, 2, 2)), (1, _unit(4, 3, 3))
            ),
        ]
        return e, h
    raise ValueError(f"no matrix realization for {label}")


@dataclass(frozen=True)
class LieElement:
    """Rational linear combination of Chevalley basis vectors."""

    algebra: "LieAlgebra"
    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, algebra: "LieAlgebra", coefficients: Mapping[int, Fraction | int]) -> "LieElement":
        terms = tuple(sorted((i, Fraction(c)) for i, c in coefficients.items() if c != 0))
        return cls(algebra, terms)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def _check(self, other: "LieElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("Lie elements belong to different root data")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        total = self.as_dict()
        for i, c in other.terms:
            total[i] = total.get(i, Fraction(0)) + c
        return LieElement.from_dict(self.algebra, total)

    def __neg__(self) -> "LieElement":
        return self * -1

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, factor: Fraction | int) -> "LieElement":
        return LieElement.from_dict(self.algebra, {i: c * factor for i, c in self.terms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def weight(self) -> Weight | None:
        """Common weight of the terms, or None for a zero or non-homogeneous element."""
        weights = {self.algebra.weights[i] for i, _ in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.algebra.names[i]}" for i, c in self.terms)


class LieAlgebra:
    """Chevalley basis of the semisimple Lie algebra of a root datum."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        n = len(rd.positive_roots)
        r = rd.rank
        self.num_positive = n
        self.dimension = 2 * n + r
        self.f_indices = list(range(n))
        self.h_indices = list(range(n, n + r))
        self.e_indices = list(range(n + r, 2 * n + r))
        self.weights: list[Weight] = (
            [-beta for beta in rd.positive_roots]
            + [Weight.zero(r)] * r
            + list(rd.positive_roots)
        )
        self.names = (
            [f"f{self._root_name(b)}" for b in rd.positive_roots]
            + [f"h{i + 1}" for i in range(r)]
            + [f"e{self._root_name(b)}" for b in rd.positive_roots]
        )
        self._root_index = {beta: k for k, beta in enumerate(rd.positive_roots)}
        self._matrices = self._build_matrices()
        self._structure = self._build_structure()
        logger.debug("chevalley_basis_built", label=rd.label, dimension=self.dimension)

    def _root_name(self, beta: Weight) -> str:
        coords = self.rd.root_coords(beta)
        return "[" + ",".join(str(k) for k in coords) + "]"

    # Basis lookups

    def e(self, root: Weight) -> int:
        """Basis index of the root vector of ``root`` (positive or negative)."""
        if root in self._root_index:
            return self.e_indices[self._root_index[root]]
        if -root in self._root_index:
            return self.f_indices[self._root_index[-root]]
        raise ValueError(f"{root} is not a root of {self.rd.label}")

    def f(self, root: Weight) -> int:
        return self.e(-root)

    def h(self, i: int) -> int:
        return self.h_indices[i]

    def kind(self, index: int) -> str:
        if index < self.num_positive:
            return "f"
        if index < self.num_positive + self.rd.rank:
            return "h"
        return "e"

    def positive_root_of(self, index: int) -> Weight:
        """Positive root beta for e_beta or f_beta."""
        kind = self.kind(index)
        if kind == "f":
            return self.rd.positive_roots[index]
        if kind == "e":
            return self.rd.positive_roots[index - self.num_positive - self.rd.rank]
        raise ValueError(f"{self.names[index]} is not a root vector")

    def element(self, index: int, coefficient: Fraction | int = 1) -> LieElement:
        return LieElement.from_dict(self, {index: coefficient})

    def zero(self) -> LieElement:
        return LieElement(self, ())

    def form_on_root_pair(self, root: Weight) -> Fraction:
        """(e_beta, f_beta) = 2 / (beta, beta) under the invariant form."""
        beta = root if root in self._root_index else -root
        return 2 / self.rd.root_norm(beta)

    # Construction

    def _coroot_coefficients(self, beta: Weight) -> list[Fraction]:
        """h_beta in the basis of simple coroots."""
        norm = self.rd.root_norm(beta)
        return [k * 2 * d / norm for k, d in zip(self.rd.root_coords(beta), self.rd.symmetrizer)]

    def _build_matrices(self) -> list[MatrixRows]:
        simple_e, simple_h = _realization(self.rd.label)
        e_mats: dict[Weight, MatrixRows] = {}
        for i, alpha in enumerate(self.rd.simple_roots):
            e_mats[alpha] = simple_e[i]
        for beta in self.rd.positive_roots:
            if beta in e_mats:
                continue
            for i, alpha in enumerate(self.rd.simple_roots):
                previous = beta - alpha
                if previous in e_mats:
                    e_mats[beta] = _commutator(simple_e[i], e_mats[previous])
                    break
        f_mats: dict[Weight, MatrixRows] = {}
        for beta in self.rd.positive_roots:
            candidate = _transpose(e_mats[beta])
            bracket = _commutator(e_mats[beta], candidate)
            target = _mat_add(
                *((c, simple_h[i]) for i, c in enumerate(self._coroot_coefficients(beta)))
            )
            ratio = _ratio(bracket, target)
            f_mats[beta] = _scale(candidate, 1 / ratio)
        return (
            [f_mats[b] for b in self.rd.positive_roots]
            + list(simple_h)
            + [e_mats[b] for b in self.rd.positive_roots]
        )

    def _build_structure(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        size = len(self._matrices[0])
        columns = linalg.from_entries(
            {
                (i * size + j, k): value
                for k, m in enumerate(self._matrices)
                for i in range(size)
                for j in range(size)
                if (value := m[i][j]) != 0
            },
            size * size,
            self.dimension,
        )
        structure: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(self.dimension):
            for b in range(a + 1, self.dimension):
                target = _commutator(self._matrices[a], self._matrices[b])
                coeffs = _solve_in_span(columns, target, size)
                if coeffs:
                    structure[(a, b)] = coeffs
                    structure[(b, a)] = {k: -c for k, c in coeffs.items()}
        return structure

    # Brackets

    def bracket_basis(self, a: int, b: int) -> dict[int, Fraction]:
        return self._structure.get((a, b), {})

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        """Bilinear antisymmetric bracket from the structure-constant table."""
        x._check(y)
        total: dict[int, Fraction] = {}
        for a, ca in x.terms:
            for b, cb in y.terms:
                for k, c in self.bracket_basis(a, b).items():
                    total[k] = total.get(k, Fraction(0)) + ca * cb * c
        return LieElement.from_dict(self, total)

    def structure_table(self) -> list[tuple[str, str, str]]:
        """Nonzero brackets of basis pairs, for display and documentation."""
        rows = []
        for (a, b), coeffs in sorted(self._structure.items()):
            if a < b:
                rows.append((self.names[a], self.names[b], str(LieElement.from_dict(self, coeffs))))
        return rows

    def tau_index(self, index: int) -> int:
        kind = self.kind(index)
        if kind == "h":
            return index
        beta = self.positive_root_of(index)
        return self.f(beta) if kind == "e" else self.e(beta)

    def tau(self, x: LieElement) -> LieElement:
        """Anti-involution swapping e_beta and f_beta and fixing h."""
        return LieElement.from_dict(self, {self.tau_index(i): c for i, c in x.terms})

    def ad_power(self, x: LieElement, u: LieElement, k: int) -> LieElement:
        for _ in range(k):
            u = self.bracket(x, u)
        return u


def _scale(m: MatrixRows, factor: Fraction | int) -> MatrixRows:
    return [[factor * v for v in row] for row in m]


def _ratio(left: MatrixRows, right: MatrixRows) -> Fraction:
    for row_l, row_r in zip(left, right):
        for a, b in zip(row_l, row_r):
            if b != 0:
                return a / b
    raise ValueError("zero target in coroot normalization")


def _solve_in_span(columns: DomainMatrix, target: MatrixRows, size: int) -> dict[int, Fraction]:
    """Coefficients of a matrix in the (linearly independent) realized basis."""
    rhs = linalg.column([target[i][j] for i in range(size) for j in range(size)])
    augmented = linalg.hstack([columns, rhs], size * size)
    reduced, pivots = linalg.rref(augmented)
    ncols = columns.shape[1]
    if ncols in pivots:
        raise ValueError("bracket left the span of the Chevalley basis")
    values = linalg.entries(reduced)
    return {
        pivot: values[(row, ncols)]
        for row, pivot in enumerate(pivots)
        if values.get((row, ncols))
    }


@lru_cache(maxsize=None)
def chevalley_basis(rd: RootDatum) -> LieAlgebra:
    """Shared Chevalley basis for a root datum.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system
        >>> g = chevalley_basis(build_root_system("A1"))
        >>> str(g.bracket(g.element(g.e_indices[0]), g.element(g.f_indices[0])))
        '1*h1'
    """
    return LieAlgebra(rd)


Word = tuple[int, ...]


class UEAElement:
    """Element of U(g) as a map from normal-ordered basis words to coefficients."""

    __slots__ = ("pbw", "terms")

    def __init__(self, pbw: "PBWBasis", terms: Mapping[Word, Fraction]):
        self.pbw = pbw
        self.terms = {w: c for w, c in terms.items() if c != 0}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UEAElement) and other.pbw is self.pbw and other.terms == self.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "UEAElement") -> "UEAElement":
        total = dict(self.terms)
        for w, c in other.terms.items():
            total[w] = total.get(w, Fraction(0)) + c
        return UEAElement(self.pbw, total)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + other.scaled(-1)

    def scaled(self, factor: Fraction | int) -> "UEAElement":
        return UEAElement(self.pbw, {w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other: "UEAElement") -> "UEAElement":
        total: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w, c in self.pbw.normal_form_word(w1 + w2).items():
                    total[w] = total.get(w, Fraction(0)) + c1 * c2 * c
        return UEAElement(self.pbw, total)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.pbw.algebra.names
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "*".join(names[i] for i in w) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)


class PBWBasis:
    """PBW straightening for a fixed total order of the basis.

    The default order is f-block (positive-root order), Cartan, e-block. Induced
    modules pass an order putting the nilradical f's before the Levi f's.
    Normal forms of words are memoized; the cache only grows with identical values.
    """

    def __init__(self, algebra: LieAlgebra, order: Sequence[int] | None = None):
        self.algebra = algebra
        self.order = tuple(order) if order is not None else tuple(range(algebra.dimension))
        if sorted(self.order) != list(range(algebra.dimension)):
            raise ValueError("PBW order must be a permutation of the basis")
        self.position = {index: pos for pos, index in enumerate(self.order)}
        self._cache: dict[Word, dict[Word, Fraction]] = {}

    def is_normal(self, word: Word) -> bool:
        return all(self.position[a] <= self.position[b] for a, b in zip(word, word[1:]))

    def normal_form_word(self, word: Word) -> dict[Word, Fraction]:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        descent = next(
            (p for p in range(len(word) - 1) if self.position[word[p]] > self.position[word[p + 1]]),
            None,
        )
        if descent is None:
            result = {word: Fraction(1)}
        else:
            a, b = word[descent], word[descent + 1]
            prefix, suffix = word[:descent], word[descent + 2:]
            result = dict(self.normal_form_word(prefix + (b, a) + suffix))
            # ab = ba + [a, b]
            for k, c in self.algebra.bracket_basis(a, b).items():
                for w, d in self.normal_form_word(prefix + (k,) + suffix).items():
                    result[w] = result.get(w, Fraction(0)) + c * d
            result = {w: c for w, c in result.items() if c != 0}
        self._cache[word] = result
        return result

    def from_words(self, words: Mapping[Word, Fraction | int]) -> UEAElement:
        total: dict[Word, Fraction] = {}
        for word, coefficient in words.items():
            for w, c in self.normal_form_word(tuple(word)).items():
                total[w] = total.get(w, Fraction(0)) + Fraction(coefficient) * c
        return UEAElement(self, total)

    def one(self) -> UEAElement:
        return UEAElement(self, {(): Fraction(1)})

    def normal_form(self, word: Iterable[LieElement]) -> UEAElement:
        """Product of Lie elements in U(g), expanded multilinearly and straightened."""
        expansions: dict[Word, Fraction] = {(): Fraction(1)}
        for x in word:
            nxt: dict[Word, Fraction] = {}
            for w, c in expansions.items():
                for i, d in x.terms:
                    key = w + (i,)
                    nxt[key] = nxt.get(key, Fraction(0)) + c * d
            expansions = nxt
        return self.from_words(expansions)

    def tau(self, element: UEAElement) -> UEAElement:
        """Anti-automorphism extension of tau: reverses every word."""
        words: dict[Word, Fraction] = {}
        for w, c in element.terms.items():
            key = tuple(self.algebra.tau_index(i) for i in reversed(w))
            words[key] = words.get(key, Fraction(0)) + c
        return self.from_words(words)


def pbw_normal_form(algebra: LieAlgebra, word: Sequence[LieElement]) -> UEAElement:
    """Normal form of a product of Lie elements in the default PBW order.

    Example:
        >>> from weightdirac.core.rootdata import build_root_system
        >>> g = chevalley_basis(build_root_system("A1"))
        >>> e, f = g.element(g.e_indices[0]), g.element(g.f_indices[0])
        >>> pbw_normal_form(g, [e, f])
        1*f[1]*e[1] + 1*h1
    """
    return default_pbw(algebra).normal_form(word)


@lru_cache(maxsize=None)
def default_pbw(algebra: LieAlgebra) -> PBWBasis:
    return PBWBasis(algebra)


def tau(x: LieElement) -> LieElement:
    return x.algebra.tau(x)


def falling_binomial(x: Fraction, k: int) -> Fraction:
    """binom(x, k) = x (x - 1) ... (x - k + 1) / k! for rational x."""
    numerator = Fraction(1)
    for j in range(k):
        numerator *= x - j
    return numerator / factorial(k)


@dataclass(frozen=True)
class ThetaTerm:
    """One summand c * (ad f_gamma)^k (u) * f_gamma^(-k) of a twisted element."""

    coefficient: Fraction
    element: LieElement
    inverse_power: int


def localized_generator(algebra: LieAlgebra, gamma: Weight) -> int:
    """Basis index of f_gamma, the root vector of weight -gamma."""
    return algebra.e(-gamma)


def theta_twist_element(
    algebra: LieAlgebra, gamma: Weight, x: Fraction | int, u: LieElement
) -> list[ThetaTerm]:
    """Finite expansion of f_gamma^x u f_gamma^(-x).

    Args:
        algebra: Chevalley basis
        gamma: Root whose localized generator f_gamma has weight -gamma
        x: Rational exponent
        u: Lie element to twist

    Returns:
        Terms binom(x, k) (ad f_gamma)^k(u) f_gamma^(-k), k = 0, 1, ..., nonzero only
    """
    x = Fraction(x)
    f_gamma = algebra.element(localized_generator(algebra, gamma))
    terms = []
    current = u
    k = 0
    while not current.is_zero():
        coefficient = falling_binomial(x, k)
        if coefficient != 0:
            terms.append(ThetaTerm(coefficient, current, k))
        k += 1
        current = algebra.bracket(f_gamma, current)
    return terms


def twisted_product(algebra: LieAlgebra, gamma: Weight, n: int, u: LieElement) -> UEAElement:
    """Theta_n(u) * f_gamma^n in U(g); equals f_gamma^n * u for integer n >= 0."""
    pbw = default_pbw(algebra)
    f_gamma = algebra.element(localized_generator(algebra, gamma))
    total = UEAElement(pbw, {})
    for term in theta_twist_element(algebra, gamma, n, u):
        word = [term.element] + [f_gamma] * (n - term.inverse_power)
        total = total + pbw.normal_form(word).scaled(term.coefficient)
    return total
