"""The measure algebra of a space: its quotient by null sets.

Elements are represented by canonical representatives, i.e. sets of
non-null atoms; projecting a measurable set just drops its null atoms.
That makes equality of classes a set comparison and turns the quotient
laws into testable homomorphism properties of :func:`project`.

The symmetric-difference distance `rho` lives on the ideal of elements
with finite measure and embeds isometrically into L1 via indicator
functions (:func:`chi_embed` / :func:`l1_distance`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ForeignElement, ForeignFunction, ForeignSet, NotInFinIdeal
from .rationals import ExtRational
from .spaces import FiniteMeasureSpace, MeasurableSet


class MeasureAlgebra:
    """Boolean algebra of measurable sets modulo null sets."""

    __slots__ = ("space", "nonnull_atoms", "fin_atoms")

    nonnull_atoms: tuple[int, ...]
    fin_atoms: tuple[int, ...]

    def __init__(self, space: FiniteMeasureSpace):
        self.space = space
        self.nonnull_atoms = space.nonnull_atom_ids
        self.fin_atoms = tuple(
            i for i in self.nonnull_atoms if not space.weights[i].is_infinite
        )

    @property
    def size(self) -> int:
        return 1 << len(self.nonnull_atoms)

    def element(self, atom_ids: Iterable[int]) -> "AlgebraElement":
        return AlgebraElement(self, atom_ids)

    @property
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, ())

    @property
    def top(self) -> "AlgebraElement":
        return AlgebraElement(self, self.nonnull_atoms)

    def all_elements(self) -> list["AlgebraElement"]:
        """Every element, in canonical order (lexicographic on sorted ids)."""
        out = [
            AlgebraElement(self, subset)
            for subset in _subsets(self.nonnull_atoms)
        ]
        out.sort(key=lambda e: e.sort_key)
        return out

    def fin_elements(self) -> list["AlgebraElement"]:
        """Elements of finite measure, in canonical order."""
        out = [
            AlgebraElement(self, subset) for subset in _subsets(self.fin_atoms)
        ]
        out.sort(key=lambda e: e.sort_key)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeasureAlgebra):
            return NotImplemented
        return self.space == other.space

    def __hash__(self):
        return hash(("MeasureAlgebra", self.space))

    def __repr__(self) -> str:
        return f"MeasureAlgebra({len(self.nonnull_atoms)} non-null atoms)"


def _subsets(items: tuple[int, ...]):
    n = len(items)
    for mask in range(1 << n):
        yield tuple(items[i] for i in range(n) if mask >> i & 1)


class AlgebraElement:
    """Canonical representative of a class: a set of non-null atoms."""

    __slots__ = ("algebra", "atom_ids")

    def __init__(self, algebra: MeasureAlgebra, atom_ids: Iterable[int]):
        ids = frozenset(atom_ids)
        stray = ids - set(algebra.nonnull_atoms)
        if stray:
            raise ValueError(f"atoms {sorted(stray)} are null or out of range")
        self.algebra = algebra
        self.atom_ids = ids

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.atom_ids))

    @property
    def is_zero(self) -> bool:
        return not self.atom_ids

    def _check_same_algebra(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if self.algebra != other.algebra:
            raise ForeignElement("elements belong to different algebras")

    def meet(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same_algebra(other)
        return AlgebraElement(self.algebra, self.atom_ids & other.atom_ids)

    def join(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same_algebra(other)
        return AlgebraElement(self.algebra, self.atom_ids | other.atom_ids)

    def symmdiff(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same_algebra(other)
        return AlgebraElement(self.algebra, self.atom_ids ^ other.atom_ids)

    def complement(self) -> "AlgebraElement":
        return AlgebraElement(
            self.algebra, frozenset(self.algebra.nonnull_atoms) - self.atom_ids
        )

    __and__ = meet
    __or__ = join
    __xor__ = symmdiff
    __invert__ = complement

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.atom_ids == other.atom_ids

    def __hash__(self):
        return hash((self.algebra, self.atom_ids))

    def __repr__(self) -> str:
        return f"AlgebraElement({list(self.sort_key)})"


class L1Function:
    """A function constant on atoms, as an a.e.-class: one rational
    coefficient per non-null atom (null atoms carry no coefficient)."""

    __slots__ = ("space", "coefficients")

    def __init__(self, space: FiniteMeasureSpace, coefficients: Mapping[int, Fraction]):
        keys = frozenset(coefficients)
        expected = frozenset(space.nonnull_atom_ids)
        if keys != expected:
            raise ValueError(
                f"coefficients must cover exactly the non-null atoms {sorted(expected)}"
            )
        self.space = space
        self.coefficients = {i: Fraction(coefficients[i]) for i in sorted(keys)}

    def scale(self, factor) -> "L1Function":
        k = Fraction(factor)
        return L1Function(
            self.space, {i: k * c for i, c in self.coefficients.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, L1Function):
            return NotImplemented
        return self.space == other.space and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"L1Function({self.coefficients})"


def build_algebra(space: FiniteMeasureSpace) -> MeasureAlgebra:
    return MeasureAlgebra(space)


def project(algebra: MeasureAlgebra, mset: MeasurableSet) -> AlgebraElement:
    """Class of a measurable set: its atoms with the null ones dropped."""
    if mset.space != algebra.space:
        raise ForeignSet("set belongs to a different space")
    return AlgebraElement(
        algebra, mset.atom_ids & frozenset(algebra.nonnull_atoms)
    )


def mu_bar(elem: AlgebraElement) -> ExtRational:
    """Quotient measure: the weight sum of the element's atoms."""
    total = ExtRational(0)
    for i in elem.sort_key:
        total = total + elem.algebra.space.weights[i]
    return total


def elem_meet(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.meet(b)


def elem_join(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.join(b)


def elem_symmdiff(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.symmdiff(b)


def elem_complement(a: AlgebraElement) -> AlgebraElement:
    return a.complement()


def is_fin(elem: AlgebraElement) -> bool:
    """True iff the element has finite measure."""
    return not mu_bar(elem).is_infinite


def rho(a: AlgebraElement, b: AlgebraElement) -> Fraction:
    """Symmetric-difference distance, defined only on the finite ideal."""
    a._check_same_algebra(b)
    if not is_fin(a) or not is_fin(b):
        raise NotInFinIdeal("rho is defined only on elements of finite measure")
    return mu_bar(a.symmdiff(b)).as_fraction()


def rho_c(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> Fraction:
    """Member of the generating pseudometric family: mass of (a ^ b) & c.

    Defined for arbitrary a, b as long as c has finite measure; for each
    fixed c this is a pseudometric, dominated by rho where rho is defined.
    """
    a._check_same_algebra(b)
    a._check_same_algebra(c)
    if not is_fin(c):
        raise NotInFinIdeal("the localizing element c must have finite measure")
    return mu_bar(a.symmdiff(b).meet(c)).as_fraction()


def chi_embed(elem: AlgebraElement) -> L1Function:
    """Indicator function of the element, as an L1 class."""
    if not is_fin(elem):
        raise NotInFinIdeal("chi is defined only on elements of finite measure")
    coeffs = {
        i: Fraction(1 if i in elem.atom_ids else 0)
        for i in elem.algebra.nonnull_atoms
    }
    return L1Function(elem.algebra.space, coeffs)


def l1_distance(f: L1Function, g: L1Function) -> ExtRational:
    """Weighted L1 distance between two atom-constant functions."""
    if f.space != g.space:
        raise ForeignFunction("functions live on different spaces")
    total = ExtRational(0)
    for i in sorted(f.coefficients):
        gap = abs(f.coefficients[i] - g.coefficients[i])
        total = total + ExtRational(gap) * f.space.weights[i]
    return total
