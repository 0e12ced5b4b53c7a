"""Finite measure spaces whose sigma-algebras are generated by a partition.

A space is an ordered finite set of point labels, a partition of those
points into atoms, and one non-negative (possibly infinite) weight per
atom. Measurable sets are exactly the unions of atoms; point subsets that
split an atom are not measurable and have no measure. Atoms are stored in
canonical order (sorted by their smallest member label) so that equal
spaces serialize identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    DuplicatePoint,
    ForeignSet,
    NegativeWeight,
    NotMeasurable,
    PartitionGap,
    PartitionOverlap,
    UnknownPoint,
)
from .rationals import INF_TOKEN, ExtRational


def _coerce_weight(raw, position: int) -> ExtRational:
    if isinstance(raw, ExtRational):
        return raw
    if isinstance(raw, str):
        if raw.strip() == INF_TOKEN:
            return ExtRational.infinity()
        frac = Fraction(raw)
    else:
        frac = Fraction(raw)
    if frac < 0:
        raise NegativeWeight(f"weights[{position}] = {frac} is negative")
    return ExtRational(frac)


class FiniteMeasureSpace:
    """Immutable finite measure space; build with :func:`make_space`."""

    __slots__ = ("points", "atoms", "weights", "_atom_of", "_hash")

    points: tuple[str, ...]
    atoms: tuple[tuple[str, ...], ...]
    weights: tuple[ExtRational, ...]

    def __init__(self, points, partition, weights):
        pts = tuple(points)
        seen: set[str] = set()
        for p in pts:
            if p in seen:
                raise DuplicatePoint(f"point {p!r} listed twice")
            seen.add(p)

        blocks = [tuple(sorted(set(block))) for block in partition]
        raw_weights = list(weights)
        if len(raw_weights) != len(blocks):
            raise ArityMismatch(
                f"{len(blocks)} partition blocks but {len(raw_weights)} weights"
            )
        coerced = [_coerce_weight(w, i) for i, w in enumerate(raw_weights)]

        covered: set[str] = set()
        for block in blocks:
            if not block:
                raise PartitionGap("empty partition block")
            for p in block:
                if p not in seen:
                    raise UnknownPoint(f"partition mentions unknown point {p!r}")
                if p in covered:
                    raise PartitionOverlap(f"point {p!r} lies in two blocks")
                covered.add(p)
        if covered != seen:
            missing = sorted(seen - covered)
            raise PartitionGap(f"points not covered by any block: {missing}")

        ordered = sorted(zip(blocks, coerced), key=lambda bw: bw[0][0])
        self.points = pts
        self.atoms = tuple(block for block, _ in ordered)
        self.weights = tuple(w for _, w in ordered)
        self._atom_of = {
            p: idx for idx, block in enumerate(self.atoms) for p in block
        }
        self._hash = hash((self.points, self.atoms, self.weights))

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def atom_of(self, point: str) -> int:
        """Index of the atom containing `point`."""
        try:
            return self._atom_of[point]
        except KeyError:
            raise UnknownPoint(f"unknown point {point!r}") from None

    def weight(self, atom_id: int) -> ExtRational:
        return self.weights[atom_id]

    @property
    def total_mass(self) -> ExtRational:
        return sum(self.weights, ExtRational(0))

    @property
    def is_sigma_finite(self) -> bool:
        return not any(w.is_infinite for w in self.weights)

    @property
    def null_atom_ids(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w.is_zero)

    @property
    def nonnull_atom_ids(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if not w.is_zero)

    def empty_set(self) -> "MeasurableSet":
        return MeasurableSet(self, ())

    def full_set(self) -> "MeasurableSet":
        return MeasurableSet(self, range(self.n_atoms))

    def atom_set(self, atom_ids: Iterable[int]) -> "MeasurableSet":
        return MeasurableSet(self, atom_ids)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteMeasureSpace):
            return NotImplemented
        return (
            self.points == other.points
            and self.atoms == other.atoms
            and self.weights == other.weights
        )

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteMeasureSpace({len(self.points)} points, {self.n_atoms} atoms)"


class MeasurableSet:
    """A union of atoms of one space, identified by atom indices."""

    __slots__ = ("space", "atom_ids")

    def __init__(self, space: FiniteMeasureSpace, atom_ids: Iterable[int]):
        ids = frozenset(atom_ids)
        for i in ids:
            if not 0 <= i < space.n_atoms:
                raise ValueError(f"atom index {i} out of range")
        self.space = space
        self.atom_ids = ids

    @property
    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.atom_ids))

    def member_points(self) -> frozenset[str]:
        return frozenset(
            p for i in self.atom_ids for p in self.space.atoms[i]
        )

    def _check_same_space(self, other: "MeasurableSet"):
        if not isinstance(other, MeasurableSet):
            raise TypeError("expected a MeasurableSet")
        if self.space != other.space:
            raise ForeignSet("sets belong to different spaces")

    def union(self, other: "MeasurableSet") -> "MeasurableSet":
        self._check_same_space(other)
        return MeasurableSet(self.space, self.atom_ids | other.atom_ids)

    def intersection(self, other: "MeasurableSet") -> "MeasurableSet":
        self._check_same_space(other)
        return MeasurableSet(self.space, self.atom_ids & other.atom_ids)

    def symmetric_difference(self, other: "MeasurableSet") -> "MeasurableSet":
        self._check_same_space(other)
        return MeasurableSet(self.space, self.atom_ids ^ other.atom_ids)

    def complement(self) -> "MeasurableSet":
        return MeasurableSet(
            self.space, frozenset(range(self.space.n_atoms)) - self.atom_ids
        )

    __or__ = union
    __and__ = intersection
    __xor__ = symmetric_difference
    __invert__ = complement

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeasurableSet):
            return NotImplemented
        return self.space == other.space and self.atom_ids == other.atom_ids

    def __hash__(self):
        return hash((self.space, self.atom_ids))

    def __repr__(self) -> str:
        return f"MeasurableSet(atoms={list(self.sorted_ids)})"


def make_space(points: Sequence[str], partition, weights) -> FiniteMeasureSpace:
    """Validate and build a space; atoms come out in canonical order.

    Weights may be ints, Fractions, ExtRationals, or strings ("p/q", "inf").

    Raises DuplicatePoint, PartitionGap, PartitionOverlap, UnknownPoint,
    NegativeWeight, or ArityMismatch on malformed input.
    """
    return FiniteMeasureSpace(points, partition, weights)


def _require_member(space: FiniteMeasureSpace, mset: MeasurableSet):
    if mset.space != space:
        raise ForeignSet("set belongs to a different space")


def measure(space: FiniteMeasureSpace, mset: MeasurableSet) -> ExtRational:
    """Sum of the weights of the set's atoms; the empty set measures 0."""
    _require_member(space, mset)
    total = ExtRational(0)
    for i in mset.sorted_ids:
        total = total + space.weights[i]
    return total


def is_measurable(space: FiniteMeasureSpace, point_set: Iterable[str]) -> bool:
    """True iff the point set is a union of atoms."""
    wanted = set(point_set)
    hit: set[int] = set()
    for p in wanted:
        hit.add(space.atom_of(p))
    covered = set(p for i in hit for p in space.atoms[i])
    return covered == wanted


def set_from_points(space: FiniteMeasureSpace, point_set: Iterable[str]) -> MeasurableSet:
    """The measurable set with exactly these points, if one exists."""
    wanted = set(point_set)
    if not is_measurable(space, wanted):
        raise NotMeasurable(f"point set {sorted(wanted)} splits an atom")
    return MeasurableSet(space, {space.atom_of(p) for p in wanted})


def is_null(space: FiniteMeasureSpace, mset: MeasurableSet) -> bool:
    _require_member(space, mset)
    return measure(space, mset).is_zero


def set_union(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    return a.union(b)


def set_intersection(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    return a.intersection(b)


def set_symmetric_difference(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    return a.symmetric_difference(b)


def set_complement(a: MeasurableSet) -> MeasurableSet:
    return a.complement()
