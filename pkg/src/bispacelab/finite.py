"""Explicit open-set structures on finite carriers.

On a finite carrier the countable-union axiom collapses to closure under
pairwise union, so everything here is an ordinary finite topological space.
The gap between "some open set sits between A and its closure" and
"A sits inside the interior of its closure" cannot open up on a finite
carrier; separating those two conditions is the symbolic backend's job.

Points are the integers 0..n-1 and subsets are bitmasks, so brute force
over all subsets and all open families is cheap up to n = 4.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional

MAX_ENUMERATION_POINTS = 4


class PointSet:
    """Immutable subset of a finite carrier, bitmask-backed."""

    __slots__ = ("size", "mask")

    def __init__(self, size: int, mask: int = 0):
        if size < 1:
            raise ValueError("carrier needs at least one point")
        if mask < 0 or mask >> size:
            raise ValueError(f"mask {mask:#x} does not fit a {size}-point carrier")
        self.size = size
        self.mask = mask

    @classmethod
    def of(cls, size: int, points) -> "PointSet":
        mask = 0
        for p in points:
            if not 0 <= p < size:
                raise ValueError(f"point {p} outside carrier 0..{size - 1}")
            mask |= 1 << p
        return cls(size, mask)

    @classmethod
    def empty(cls, size: int) -> "PointSet":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "PointSet":
        return cls(size, (1 << size) - 1)

    def _check(self, other: "PointSet") -> None:
        if self.size != other.size:
            raise ValueError("point sets live on different carriers")

    def union(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.mask | other.mask)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.mask & other.mask)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.mask & ~other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.size, self.mask ^ ((1 << self.size) - 1))

    def issubset(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.size and (self.mask >> point) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << self.size) - 1

    def points(self) -> tuple[int, ...]:
        return tuple(self)

    def canonical_key(self) -> tuple:
        """Sort key: cardinality first, then the sorted point tuple."""
        return (len(self), self.points())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.size == other.size
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.size, self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(str(p) for p in self) + "}"


class SpaceAxiomError(ValueError):
    """A family of sets fails one of the open-set axioms.

    Carries the name of the first violated axiom and the offending set(s).
    """

    def __init__(self, axiom: str, witnesses: tuple[PointSet, ...], message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witnesses = witnesses


def _canonical_opens(size: int, masks) -> tuple[int, ...]:
    keyed = sorted(
        set(masks), key=lambda m: PointSet(size, m).canonical_key()
    )
    return tuple(keyed)


class FiniteSpace:
    """A finite carrier with an explicit family of open sets.

    The constructor validates the axioms (empty and whole set present,
    closure under pairwise union and intersection) and stores the opens
    duplicate-free in canonical order, so construction is the same thing
    as ``validate_space``.
    """

    __slots__ = ("size", "opens", "_open_masks", "_full")

    def __init__(self, size: int, opens):
        if size < 1:
            raise ValueError("carrier needs at least one point")
        self.size = size
        self._full = (1 << size) - 1
        masks = []
        for o in opens:
            if isinstance(o, PointSet):
                if o.size != size:
                    raise ValueError("open set on the wrong carrier")
                masks.append(o.mask)
            else:
                masks.append(PointSet.of(size, o).mask)
        mask_set = set(masks)
        if 0 not in mask_set:
            raise SpaceAxiomError(
                "empty-set-open", (), "the empty set must be open"
            )
        if self._full not in mask_set:
            raise SpaceAxiomError(
                "whole-set-open", (), "the whole carrier must be open"
            )
        for a, b in itertools.combinations(sorted(mask_set), 2):
            if a | b not in mask_set:
                raise SpaceAxiomError(
                    "union-closed",
                    (PointSet(size, a), PointSet(size, b)),
                    f"union of {PointSet(size, a)} and {PointSet(size, b)} is missing",
                )
            if a & b not in mask_set:
                raise SpaceAxiomError(
                    "intersection-closed",
                    (PointSet(size, a), PointSet(size, b)),
                    f"intersection of {PointSet(size, a)} and {PointSet(size, b)} is missing",
                )
        self._open_masks = frozenset(mask_set)
        self.opens = tuple(
            PointSet(size, m) for m in _canonical_opens(size, mask_set)
        )

    # ---- backend contract ----

    def carrier_key(self) -> tuple:
        return ("finite", self.size)

    def whole(self) -> PointSet:
        return PointSet(self.size, self._full)

    def empty(self) -> PointSet:
        return PointSet(self.size, 0)

    def is_open(self, s: PointSet) -> bool:
        self._own(s)
        return s.mask in self._open_masks

    def closure(self, s: PointSet) -> PointSet:
        """Intersection of all closed supersets (complements of opens)."""
        self._own(s)
        removed = 0
        for o in self._open_masks:
            if o & s.mask == 0:
                removed |= o
        return PointSet(self.size, self._full & ~removed)

    def interior(self, s: PointSet) -> PointSet:
        """Union of all open subsets."""
        self._own(s)
        inside = 0
        for o in self._open_masks:
            if o & ~s.mask == 0:
                inside |= o
        return PointSet(self.size, inside)

    def limit_points(self, s: PointSet) -> PointSet:
        """Points whose every open neighbourhood meets s somewhere else."""
        self._own(s)
        out = 0
        for x in range(self.size):
            bit = 1 << x
            punctured = s.mask & ~bit
            if all(o & punctured for o in self._open_masks if o & bit):
                out |= bit
        return PointSet(self.size, out)

    def algebra_sets(self) -> Iterator[PointSet]:
        """Every subset of the carrier, in canonical order."""
        sets = [PointSet(self.size, m) for m in range(1 << self.size)]
        sets.sort(key=PointSet.canonical_key)
        return iter(sets)

    def open_between(self, a: PointSet, b: PointSet) -> Optional[PointSet]:
        """Smallest canonical open U with a <= U <= b, or None.

        Complete: the opens tuple is the entire family.
        """
        self._own(a)
        self._own(b)
        if not a.issubset(b):
            raise ValueError("open_between requires the first set inside the second")
        for u in self.opens:  # canonical order => smallest witness first
            if a.mask & ~u.mask == 0 and u.mask & ~b.mask == 0:
                return u
        return None

    def _own(self, s: PointSet) -> None:
        if not isinstance(s, PointSet) or s.size != self.size:
            raise ValueError("set does not belong to this carrier")

    def canonical_form(self) -> tuple[tuple[int, ...], ...]:
        return tuple(o.points() for o in self.opens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteSpace)
            and self.size == other.size
            and self._open_masks == other._open_masks
        )

    def __hash__(self) -> int:
        return hash((self.size, self._open_masks))

    def __repr__(self) -> str:
        inner = ",".join(repr(o) for o in self.opens)
        return f"FiniteSpace({self.size}, [{inner}])"


def validate_space(size: int, family) -> FiniteSpace:
    """Check the open-set axioms for a family; raise SpaceAxiomError if violated."""
    return FiniteSpace(size, family)


def indiscrete_space(size: int) -> FiniteSpace:
    return FiniteSpace(size, [PointSet.empty(size), PointSet.full(size)])


def discrete_space(size: int) -> FiniteSpace:
    return FiniteSpace(size, [PointSet(size, m) for m in range(1 << size)])


@lru_cache(maxsize=None)
def _space_forms(n: int) -> tuple[tuple[int, ...], ...]:
    """All valid open families on n points, as sorted mask tuples.

    Candidates are every choice of proper nonempty subsets joined with the
    empty and whole set; a candidate survives iff closed under pairwise
    union and intersection. Results are sorted by canonical opens key.
    """
    full = (1 << n) - 1
    middle = list(range(1, full))
    valid: list[tuple[int, ...]] = []
    for chosen in range(1 << len(middle)):
        fam = {0, full}
        pick = chosen
        while pick:
            low = pick & -pick
            fam.add(middle[low.bit_length() - 1])
            pick ^= low
        ok = True
        members = sorted(fam)
        for a, b in itertools.combinations(members, 2):
            if a | b not in fam or a & b not in fam:
                ok = False
                break
        if ok:
            valid.append(_canonical_opens(n, fam))

    def family_key(masks: tuple[int, ...]) -> tuple:
        return (len(masks), tuple(PointSet(n, m).canonical_key() for m in masks))

    valid.sort(key=family_key)
    return tuple(valid)


def enumerate_spaces(n: int) -> Iterator[FiniteSpace]:
    """Yield every open-set structure on n points exactly once, canonically ordered."""
    if not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise ValueError(
            f"enumeration supported for 1..{MAX_ENUMERATION_POINTS} points, got {n}"
        )
    for masks in _space_forms(n):
        yield FiniteSpace(n, [PointSet(n, m) for m in masks])


def count_spaces(n: int) -> int:
    return len(_space_forms(n))


def trace_space(space: FiniteSpace, region: PointSet) -> tuple[FiniteSpace, dict[int, int]]:
    """Subspace on `region`: opens are the traces U & region, points relabelled.

    Returns the relabelled space together with the old-point -> new-point map.
    """
    if region.size != space.size:
        raise ValueError("region on the wrong carrier")
    if region.is_empty:
        raise ValueError("subspace carrier must be nonempty")
    relabel = {old: new for new, old in enumerate(region.points())}
    sub_size = len(region)
    traced = set()
    for o in space.opens:
        traced.add(PointSet.of(sub_size, (relabel[p] for p in o if p in region)).mask)
    sub = FiniteSpace(sub_size, [PointSet(sub_size, m) for m in traced])
    return sub, relabel
