"""Exact symbolic model of schematic open families over cardinality-tagged atoms.

A universe is a finite partition of an abstract ground set into atoms, each
tagged as a single point, a countably infinite block, or an uncountable
block. The representable sets (the "atom algebra") are the unions of atoms.

A schematic family is the open structure

    {X, empty} | {C | P : C a countable subset of the region R}

for a fixed region R and a fixed finite set P of mandatory points. These
families satisfy the open-set axioms by construction: countable unions of
countable C's stay countable, and (C1|P) & (C2|P) = (C1&C2)|P. The tests
assert this once against the explicit finite model on all-singleton
universes.

All closure/interior/openness answers for algebra sets are exact closed
forms: they quantify over the full (typically uncountable) family, not just
over representable members. Quantifying over every member of the family
(needed e.g. for "every closed superset" checks and for map questions) is
done through trace patterns: a member C|P is known to any atom-level
predicate only through, per atom, whether C misses it, meets it properly,
or swallows it, and each such pattern is realizable or not depending only
on the atom's cardinality tag. Enumerating patterns therefore quantifies
over the whole family exactly.

One warning inherited from the underlying theory: the closure operator here
always returns an algebra set, and on algebra sets it is always closed or
the whole space; closures that fail to be closed sets live outside the atom
algebra and are deliberately not modeled.

Only two cardinality rules are ever used: countable-union-of-countable is
countable, and subsets of countable sets are countable. No ordinals.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional


class Cardinality(enum.Enum):
    SINGLETON = "singleton"          # exactly one point
    COUNTABLE = "countably-infinite"
    UNCOUNTABLE = "uncountable"


@dataclass(frozen=True)
class Atom:
    """One block of the ground-set partition."""

    id: str
    cardinality: Cardinality
    label: str = ""

    @property
    def is_singleton(self) -> bool:
        return self.cardinality is Cardinality.SINGLETON

    @property
    def is_countable(self) -> bool:
        return self.cardinality is not Cardinality.UNCOUNTABLE


def singleton(id: str, label: str = "") -> Atom:
    return Atom(id, Cardinality.SINGLETON, label)


def countable(id: str, label: str = "") -> Atom:
    return Atom(id, Cardinality.COUNTABLE, label)


def uncountable(id: str, label: str = "") -> Atom:
    return Atom(id, Cardinality.UNCOUNTABLE, label)


class AtomUniverse:
    """Ordered finite list of pairwise-disjoint atoms covering the ground set.

    Disjointness and coverage are modeling obligations of whoever writes the
    atoms down; they are not (and cannot be) checked semantically here.
    """

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a universe needs at least one atom")
        index: dict[str, int] = {}
        for pos, atom in enumerate(atoms):
            if atom.id in index:
                raise ValueError(f"duplicate atom id {atom.id!r}")
            index[atom.id] = pos
        self.atoms = atoms
        self._index = index

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def atom(self, id: str) -> Atom:
        return self.atoms[self._index[id]]

    def position(self, id: str) -> int:
        try:
            return self._index[id]
        except KeyError:
            raise KeyError(f"unknown atom id {id!r}") from None

    def subset(self, *ids: str) -> "SymSet":
        mask = 0
        for id in ids:
            mask |= 1 << self.position(id)
        return SymSet(self, mask)

    def empty(self) -> "SymSet":
        return SymSet(self, 0)

    def whole(self) -> "SymSet":
        return SymSet(self, (1 << len(self.atoms)) - 1)

    def algebra_sets(self) -> Iterator["SymSet"]:
        """All atom unions, canonically ordered (atom count, then positions)."""
        sets = [SymSet(self, m) for m in range(1 << len(self.atoms))]
        sets.sort(key=SymSet.canonical_key)
        return iter(sets)

    def restrict(self, keep: "SymSet") -> "AtomUniverse":
        if keep.universe is not self:
            raise ValueError("restriction set from a different universe")
        if keep.is_empty:
            raise ValueError("restricted universe must keep at least one atom")
        return AtomUniverse(a for a in self.atoms if keep.contains_atom(a.id))

    def same_as(self, other: "AtomUniverse") -> bool:
        return self is other or (
            isinstance(other, AtomUniverse)
            and tuple((a.id, a.cardinality) for a in self.atoms)
            == tuple((a.id, a.cardinality) for a in other.atoms)
        )

    def __repr__(self) -> str:
        return "AtomUniverse[" + ",".join(a.id for a in self.atoms) + "]"


class SymSet:
    """Immutable union of atoms of one universe, bitmask-backed."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: AtomUniverse, mask: int = 0):
        if mask < 0 or mask >> len(universe):
            raise ValueError("mask does not fit the universe")
        self.universe = universe
        self.mask = mask

    def _check(self, other: "SymSet") -> None:
        if not self.universe.same_as(other.universe):
            raise ValueError("sets live in different universes")

    def union(self, other: "SymSet") -> "SymSet":
        self._check(other)
        return SymSet(self.universe, self.mask | other.mask)

    def intersection(self, other: "SymSet") -> "SymSet":
        self._check(other)
        return SymSet(self.universe, self.mask & other.mask)

    def difference(self, other: "SymSet") -> "SymSet":
        self._check(other)
        return SymSet(self.universe, self.mask & ~other.mask)

    def complement(self) -> "SymSet":
        return SymSet(self.universe, self.mask ^ ((1 << len(self.universe)) - 1))

    def issubset(self, other: "SymSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def disjoint(self, other: "SymSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def contains_atom(self, id: str) -> bool:
        return (self.mask >> self.universe.position(id)) & 1 == 1

    def atom_ids(self) -> tuple[str, ...]:
        return tuple(a.id for i, a in enumerate(self.universe.atoms) if (self.mask >> i) & 1)

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for i, a in enumerate(self.universe.atoms) if (self.mask >> i) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atom_ids())

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << len(self.universe)) - 1

    def canonical_key(self) -> tuple:
        positions = tuple(i for i in range(len(self.universe)) if (self.mask >> i) & 1)
        return (len(positions), positions)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymSet)
            and self.universe.same_as(other.universe)
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.universe), self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(self.atom_ids()) + "}"


def is_countable(s: SymSet) -> bool:
    """True iff the set contains no uncountable atom."""
    return all(a.is_countable for a in s.atoms())


class SchematicFamily:
    """The open family {X, empty} | {C | P : C countable, C inside the region}."""

    __slots__ = ("universe", "region", "mandatory")

    def __init__(self, universe: AtomUniverse, region: SymSet, mandatory: SymSet):
        if not region.universe.same_as(universe) or not mandatory.universe.same_as(universe):
            raise ValueError("region/mandatory from a different universe")
        if not region.disjoint(mandatory):
            raise ValueError("region and mandatory part must be disjoint")
        for a in mandatory.atoms():
            if not a.is_singleton:
                raise ValueError(
                    f"mandatory part must consist of single points; {a.id!r} is {a.cardinality.value}"
                )
        self.universe = universe
        self.region = region
        self.mandatory = mandatory

    # ---- backend contract ----

    def carrier_key(self) -> tuple:
        return ("atoms", tuple((a.id, a.cardinality) for a in self.universe.atoms))

    def whole(self) -> SymSet:
        return self.universe.whole()

    def empty(self) -> SymSet:
        return self.universe.empty()

    def algebra_sets(self) -> Iterator[SymSet]:
        return self.universe.algebra_sets()

    def is_open(self, s: SymSet) -> bool:
        """Membership in the family; X and empty are checked first by design."""
        self._own(s)
        if s.is_whole or s.is_empty:
            return True
        core = s - self.mandatory
        return self.mandatory.issubset(s) and core.issubset(self.region) and is_countable(core)

    def closure(self, s: SymSet) -> SymSet:
        """Smallest intersection of closed supersets, in closed form.

        Closed sets are X, empty, and X - (C|P). A member avoids s iff its C
        avoids s and P avoids s; the union of all avoiding members sweeps out
        every point of (R - s) | P (single region points sit in singleton
        C's). Hence for nonempty s disjoint from P the closure is
        X - ((R - s) | P); touching P kills every avoiding member, giving X.
        """
        self._own(s)
        if s.is_empty:
            return s
        if not self.mandatory.disjoint(s):
            return self.whole()
        return self.whole() - ((self.region - s) | self.mandatory)

    def interior(self, s: SymSet) -> SymSet:
        """Union of the open subsets, in closed form.

        The members inside s are exactly the C|P with P inside s and C inside
        R & s, and their union sweeps all of (R & s) | P; without P inside s
        only the empty member fits.
        """
        self._own(s)
        if s.is_whole:
            return s
        if self.mandatory.issubset(s):
            return (self.region & s) | self.mandatory
        return self.empty()

    def open_between(self, a: SymSet, b: SymSet) -> Optional[SymSet]:
        """Open U with a <= U <= b, or None; complete over the whole family.

        A member C|P fits iff P <= b and a - P <= C <= R (C countable), so
        the canonical witness is (a - P) | P whenever a - P sits in the
        region and is countable; no member can fix an uncountable or
        region-escaping a - P, leaving only X (needs b = X) and empty
        (needs a empty).
        """
        self._own(a)
        self._own(b)
        if not a.issubset(b):
            raise ValueError("open_between requires the first set inside the second")
        if a.is_empty:
            return a
        core = a - self.mandatory
        if (
            self.mandatory.issubset(b)
            and core.issubset(self.region)
            and is_countable(core)
        ):
            return core | self.mandatory
        if b.is_whole:
            return b
        return None

    def _own(self, s: SymSet) -> None:
        if not isinstance(s, SymSet) or not s.universe.same_as(self.universe):
            raise ValueError("set does not belong to this family's universe")

    def restrict(self, keep: SymSet) -> "SchematicFamily":
        """Trace family on an atom union: region and mandatory part both trace.

        (C|P) & Y = (C & Y)|(P & Y) and every countable C' inside R & Y
        arises this way, so the trace of a schematic family is schematic.
        """
        self._own(keep)
        sub = self.universe.restrict(keep)
        region_ids = [i for i in self.region.atom_ids() if keep.contains_atom(i)]
        mand_ids = [i for i in self.mandatory.atom_ids() if keep.contains_atom(i)]
        return SchematicFamily(sub, sub.subset(*region_ids), sub.subset(*mand_ids))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchematicFamily)
            and self.universe.same_as(other.universe)
            and self.region.mask == other.region.mask
            and self.mandatory.mask == other.mandatory.mask
        )

    def __hash__(self) -> int:
        return hash((self.carrier_key(), self.region.mask, self.mandatory.mask))

    def __repr__(self) -> str:
        return f"SchematicFamily(region={self.region!r}, mandatory={self.mandatory!r})"


# ---------------------------------------------------------------------------
# Trace patterns: exact quantification over every member of a family.
# ---------------------------------------------------------------------------

EMPTY, PART, FULL = 0, 1, 2


def _atom_states(atom: Atom) -> tuple[int, ...]:
    # A countable C can swallow an atom only if the atom is countable, and
    # can meet it properly only if the atom has at least two points.
    if atom.cardinality is Cardinality.SINGLETON:
        return (EMPTY, FULL)
    if atom.cardinality is Cardinality.COUNTABLE:
        return (EMPTY, PART, FULL)
    return (EMPTY, PART)


class OpenTrace:
    """One member of a schematic family, seen at atom granularity.

    kind 'whole' is X, kind 'empty' is the empty member, kind 'member' is
    C|P with, per region atom, whether C misses / properly meets / swallows
    it. Two members with the same trace are indistinguishable to every
    atom-level predicate, and every trace is realizable, so iterating traces
    quantifies over the family exactly.
    """

    __slots__ = ("family", "kind", "states")

    def __init__(self, family: SchematicFamily, kind: str, states: Optional[dict[str, int]] = None):
        self.family = family
        self.kind = kind
        self.states = states or {}

    @property
    def is_whole(self) -> bool:
        return self.kind == "whole"

    @property
    def is_empty_member(self) -> bool:
        return self.kind == "empty"

    def state(self, atom_id: str) -> int:
        return self.states.get(atom_id, EMPTY)

    def contains_point(self, atom_id: str) -> bool:
        """Membership of a singleton atom's point."""
        if self.is_whole:
            return True
        if self.is_empty_member:
            return False
        if self.family.mandatory.contains_atom(atom_id):
            return True
        return self.state(atom_id) == FULL

    def contains_set(self, s: SymSet) -> bool:
        """s <= U (every atom of s swallowed)."""
        if self.is_whole:
            return True
        if self.is_empty_member:
            return s.is_empty
        for a in s.atoms():
            if self.family.mandatory.contains_atom(a.id):
                continue
            if self.state(a.id) != FULL:
                return False
        return True

    def disjoint_from(self, s: SymSet) -> bool:
        """s & U empty (no atom of s touched)."""
        if self.is_whole:
            return s.is_empty
        if self.is_empty_member:
            return True
        for a in s.atoms():
            if self.family.mandatory.contains_atom(a.id):
                return False
            if self.state(a.id) != EMPTY:
                return False
        return True

    def touched_atoms(self) -> SymSet:
        """Atoms the member meets: its image footprint."""
        u = self.family.universe
        if self.is_whole:
            return u.whole()
        if self.is_empty_member:
            return u.empty()
        ids = list(self.family.mandatory.atom_ids())
        ids.extend(i for i, st in self.states.items() if st != EMPTY)
        return u.subset(*ids)

    def is_vacuous_member(self) -> bool:
        """True for the member C|P with C empty and P empty (the empty set again)."""
        return self.kind == "member" and self.family.mandatory.is_empty and all(
            st == EMPTY for st in self.states.values()
        )

    def equals_algebra_set(self, v: SymSet) -> bool:
        """Exact equality of this member with an algebra set."""
        if self.is_whole:
            return v.is_whole
        if self.is_empty_member:
            return v.is_empty
        for a in self.family.universe.atoms:
            inside_u: Optional[bool]
            if self.family.mandatory.contains_atom(a.id):
                inside_u = True
            else:
                st = self.state(a.id)
                if st == PART:
                    return False  # a proper part never equals an atom union's slice
                inside_u = st == FULL
            if inside_u != v.contains_atom(a.id):
                return False
        return True


def iter_open_traces(family: SchematicFamily) -> Iterator[OpenTrace]:
    """Every member of the family, once per trace pattern."""
    yield OpenTrace(family, "whole")
    yield OpenTrace(family, "empty")
    region_atoms = family.region.atoms()
    for combo in itertools.product(*(_atom_states(a) for a in region_atoms)):
        yield OpenTrace(
            family, "member", {a.id: st for a, st in zip(region_atoms, combo)}
        )


def open_traces_on_points(family: SchematicFamily, points: SymSet) -> list[SymSet]:
    """Distinct intersections U & points over all opens U, for singleton-atom points.

    A member meets a singleton p iff p is mandatory or p sits in the region
    and its C swallows p, so the possible traces on `points` are the empty
    set, all of `points` (from X), and (P & points) | S for S inside
    R & points. Exact and finite.
    """
    for a in points.atoms():
        if not a.is_singleton:
            raise ValueError(f"trace points must be singleton atoms, got {a.id!r}")
    u = family.universe
    base = family.mandatory & points
    free = (family.region & points).atom_ids()
    seen = set()
    out = []
    candidates = [u.empty(), SymSet(u, points.mask)]
    for r in range(len(free) + 1):
        for pick in itertools.combinations(free, r):
            candidates.append(base | u.subset(*pick))
    for c in candidates:
        if c.mask not in seen:
            seen.add(c.mask)
            out.append(c)
    out.sort(key=SymSet.canonical_key)
    return out


def forall_closed_supersets_interior_covers(
    fam_j: SchematicFamily, fam_i: SchematicFamily, a: SymSet
) -> bool:
    """Does every fam_j-closed superset G of `a` satisfy a <= interior_i(G)?

    Closed sets are complements of members; G contains `a` iff the member
    avoids `a`. interior_i(G) is (R_i & G) | P_i when P_i <= G (else empty),
    so the cover test per closed trace needs only: G whole, P_i avoided by
    the member, a - P_i inside R_i, and a - P_i avoided by the member.
    """
    if a.is_empty:
        return True
    p_i = fam_i.mandatory
    core = a - p_i
    core_in_region = core.issubset(fam_i.region)
    for u in iter_open_traces(fam_j):
        if not u.disjoint_from(a):
            continue  # G = X - U does not contain a
        if u.is_empty_member or u.is_vacuous_member():
            continue  # G = X, interior is X
        if not u.disjoint_from(p_i):
            return False  # P_i escapes G: interior_i(G) is empty
        if not core_in_region:
            return False
        if not u.disjoint_from(core):
            return False
    return True


def is_ij_semiopen_schematic(fam_i: SchematicFamily, fam_j: SchematicFamily, a: SymSet) -> bool:
    """Some fam_i-open O with O <= a <= closure_j(O), decided in closed form.

    For a proper nonempty `a`, candidates are members C|P_i inside `a`
    (so P_i <= a, C <= R_i & a). Their j-closure covers `a` in two ways:
    touch P_j (closure becomes X), or avoid P_j while C picks up all of
    a & R_j. Padding C with one extra region point keeps O inside `a`, so
    nonemptiness of O only needs P_i or R_i & a nonempty. Validated against
    the all-singleton finite oracle and the trace enumeration in tests.
    """
    if a.is_empty or a.is_whole:
        return True
    p_i, r_i = fam_i.mandatory, fam_i.region
    p_j, r_j = fam_j.mandatory, fam_j.region
    if not p_i.issubset(a):
        return False
    if not (p_i & p_j).is_empty or not (p_j & r_i & a).is_empty:
        return True
    core = (a & r_j) - p_i
    return (
        (a & p_j).is_empty
        and core.issubset(r_i)
        and is_countable(core)
        and not (p_i.is_empty and (r_i & a).is_empty)
    )


# ---------------------------------------------------------------------------
# Structure validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Problem:
    code: str
    family_index: Optional[int]
    atom_ids: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[Problem, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_universe_and_families(universe: AtomUniverse, families) -> ValidationReport:
    """Structured diagnostics for a universe plus schematic family descriptions.

    Each family may be a SchematicFamily or a (region, mandatory) pair of
    SymSets; problems name the offending atoms instead of raising.
    """
    problems: list[Problem] = []
    for idx, fam in enumerate(families, start=1):
        if isinstance(fam, SchematicFamily):
            region, mandatory = fam.region, fam.mandatory
        else:
            region, mandatory = fam
        for s, role in ((region, "region"), (mandatory, "mandatory")):
            if not s.universe.same_as(universe):
                problems.append(
                    Problem(
                        "foreign-universe", idx, (),
                        f"family {idx}: {role} set built over a different universe",
                    )
                )
        overlap = region & mandatory
        if not overlap.is_empty:
            problems.append(
                Problem(
                    "region-mandatory-overlap", idx, overlap.atom_ids(),
                    f"family {idx}: region and mandatory part share {list(overlap.atom_ids())}",
                )
            )
        bad = tuple(a.id for a in mandatory.atoms() if not a.is_singleton)
        if bad:
            problems.append(
                Problem(
                    "mandatory-not-singleton", idx, bad,
                    f"family {idx}: mandatory atoms {list(bad)} are not single points",
                )
            )
    return ValidationReport(tuple(problems))


def materialize_finite(family: SchematicFamily):
    """Explicit finite model of a family over an all-singleton universe.

    Every subset of an all-singleton universe is countable, so the family is
    literally {X, empty} | {C | P : C <= R}. Used as the brute-force oracle
    for the closed forms.
    """
    from .finite import FiniteSpace, PointSet

    atoms = family.universe.atoms
    if any(not a.is_singleton for a in atoms):
        raise ValueError("materialization needs an all-singleton universe")
    n = len(atoms)
    region_positions = [family.universe.position(i) for i in family.region.atom_ids()]
    p_mask = 0
    for i in family.mandatory.atom_ids():
        p_mask |= 1 << family.universe.position(i)
    masks = {0, (1 << n) - 1}
    for r in range(len(region_positions) + 1):
        for pick in itertools.combinations(region_positions, r):
            c_mask = 0
            for pos in pick:
                c_mask |= 1 << pos
            masks.add(c_mask | p_mask)
    return FiniteSpace(n, [PointSet(n, m) for m in masks])
