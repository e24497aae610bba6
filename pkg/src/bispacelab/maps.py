"""Functions between bispaces: the continuity hierarchy, nets, condition C.

Quantifiers over the (possibly uncountable) open family of a symbolic
structure reduce to finitely many cases in two ways:

* backward questions (continuity-style) only see an open through its trace
  on the finitely many image points, so the trace sets from
  open_traces_on_points enumerate all possible preimages;
* forward questions (open maps, condition C) see an open through its
  atom-level trace pattern, so iter_open_traces enumerates them exactly.

Both reductions are cross-checked against explicit finite models in the
test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .finite import FiniteSpace, PointSet
from .props import (
    Bispace,
    PAIRS,
    check_pair,
    is_ij_preopen,
    is_ij_preclosed,
    is_ij_semiopen,
    is_ij_semipreclosed,
    is_ij_semipreopen,
    pcl,
    spcl,
    subspace,
)
from .symbolic import (
    AtomUniverse,
    SchematicFamily,
    SymSet,
    iter_open_traces,
    open_traces_on_points,
)

AnySet = Union[PointSet, SymSet]


# ---------------------------------------------------------------------------
# Map types
# ---------------------------------------------------------------------------

class FiniteMap:
    """Total point map between finite carriers."""

    __slots__ = ("source_size", "target_size", "assignment")

    def __init__(self, source_size: int, target_size: int, assignment):
        assignment = tuple(assignment)
        if len(assignment) != source_size:
            raise ValueError("assignment must cover every source point")
        for v in assignment:
            if not 0 <= v < target_size:
                raise ValueError(f"image point {v} outside target carrier")
        self.source_size = source_size
        self.target_size = target_size
        self.assignment = assignment

    def __call__(self, point: int) -> int:
        return self.assignment[point]

    def image(self, s: PointSet) -> PointSet:
        mask = 0
        for p in s:
            mask |= 1 << self.assignment[p]
        return PointSet(self.target_size, mask)

    def preimage(self, s: PointSet) -> PointSet:
        mask = 0
        for p, v in enumerate(self.assignment):
            if v in s:
                mask |= 1 << p
        return PointSet(self.source_size, mask)

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.target_size

    def restrict(self, region: PointSet) -> "FiniteMap":
        """Restriction to `region`, source points relabelled positionally."""
        return FiniteMap(
            len(region), self.target_size, (self.assignment[p] for p in region)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteMap)
            and self.source_size == other.source_size
            and self.target_size == other.target_size
            and self.assignment == other.assignment
        )

    def __hash__(self) -> int:
        return hash((self.source_size, self.target_size, self.assignment))

    def __repr__(self) -> str:
        return f"FiniteMap({self.source_size}->{self.target_size}, {list(self.assignment)})"


class AtomMap:
    """Map between atom universes, constant on each source atom.

    Images must be single-point atoms; anything else would smear an atom
    across the target and break exact preimages, so it is rejected up front.
    """

    __slots__ = ("source", "target", "assignment")

    def __init__(self, source: AtomUniverse, target: AtomUniverse, assignment: dict):
        missing = [a.id for a in source.atoms if a.id not in assignment]
        if missing:
            raise ValueError(f"assignment misses source atoms {missing}")
        for src_id, tgt_id in assignment.items():
            source.position(src_id)
            tgt = target.atom(tgt_id)
            if not tgt.is_singleton:
                raise ValueError(
                    f"image of atom {src_id!r} must be a single point, "
                    f"got {tgt_id!r} ({tgt.cardinality.value})"
                )
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def image_atom(self, src_id: str) -> str:
        return self.assignment[src_id]

    def image(self, s: SymSet) -> SymSet:
        return self.target.subset(*(self.assignment[i] for i in s.atom_ids()))

    def preimage(self, s: SymSet) -> SymSet:
        ids = [a.id for a in self.source.atoms if s.contains_atom(self.assignment[a.id])]
        return self.source.subset(*ids)

    def image_points(self) -> SymSet:
        return self.target.subset(*self.assignment.values())

    def is_surjective(self) -> bool:
        return self.image_points().is_whole

    def restrict(self, region: SymSet) -> "AtomMap":
        sub = self.source.restrict(region)
        return AtomMap(
            sub, self.target, {a.id: self.assignment[a.id] for a in sub.atoms}
        )

    def __repr__(self) -> str:
        return f"AtomMap({self.assignment})"


AnyMap = Union[FiniteMap, AtomMap]


def image(f: AnyMap, s: AnySet) -> AnySet:
    return f.image(s)


def preimage(f: AnyMap, s: AnySet) -> AnySet:
    return f.preimage(s)


# ---------------------------------------------------------------------------
# Quantifying over the target's opens by what their preimages can be
# ---------------------------------------------------------------------------

def preimage_test_sets(target_space, f: AnyMap) -> list:
    """Target sets whose preimages exhaust all preimages of open sets.

    A preimage only depends on the open's trace on the image points, so for
    a symbolic target the trace sets suffice (and are exact); for a finite
    target the opens themselves are returned.
    """
    if isinstance(target_space, SchematicFamily):
        return open_traces_on_points(target_space, f.image_points())
    return list(target_space.opens)


def _forward_open_images(source_space, f: AnyMap) -> Iterator[AnySet]:
    """Images of every open of the source, one per trace pattern."""
    if isinstance(source_space, SchematicFamily):
        for tr in iter_open_traces(source_space):
            yield f.image(tr.touched_atoms())
    else:
        for o in source_space.opens:
            yield f.image(o)


# ---------------------------------------------------------------------------
# The continuity hierarchy
# ---------------------------------------------------------------------------

def _check_compatible(f: AnyMap, bx: Bispace, by: Bispace) -> None:
    if isinstance(f, FiniteMap):
        if not isinstance(bx.first, FiniteSpace) or bx.first.size != f.source_size:
            raise ValueError("map source does not match the source bispace carrier")
        if not isinstance(by.first, FiniteSpace) or by.first.size != f.target_size:
            raise ValueError("map target does not match the target bispace carrier")
    else:
        if not isinstance(bx.first, SchematicFamily) or not bx.first.universe.same_as(f.source):
            raise ValueError("map source does not match the source bispace universe")
        if not isinstance(by.first, SchematicFamily) or not by.first.universe.same_as(f.target):
            raise ValueError("map target does not match the target bispace universe")


def is_pairwise_continuous(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Preimage of every i-th-structure open is i-th-structure open, i = 1, 2."""
    _check_compatible(f, bx, by)
    for i in (1, 2):
        src, tgt = bx.space(i), by.space(i)
        for v in preimage_test_sets(tgt, f):
            if not src.is_open(f.preimage(v)):
                return False
    return True


def is_pairwise_open_map(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Image of every i-th-structure open is i-th-structure open, i = 1, 2."""
    _check_compatible(f, bx, by)
    for i in (1, 2):
        src, tgt = bx.space(i), by.space(i)
        for img in _forward_open_images(src, f):
            if not tgt.is_open(img):
                return False
    return True


def is_pairwise_precontinuous(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Preimage of every sigma_i-open is (i,j)-preopen in the source bispace."""
    _check_compatible(f, bx, by)
    for i, j in PAIRS:
        for v in preimage_test_sets(by.space(i), f):
            if not is_ij_preopen(bx, (i, j), f.preimage(v)).holds:
                return False
    return True


def is_pairwise_semi_continuous(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Preimage of every sigma_i-open is (i,j)-semiopen in the source bispace."""
    _check_compatible(f, bx, by)
    for i, j in PAIRS:
        for v in preimage_test_sets(by.space(i), f):
            if not is_ij_semiopen(bx, (i, j), f.preimage(v)):
                return False
    return True


def is_pairwise_sp_continuous(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Preimage of every sigma_i-open is (i,j)-semipreopen in the source bispace."""
    _check_compatible(f, bx, by)
    for i, j in PAIRS:
        for v in preimage_test_sets(by.space(i), f):
            if not is_ij_semipreopen(bx, (i, j), f.preimage(v)).holds:
                return False
    return True


def check_closure_preservation(f: AnyMap, space_x, space_y, a: AnySet) -> bool:
    """image(closure(a)) <= closure(image(a)) between two single structures."""
    return f.image(space_x.closure(a)).issubset(space_y.closure(f.image(a)))


def closed_preimage_characterization(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Both sides of the closed-set characterization, computed independently.

    Left: pairwise precontinuity via open preimages. Right: preimages of
    sigma_i-closed sets are (i,j)-preclosed, with closed sets enumerated
    directly (complements of opens / of trace members). Returns whether the
    two verdicts agree.
    """
    _check_compatible(f, bx, by)
    lhs = is_pairwise_precontinuous(f, bx, by)
    rhs = True
    for i, j in PAIRS:
        tgt = by.space(i)
        for v in preimage_test_sets(tgt, f):
            closed_preimage = f.preimage(v).complement()
            if not is_ij_preclosed(bx, (i, j), closed_preimage):
                rhs = False
    return lhs == rhs


def sp_closed_preimage_characterization(f: AnyMap, bx: Bispace, by: Bispace) -> bool:
    """Semi-pre analogue of closed_preimage_characterization."""
    _check_compatible(f, bx, by)
    lhs = is_pairwise_sp_continuous(f, bx, by)
    rhs = True
    for i, j in PAIRS:
        for v in preimage_test_sets(by.space(i), f):
            if not is_ij_semipreclosed(bx, (i, j), f.preimage(v).complement()):
                rhs = False
    return lhs == rhs


# ---------------------------------------------------------------------------
# Consequences of precontinuity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConsequenceReport:
    neighborhood_witnesses: bool   # preopen U around each x mapping into each V
    image_preclosure_bound: bool   # f(pcl(A)) inside closure(f(A))
    preimage_preclosure_bound: bool  # pcl(f^-1(B)) inside f^-1(closure(B))
    algebra_relative: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.neighborhood_witnesses
            and self.image_preclosure_bound
            and self.preimage_preclosure_bound
        )


def _carrier_points(space) -> list:
    """Point handles: indices on finite carriers, atoms symbolically.

    All points of one atom are indistinguishable to algebra sets and the map
    is constant on atoms, so atom granularity is exact for the neighborhood
    checks.
    """
    if isinstance(space, SchematicFamily):
        return list(space.universe.atoms)
    return list(range(space.size))


def _point_in(space, point, s: AnySet) -> bool:
    if isinstance(space, SchematicFamily):
        return s.contains_atom(point.id)
    return point in s


def _point_singleton(space, point) -> AnySet:
    if isinstance(space, SchematicFamily):
        return space.universe.subset(point.id)
    return PointSet.of(space.size, [point])


def precontinuity_consequences(
    f: AnyMap, bx: Bispace, by: Bispace, sp_variant: bool = False
) -> ConsequenceReport:
    """Check the three consequences of pairwise (sp-)precontinuity.

    Requires the map to be pairwise precontinuous (semi-pre for the sp
    variant); raises ValueError otherwise, since the properties say nothing
    about other maps.
    """
    _check_compatible(f, bx, by)
    if sp_variant:
        if not is_pairwise_sp_continuous(f, bx, by):
            raise ValueError("map is not pairwise sp-continuous")
        around = lambda pair, u: is_ij_semipreopen(bx, pair, u).holds
        hull = spcl
    else:
        if not is_pairwise_precontinuous(f, bx, by):
            raise ValueError("map is not pairwise precontinuous")
        around = lambda pair, u: is_ij_preopen(bx, pair, u).holds
        hull = pcl

    src_any = bx.space(1)
    neighborhoods = True
    for i, j in PAIRS:
        tgt = by.space(i)
        for x in _carrier_points(src_any):
            fx = (
                f.image_atom(x.id)
                if isinstance(f, AtomMap)
                else f(x)
            )
            for v in preimage_test_sets(tgt, f):
                if isinstance(f, AtomMap):
                    if not v.contains_atom(fx):
                        continue
                elif fx not in v:
                    continue
                found = False
                for u in src_any.algebra_sets():
                    if not _point_in(src_any, x, u):
                        continue
                    if not f.image(u).issubset(v):
                        continue
                    if around((i, j), u):
                        found = True
                        break
                if not found:
                    neighborhoods = False

    image_bound = True
    for i, j in PAIRS:
        tgt = by.space(i)
        for a in src_any.algebra_sets():
            if not f.image(hull(bx, (i, j), a)).issubset(tgt.closure(f.image(a))):
                image_bound = False

    preimage_bound = True
    for i, j in PAIRS:
        tgt = by.space(i)
        for b in tgt.algebra_sets():
            lhs = hull(bx, (i, j), f.preimage(b))
            if not lhs.issubset(f.preimage(tgt.closure(b))):
                preimage_bound = False

    return ConsequenceReport(
        neighborhoods,
        image_bound,
        preimage_bound,
        algebra_relative=isinstance(src_any, SchematicFamily),
    )


def restrict_map(f: AnyMap, bx: Bispace, region: AnySet) -> tuple[AnyMap, Bispace]:
    """Restrict a map to a region open in both source structures.

    Returns the restricted map together with the sub-bispace it now lives
    on; precontinuity and sp-continuity survive this restriction, which the
    theorem suite asserts exhaustively.
    """
    if not (bx.space(1).is_open(region) and bx.space(2).is_open(region)):
        raise ValueError("restriction region must be open in both source structures")
    return f.restrict(region), subspace(bx, region)


# ---------------------------------------------------------------------------
# Nets over finite directed sets
# ---------------------------------------------------------------------------

class FiniteDirectedSet:
    """Finite preorder in which every pair has an upper bound."""

    __slots__ = ("size", "relation")

    def __init__(self, size: int, relation):
        rel = frozenset(relation)
        for a, b in rel:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueError("relation mentions elements outside the set")
        for a in range(size):
            if (a, a) not in rel:
                raise ValueError(f"relation must be reflexive; ({a},{a}) missing")
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise ValueError(f"relation not transitive at ({a},{b}),({c},{d})")
        for a in range(size):
            for b in range(size):
                if not any((a, c) in rel and (b, c) in rel for c in range(size)):
                    raise ValueError(f"elements {a},{b} have no upper bound")
        self.size = size
        self.relation = rel

    def le(self, a: int, b: int) -> bool:
        return (a, b) in self.relation

    def above(self, a: int) -> list[int]:
        return [b for b in range(self.size) if self.le(a, b)]

    def __repr__(self) -> str:
        strict = sorted((a, b) for a, b in self.relation if a != b)
        return f"FiniteDirectedSet({self.size}, {strict})"


@lru_cache(maxsize=None)
def enumerate_directed_sets(max_size: int) -> tuple[FiniteDirectedSet, ...]:
    """All directed preorders on 1..max_size labelled elements."""
    out = []
    for size in range(1, max_size + 1):
        diag = [(a, a) for a in range(size)]
        off = [(a, b) for a in range(size) for b in range(size) if a != b]
        for chosen in itertools.product((False, True), repeat=len(off)):
            rel = list(diag) + [p for p, keep in zip(off, chosen) if keep]
            try:
                out.append(FiniteDirectedSet(size, rel))
            except ValueError:
                continue
    return tuple(out)


@dataclass(frozen=True)
class Net:
    """Valuation of a finite directed set in a carrier.

    Values are point indices on finite carriers and singleton atom ids on
    symbolic ones.
    """

    directed: FiniteDirectedSet
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.directed.size:
            raise ValueError("net must value every element of the directed set")


def _value_set(space, values) -> AnySet:
    if isinstance(space, SchematicFamily):
        return space.universe.subset(*values)
    return PointSet.of(space.size, values)


def net_converges(space, net: Net, x) -> bool:
    """Eventually inside every open around x.

    On a symbolic carrier x and the net values must be singleton atoms; it
    is enough to range over the traces of opens on those finitely many
    points, which is exact.
    """
    if isinstance(space, SchematicFamily):
        relevant = _value_set(space, net.values) | _point_singleton(space, space.universe.atom(x))
        opens = open_traces_on_points(space, relevant)
        member = lambda value, u: u.contains_atom(value)
        x_in = lambda u: u.contains_atom(x)
    else:
        opens = space.opens
        member = lambda value, u: value in u
        x_in = lambda u: x in u
    for u in opens:
        if not x_in(u):
            continue
        if not any(
            all(member(net.values[b], u) for b in net.directed.above(a))
            for a in range(net.directed.size)
        ):
            return False
    return True


def image_net(f: AnyMap, net: Net) -> Net:
    if isinstance(f, AtomMap):
        return Net(net.directed, tuple(f.image_atom(v) for v in net.values))
    return Net(net.directed, tuple(f(v) for v in net.values))


# ---------------------------------------------------------------------------
# Condition C and the convergence transfer theorem
# ---------------------------------------------------------------------------

def satisfies_condition_C(f: AnyMap, pair, bx: Bispace, by: Bispace) -> bool:
    """f(closure_j(preimage(U*))) equals U* for every target i-th-structure open U*.

    Taking U* to be the whole target forces f to be surjective, so the check
    is False for every non-surjective map; that reading is deliberate.
    Symbolic targets are quantified by trace patterns with exact
    member-vs-algebra-set equality.
    """
    _check_compatible(f, bx, by)
    i, j = check_pair(pair)
    cl_j = bx.space(j).closure
    tgt = by.space(i)
    if isinstance(tgt, SchematicFamily):
        for tr in iter_open_traces(tgt):
            pre = f.preimage(
                tgt.universe.subset(
                    *(
                        a.id
                        for a in f.image_points().atoms()
                        if tr.contains_point(a.id)
                    )
                )
            )
            if not tr.equals_algebra_set(f.image(cl_j(pre))):
                return False
        return True
    for u in tgt.opens:
        if f.image(cl_j(f.preimage(u))) != u:
            return False
    return True


def check_theorem_4_6(
    f: AnyMap, pair, bx: Bispace, by: Bispace, net: Net, x
) -> bool:
    """Convergence transfer: nets converging to x push to nets converging to f(x).

    Vacuously true when the hypotheses (preimages of target i-opens are
    (i,j)-preopen, plus condition C) fail, or when the net does not converge
    to x in the i-th source structure.
    """
    i, j = check_pair(pair)
    for v in preimage_test_sets(by.space(i), f):
        if not is_ij_preopen(bx, (i, j), f.preimage(v)).holds:
            return True
    if not satisfies_condition_C(f, pair, bx, by):
        return True
    if not net_converges(bx.space(i), net, x):
        return True
    fx = f.image_atom(x) if isinstance(f, AtomMap) else f(x)
    return net_converges(by.space(i), image_net(f, net), fx)
