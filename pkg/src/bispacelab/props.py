"""Openness-between predicates over a pair of space backends on one carrier.

Every "there is an open set squeezed between ..." predicate routes through
the backends' open_between primitive, so the symbolic closed form is proved
once. Witness searches that range over representable sets only
(is_ij_semipreopen, pcl, spcl) are complete on finite backends and
algebra-relative on symbolic ones; is_algebra_relative tells reports which
case they are in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .finite import FiniteSpace, PointSet, trace_space
from .symbolic import (
    SchematicFamily,
    SymSet,
    forall_closed_supersets_interior_covers,
    is_ij_semiopen_schematic,
)

AnySet = Union[PointSet, SymSet]


class Witnessed(NamedTuple):
    holds: bool
    witness: Optional[AnySet]


PAIRS = ((1, 2), (2, 1))


def check_pair(pair) -> tuple[int, int]:
    i, j = pair
    if {i, j} != {1, 2}:
        raise ValueError(f"index pair must be (1,2) or (2,1), got {pair!r}")
    return (i, j)


@dataclass(frozen=True)
class Bispace:
    """One carrier with two open-set structures."""

    first: object
    second: object

    def __post_init__(self):
        if self.first.carrier_key() != self.second.carrier_key():
            raise ValueError("both structures of a bispace must share the carrier")

    def space(self, index: int):
        if index == 1:
            return self.first
        if index == 2:
            return self.second
        raise ValueError(f"space index must be 1 or 2, got {index!r}")

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.first, SchematicFamily)


def is_algebra_relative(backend) -> bool:
    """True when representable-set searches on this backend may be incomplete."""
    return isinstance(backend, SchematicFamily)


# ---------------------------------------------------------------------------
# Single-space predicates
# ---------------------------------------------------------------------------

def open_between(space, a: AnySet, b: AnySet) -> Optional[AnySet]:
    return space.open_between(a, b)


def is_preopen(space, a: AnySet) -> Witnessed:
    """Some open U with a <= U <= closure(a)."""
    w = space.open_between(a, space.closure(a))
    return Witnessed(w is not None, w)


def is_weakly_preopen(space, a: AnySet) -> bool:
    """a <= interior(closure(a))."""
    return a.issubset(space.interior(space.closure(a)))


# ---------------------------------------------------------------------------
# Pairwise predicates
# ---------------------------------------------------------------------------

def is_ij_preopen(bispace: Bispace, pair, a: AnySet) -> Witnessed:
    """Some space_i-open U with a <= U <= closure_j(a)."""
    i, j = check_pair(pair)
    w = bispace.space(i).open_between(a, bispace.space(j).closure(a))
    return Witnessed(w is not None, w)


def is_ij_weakly_preopen(bispace: Bispace, pair, a: AnySet) -> bool:
    """a <= interior_i(closure_j(a))."""
    i, j = check_pair(pair)
    return a.issubset(bispace.space(i).interior(bispace.space(j).closure(a)))


def is_pairwise_preopen(bispace: Bispace, a: AnySet) -> bool:
    return is_ij_preopen(bispace, (1, 2), a).holds and is_ij_preopen(bispace, (2, 1), a).holds


def is_ij_semiopen(bispace: Bispace, pair, a: AnySet) -> bool:
    """Some space_i-open O with O <= a <= closure_j(O)."""
    i, j = check_pair(pair)
    sp_i, sp_j = bispace.space(i), bispace.space(j)
    if isinstance(sp_i, SchematicFamily):
        return is_ij_semiopen_schematic(sp_i, sp_j, a)
    for o in sp_i.opens:
        if o.issubset(a) and a.issubset(sp_j.closure(o)):
            return True
    return False


def is_ij_semipreopen(bispace: Bispace, pair, a: AnySet) -> Witnessed:
    """Some (i,j)-preopen U with U <= a <= closure_j(U).

    The witness ranges over representable sets inside `a`, smallest
    canonical first. On a symbolic backend a semiopen verdict also certifies
    truth (an open witness is a preopen witness) even when that witness
    falls outside the atom algebra; the witness field is then None. The
    negative answer stays algebra-relative.
    """
    i, j = check_pair(pair)
    sp_i, sp_j = bispace.space(i), bispace.space(j)
    for u in sp_i.algebra_sets():
        if not u.issubset(a):
            continue
        if not is_ij_preopen(bispace, pair, u).holds:
            continue
        if a.issubset(sp_j.closure(u)):
            return Witnessed(True, u)
    if isinstance(sp_i, SchematicFamily) and is_ij_semiopen_schematic(sp_i, sp_j, a):
        return Witnessed(True, None)
    return Witnessed(False, None)


def is_ij_preclosed(bispace: Bispace, pair, a: AnySet) -> bool:
    """The complement is (i,j)-preopen."""
    return is_ij_preopen(bispace, pair, a.complement()).holds


def is_ij_semipreclosed(bispace: Bispace, pair, a: AnySet) -> bool:
    """The complement is (i,j)-semipreopen."""
    return is_ij_semipreopen(bispace, pair, a.complement()).holds


def pcl(bispace: Bispace, pair, a: AnySet) -> AnySet:
    """Intersection of the representable (i,j)-preclosed supersets of a.

    Exact on finite backends; algebra-relative on symbolic ones.
    """
    check_pair(pair)
    out = bispace.space(1).whole()
    for s in bispace.space(1).algebra_sets():
        if a.issubset(s) and is_ij_preclosed(bispace, pair, s):
            out = out & s
    return out


def spcl(bispace: Bispace, pair, a: AnySet) -> AnySet:
    """Intersection of the representable (i,j)-semipreclosed supersets of a."""
    check_pair(pair)
    out = bispace.space(1).whole()
    for s in bispace.space(1).algebra_sets():
        if a.issubset(s) and is_ij_semipreclosed(bispace, pair, s):
            out = out & s
    return out


def closed_supersets_interior(bispace: Bispace, pair, a: AnySet) -> bool:
    """Does every space_j-closed set containing `a` have interior_i covering `a`?

    Quantifies over all closed sets of space_j (not merely representable
    ones): finitely many on a finite backend, trace patterns on a symbolic
    one. This is the hypothesis side of the preopenness necessary condition,
    whose converse fails outside topological models.
    """
    i, j = check_pair(pair)
    sp_i, sp_j = bispace.space(i), bispace.space(j)
    if isinstance(sp_j, SchematicFamily):
        return forall_closed_supersets_interior_covers(sp_j, sp_i, a)
    for o in sp_j.opens:
        g = o.complement()
        if a.issubset(g) and not a.issubset(sp_i.interior(g)):
            return False
    return True


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

def subspace(bispace: Bispace, region: AnySet) -> Bispace:
    """Trace bispace on `region`; finite points are relabelled positionally."""
    if isinstance(bispace.first, SchematicFamily):
        return Bispace(bispace.first.restrict(region), bispace.second.restrict(region))
    sub1, _ = trace_space(bispace.first, region)
    sub2, _ = trace_space(bispace.second, region)
    return Bispace(sub1, sub2)


def finite_bispace(size: int, opens1, opens2) -> Bispace:
    return Bispace(FiniteSpace(size, opens1), FiniteSpace(size, opens2))
