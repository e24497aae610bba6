import pytest
from hypothesis import given, strategies as st

from bispacelab.symbolic import (
    Atom,
    AtomUniverse,
    SchematicFamily,
    SymSet,
    countable,
    is_countable,
    is_ij_semiopen_schematic,
    iter_open_traces,
    materialize_finite,
    open_traces_on_points,
    singleton,
    uncountable,
    validate_universe_and_families,
)


@pytest.fixture
def halves():
    """Two uncountable halves plus a countable sea of rationals."""
    u = AtomUniverse(
        [
            uncountable("irr-left"),
            uncountable("irr-right"),
            countable("rats"),
        ]
    )
    left = SchematicFamily(u, u.subset("irr-left"), u.empty())
    right = SchematicFamily(u, u.subset("irr-right"), u.empty())
    return u, left, right


@pytest.fixture
def anchored():
    """Region with a singleton and an uncountable block, one mandatory point."""
    u = AtomUniverse(
        [
            singleton("a"),
            singleton("p"),
            uncountable("blob"),
            countable("sea"),
        ]
    )
    fam = SchematicFamily(u, u.subset("a", "blob"), u.subset("p"))
    return u, fam


# ---------------------------------------------------------------------------
# Universe and set basics
# ---------------------------------------------------------------------------

def test_universe_rejects_duplicate_ids():
    with pytest.raises(ValueError):
        AtomUniverse([singleton("x"), countable("x")])


def test_universe_rejects_empty():
    with pytest.raises(ValueError):
        AtomUniverse([])


def test_subset_unknown_id(halves):
    u, _, _ = halves
    with pytest.raises(KeyError):
        u.subset("nope")


def test_symset_operations(halves):
    u, _, _ = halves
    s = u.subset("irr-left", "rats")
    t = u.subset("rats")
    assert t.issubset(s)
    assert (s - t) == u.subset("irr-left")
    assert s.complement() == u.subset("irr-right")
    assert (s & t) == t
    assert s.atom_ids() == ("irr-left", "rats")
    assert not s.is_whole and not s.is_empty
    assert u.whole().is_whole and u.empty().is_empty


def test_symset_universe_mismatch(halves):
    u, _, _ = halves
    other = AtomUniverse([singleton("z")])
    with pytest.raises(ValueError):
        u.whole().union(other.whole())


@given(st.integers(0, 15), st.integers(0, 15))
def test_symset_de_morgan(a, b):
    u = AtomUniverse([singleton("w"), countable("x"), uncountable("y"), singleton("z")])
    s, t = SymSet(u, a), SymSet(u, b)
    assert (s | t).complement() == s.complement() & t.complement()


def test_is_countable(halves):
    u, _, _ = halves
    assert is_countable(u.subset("rats"))
    assert is_countable(u.empty())
    assert not is_countable(u.subset("irr-left"))
    assert not is_countable(u.subset("irr-left", "rats"))


# ---------------------------------------------------------------------------
# Family invariants and validation diagnostics
# ---------------------------------------------------------------------------

def test_family_rejects_region_mandatory_overlap(halves):
    u, _, _ = halves
    with pytest.raises(ValueError):
        SchematicFamily(u, u.subset("irr-left"), u.subset("irr-left"))


def test_family_rejects_fat_mandatory(halves):
    u, _, _ = halves
    with pytest.raises(ValueError):
        SchematicFamily(u, u.subset("irr-left"), u.subset("rats"))


def test_validate_universe_and_families_ok(anchored):
    u, fam = anchored
    report = validate_universe_and_families(u, [fam])
    assert report.ok


def test_validate_universe_and_families_reports_overlap(anchored):
    u, _ = anchored
    report = validate_universe_and_families(
        u, [(u.subset("a", "p"), u.subset("p"))]
    )
    assert not report.ok
    codes = {p.code for p in report.problems}
    assert "region-mandatory-overlap" in codes
    assert report.problems[0].atom_ids == ("p",)


def test_validate_universe_and_families_reports_non_singleton(anchored):
    u, _ = anchored
    report = validate_universe_and_families(u, [(u.subset("a"), u.subset("sea"))])
    assert any(p.code == "mandatory-not-singleton" for p in report.problems)


# ---------------------------------------------------------------------------
# Openness, closure, interior closed forms
# ---------------------------------------------------------------------------

def test_whole_and_empty_always_open(anchored):
    _, fam = anchored
    assert fam.is_open(fam.whole())
    assert fam.is_open(fam.empty())


def test_open_membership(anchored):
    u, fam = anchored
    assert fam.is_open(u.subset("a", "p"))
    assert fam.is_open(u.subset("p"))
    assert not fam.is_open(u.subset("a"))          # misses the mandatory point
    assert not fam.is_open(u.subset("blob", "p"))  # uncountable core
    assert not fam.is_open(u.subset("sea", "p"))   # escapes the region


def test_closure_cases(anchored):
    u, fam = anchored
    assert fam.closure(u.empty()).is_empty
    assert fam.closure(u.subset("p")).is_whole
    assert fam.closure(u.subset("sea")) == u.whole() - u.subset("a", "blob", "p")
    assert fam.closure(u.subset("blob")) == u.whole() - u.subset("a", "p")


def test_interior_cases(anchored):
    u, fam = anchored
    assert fam.interior(u.whole()).is_whole
    assert fam.interior(u.subset("a", "sea")).is_empty          # p missing
    assert fam.interior(u.subset("a", "p", "sea")) == u.subset("a", "p")
    assert fam.interior(u.subset("p")) == u.subset("p")


def test_open_between_canonical_witness(anchored):
    u, fam = anchored
    a = u.subset("a")
    b = u.subset("a", "p", "sea")
    assert fam.open_between(a, b) == u.subset("a", "p")
    assert fam.open_between(u.empty(), b) == u.empty()
    assert fam.open_between(u.subset("blob"), u.whole()) == u.whole()
    assert fam.open_between(u.subset("blob"), u.subset("blob", "p")) is None
    with pytest.raises(ValueError):
        fam.open_between(b, a)


def test_closure_laws_over_algebra(anchored):
    u, fam = anchored
    sets = list(fam.algebra_sets())
    for s in sets:
        cl = fam.closure(s)
        assert s.issubset(cl)
        assert fam.closure(cl) == cl
        assert fam.interior(s).issubset(s)
        for t in sets:
            if s.issubset(t):
                assert fam.closure(s).issubset(fam.closure(t))
                assert fam.interior(s).issubset(fam.interior(t))
    for s in sets:
        for t in sets:
            assert fam.closure(s | t) == fam.closure(s) | fam.closure(t)


# ---------------------------------------------------------------------------
# Trace patterns
# ---------------------------------------------------------------------------

def test_trace_count_respects_cardinalities(anchored):
    _, fam = anchored
    # region atoms: singleton 'a' (2 states) and uncountable 'blob' (2 states),
    # plus the whole and empty members
    traces = list(iter_open_traces(fam))
    assert len(traces) == 2 + 2 * 2


def test_trace_membership_predicates(anchored):
    u, fam = anchored
    member = next(
        t
        for t in iter_open_traces(fam)
        if t.kind == "member" and t.state("a") == 2 and t.state("blob") == 1
    )
    assert member.contains_point("a")
    assert member.contains_point("p")
    assert not member.contains_set(u.subset("blob"))
    assert not member.disjoint_from(u.subset("blob"))
    assert member.disjoint_from(u.subset("sea"))
    assert member.touched_atoms() == u.subset("a", "p", "blob")
    assert not member.equals_algebra_set(u.subset("a", "p", "blob"))


def test_trace_equals_algebra_set(anchored):
    u, fam = anchored
    exact = next(
        t
        for t in iter_open_traces(fam)
        if t.kind == "member" and t.state("a") == 2 and t.state("blob") == 0
    )
    assert exact.equals_algebra_set(u.subset("a", "p"))
    assert not exact.equals_algebra_set(u.subset("p"))


def test_open_traces_on_points(anchored):
    u, fam = anchored
    points = u.subset("a", "p")
    traces = open_traces_on_points(fam, points)
    assert u.empty() in traces
    assert points in traces          # from the whole member
    assert u.subset("p") in traces   # mandatory only
    assert u.subset("a", "p") in traces
    with pytest.raises(ValueError):
        open_traces_on_points(fam, u.subset("blob"))


def test_every_open_is_open_under_traces(halves):
    # membership decided by the closed form must match existence of an
    # exactly-equal trace member
    u, left, _ = halves
    for s in left.algebra_sets():
        trace_open = any(t.equals_algebra_set(s) for t in iter_open_traces(left))
        assert trace_open == left.is_open(s)


# ---------------------------------------------------------------------------
# Restriction (subspace trace of a family)
# ---------------------------------------------------------------------------

def test_restrict_drops_mandatory_point(anchored):
    u, fam = anchored
    keep = u.subset("a", "blob", "sea")
    sub = fam.restrict(keep)
    assert sub.mandatory.is_empty
    assert sub.region.atom_ids() == ("a", "blob")
    # {a} was not open before (mandatory point missing); in the trace it is
    assert sub.is_open(sub.universe.subset("a"))


def test_restrict_whole_is_same_family(anchored):
    u, fam = anchored
    sub = fam.restrict(u.whole())
    assert sub.region.atom_ids() == fam.region.atom_ids()
    assert sub.mandatory.atom_ids() == fam.mandatory.atom_ids()


# ---------------------------------------------------------------------------
# All-singleton materialization agrees with the closed forms (spot checks;
# the full seeded sweep lives in test_oracle_equivalence)
# ---------------------------------------------------------------------------

def test_materialize_finite_requires_singletons(anchored):
    _, fam = anchored
    with pytest.raises(ValueError):
        materialize_finite(fam)


def test_materialize_matches_closed_forms_small():
    u = AtomUniverse([singleton("x"), singleton("y"), singleton("z")])
    fam = SchematicFamily(u, u.subset("x", "y"), u.subset("z"))
    finite = materialize_finite(fam)
    for s in fam.algebra_sets():
        mirror = finite.opens[0].__class__.of(3, (u.position(i) for i in s.atom_ids()))
        assert fam.is_open(s) == finite.is_open(mirror)
        assert {u.position(i) for i in fam.closure(s).atom_ids()} == set(
            finite.closure(mirror)
        )
        assert {u.position(i) for i in fam.interior(s).atom_ids()} == set(
            finite.interior(mirror)
        )


def test_semiopen_closed_form_basic(halves):
    u, left, right = halves
    # the left irrationals contain a nonempty piece of the left region and
    # avoid the right mandatory part (empty), so a single left point already
    # has 2-closure covering everything outside the right region
    assert is_ij_semiopen_schematic(left, right, u.subset("irr-left", "rats"))
    assert not is_ij_semiopen_schematic(left, right, u.subset("irr-right"))
