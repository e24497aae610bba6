import itertools

import pytest

from bispacelab.catalog import build_example
from bispacelab.finite import (
    PointSet,
    discrete_space,
    enumerate_spaces,
    indiscrete_space,
    validate_space,
)
from bispacelab.maps import (
    AtomMap,
    FiniteDirectedSet,
    FiniteMap,
    Net,
    check_closure_preservation,
    check_theorem_4_6,
    closed_preimage_characterization,
    enumerate_directed_sets,
    image_net,
    is_pairwise_continuous,
    is_pairwise_open_map,
    is_pairwise_precontinuous,
    is_pairwise_semi_continuous,
    is_pairwise_sp_continuous,
    net_converges,
    precontinuity_consequences,
    preimage_test_sets,
    restrict_map,
    satisfies_condition_C,
)
from bispacelab.props import Bispace
from bispacelab.symbolic import (
    AtomUniverse,
    SchematicFamily,
    countable,
    singleton,
    uncountable,
)


def ps(n, *points):
    return PointSet.of(n, points)


def bi(space):
    return Bispace(space, space)


# ---------------------------------------------------------------------------
# Map plumbing
# ---------------------------------------------------------------------------

def test_finite_map_image_preimage():
    f = FiniteMap(3, 2, (0, 0, 1))
    assert f.image(ps(3, 0, 1)) == ps(2, 0)
    assert f.preimage(ps(2, 0)) == ps(3, 0, 1)
    assert f.preimage(ps(2)) == ps(3)
    assert f.image(ps(3)) == ps(2)
    assert f.is_surjective()


def test_finite_map_validation():
    with pytest.raises(ValueError):
        FiniteMap(2, 2, (0,))
    with pytest.raises(ValueError):
        FiniteMap(2, 2, (0, 5))


def test_atom_map_rejects_fat_image():
    src = AtomUniverse([singleton("x")])
    tgt = AtomUniverse([uncountable("blob"), singleton("pt")])
    with pytest.raises(ValueError) as exc:
        AtomMap(src, tgt, {"x": "blob"})
    assert "single point" in str(exc.value)
    AtomMap(src, tgt, {"x": "pt"})  # fine


def test_atom_map_requires_total_assignment():
    src = AtomUniverse([singleton("x"), singleton("y")])
    tgt = AtomUniverse([singleton("pt")])
    with pytest.raises(ValueError):
        AtomMap(src, tgt, {"x": "pt"})


def test_atom_map_image_preimage_on_catalog_map():
    entry = build_example("ex-4.1")
    f = entry.map_
    src_u = f.source
    tgt_u = f.target
    assert f.preimage(tgt_u.subset("sqrt2")) == src_u.subset("irr01")
    assert f.preimage(tgt_u.whole()) == src_u.whole()
    assert f.image(src_u.empty()).is_empty
    assert f.image(src_u.whole()) == tgt_u.subset("sqrt2", "3/2")


# ---------------------------------------------------------------------------
# Continuity hierarchy on finite models
# ---------------------------------------------------------------------------

def test_identity_map_is_everything():
    space = validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    f = FiniteMap(2, 2, (0, 1))
    bx = by = bi(space)
    assert is_pairwise_continuous(f, bx, by)
    assert is_pairwise_open_map(f, bx, by)
    assert is_pairwise_precontinuous(f, bx, by)
    assert is_pairwise_semi_continuous(f, bx, by)
    assert is_pairwise_sp_continuous(f, bx, by)


def test_constant_map_into_indiscrete_target():
    f = FiniteMap(3, 1, (0, 0, 0))
    bx = bi(indiscrete_space(3))
    by = bi(indiscrete_space(1))
    assert is_pairwise_continuous(f, bx, by)


def test_collapse_into_non_open_singleton_is_not_open_map():
    # target: Sierpinski-like with only {0} open; collapse everything to 1
    f = FiniteMap(2, 2, (1, 1))
    bx = bi(indiscrete_space(2))
    by = bi(validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]))
    assert not is_pairwise_open_map(f, bx, by)


def test_carrier_mismatch_rejected():
    f = FiniteMap(2, 2, (0, 1))
    with pytest.raises(ValueError):
        is_pairwise_continuous(f, bi(indiscrete_space(3)), bi(indiscrete_space(2)))


def test_precontinuous_but_not_continuous_witness():
    # identity into a strictly finer second structure
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(indiscrete_space(2))
    by = Bispace(
        indiscrete_space(2), validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    )
    assert not is_pairwise_continuous(f, bx, by)
    assert is_pairwise_precontinuous(f, bx, by)
    assert is_pairwise_sp_continuous(f, bx, by)


def test_closure_preservation_single_space():
    space = validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    f = FiniteMap(2, 2, (0, 1))
    assert check_closure_preservation(f, space, space, ps(2, 0))
    assert check_closure_preservation(f, space, space, ps(2))


def test_closed_preimage_characterization_exhaustive_2x2():
    spaces = list(enumerate_spaces(2))
    for s1, s2, t1, t2 in itertools.product(spaces, repeat=4):
        bx, by = Bispace(s1, s2), Bispace(t1, t2)
        for assignment in itertools.product(range(2), repeat=2):
            f = FiniteMap(2, 2, assignment)
            assert closed_preimage_characterization(f, bx, by)


def test_precontinuity_consequences_requires_precontinuity():
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(discrete_space(2))
    by = bi(discrete_space(2))
    report = precontinuity_consequences(f, bx, by)
    assert report.all_hold
    # a non-precontinuous map must be rejected: with a discrete second
    # structure, preopenness collapses to first-structure membership, and
    # {1} is not open in the Sierpinski-like first structure
    g = FiniteMap(2, 2, (0, 1))
    bad_bx = Bispace(
        validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]), discrete_space(2)
    )
    bad_by = bi(discrete_space(2))
    assert not is_pairwise_precontinuous(g, bad_bx, bad_by)
    with pytest.raises(ValueError):
        precontinuity_consequences(g, bad_bx, bad_by)


def test_restrict_map_requires_bi_open_region():
    space = validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(space)
    sub_f, sub_b = restrict_map(f, bx, ps(2, 0))
    assert sub_f.source_size == 1
    with pytest.raises(ValueError):
        restrict_map(f, bx, ps(2, 1))  # {1} is not open


def test_restriction_keeps_precontinuity_spot():
    space = validate_space(3, [ps(3), ps(3, 0), ps(3, 0, 1), ps(3, 0, 1, 2)])
    f = FiniteMap(3, 2, (0, 1, 1))
    bx = bi(space)
    by = bi(validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]))
    if is_pairwise_precontinuous(f, bx, by):
        sub_f, sub_b = restrict_map(f, bx, ps(3, 0, 1))
        assert is_pairwise_precontinuous(sub_f, sub_b, by)


# ---------------------------------------------------------------------------
# Continuity over the symbolic catalog map
# ---------------------------------------------------------------------------

def test_catalog_map_verdicts():
    entry = build_example("ex-4.1")
    f, bx, by = entry.map_, entry.bispace, entry.target_bispace
    assert not is_pairwise_continuous(f, bx, by)
    assert is_pairwise_precontinuous(f, bx, by)
    assert is_pairwise_sp_continuous(f, bx, by)
    for a in bx.first.algebra_sets():
        assert check_closure_preservation(f, bx.first, by.first, a)
    assert closed_preimage_characterization(f, bx, by)


def test_preimage_test_sets_symbolic_traces():
    entry = build_example("ex-4.1")
    f, by = entry.map_, entry.target_bispace
    traces = preimage_test_sets(by.first, f)
    masks = {t.atom_ids() for t in traces}
    assert () in masks                       # empty trace
    assert ("sqrt2", "3/2") in masks         # whole member hits both points
    assert ("sqrt2",) in masks               # the open singleton
    # 3/2 is in neither region nor mandatory part: no open holds it alone
    assert ("3/2",) not in masks


def test_catalog_map_consequences_hold():
    entry = build_example("ex-4.1")
    report = precontinuity_consequences(entry.map_, entry.bispace, entry.target_bispace)
    assert report.all_hold
    assert report.algebra_relative


# ---------------------------------------------------------------------------
# Open maps with symbolic sources
# ---------------------------------------------------------------------------

def test_restrict_map_symbolic():
    u = AtomUniverse([singleton("a"), singleton("p"), uncountable("blob")])
    fam = SchematicFamily(u, u.subset("a"), u.subset("p"))
    bx = Bispace(fam, fam)
    tgt = AtomUniverse([singleton("x"), singleton("y")])
    indiscrete = SchematicFamily(tgt, tgt.empty(), tgt.empty())
    by = Bispace(indiscrete, indiscrete)
    f = AtomMap(u, tgt, {"a": "x", "p": "y", "blob": "x"})
    assert is_pairwise_precontinuous(f, bx, by)
    region = u.subset("a", "p")  # open in both structures (they coincide)
    sub_f, sub_b = restrict_map(f, bx, region)
    assert sub_f.assignment == {"a": "x", "p": "y"}
    assert sub_b.first.region.atom_ids() == ("a",)
    assert sub_b.first.mandatory.atom_ids() == ("p",)
    assert is_pairwise_precontinuous(sub_f, sub_b, by)
    with pytest.raises(ValueError):
        restrict_map(f, bx, u.subset("blob"))  # not open


def test_catalog_map_is_not_an_open_map():
    # the image of each proper open is a region singleton (fine), but the
    # image of the whole source is {sqrt2, 3/2}, and 3/2 escapes the target
    # region
    entry = build_example("ex-4.1")
    assert not is_pairwise_open_map(entry.map_, entry.bispace, entry.target_bispace)


def test_open_map_symbolic_source():
    u = AtomUniverse([singleton("a"), countable("c")])
    fam = SchematicFamily(u, u.subset("a", "c"), u.empty())
    tgt = AtomUniverse([singleton("x"), singleton("y")])
    sigma_full = SchematicFamily(tgt, tgt.subset("x", "y"), tgt.empty())
    f = AtomMap(u, tgt, {"a": "x", "c": "y"})
    bx = Bispace(fam, fam)
    by = Bispace(sigma_full, sigma_full)
    # every image of an open is a union of target singletons inside the
    # target region, hence open
    assert is_pairwise_open_map(f, bx, by)
    # shrink the target region so the image of {a} is no longer open
    sigma_small = SchematicFamily(tgt, tgt.subset("y"), tgt.empty())
    assert not is_pairwise_open_map(f, bx, Bispace(sigma_small, sigma_small))


# ---------------------------------------------------------------------------
# Nets and directed sets
# ---------------------------------------------------------------------------

def test_directed_set_validation():
    with pytest.raises(ValueError):
        FiniteDirectedSet(2, [(0, 0), (1, 1)])  # no upper bound for {0,1}
    with pytest.raises(ValueError):
        FiniteDirectedSet(2, [(0, 1), (1, 1)])  # not reflexive at 0
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    assert d.le(0, 1) and not d.le(1, 0)
    assert d.above(0) == [0, 1]


def test_enumerate_directed_sets_counts():
    sizes = [d.size for d in enumerate_directed_sets(3)]
    assert sizes.count(1) == 1
    assert sizes.count(2) == 3
    assert sizes.count(3) == 16


def test_constant_net_converges():
    space = validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    net = Net(d, (0, 0))
    assert net_converges(space, net, 0)


def test_indiscrete_nets_converge_everywhere():
    space = indiscrete_space(3)
    d = FiniteDirectedSet(1, [(0, 0)])
    net = Net(d, (2,))
    for x in range(3):
        assert net_converges(space, net, x)


def test_chain_net_avoiding_open_fails():
    space = validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)])
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    net = Net(d, (1, 1))
    assert not net_converges(space, net, 0)
    assert net_converges(space, net, 1)


def test_net_convergence_symbolic():
    u = AtomUniverse([singleton("a"), singleton("b"), uncountable("blob")])
    fam = SchematicFamily(u, u.subset("a", "blob"), u.empty())
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    net = Net(d, ("b", "b"))
    # opens holding "a" are {a}-shaped members: the net never enters them
    assert not net_converges(fam, net, "a")
    # no proper open holds "b", so only X constrains: converges
    assert net_converges(fam, net, "b")


# ---------------------------------------------------------------------------
# Condition C and the transfer theorem
# ---------------------------------------------------------------------------

def test_condition_c_on_indiscrete_surjection():
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(indiscrete_space(2))
    by = bi(indiscrete_space(2))
    assert satisfies_condition_C(f, (1, 2), bx, by)


def test_condition_c_rejects_non_surjective():
    f = FiniteMap(2, 2, (0, 0))
    bx = bi(indiscrete_space(2))
    by = bi(indiscrete_space(2))
    assert not satisfies_condition_C(f, (1, 2), bx, by)


def test_condition_c_failure_with_finer_target():
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(indiscrete_space(2))
    by = bi(validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]))
    # f(cl_2 f^-1({0})) = f(X) = X != {0}
    assert not satisfies_condition_C(f, (1, 2), bx, by)


def test_condition_c_symbolic_target():
    entry = build_example("ex-4.1")
    f, bx, by = entry.map_, entry.bispace, entry.target_bispace
    # not surjective onto the target universe
    assert not satisfies_condition_C(f, (1, 2), bx, by)


def test_theorem_4_6_transfer_and_vacuity():
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    net = Net(d, (0, 1))
    f = FiniteMap(2, 2, (0, 1))
    bx = bi(indiscrete_space(2))
    by = bi(indiscrete_space(2))
    assert check_theorem_4_6(f, (1, 2), bx, by, net, 0)
    # hypotheses fail (condition C) => vacuous truth
    finer = bi(validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]))
    assert check_theorem_4_6(f, (1, 2), bx, finer, net, 0)


def test_image_net():
    d = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
    f = FiniteMap(2, 3, (2, 1))
    assert image_net(f, Net(d, (0, 1))).values == (2, 1)


def test_sp_closed_preimage_characterization():
    from bispacelab.maps import sp_closed_preimage_characterization

    entry = build_example("ex-4.1")
    assert sp_closed_preimage_characterization(
        entry.map_, entry.bispace, entry.target_bispace
    )
    spaces = list(enumerate_spaces(2))
    for s1, s2, t1 in itertools.product(spaces, repeat=3):
        bx, by = Bispace(s1, s2), Bispace(t1, t1)
        for assignment in itertools.product(range(2), repeat=2):
            f = FiniteMap(2, 2, assignment)
            assert sp_closed_preimage_characterization(f, bx, by)


def test_precontinuity_consequences_sp_variant():
    entry = build_example("ex-4.1")
    report = precontinuity_consequences(
        entry.map_, entry.bispace, entry.target_bispace, sp_variant=True
    )
    assert report.all_hold
    # a map that is not sp-continuous is out of contract for the sp variant
    g = FiniteMap(2, 2, (0, 1))
    bad_bx = Bispace(
        validate_space(2, [ps(2), ps(2, 0), ps(2, 0, 1)]), discrete_space(2)
    )
    assert not is_pairwise_sp_continuous(g, bad_bx, bi(discrete_space(2)))
    with pytest.raises(ValueError):
        precontinuity_consequences(g, bad_bx, bi(discrete_space(2)), sp_variant=True)


# ---------------------------------------------------------------------------
# The suite tables agree with the reference map predicates
# ---------------------------------------------------------------------------

def test_map_tables_match_reference_2x2():
    from bispacelab.tables import bispace_tables, continuity_grids, map_tables

    mt = map_tables(2, 2)
    grids = continuity_grids(2, 2)
    bt = bispace_tables(2)
    spaces = list(enumerate_spaces(2))
    for fi, assign in enumerate(mt.maps):
        f = FiniteMap(2, 2, assign)
        for t1, t2, s1, s2 in itertools.product(range(4), repeat=4):
            bx = Bispace(spaces[t1], spaces[t2])
            by = Bispace(spaces[s1], spaces[s2])
            pair = bt.pair_index(t1, t2)
            cont = bool((mt.cont[fi][t1] >> s1) & 1 and (mt.cont[fi][t2] >> s2) & 1)
            assert cont == is_pairwise_continuous(f, bx, by)
            open_ = bool(
                (mt.openmap[fi][t1] >> s1) & 1 and (mt.openmap[fi][t2] >> s2) & 1
            )
            assert open_ == is_pairwise_open_map(f, bx, by)
            pc = bool(
                (grids.pc[fi][pair] >> s1) & 1
                and (grids.pc[fi][bt.swap(pair)] >> s2) & 1
            )
            assert pc == is_pairwise_precontinuous(f, bx, by)
            sc = bool(
                (grids.sc[fi][pair] >> s1) & 1
                and (grids.sc[fi][bt.swap(pair)] >> s2) & 1
            )
            assert sc == is_pairwise_semi_continuous(f, bx, by)
            spc = bool(
                (grids.spc[fi][pair] >> s1) & 1
                and (grids.spc[fi][bt.swap(pair)] >> s2) & 1
            )
            assert spc == is_pairwise_sp_continuous(f, bx, by)


def test_convergence_bits_match_net_converges():
    from bispacelab.tables import convergence_bits, net_catalog

    dsets = enumerate_directed_sets(3)
    nets = net_catalog(2)
    bits = convergence_bits(2)
    spaces = list(enumerate_spaces(2))
    for t, space in enumerate(spaces):
        for n_idx, (d_idx, values) in enumerate(nets):
            net = Net(dsets[d_idx], values)
            for x in range(2):
                expected = net_converges(space, net, x)
                assert bool((bits[t] >> (n_idx * 2 + x)) & 1) == expected
