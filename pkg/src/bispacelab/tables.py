"""Precomputed bitmask tables for the exhaustive theorem suites.

Notation: on an n-point carrier subsets are masks 0..2^n-1. A set-of-subsets
is an int with bit A set ("maskset"). A set of topology indices is an int
with bit s set ("topset"); a set of bispace pairs (s1,s2) over T topologies
is an int with bit s1*T+s2 set ("pairset"). Rectangle products of topsets
expand into pairsets, which turns every per-(map, source-bispace) question
over all target bispaces into a handful of big-int operations.

Everything here recomputes the reference predicates in flat form; the test
suite asserts agreement with the reference implementations, so the tables
never replace the direct route, they only drive the bulk sweeps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .finite import PointSet, _space_forms
from .maps import enumerate_directed_sets


def rect(topset1: int, topset2: int, t_count: int) -> int:
    """Pairset {(s1,s2) : s1 in topset1, s2 in topset2}."""
    out = 0
    m1 = topset1
    while m1:
        low = m1 & -m1
        s1 = low.bit_length() - 1
        out |= topset2 << (s1 * t_count)
        m1 ^= low
    return out


def rect_subset(a1: int, a2: int, b1: int, b2: int) -> bool:
    """a1 x a2 inside b1 x b2."""
    if a1 == 0 or a2 == 0:
        return True
    return a1 & ~b1 == 0 and a2 & ~b2 == 0


def rect_equal(a1: int, a2: int, b1: int, b2: int) -> bool:
    a_empty = a1 == 0 or a2 == 0
    b_empty = b1 == 0 or b2 == 0
    if a_empty or b_empty:
        return a_empty and b_empty
    return a1 == b1 and a2 == b2


def decode_pair(pairset: int, t_count: int) -> tuple[int, int]:
    idx = (pairset & -pairset).bit_length() - 1
    return idx // t_count, idx % t_count


@dataclass(frozen=True)
class TopologyTables:
    n: int
    full: int
    opens: tuple[tuple[int, ...], ...]       # per topology, canonical mask tuple
    openbits: tuple[int, ...]                # per topology, maskset of opens
    cl: tuple[tuple[int, ...], ...]          # per (topology, subset) closure mask
    intr: tuple[tuple[int, ...], ...]        # per (topology, subset) interior mask
    index: dict                              # opens tuple -> topology index

    @property
    def count(self) -> int:
        return len(self.opens)


@lru_cache(maxsize=None)
def topology_tables(n: int) -> TopologyTables:
    forms = _space_forms(n)
    full = (1 << n) - 1
    openbits = []
    cl = []
    intr = []
    for masks in forms:
        bits = 0
        for m in masks:
            bits |= 1 << m
        openbits.append(bits)
        cl_row = []
        int_row = []
        for a in range(1 << n):
            removed = 0
            inside = 0
            for m in masks:
                if m & a == 0:
                    removed |= m
                if m & ~a == 0:
                    inside |= m
            cl_row.append(full & ~removed)
            int_row.append(inside)
        cl.append(tuple(cl_row))
        intr.append(tuple(int_row))
    return TopologyTables(
        n,
        full,
        forms,
        tuple(openbits),
        tuple(cl),
        tuple(intr),
        {masks: i for i, masks in enumerate(forms)},
    )


@dataclass(frozen=True)
class BispaceTables:
    """Per-(t1,t2) predicate masksets; direction 0 is (1,2), 1 is (2,1).

    Pair index is t1 * count + t2; direction 1 masks at (t1,t2) equal
    direction 0 masks at (t2,t1), so only direction 0 is materialized and
    `dir_bits` does the swap.
    """

    top: TopologyTables
    po: tuple[int, ...]                       # maskset of (1,2)-preopen subsets
    wpo: tuple[int, ...]                      # weakly (1,2)-preopen
    so: tuple[int, ...]                       # (1,2)-semiopen
    spo: tuple[int, ...]                      # (1,2)-semipreopen
    pcl: tuple[tuple[int, ...], ...]          # per pair, per subset: preclosure mask
    spcl: tuple[tuple[int, ...], ...]

    def pair_index(self, t1: int, t2: int) -> int:
        return t1 * self.top.count + t2

    def swap(self, pair: int) -> int:
        t = self.top.count
        return (pair % t) * t + pair // t

    def dir_bits(self, table, pair: int, direction: int):
        return table[pair if direction == 0 else self.swap(pair)]


@lru_cache(maxsize=None)
def bispace_tables(n: int) -> BispaceTables:
    top = topology_tables(n)
    t_count = top.count
    size = 1 << n
    full = top.full
    po, wpo, so, spo = [], [], [], []
    pcl_rows, spcl_rows = [], []
    for t1 in range(t_count):
        opens1 = top.opens[t1]
        for t2 in range(t_count):
            cl2 = top.cl[t2]
            int1 = top.intr[t1]
            po_bits = 0
            wpo_bits = 0
            so_bits = 0
            for a in range(size):
                target = cl2[a]
                if any(a & ~u == 0 and u & ~target == 0 for u in opens1):
                    po_bits |= 1 << a
                if a & ~int1[cl2[a]] == 0:
                    wpo_bits |= 1 << a
                if any(o & ~a == 0 and a & ~cl2[o] == 0 for o in opens1):
                    so_bits |= 1 << a
            spo_bits = 0
            for a in range(size):
                for u in range(size):
                    if u & ~a == 0 and (po_bits >> u) & 1 and a & ~cl2[u] == 0:
                        spo_bits |= 1 << a
                        break
            pcl_row = []
            spcl_row = []
            for a in range(size):
                acc_p = full
                acc_sp = full
                for s in range(size):
                    if a & ~s == 0:
                        comp = full ^ s
                        if (po_bits >> comp) & 1:
                            acc_p &= s
                        if (spo_bits >> comp) & 1:
                            acc_sp &= s
                pcl_row.append(acc_p)
                spcl_row.append(acc_sp)
            po.append(po_bits)
            wpo.append(wpo_bits)
            so.append(so_bits)
            spo.append(spo_bits)
            pcl_rows.append(tuple(pcl_row))
            spcl_rows.append(tuple(spcl_row))
    return BispaceTables(
        top, tuple(po), tuple(wpo), tuple(so), tuple(spo),
        tuple(pcl_rows), tuple(spcl_rows),
    )


# ---------------------------------------------------------------------------
# Subspace (trace) tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def trace_tables(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """trace_tables(n)[t][y] = (|y|, traced topology index at size |y|).

    y ranges over nonempty subsets; points of y are relabelled positionally,
    matching finite.trace_space.
    """
    top = topology_tables(n)
    out = []
    for t in range(top.count):
        row: list[tuple[int, int]] = [(0, -1)]  # y = 0 unused
        for y in range(1, 1 << n):
            points = [p for p in range(n) if (y >> p) & 1]
            sub_n = len(points)
            relabel = {p: i for i, p in enumerate(points)}
            traced = set()
            for o in top.opens[t]:
                m = 0
                for p in points:
                    if (o >> p) & 1:
                        m |= 1 << relabel[p]
                traced.add(m)
            canon = tuple(
                sorted(traced, key=lambda m: PointSet(sub_n, m).canonical_key())
            )
            row.append((sub_n, topology_tables(sub_n).index[canon]))
        out.append(tuple(row))
    return tuple(out)


def relabel_subset(a: int, y: int) -> int:
    """Rewrite subset a of y into the positional labels of y."""
    out = 0
    i = 0
    p = 0
    yy = y
    while yy:
        if yy & 1:
            if (a >> p) & 1:
                out |= 1 << i
            i += 1
        yy >>= 1
        p += 1
    return out


# ---------------------------------------------------------------------------
# Map tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MapTables:
    m: int
    k: int
    maps: tuple[tuple[int, ...], ...]        # assignment tuples
    img: tuple[tuple[int, ...], ...]         # per map, source mask -> target mask
    preim: tuple[tuple[int, ...], ...]       # per map, target mask -> source mask
    cont: tuple[tuple[int, ...], ...]        # per map, per source topology: topset of s
    openmap: tuple[tuple[int, ...], ...]     # same for image-of-open openness
    pm: tuple[tuple[int, ...], ...]          # per map, per target topology: maskset of open preimages
    pm_closed: tuple[tuple[int, ...], ...]   # same via closed sets and complements
    surjective: tuple[bool, ...]
    index: dict


@lru_cache(maxsize=None)
def map_tables(m: int, k: int) -> MapTables:
    top_m = topology_tables(m)
    top_k = topology_tables(k)
    full_m = top_m.full
    full_k = top_k.full
    maps = tuple(itertools.product(range(k), repeat=m))
    img_all, preim_all, cont_all, open_all = [], [], [], []
    pm_all, pmc_all, surj = [], [], []
    for assignment in maps:
        img_row = []
        for a in range(1 << m):
            v = 0
            for p in range(m):
                if (a >> p) & 1:
                    v |= 1 << assignment[p]
            img_row.append(v)
        preim_row = []
        for b in range(1 << k):
            v = 0
            for p in range(m):
                if (b >> assignment[p]) & 1:
                    v |= 1 << p
            preim_row.append(v)
        # distinct preimages of the opens of each target topology, as
        # masksets; pm_closed reroutes through closed sets (preimage of the
        # complement, then complement back) so the characterization suites
        # have an independently computed right-hand side
        pm_masks = []
        pmc_masks = []
        for s in range(top_k.count):
            bits = 0
            cbits = 0
            for v_open in top_k.opens[s]:
                bits |= 1 << preim_row[v_open]
                cbits |= 1 << (full_m ^ preim_row[full_k ^ v_open])
            pm_masks.append(bits)
            pmc_masks.append(cbits)
        im_masks = []
        for t in range(top_m.count):
            bits = 0
            for u in top_m.opens[t]:
                bits |= 1 << img_row[u]
            im_masks.append(bits)
        cont_row = []
        open_row = []
        for t in range(top_m.count):
            c_bits = 0
            o_bits = 0
            for s in range(top_k.count):
                if pm_masks[s] & ~top_m.openbits[t] == 0:
                    c_bits |= 1 << s
                if im_masks[t] & ~top_k.openbits[s] == 0:
                    o_bits |= 1 << s
            cont_row.append(c_bits)
            open_row.append(o_bits)
        img_all.append(tuple(img_row))
        preim_all.append(tuple(preim_row))
        cont_all.append(tuple(cont_row))
        open_all.append(tuple(open_row))
        pm_all.append(tuple(pm_masks))
        pmc_all.append(tuple(pmc_masks))
        surj.append(len(set(assignment)) == k)
    return MapTables(
        m,
        k,
        maps,
        tuple(img_all),
        tuple(preim_all),
        tuple(cont_all),
        tuple(open_all),
        tuple(pm_all),
        tuple(pmc_all),
        tuple(surj),
        {a: i for i, a in enumerate(maps)},
    )


@dataclass(frozen=True)
class ContinuityGrids:
    """Per-(map, source pair) topsets of target topologies, by hierarchy level.

    pc[f][pair]: s such that preimages of s-opens are (1,2)-preopen in pair;
    the (2,1) direction at (t1,t2) is pc at the swapped pair. sc and spc are
    the semiopen / semipreopen analogues; rhs_closed recomputes pc through
    closed sets for the characterization check.
    """

    pc: tuple[tuple[int, ...], ...]
    sc: tuple[tuple[int, ...], ...]
    spc: tuple[tuple[int, ...], ...]
    rhs_closed: tuple[tuple[int, ...], ...]
    sp_rhs_closed: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def continuity_grids(m: int, k: int) -> ContinuityGrids:
    mt = map_tables(m, k)
    bt = bispace_tables(m)
    s_count = topology_tables(k).count
    pair_count = bt.top.count ** 2
    pc_all, sc_all, spc_all, rhs_all, sp_rhs_all = [], [], [], [], []
    for f in range(len(mt.maps)):
        pm = mt.pm[f]
        pmc = mt.pm_closed[f]
        pc_rows, sc_rows, spc_rows, rhs_rows, sp_rhs_rows = [], [], [], [], []
        for pair in range(pair_count):
            not_po = ~bt.po[pair]
            not_so = ~bt.so[pair]
            not_spo = ~bt.spo[pair]
            pc_bits = sc_bits = spc_bits = rhs_bits = sp_rhs_bits = 0
            for s in range(s_count):
                bits = pm[s]
                cbits = pmc[s]
                if bits & not_po == 0:
                    pc_bits |= 1 << s
                if bits & not_so == 0:
                    sc_bits |= 1 << s
                if bits & not_spo == 0:
                    spc_bits |= 1 << s
                if cbits & not_po == 0:
                    rhs_bits |= 1 << s
                if cbits & not_spo == 0:
                    sp_rhs_bits |= 1 << s
            pc_rows.append(pc_bits)
            sc_rows.append(sc_bits)
            spc_rows.append(spc_bits)
            rhs_rows.append(rhs_bits)
            sp_rhs_rows.append(sp_rhs_bits)
        pc_all.append(tuple(pc_rows))
        sc_all.append(tuple(sc_rows))
        spc_all.append(tuple(spc_rows))
        rhs_all.append(tuple(rhs_rows))
        sp_rhs_all.append(tuple(sp_rhs_rows))
    return ContinuityGrids(
        tuple(pc_all), tuple(sc_all), tuple(spc_all),
        tuple(rhs_all), tuple(sp_rhs_all),
    )


# ---------------------------------------------------------------------------
# Net convergence tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def net_catalog(size: int, max_directed: int = 3) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """All (directed-set index, valuation) nets into a `size`-point carrier."""
    dsets = enumerate_directed_sets(max_directed)
    out = []
    for d_idx, d in enumerate(dsets):
        for values in itertools.product(range(size), repeat=d.size):
            out.append((d_idx, values))
    return tuple(out)


@lru_cache(maxsize=None)
def convergence_bits(size: int, max_directed: int = 3) -> tuple[int, ...]:
    """Per topology on `size` points: bits over (net index, limit point).

    Bit net_idx * size + x is set iff the net is eventually inside every
    open around x.
    """
    top = topology_tables(size)
    dsets = enumerate_directed_sets(max_directed)
    nets = net_catalog(size, max_directed)
    out = []
    for t in range(top.count):
        opens = top.opens[t]
        bits = 0
        for n_idx, (d_idx, values) in enumerate(nets):
            d = dsets[d_idx]
            above = [d.above(a) for a in range(d.size)]
            for x in range(size):
                ok = True
                for u in opens:
                    if not (u >> x) & 1:
                        continue
                    if not any(
                        all((u >> values[b]) & 1 for b in above[a])
                        for a in range(d.size)
                    ):
                        ok = False
                        break
                if ok:
                    bits |= 1 << (n_idx * size + x)
        out.append(bits)
    return tuple(out)
