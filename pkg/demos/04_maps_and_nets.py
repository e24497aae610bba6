#!/usr/bin/env python3
"""Maps between bispaces: the continuity hierarchy, nets, condition C.

The star exhibit: a map that preserves closures of every representable set
yet fails continuity outright, something impossible between ordinary
topological spaces. Alongside: finite witnesses separating the continuity
grades, net convergence over finite directed sets, and the closure-image
identity that powers the convergence transfer.
"""

import json
from pathlib import Path

from bispacelab.catalog import build_example
from bispacelab.finite import PointSet, indiscrete_space, validate_space
from bispacelab.maps import (
    FiniteDirectedSet,
    FiniteMap,
    Net,
    check_closure_preservation,
    check_theorem_4_6,
    is_pairwise_continuous,
    is_pairwise_precontinuous,
    is_pairwise_sp_continuous,
    net_converges,
    satisfies_condition_C,
)
from bispacelab.props import Bispace

print("== closure preservation without continuity ==")
entry = build_example("ex-4.1")
f, bx, by = entry.map_, entry.bispace, entry.target_bispace
print("map:", f)
print("continuous:", is_pairwise_continuous(f, bx, by))
for name in ("rational-part", "irrational-part", "both-parts"):
    a = entry.named_sets[name]
    print(
        f"  image(closure({name})) inside closure(image): ",
        check_closure_preservation(f, bx.first, by.first, a),
    )
print("precontinuous anyway:", is_pairwise_precontinuous(f, bx, by))

print()
print("== finite witnesses separating the continuity grades ==")
fixtures = json.loads(
    (Path(__file__).parent.parent / "tests" / "data" / "hierarchy_witnesses.json").read_text()
)
for gap, w in fixtures.items():
    print(f"  {gap}: map {w['map']} on a {w['source_size']}-point carrier")

print()
print("== nets over finite directed sets ==")
space = validate_space(2, [PointSet.empty(2), PointSet.of(2, [0]), PointSet.full(2)])
chain = FiniteDirectedSet(2, [(0, 0), (1, 1), (0, 1)])
net = Net(chain, (1, 1))
print("net constantly at 1, tested at 0:", net_converges(space, net, 0))
print("net constantly at 1, tested at 1:", net_converges(space, net, 1))
print("any net converges anywhere indiscretely:", net_converges(indiscrete_space(2), net, 0))

print()
print("== the closure-image identity and convergence transfer ==")
ident = FiniteMap(2, 2, (0, 1))
bi = lambda s: Bispace(s, s)
print(
    "identity between indiscrete structures satisfies the identity:",
    satisfies_condition_C(ident, (1, 2), bi(indiscrete_space(2)), bi(indiscrete_space(2))),
)
collapse = FiniteMap(2, 2, (0, 0))
print(
    "a non-surjective map cannot (the whole-space instance forces surjectivity):",
    satisfies_condition_C(collapse, (1, 2), bi(indiscrete_space(2)), bi(indiscrete_space(2))),
)
moving = Net(chain, (0, 1))
print(
    "convergence transfers through the identity:",
    check_theorem_4_6(ident, (1, 2), bi(indiscrete_space(2)), bi(indiscrete_space(2)), moving, 0),
)
print("sp-continuity of the catalog map:", is_pairwise_sp_continuous(f, bx, by))
