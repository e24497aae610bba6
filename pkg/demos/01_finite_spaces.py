#!/usr/bin/env python3
"""Finite carriers: explicit open families, closure, interior, enumeration.

On a finite carrier the countable-union axiom is no stronger than plain
union-closure, so these structures are ordinary finite topologies and
everything can be brute-forced. This demo builds a few spaces by hand,
shows the closure operators at work, and enumerates every structure on
small carriers.
"""

from bispacelab import (
    PointSet,
    SpaceAxiomError,
    enumerate_spaces,
    indiscrete_space,
    validate_space,
)

n = 2
empty = PointSet.empty(n)
whole = PointSet.full(n)
zero = PointSet.of(n, [0])
one = PointSet.of(n, [1])

print("== building spaces ==")
sierpinski = validate_space(n, [empty, zero, whole])
print("a valid space:", sierpinski)

try:
    validate_space(3, [[], [0], [1], [0, 1, 2]])
except SpaceAxiomError as e:
    print("a rejected family:", e.axiom, "->", e)

print()
print("== closure, interior, limit points ==")
print("indiscrete closure of {0}:", indiscrete_space(n).closure(zero))
print("sierpinski closure of {1}:", sierpinski.closure(one))
print("sierpinski interior of {1}:", sierpinski.interior(one))
print("sierpinski limit points of {0}:", sierpinski.limit_points(zero))

for s in (zero, one, whole):
    cl = sierpinski.closure(s)
    assert s.issubset(cl) and sierpinski.closure(cl) == cl
    assert cl == s | sierpinski.limit_points(s)
print("closure laws verified on all shown sets")

print()
print("== enumerating every structure ==")
for size in (1, 2, 3, 4):
    count = sum(1 for _ in enumerate_spaces(size))
    print(f"carrier of {size} point(s): {count} open-set structures")

print()
print("the four structures on two points:")
for space in enumerate_spaces(2):
    print("  ", space)
