"""Symbolic closed forms vs brute force over explicit finite models.

On an all-singleton universe every subset is countable, so the schematic
family is literally a finite open family and everything is brute-forceable.
The closed forms must agree with that model on every subset, predicate by
predicate. Mixed-cardinality universes get the trace-enumeration oracle for
the bespoke semiopen closed form.
"""

import random

import pytest

from bispacelab.symbolic import is_ij_semiopen_schematic

from helpers import (
    compare_singleton_universe,
    random_family,
    random_mixed_universe,
    trace_semiopen_oracle,
)

SEEDS = range(60)


@pytest.mark.parametrize("seed", SEEDS)
def test_singleton_universe_agreement(seed):
    assert compare_singleton_universe(seed) > 0


@pytest.mark.parametrize("seed", range(40))
def test_semiopen_closed_form_vs_trace_oracle(seed):
    rng = random.Random(1000 + seed)
    u = random_mixed_universe(rng)
    fam1 = random_family(rng, u)
    fam2 = random_family(rng, u)
    for a in u.algebra_sets():
        assert is_ij_semiopen_schematic(fam1, fam2, a) == trace_semiopen_oracle(
            fam1, fam2, a
        ), f"disagreement at {a!r} (seed {seed})"
        assert is_ij_semiopen_schematic(fam2, fam1, a) == trace_semiopen_oracle(
            fam2, fam1, a
        )


@pytest.mark.parametrize("seed", range(20))
def test_open_between_complete_on_mixed_universes(seed):
    """Absence answers from the closed form checked against member traces."""
    rng = random.Random(2000 + seed)
    u = random_mixed_universe(rng)
    fam = random_family(rng, u)
    from bispacelab.symbolic import iter_open_traces

    for a in u.algebra_sets():
        for b in u.algebra_sets():
            if not a.issubset(b):
                continue
            witness = fam.open_between(a, b)
            trace_exists = any(
                tr.contains_set(a) and tr.touched_atoms().issubset(b)
                for tr in iter_open_traces(fam)
            )
            assert (witness is not None) == trace_exists, (a, b)
            if witness is not None:
                assert fam.is_open(witness)
                assert a.issubset(witness) and witness.issubset(b)
