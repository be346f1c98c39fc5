import dataclasses
import random
from fractions import Fraction as F

import pytest

from nodalseries.chain import build_chain
from nodalseries.generate import random_exact_lls, random_subspace
from nodalseries.linalg import Subspace
from nodalseries.oracle import (
    degree_via_pluecker,
    limit_via_pluecker,
    minor_table,
    sample_orbit_check,
    subspace_from_minors,
)
from nodalseries.torus import Direction, TorusSplit, is_fixed, limit, orbit_degree

SPLIT22 = TorusSplit(2, 2)


def test_limit_via_pluecker_fixed_point():
    v = Subspace.from_spanning(4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    for direction in Direction:
        assert limit_via_pluecker(SPLIT22, v, direction) == v


def test_limit_via_pluecker_diagonal_line():
    # two nonzero minors with first-block weights 1 and 0; toward zero the
    # heavy one survives
    v = Subspace.from_spanning(4, [(1, 0, 1, 0)])
    assert limit_via_pluecker(SPLIT22, v, Direction.ZERO) == Subspace.from_spanning(
        4, [(1, 0, 0, 0)]
    )
    assert limit_via_pluecker(SPLIT22, v, Direction.INFINITY) == Subspace.from_spanning(
        4, [(0, 0, 1, 0)]
    )


def test_degree_via_pluecker_examples():
    assert degree_via_pluecker(SPLIT22, Subspace.from_spanning(4, [(1, 0, 0, 0)])) == 0
    assert (
        degree_via_pluecker(SPLIT22, Subspace.from_spanning(4, [(1, 0, 1, 0), (0, 1, 0, 1)]))
        == 2
    )


def test_oracle_agrees_with_structural_path():
    rng = random.Random(51)
    for _ in range(120):
        d1, d2 = rng.randint(0, 4), rng.randint(0, 4)
        if d1 + d2 == 0:
            continue
        split = TorusSplit(d1, d2)
        v = random_subspace(split.ambient_dim, rng.randint(0, min(4, d1 + d2)), rng)
        for direction in Direction:
            assert limit(split, v, direction) == limit_via_pluecker(split, v, direction)
        assert orbit_degree(split, v) == degree_via_pluecker(split, v)


def test_subspace_from_minors_rejects_zero_vector():
    with pytest.raises(ValueError):
        subspace_from_minors(3, 1, {(0,): F(0), (1,): F(0), (2,): F(0)})


def test_minor_table_full_enumeration():
    v = Subspace.from_spanning(4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    table = minor_table(v)
    assert len(table) == 6
    assert table[(0, 1)] == 1 and table[(1, 2)] == -1 and table[(0, 2)] == 0


def test_sample_orbit_check_passes_on_built_chain():
    chain = build_chain(random_exact_lls(2, 1, (2, 1), seed=6))
    report = sample_orbit_check(chain, samples_per_component=20, seed=0)
    assert report.passed, report.failures


def test_sample_orbit_check_flags_corrupted_base():
    chain = build_chain(random_exact_lls(2, 1, (1, 1), seed=6))
    target = None
    for k, comp in enumerate(chain.components):
        if not is_fixed(chain.model.split, comp.base_space):
            target = k
            break
    comp = chain.components[target]
    rows = list(comp.base_space.basis_rows())
    rows[0] = tuple(e + 1 for e in rows[0])
    broken_space = Subspace.from_spanning(chain.model.ambient_dim, rows)
    broken = dataclasses.replace(comp, base_space=broken_space)
    components = list(chain.components)
    components[target] = broken
    corrupted = dataclasses.replace(chain, components=tuple(components))
    report = sample_orbit_check(corrupted, samples_per_component=10, seed=0)
    assert not report.passed
    assert any("leaves the twisted" in msg for msg in report.failures)


def test_sample_orbit_check_accepts_fixed_components():
    chain = build_chain(random_exact_lls(1, 0, (1,), seed=1))
    kinds = {c.kind.value for c in chain.components}
    assert "fixed" in kinds
    report = sample_orbit_check(chain, samples_per_component=8, seed=3)
    assert report.passed
