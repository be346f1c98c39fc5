import dataclasses
from fractions import Fraction as F

import pytest

from nodalseries.chain import (
    ChainBuildError,
    ChainError,
    ComponentKind,
    build_chain,
    emit_dot,
    evaluate_at_base_points,
    hilbert_coefficients,
    validate_chain,
)
from nodalseries.generate import random_exact_lls
from nodalseries.linalg import Subspace
from nodalseries.series import LimitLinearSeries, check_exact, torus_equivalent
from nodalseries.torus import act

from test_series import series_e4, series_e5


def test_build_chain_on_worked_example():
    chain = build_chain(series_e4())
    kinds = [(c.index, c.kind, c.grassmann_degree) for c in chain.components]
    assert kinds == [
        (F(0), ComponentKind.ORBIT, 1),
        (F(1), ComponentKind.FIXED, 0),
    ]
    assert chain.components[0].target_kind == "component"
    assert chain.components[1].target_index == 1
    # the glued node is the split space generated by (0, s)
    assert chain.nodes == (Subspace.from_spanning(4, [(0, 0, 0, 1)]),)
    assert chain.hilbert == (1, 0, (1, 1), 1)
    assert sum(c.grassmann_degree for c in chain.components) == chain.rank + 1


def test_build_chain_rejects_non_exact_with_the_failing_pair():
    report = check_exact(series_e5())
    with pytest.raises(ChainBuildError) as excinfo:
        build_chain(series_e5())
    assert excinfo.value.failing_pair == report.first_failing_pair()


def test_build_chain_rejects_non_minimal():
    from nodalseries.generate import pad_with_trivial_slots

    padded = pad_with_trivial_slots(series_e4(), (2,), seed=0)
    with pytest.raises(ChainBuildError) as excinfo:
        build_chain(padded)
    assert excinfo.value.failing_pair is None
    assert "not minimal" in str(excinfo.value)


def test_degree_zero_instance():
    g = random_exact_lls(0, 0, (), seed=0)
    chain = build_chain(g)
    assert len(chain.components) == 1
    assert chain.nodes == ()
    assert chain.components[0].grassmann_degree == 1  # rank + 1
    assert validate_chain(chain).passed
    assert hilbert_coefficients(chain) == (1, 0, (1,), 1)


def test_validate_chain_passes_on_built_chains():
    for seed, (d, r, delta) in enumerate([(2, 1, (2, 1)), (3, 2, (1, 2, 2)), (4, 2, (1, 1, 2, 1))]):
        chain = build_chain(random_exact_lls(d, r, delta, seed=seed))
        report = validate_chain(chain)
        assert report.passed, report.summary()


def test_validate_chain_detects_wrong_node():
    chain = build_chain(series_e4())
    wrong = Subspace.from_spanning(4, [(0, 1, 0, 0)])
    corrupted = dataclasses.replace(chain, nodes=(wrong,))
    report = validate_chain(corrupted)
    assert not report.gluing.passed
    assert not report.passed


def test_validate_chain_detects_scaled_integer_base():
    chain = build_chain(series_e4())
    comp = chain.components[0]
    moved = dataclasses.replace(comp, base_space=act(chain.model.split, F(2), comp.base_space))
    corrupted = dataclasses.replace(chain, components=(moved, chain.components[1]))
    report = validate_chain(corrupted)
    assert not report.membership.passed


def test_validate_chain_detects_degree_lie():
    chain = build_chain(series_e4())
    comp = chain.components[1]
    lying = dataclasses.replace(comp, kind=ComponentKind.ORBIT, grassmann_degree=1)
    corrupted = dataclasses.replace(chain, components=(chain.components[0], lying))
    report = validate_chain(corrupted)
    assert not report.degree.passed


def test_validate_transversality_on_adjacent_orbit_pairs():
    # two non-integer slots in the same gap force an orbit-orbit node
    g = random_exact_lls(3, 1, (1, 3, 1), seed=4)
    chain = build_chain(g)
    pair_kinds = [
        (a.kind, b.kind) for a, b in zip(chain.components, chain.components[1:])
    ]
    assert (ComponentKind.ORBIT, ComponentKind.ORBIT) in pair_kinds
    report = validate_chain(chain)
    assert report.passed, report.summary()


def test_evaluate_round_trip_on_the_nose():
    chain = build_chain(series_e4())
    assert evaluate_at_base_points(chain) == series_e4()


def test_round_trip_up_to_torus_scaling():
    g = random_exact_lls(3, 2, (2, 2, 1), seed=8)
    chain = build_chain(g)
    back = evaluate_at_base_points(chain)
    assert torus_equivalent(back, g)
    # scaling the base points on non-integer slots moves the chain's base
    # data but not its nodes or degrees
    scaled_spaces = tuple(
        act(g.model.split, F(5, 3), v) if i.denominator != 1 else v
        for i, v in g.items()
    )
    scaled = LimitLinearSeries(g.model, g.rank, g.delta, scaled_spaces)
    chain2 = build_chain(scaled)
    assert chain2.nodes == chain.nodes
    assert [c.grassmann_degree for c in chain2.components] == [
        c.grassmann_degree for c in chain.components
    ]


def test_hilbert_coefficients_follow_the_shape():
    g = random_exact_lls(3, 1, (1, 2, 1), seed=2)
    chain = build_chain(g)
    assert hilbert_coefficients(chain) == (2, 0, (1, 1, 1, 1), 1)


def test_hilbert_coefficients_reject_duplicate_cover():
    chain = build_chain(series_e4())
    retargeted = dataclasses.replace(chain.components[1], target_index=0)
    duplicated = dataclasses.replace(
        chain, components=(chain.components[0], retargeted)
    )
    with pytest.raises(ChainError):
        hilbert_coefficients(duplicated)


def test_emit_dot_is_deterministic_and_structured():
    chain = build_chain(series_e4())
    text = emit_dot(chain)
    assert text == emit_dot(build_chain(series_e4()))
    assert text.startswith("digraph chain {")
    assert text.count("->") == 1
    assert '"0"' in text and '"1"' in text
    dot0 = emit_dot(build_chain(random_exact_lls(0, 0, (), seed=0)))
    assert dot0.count("->") == 0


def test_component_consistency_is_enforced():
    with pytest.raises(ChainError):
        # fixed component at a non-integer index is never allowed
        from nodalseries.chain import ChainComponent

        ChainComponent(
            index=F(1, 2),
            base_space=Subspace.from_spanning(4, [(0, 1, 0, 0)]),
            kind=ComponentKind.FIXED,
            target_kind="node",
            target_index=1,
            grassmann_degree=0,
        )
