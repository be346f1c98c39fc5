"""Independent brute-force verification of orbit limits, degrees and chains.

This module deliberately avoids the block-profile machinery: limits and
degrees are recomputed from scratch by enumerating minors (with a cofactor
determinant of its own) and scaling them by their block weights, then
reconstructing the limiting subspace from the surviving Pluecker vector by
solving incidence conditions. Agreement with the structural formulas is
exact, with zero tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .chain import ComponentKind, ContinuousChain
from .curve import twisted_space_at
from .linalg import Subspace
from .torus import Direction, TorusSplit, act


def _cofactor_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    sign = 1
    for col in range(n):
        if rows[0][col] != 0:
            minor = [
                [row[c] for c in range(n) if c != col] for row in rows[1:]
            ]
            total += sign * rows[0][col] * _cofactor_det(minor)
        sign = -sign
    return total


def minor_table(v: Subspace) -> dict[tuple[int, ...], Fraction]:
    """Every dim(v)-sized minor of the basis, keyed by column index set."""
    rows = v.basis_rows()
    n = v.dim
    return {
        cols: _cofactor_det([[row[c] for c in cols] for row in rows])
        for cols in combinations(range(v.ambient_dim), n)
    }


def subspace_from_minors(
    ambient_dim: int, dim: int, minors: Mapping[tuple[int, ...], Fraction]
) -> Subspace:
    """Reconstruct a subspace from its Pluecker coordinates.

    For each column j outside a chosen base set I0 with nonzero minor, the
    incidence condition on the column set I0 + {j} expresses the j-th
    coordinate of any member vector through its coordinates on I0. Solving
    those conditions for the coordinate vectors on I0 yields a basis.
    """
    if dim == 0:
        return Subspace.zero(ambient_dim)
    base = None
    for cols in combinations(range(ambient_dim), dim):
        if minors.get(cols, Fraction(0)) != 0:
            base = cols
            break
    if base is None:
        raise ValueError("all minors vanish; not a Pluecker vector")
    base_value = minors[base]
    vectors = []
    for k in range(dim):
        vec = [Fraction(0)] * ambient_dim
        vec[base[k]] = Fraction(1)
        for j in range(ambient_dim):
            if j in base:
                continue
            joined = tuple(sorted(base + (j,)))
            sign_k = (-1) ** joined.index(base[k])
            sign_j = (-1) ** joined.index(j)
            dropped_k = tuple(c for c in joined if c != base[k])
            # 0 = sign_k * minors[joined minus base[k]] + sign_j * w_j * minors[base]
            vec[j] = -Fraction(sign_k, sign_j) * minors.get(dropped_k, Fraction(0)) / base_value
        vectors.append(vec)
    return Subspace.from_spanning(ambient_dim, vectors)


def limit_via_pluecker(split: TorusSplit, v: Subspace, direction: Direction) -> Subspace:
    """Orbit limit recomputed by Pluecker scaling.

    Scaling by the torus multiplies the minor at I by the inverse first-block
    weight power, so toward zero only the minors of maximal first-block
    weight survive, and toward infinity only those of minimal weight. The
    survivors form the Pluecker vector of the limiting subspace.
    """
    table = minor_table(v)
    weights = {
        cols: sum(1 for c in cols if c < split.dim1) for cols in table
    }
    support = [cols for cols, value in table.items() if value != 0]
    if direction is Direction.ZERO:
        kept = max(weights[cols] for cols in support)
    else:
        kept = min(weights[cols] for cols in support)
    survivors = {
        cols: (value if weights[cols] == kept else Fraction(0))
        for cols, value in table.items()
    }
    return subspace_from_minors(v.ambient_dim, v.dim, survivors)


def degree_via_pluecker(split: TorusSplit, v: Subspace) -> int:
    """Orbit degree recomputed as the spread of first-block minor weights."""
    table = minor_table(v)
    levels = [
        sum(1 for c in cols if c < split.dim1)
        for cols, value in table.items()
        if value != 0
    ]
    return max(levels) - min(levels)


@dataclass(frozen=True)
class OrbitSampleReport:
    passed: bool
    samples_per_component: int
    failures: tuple[str, ...]


def _random_torus_elements(rng: random.Random, count: int) -> list[Fraction]:
    out: set[Fraction] = set()
    while len(out) < count:
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9)
        if num != 0:
            out.add(Fraction(num, den))
    return sorted(out)


def sample_orbit_check(
    chain: ContinuousChain, samples_per_component: int, seed: int
) -> OrbitSampleReport:
    """Sample each component's orbit and verify it stays in the right fiber.

    For random torus elements x, the moved base space must lie inside the
    matching twisted section space, and on orbit components distinct x must
    give distinct points. Fixed components must not move at all.
    """
    rng = random.Random(seed)
    failures: list[str] = []
    for comp in chain.components:
        stream = random.Random(rng.getrandbits(64))
        xs = _random_torus_elements(stream, samples_per_component)
        seen: set[Subspace] = set()
        for x in xs:
            moved = act(chain.model.split, x, comp.base_space)
            ambient = twisted_space_at(chain.model, comp.index, x)
            if not ambient.contains(moved):
                failures.append(
                    f"component {comp.index}: sample x={x} leaves the twisted"
                    " section space"
                )
            seen.add(moved)
        if comp.kind is ComponentKind.ORBIT and len(seen) != len(xs):
            failures.append(
                f"component {comp.index}: {len(xs)} samples gave only"
                f" {len(seen)} distinct points on a moving orbit"
            )
        if comp.kind is ComponentKind.FIXED and seen != {comp.base_space}:
            failures.append(
                f"component {comp.index}: a fixed component moved under sampling"
            )
    return OrbitSampleReport(not failures, samples_per_component, tuple(failures))
