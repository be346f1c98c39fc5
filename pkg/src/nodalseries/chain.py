"""Chains of torus-invariant curves built from exact minimal series.

An exact minimal series determines a chain with one component per ladder
index: the component carries the series' subspace there as its base point,
is either a fixed point or a genuine orbit curve in the Grassmannian, and
consecutive components glue at the shared boundary limit of their orbits.
The construction fails precisely where exactness fails, and the failing
pair it reports is the same pair the exactness check reports.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .curve import CurveModel, is_generalized_linear_series
from .delta import DeltaSet, consecutive_pairs
from .linalg import Subspace, format_rational
from .series import LimitLinearSeries, numerical_data
from .torus import (
    Direction,
    IntersectionHypothesisError,
    block_profile,
    is_fixed,
    limit,
    meeting_is_transverse,
    orbit_degree,
    orbit_intersection,
)


class ChainError(ValueError):
    """An operation received or produced a structurally invalid chain."""


class ChainBuildError(ChainError):
    """Chain construction failed; carries the first failing pair if any."""

    def __init__(self, message: str, failing_pair: tuple[Fraction, Fraction] | None = None):
        super().__init__(message)
        self.failing_pair = failing_pair


class ComponentKind(enum.Enum):
    FIXED = "fixed"
    ORBIT = "orbit"


@dataclass(frozen=True)
class ChainComponent:
    """One component of the chain: a base subspace and its orbit data.

    ``target_kind`` records where the component maps in the unsubdivided
    target chain: integer indices cover a whole component there, non-integer
    ones collapse to the node numbered by the ceiling of the index.
    """

    index: Fraction
    base_space: Subspace
    kind: ComponentKind
    target_kind: str  # "component" | "node"
    target_index: int
    grassmann_degree: int

    def __post_init__(self) -> None:
        if self.target_kind not in ("component", "node"):
            raise ChainError(f"unknown target kind {self.target_kind!r}")
        integer = self.index.denominator == 1
        if integer and self.target_kind != "component":
            raise ChainError("integer indices map onto a target component")
        if not integer and self.target_kind != "node":
            raise ChainError("non-integer indices collapse to a target node")
        if self.kind is ComponentKind.FIXED and not integer:
            raise ChainError("a fixed component is only allowed at an integer index")
        if (self.grassmann_degree == 0) != (self.kind is ComponentKind.FIXED):
            raise ChainError("degree zero exactly characterizes fixed components")


@dataclass(frozen=True)
class ContinuousChain:
    """The full chain: components in ladder order, glued nodes, Hilbert data."""

    model: CurveModel
    rank: int
    delta: DeltaSet
    components: tuple[ChainComponent, ...]
    nodes: tuple[Subspace, ...]
    hilbert: tuple[int, int, tuple[int, ...], int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        hilbert = self.hilbert
        object.__setattr__(
            self, "hilbert", (hilbert[0], hilbert[1], tuple(hilbert[2]), hilbert[3])
        )
        if len(self.components) != len(self.delta):
            raise ChainError("one component per ladder index is required")
        if tuple(c.index for c in self.components) != self.delta.indices:
            raise ChainError("components are not aligned with the ladder")
        if len(self.nodes) != max(len(self.delta) - 1, 0):
            raise ChainError("one glued node per consecutive pair is required")

    def component_at(self, i: Fraction) -> ChainComponent:
        return self.components[self.delta.position(i)]


def _component_for(model: CurveModel, i: Fraction, v: Subspace) -> ChainComponent:
    degree = orbit_degree(model.split, v)
    kind = ComponentKind.FIXED if degree == 0 else ComponentKind.ORBIT
    if i.denominator == 1:
        return ChainComponent(i, v, kind, "component", int(i), degree)
    return ChainComponent(i, v, kind, "node", -(-i.numerator // i.denominator), degree)


def build_chain(g: LimitLinearSeries) -> ContinuousChain:
    """Assemble the chain of an exact minimal series.

    Gluing is attempted pair by pair: the outgoing limit of each space must
    equal the incoming limit of the next one, which holds exactly when the
    linking equalities do. Afterwards minimality is enforced so that no
    non-integer component degenerates to a constant.
    """
    split = g.model.split
    nodes: list[Subspace] = []
    for i, j in consecutive_pairs(g.delta):
        outgoing = limit(split, g.space_at(i), Direction.INFINITY)
        incoming = limit(split, g.space_at(j), Direction.ZERO)
        if outgoing != incoming:
            raise ChainBuildError(
                f"gluing failed at the pair ({format_rational(i)}, {format_rational(j)}):"
                " the outgoing and incoming orbit limits differ, so the series"
                " is not exact there",
                failing_pair=(i, j),
            )
        nodes.append(outgoing)
    data = numerical_data(g)
    if not data.is_minimal():
        lazy = [
            format_rational(i)
            for i, m in zip(g.delta.indices, data.mobile)
            if i.denominator != 1 and m == 0
        ]
        raise ChainBuildError(
            "series is not minimal: non-integer indices "
            + ", ".join(lazy)
            + " carry no mobile dimension and would give constant components"
        )
    components = tuple(_component_for(g.model, i, v) for i, v in g.items())
    total_degree = sum(c.grassmann_degree for c in components)
    if total_degree != g.rank + 1:
        raise ChainBuildError(
            f"degree budget violated: component degrees sum to {total_degree},"
            f" expected {g.rank + 1}"
        )
    hilbert = (g.rank + 1, 0, (1,) * (g.model.d + 1), 1)
    return ContinuousChain(g.model, g.rank, g.delta, components, nodes, hilbert)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    failures: tuple[str, ...]


@dataclass(frozen=True)
class ChainValidationReport:
    gluing: CheckResult
    degree: CheckResult
    transversality: CheckResult
    weight_intervals: CheckResult
    membership: CheckResult

    @property
    def checks(self) -> tuple[CheckResult, ...]:
        return (
            self.gluing,
            self.degree,
            self.transversality,
            self.weight_intervals,
            self.membership,
        )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{c.name}: {'pass' if c.passed else 'FAIL'}")
            lines.extend(f"  - {f}" for f in c.failures)
        return "\n".join(lines)


def validate_chain(c: ContinuousChain) -> ChainValidationReport:
    """Re-derive every structural claim about the chain; reports, never throws."""
    split = c.model.split
    pairs = consecutive_pairs(c.delta)

    glue_failures: list[str] = []
    for (i, j), node in zip(pairs, c.nodes):
        left = limit(split, c.component_at(i).base_space, Direction.INFINITY)
        right = limit(split, c.component_at(j).base_space, Direction.ZERO)
        if not (left == node == right):
            glue_failures.append(
                f"node between {format_rational(i)} and {format_rational(j)}"
                " does not match both orbit limits"
            )

    degree_failures: list[str] = []
    recomputed_total = 0
    for comp in c.components:
        actual = orbit_degree(split, comp.base_space)
        recomputed_total += actual
        if actual != comp.grassmann_degree:
            degree_failures.append(
                f"component {format_rational(comp.index)} stores degree"
                f" {comp.grassmann_degree} but its orbit has degree {actual}"
            )
        actually_fixed = is_fixed(split, comp.base_space)
        if actually_fixed != (comp.kind is ComponentKind.FIXED):
            degree_failures.append(
                f"component {format_rational(comp.index)} is marked"
                f" {comp.kind.value} but is_fixed says {actually_fixed}"
            )
    if recomputed_total != c.rank + 1:
        degree_failures.append(
            f"orbit degrees sum to {recomputed_total}, expected {c.rank + 1}"
        )

    transversality_failures: list[str] = []
    for (i, j), node in zip(pairs, c.nodes):
        left = c.component_at(i)
        right = c.component_at(j)
        if left.kind is not ComponentKind.ORBIT or right.kind is not ComponentKind.ORBIT:
            continue
        try:
            point = orbit_intersection(split, left.base_space, right.base_space)
        except (IntersectionHypothesisError, ValueError) as exc:
            transversality_failures.append(
                f"pair ({format_rational(i)}, {format_rational(j)}): {exc}"
            )
            continue
        if point != node:
            transversality_failures.append(
                f"pair ({format_rational(i)}, {format_rational(j)}): orbit"
                " closures do not meet at the stored node"
            )
            continue
        if not meeting_is_transverse(split, left.base_space, right.base_space):
            transversality_failures.append(
                f"pair ({format_rational(i)}, {format_rational(j)}): tangent"
                " certificate failed at the node"
            )

    interval_failures: list[str] = []
    profiles = [block_profile(split, comp.base_space) for comp in c.components]
    if profiles:
        if profiles[0].onto_first.dim != c.rank + 1:
            interval_failures.append(
                f"first component reaches first-block dimension"
                f" {profiles[0].onto_first.dim}, expected {c.rank + 1}"
            )
        if profiles[-1].inside_first.dim != 0:
            interval_failures.append(
                f"last component ends at first-block dimension"
                f" {profiles[-1].inside_first.dim}, expected 0"
            )
    for (i, j), left, right in zip(pairs, profiles, profiles[1:]):
        if left.inside_first.dim != right.onto_first.dim:
            interval_failures.append(
                f"weight intervals at ({format_rational(i)}, {format_rational(j)})"
                f" do not meet end-to-start: {left.inside_first.dim} vs"
                f" {right.onto_first.dim}"
            )

    membership_failures: list[str] = []
    for comp in c.components:
        if not is_generalized_linear_series(c.model, comp.base_space, comp.index, c.rank):
            membership_failures.append(
                f"base space at {format_rational(comp.index)} is not an"
                f" (r+1)-dimensional subspace of its section space"
            )

    return ChainValidationReport(
        gluing=CheckResult("node gluing", not glue_failures, tuple(glue_failures)),
        degree=CheckResult("degree budget", not degree_failures, tuple(degree_failures)),
        transversality=CheckResult(
            "node transversality", not transversality_failures, tuple(transversality_failures)
        ),
        weight_intervals=CheckResult(
            "weight intervals", not interval_failures, tuple(interval_failures)
        ),
        membership=CheckResult(
            "section-space membership", not membership_failures, tuple(membership_failures)
        ),
    )


def evaluate_at_base_points(c: ContinuousChain) -> LimitLinearSeries:
    """Read the series back off the chain's base points."""
    return LimitLinearSeries(
        c.model, c.rank, c.delta, tuple(comp.base_space for comp in c.components)
    )


def hilbert_coefficients(c: ContinuousChain) -> tuple[int, int, tuple[int, ...], int]:
    """Recompute the chain's multivariate Hilbert data.

    Returns (total orbit degree, 0, per-target-component multiplicities, 1).
    Each multiplicity counts the chain components mapping onto one component
    of the target chain and must be exactly one; anything else means the
    chain is invalid and raises.
    """
    split = c.model.split
    total = sum(orbit_degree(split, comp.base_space) for comp in c.components)
    counts = [0] * (c.model.d + 1)
    for comp in c.components:
        if comp.target_kind == "component":
            counts[comp.target_index] += 1
    for t, count in enumerate(counts):
        if count != 1:
            raise ChainError(
                f"target component {t} is covered {count} times, expected exactly once"
            )
    return (total, 0, tuple(counts), 1)


def emit_dot(c: ContinuousChain) -> str:
    """Deterministic DOT digraph: components as nodes, glued nodes as edges.

    Component labels carry the index, kind and orbit degree; edge labels carry
    the block dimension profile of the glued subspace. Equal chains produce
    byte-identical output.
    """
    split = c.model.split
    lines = ["digraph chain {", "  rankdir=LR;"]
    for comp in c.components:
        name = format_rational(comp.index)
        shape = "box" if comp.kind is ComponentKind.FIXED else "ellipse"
        lines.append(
            f'  "{name}" [shape={shape} label="i={name}\\n{comp.kind.value}'
            f' deg={comp.grassmann_degree}"];'
        )
    for (i, j), node in zip(consecutive_pairs(c.delta), c.nodes):
        profile = block_profile(split, node)
        label = f"({profile.inside_first.dim}|{profile.inside_second.dim})"
        lines.append(
            f'  "{format_rational(i)}" -> "{format_rational(j)}" [label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
