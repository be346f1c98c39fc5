"""Level-delta limit linear series: linking conditions, numerical data,
minimal reduction, torus equivalence and projection to the integer ladder.

A series assigns to every index of a ladder a subspace of the concrete
section space there, all of one dimension r + 1. Consecutive spaces are
*compatible* when the second-block image of the earlier one sits inside the
second-block part of the later one and the first-block image of the later
one sits inside the first-block part of the earlier one; the series is
*exact* when both inclusions are equalities at every consecutive pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .curve import CurveModel, is_generalized_linear_series
from .delta import DeltaSet, NumericalData, build_delta, consecutive_pairs, support_subset
from .linalg import Subspace, pluecker
from .torus import act, meet_block, project_block, weight


@dataclass(frozen=True)
class LimitLinearSeries:
    """A ladder-indexed family of equal-dimensional subspaces of U1 + U2.

    The constructor enforces the structural shape (one space per index, all
    of dimension rank + 1 in the model's ambient space). Membership of each
    space in its section space is a semantic invariant established by the
    generators and the loaders; use :func:`membership_failures` to audit it,
    e.g. for hand-built candidates.
    """

    model: CurveModel
    rank: int
    delta: DeltaSet
    spaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "spaces", tuple(self.spaces))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.delta.d != self.model.d:
            raise ValueError("ladder degree does not match the model degree")
        if len(self.spaces) != len(self.delta):
            raise ValueError(
                f"expected one space per index ({len(self.delta)}), got {len(self.spaces)}"
            )
        for i, v in zip(self.delta.indices, self.spaces):
            if v.ambient_dim != self.model.ambient_dim:
                raise ValueError(f"space at index {i} lives in the wrong ambient space")
            if v.dim != self.rank + 1:
                raise ValueError(
                    f"space at index {i} has dimension {v.dim}, expected {self.rank + 1}"
                )

    def space_at(self, i: Fraction) -> Subspace:
        return self.spaces[self.delta.position(i)]

    def items(self) -> Iterator[tuple[Fraction, Subspace]]:
        return iter(zip(self.delta.indices, self.spaces))


@dataclass(frozen=True)
class LinkFailure:
    """One violated condition at a consecutive pair."""

    left: Fraction
    right: Fraction
    side: str  # "forward" (second-block condition) or "backward" (first-block)
    message: str


@dataclass(frozen=True)
class LinkReport:
    passed: bool
    failures: tuple[LinkFailure, ...]

    def first_failing_pair(self) -> tuple[Fraction, Fraction] | None:
        if not self.failures:
            return None
        return (self.failures[0].left, self.failures[0].right)


def _pair_blocks(g: LimitLinearSeries, i: Fraction, j: Fraction):
    split = g.model.split
    vi, vj = g.space_at(i), g.space_at(j)
    return (
        project_block(split, vi, 2),  # second-block image of the earlier space
        meet_block(split, vj, 2),  # second-block part of the later space
        project_block(split, vj, 1),  # first-block image of the later space
        meet_block(split, vi, 1),  # first-block part of the earlier space
    )


def check_compatible(g: LimitLinearSeries) -> LinkReport:
    """Both linking inclusions at every consecutive pair, with a report."""
    failures: list[LinkFailure] = []
    for i, j in consecutive_pairs(g.delta):
        fwd_img, fwd_ker, bwd_img, bwd_ker = _pair_blocks(g, i, j)
        if not fwd_ker.contains(fwd_img):
            failures.append(
                LinkFailure(
                    i, j, "forward",
                    f"second-block image at {i} (dim {fwd_img.dim}) is not inside"
                    f" the second-block part at {j} (dim {fwd_ker.dim})",
                )
            )
        if not bwd_ker.contains(bwd_img):
            failures.append(
                LinkFailure(
                    i, j, "backward",
                    f"first-block image at {j} (dim {bwd_img.dim}) is not inside"
                    f" the first-block part at {i} (dim {bwd_ker.dim})",
                )
            )
    return LinkReport(not failures, tuple(failures))


def check_exact(g: LimitLinearSeries) -> LinkReport:
    """Both linking equalities at every consecutive pair, with a report."""
    failures: list[LinkFailure] = []
    for i, j in consecutive_pairs(g.delta):
        fwd_img, fwd_ker, bwd_img, bwd_ker = _pair_blocks(g, i, j)
        if fwd_img != fwd_ker:
            failures.append(
                LinkFailure(
                    i, j, "forward",
                    f"second-block image at {i} has dim {fwd_img.dim} but the"
                    f" second-block part at {j} has dim {fwd_ker.dim}",
                )
            )
        if bwd_img != bwd_ker:
            failures.append(
                LinkFailure(
                    i, j, "backward",
                    f"first-block image at {j} has dim {bwd_img.dim} but the"
                    f" first-block part at {i} has dim {bwd_ker.dim}",
                )
            )
    return LinkReport(not failures, tuple(failures))


def numerical_data(g: LimitLinearSeries) -> NumericalData:
    """Block kernel dimensions at every index (uniformly, ends included)."""
    split = g.model.split
    down = []
    up = []
    for _, v in g.items():
        down.append(meet_block(split, v, 2).dim)
        up.append(meet_block(split, v, 1).dim)
    return NumericalData(g.rank, g.delta.indices, tuple(down), tuple(up))


def is_exact_via_sum(data: NumericalData) -> bool:
    """Counting form of exactness: mobile dimensions sum to rank + 1."""
    return data.is_exact()


def is_minimal(data: NumericalData) -> bool:
    """Positive mobile dimension at every non-integer index."""
    return data.is_minimal()


def membership_failures(g: LimitLinearSeries) -> tuple[Fraction, ...]:
    """Indices whose space leaves its section space (empty for valid series)."""
    return tuple(
        i
        for i, v in g.items()
        if not is_generalized_linear_series(g.model, v, i, g.rank)
    )


def reduce_minimal(g: LimitLinearSeries) -> LimitLinearSeries:
    """Forget the non-integer indices carrying no mobile dimension.

    Requires an exact input; the result is exact and minimal with the same
    degree and rank, and reducing again is the identity.
    """
    report = check_exact(g)
    if not report.passed:
        pair = report.first_failing_pair()
        raise ValueError(f"cannot reduce a non-exact series (first failing pair {pair})")
    reduced_delta, reindex = support_subset(g.delta, numerical_data(g))
    spaces = tuple(g.space_at(reindex[i]) for i in reduced_delta.indices)
    return LimitLinearSeries(g.model, g.rank, reduced_delta, spaces)


def _scaling_witness(g1: LimitLinearSeries, v1: Subspace, v2: Subspace) -> Fraction | None:
    """A nonzero c with act(c, v1) == v2, or None.

    Candidates come from ratios of matching Pluecker minors: scaling by c
    multiplies the minor at column set I by c**(-n1(I)), so two minors whose
    first-block weights differ by one determine c.
    """
    split = g1.model.split
    if v1.dim != v2.dim:
        return None
    p1 = pluecker(v1)
    p2 = pluecker(v2)
    support1 = {k for k, val in p1.items() if val != 0}
    support2 = {k for k, val in p2.items() if val != 0}
    if support1 != support2:
        return None
    base = min(support1)
    base_level = weight(split, base)[0]
    for cols in sorted(support1):
        level = weight(split, cols)[0]
        ratio = p2[cols] / p1[cols]
        if level == base_level + 1:
            candidate = 1 / ratio
        elif level == base_level - 1:
            candidate = ratio
        else:
            continue
        if candidate != 0 and act(split, candidate, v1) == v2:
            return candidate
    # No weight variation: v1 is fixed, so only the identity can work.
    if act(split, Fraction(1), v1) == v2:
        return Fraction(1)
    return None


def torus_equivalence_witnesses(
    g1: LimitLinearSeries, g2: LimitLinearSeries
) -> dict[Fraction, Fraction] | None:
    """Per-index scalings carrying g1 to g2, or None when none exist.

    Integer indices admit no rescaling (the witness there is forced to 1 and
    the spaces must agree on the nose); each non-integer index may be scaled
    independently.
    """
    if (g1.model, g1.rank, g1.delta) != (g2.model, g2.rank, g2.delta):
        raise ValueError("series live on different models, ranks or ladders")
    witnesses: dict[Fraction, Fraction] = {}
    for (i, v1), (_, v2) in zip(g1.items(), g2.items()):
        if i.denominator == 1:
            if v1 != v2:
                return None
            witnesses[i] = Fraction(1)
        else:
            c = _scaling_witness(g1, v1, v2)
            if c is None:
                return None
            witnesses[i] = c
    return witnesses


def torus_equivalent(g1: LimitLinearSeries, g2: LimitLinearSeries) -> bool:
    return torus_equivalence_witnesses(g1, g2) is not None


def project_level_one(g: LimitLinearSeries) -> LimitLinearSeries:
    """Restrict an exact series to the integer indices 0..d.

    The result is a compatible series on the unsubdivided ladder; its
    exactness is not asserted and may genuinely fail.
    """
    report = check_exact(g)
    if not report.passed:
        pair = report.first_failing_pair()
        raise ValueError(f"cannot project a non-exact series (first failing pair {pair})")
    ladder = build_delta(g.model.d, (1,) * g.model.d)
    spaces = tuple(g.space_at(Fraction(k)) for k in range(g.model.d + 1))
    projected = LimitLinearSeries(g.model, g.rank, ladder, spaces)
    if not check_compatible(projected).passed:
        raise AssertionError("integer restriction of an exact series must be compatible")
    return projected
