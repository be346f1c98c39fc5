"""One-parameter torus action on Grass(n, W1 + W2) and its orbit geometry.

The ambient space splits into two coordinate blocks; the torus scales the
first block by 1/x and fixes the second. Orbit closures of nonfixed points
are rational curves whose boundary points, degree and weight profile are all
computed structurally from four block invariants of the moving subspace:
its intersection with each block and its projection onto each block.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Rational, Subspace, pluecker, zero_coordinate_section


class IntersectionHypothesisError(ValueError):
    """Raised when orbit closures are compared outside the supported regime."""


@dataclass(frozen=True)
class TorusSplit:
    """Ambient block decomposition: first-block coordinates come first."""

    dim1: int
    dim2: int

    def __post_init__(self) -> None:
        if self.dim1 < 0 or self.dim2 < 0:
            raise ValueError("block dimensions must be nonnegative")
        if self.dim1 + self.dim2 == 0:
            raise ValueError("ambient dimension must be positive")

    @property
    def ambient_dim(self) -> int:
        return self.dim1 + self.dim2

    def block_coords(self, block: int) -> range:
        if block == 1:
            return range(0, self.dim1)
        if block == 2:
            return range(self.dim1, self.ambient_dim)
        raise ValueError("block must be 1 or 2")


@dataclass(frozen=True)
class BlockProfile:
    """The four block invariants of a subspace of W1 + W2.

    ``inside_*`` is the part of the subspace lying entirely in one block
    (reported inside that block); ``onto_*`` is its projection to the block.
    Always inside_first <= onto_first, inside_second <= onto_second, and
    dim V = dim inside_first + dim onto_second = dim onto_first + dim inside_second.
    """

    inside_first: Subspace
    inside_second: Subspace
    onto_first: Subspace
    onto_second: Subspace


class Direction(enum.Enum):
    ZERO = "zero"
    INFINITY = "infinity"


def _check_member(split: TorusSplit, v: Subspace) -> None:
    if v.ambient_dim != split.ambient_dim:
        raise ValueError(
            f"subspace lives in Q^{v.ambient_dim}, split expects Q^{split.ambient_dim}"
        )


def act(split: TorusSplit, x: Rational, v: Subspace) -> Subspace:
    """Image of v under the torus element x: first block scales by 1/x."""
    _check_member(split, v)
    x = Fraction(x)
    if x == 0:
        raise ValueError("torus elements are nonzero")
    inv = 1 / x
    rows = [
        tuple(e * inv for e in row[: split.dim1]) + row[split.dim1 :]
        for row in v.basis_rows()
    ]
    return Subspace.from_spanning(split.ambient_dim, rows)


def project_block(split: TorusSplit, v: Subspace, block: int) -> Subspace:
    """Projection of v onto a block, as a subspace of that block."""
    _check_member(split, v)
    coords = split.block_coords(block)
    rows = [tuple(row[c] for c in coords) for row in v.basis_rows()]
    return Subspace.from_spanning(len(coords), rows)


def meet_block(split: TorusSplit, v: Subspace, block: int) -> Subspace:
    """Intersection of v with a block, reported inside that block."""
    _check_member(split, v)
    other = split.block_coords(2 if block == 1 else 1)
    section = zero_coordinate_section(v, other)
    coords = split.block_coords(block)
    rows = [tuple(row[c] for c in coords) for row in section.basis_rows()]
    return Subspace.from_spanning(len(coords), rows)


def embed_block(split: TorusSplit, s: Subspace, block: int) -> Subspace:
    """A block subspace viewed inside the ambient space."""
    coords = split.block_coords(block)
    if s.ambient_dim != len(coords):
        raise ValueError("subspace does not live in the requested block")
    rows = []
    for row in s.basis_rows():
        vec = [Fraction(0)] * split.ambient_dim
        for c, e in zip(coords, row):
            vec[c] = e
        rows.append(vec)
    return Subspace.from_spanning(split.ambient_dim, rows)


def assemble_split_subspace(split: TorusSplit, s1: Subspace, s2: Subspace) -> Subspace:
    """The direct sum of a first-block and a second-block subspace."""
    return embed_block(split, s1, 1) + embed_block(split, s2, 2)


def block_profile(split: TorusSplit, v: Subspace) -> BlockProfile:
    return BlockProfile(
        inside_first=meet_block(split, v, 1),
        inside_second=meet_block(split, v, 2),
        onto_first=project_block(split, v, 1),
        onto_second=project_block(split, v, 2),
    )


def is_fixed(split: TorusSplit, v: Subspace) -> bool:
    """True when v is a fixed point, i.e. splits as (v meet W1) + (v meet W2)."""
    _check_member(split, v)
    return (
        meet_block(split, v, 1).dim + meet_block(split, v, 2).dim == v.dim
    )


def limit(split: TorusSplit, v: Subspace, direction: Direction) -> Subspace:
    """Boundary point of the orbit closure of v in the given direction.

    Toward zero the first-block projection survives together with the part of
    v inside the second block; toward infinity the roles swap. Fixed points
    are their own limits.
    """
    profile = block_profile(split, v)
    if direction is Direction.ZERO:
        return assemble_split_subspace(split, profile.onto_first, profile.inside_second)
    if direction is Direction.INFINITY:
        return assemble_split_subspace(split, profile.inside_first, profile.onto_second)
    raise ValueError(f"unknown direction {direction!r}")


def orbit_degree(split: TorusSplit, v: Subspace) -> int:
    """Degree of the orbit closure of v in the Grassmannian; 0 iff fixed."""
    profile = block_profile(split, v)
    return profile.onto_first.dim - profile.inside_first.dim


def weight(split: TorusSplit, cols: tuple[int, ...]) -> tuple[int, int]:
    """How many of the given ambient columns lie in each block."""
    first = sum(1 for c in cols if c < split.dim1)
    return (first, len(cols) - first)


def orbit_weight_profile(split: TorusSplit, v: Subspace) -> set[tuple[int, int]]:
    """Block weights (n1, n2) of the nonzero Pluecker minors of v.

    The first coordinates always form a gap-free integer interval
    [dim(v meet W1), dim(projection of v to W1)].
    """
    _check_member(split, v)
    return {
        weight(split, cols)
        for cols, value in pluecker(v).items()
        if value != 0
    }


def orbit_intersection(split: TorusSplit, v: Subspace, vp: Subspace) -> Subspace | None:
    """Common point of the two orbit closures, or None when they are disjoint.

    Supported regime: both subspaces nonfixed of equal dimension, and either
    the first-block projection of vp equals the first-block part of v, or the
    second-block part of v equals the second-block projection of vp. In that
    regime the closures meet in at most one point, a fixed point which is a
    shared boundary limit of both orbits.
    """
    _check_member(split, v)
    _check_member(split, vp)
    if v.dim != vp.dim:
        raise ValueError("orbit intersection needs subspaces of equal dimension")
    if is_fixed(split, v) or is_fixed(split, vp):
        raise ValueError("orbit intersection needs nonfixed subspaces")
    pv = block_profile(split, v)
    pvp = block_profile(split, vp)
    forward = pvp.onto_first == pv.inside_first
    mirrored = pvp.onto_second == pv.inside_second
    if not (forward or mirrored):
        raise IntersectionHypothesisError(
            "neither block condition links the two orbits; the dichotomy is"
            " only available when one orbit ends where the other begins"
        )
    if forward and pv.onto_second == pvp.inside_second:
        return assemble_split_subspace(split, pv.inside_first, pv.onto_second)
    if mirrored and pv.onto_first == pvp.inside_first:
        return assemble_split_subspace(split, pv.onto_first, pv.inside_second)
    return None


def meeting_is_transverse(split: TorusSplit, v: Subspace, vp: Subspace) -> bool:
    """First-order certificate that the two orbit closures meet transversally.

    At the shared point the curves' tangent vectors are read off from the
    first-order terms of their Pluecker coordinates; these live in distinct
    weight levels of the block grading, so the certificate checks that both
    first-order terms are nonzero and their weight levels differ.
    """
    point = orbit_intersection(split, v, vp)
    if point is None:
        raise ValueError("orbits do not meet; no transversality to certify")
    v_weights = {weight(split, c)[0] for c, val in pluecker(v).items() if val != 0}
    vp_weights = {weight(split, c)[0] for c, val in pluecker(vp).items() if val != 0}
    pv = block_profile(split, v)
    pvp = block_profile(split, vp)
    if pvp.onto_first == pv.inside_first:
        # v ends (toward infinity) where vp begins (toward zero).
        end_level = min(v_weights)
        start_level = max(vp_weights)
        ending_tangent = end_level + 1 in v_weights
        starting_tangent = start_level - 1 in vp_weights
    else:
        # Mirrored linking: vp ends where v begins.
        end_level = min(vp_weights)
        start_level = max(v_weights)
        ending_tangent = end_level + 1 in vp_weights
        starting_tangent = start_level - 1 in v_weights
    # The first-order terms sit at weight levels end+1 and start-1; when the
    # levels agree at the point (end == start) those are eigenvectors for
    # distinct torus weights, hence independent once both are nonzero.
    return ending_tangent and starting_tangent and end_level == start_level
