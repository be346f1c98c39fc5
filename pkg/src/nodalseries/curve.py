"""Concrete section-space model for two rational curves glued at one point.

The total space of sections is U1 + U2, where U1 holds polynomials of degree
at most d in a local coordinate t at the node on the first component, and U2
holds polynomials of degree at most d in a local coordinate s at the node on
the second component (the basis s^j spans the sections allowed a pole of
order j at the far point, i.e. U2 models the degree-d twist on that side).

Twisting i steps trades degree between the components. At a non-integer
index the space of sections splits as a flag on each side with no condition
at the node; at an integer index a single gluing condition matches the
leading coefficients: coeff of t^i equals coeff of s^(d-i). Every section
space has dimension d + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Rational, Subspace
from .torus import TorusSplit, act


@dataclass(frozen=True)
class CurveModel:
    """Fixes the degree d and with it the ambient U1 + U2 and its block split."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def split(self) -> TorusSplit:
        return TorusSplit(self.d + 1, self.d + 1)

    @property
    def ambient_dim(self) -> int:
        return 2 * self.d + 2

    def t_coord(self, power: int) -> int:
        """Ambient coordinate of t^power in the first block."""
        if not 0 <= power <= self.d:
            raise ValueError(f"t^{power} is not a basis monomial for degree {self.d}")
        return power

    def s_coord(self, power: int) -> int:
        """Ambient coordinate of s^power in the second block."""
        if not 0 <= power <= self.d:
            raise ValueError(f"s^{power} is not a basis monomial for degree {self.d}")
        return self.d + 1 + power

    def first_flag_coords(self, level: int) -> tuple[int, ...]:
        """Coordinates of the first-block flag: t-vanishing order >= level."""
        return tuple(self.t_coord(j) for j in range(level, self.d + 1))

    def second_flag_coords(self, level: int) -> tuple[int, ...]:
        """Coordinates of the second-block flag allowing pole order <= level."""
        return tuple(self.s_coord(j) for j in range(self.d - level, self.d + 1))


@dataclass(frozen=True)
class SectionSpace:
    """Ambient space of sections available at one index of the twist ladder."""

    index: Fraction
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def section_space(model: CurveModel, i: Rational) -> SectionSpace:
    """Sections of the i-step twist, as a subspace of U1 + U2.

    Non-integer i: the direct sum of the first-block flag at level ceil(i)
    and the second-block flag at level floor(i); no gluing. Integer i: inside
    the level-i flags, the kernel of the node condition
    coeff(t^i) = coeff(s^(d-i)). Either way the dimension is d + 1.
    """
    i = Fraction(i)
    if i < 0 or i > model.d:
        raise ValueError(f"index {i} outside [0, {model.d}]")
    n = model.ambient_dim
    rows: list[list[Fraction]] = []

    def unit(coord: int) -> list[Fraction]:
        row = [Fraction(0)] * n
        row[coord] = Fraction(1)
        return row

    if i.denominator == 1:
        level = int(i)
        for j in range(level + 1, model.d + 1):
            rows.append(unit(model.t_coord(j)))
        for j in range(model.d - level + 1, model.d + 1):
            rows.append(unit(model.s_coord(j)))
        glue = unit(model.t_coord(level))
        glue[model.s_coord(model.d - level)] = Fraction(1)
        rows.append(glue)
    else:
        for j in range(math.ceil(i), model.d + 1):
            rows.append(unit(model.t_coord(j)))
        for j in range(model.d - math.floor(i), model.d + 1):
            rows.append(unit(model.s_coord(j)))
    return SectionSpace(i, Subspace.from_spanning(n, rows))


def twisted_space_at(model: CurveModel, i: Rational, x: Rational) -> Subspace:
    """Ambient section space at the point x of the orbit through index i.

    The torus moves the glued integer-index spaces and fixes the split
    non-integer ones; x = 1 recovers ``section_space`` itself.
    """
    return act(model.split, x, section_space(model, i).subspace)


def is_generalized_linear_series(
    model: CurveModel, v: Subspace, i: Rational, expected_r: int
) -> bool:
    """Membership test: v sits inside the i-th section space with dim r + 1."""
    if expected_r < 0:
        return False
    if v.ambient_dim != model.ambient_dim:
        return False
    if v.dim != expected_r + 1:
        return False
    return section_space(model, i).subspace.contains(v)
