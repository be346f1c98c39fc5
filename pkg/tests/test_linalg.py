import random
from fractions import Fraction as F

import pytest

from nodalseries.linalg import (
    Matrix,
    Subspace,
    determinant,
    format_rational,
    kernel_basis,
    parse_rational,
    pluecker,
    rref,
    subspace_intersection,
    subspace_sum,
    zero_coordinate_section,
)
from nodalseries.oracle import minor_table, subspace_from_minors


def rows_of(m):
    return [list(r) for r in m.rows()]


def test_rref_diagonal_scaling():
    assert rows_of(rref(Matrix.from_rows([[2, 0], [0, 3]]))) == [[1, 0], [0, 1]]


def test_rref_dependent_rows_leave_zero_row():
    assert rows_of(rref(Matrix.from_rows([[1, 2], [2, 4]]))) == [[1, 2], [0, 0]]


def test_rref_hand_elimination():
    # swap to put the pivot first, already reduced afterwards
    assert rows_of(rref(Matrix.from_rows([[0, 1, 1], [1, 0, 1]]))) == [
        [1, 0, 1],
        [0, 1, 1],
    ]


def test_from_spanning_scaling():
    assert rows_of(Subspace.from_spanning(2, [(2, 0)]).basis) == [[1, 0]]


def test_from_spanning_duplicates():
    v = Subspace.from_spanning(3, [(1, 1, 0), (1, 1, 0)])
    assert v.dim == 1


def test_from_spanning_already_reduced():
    v = Subspace.from_spanning(4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    assert v.dim == 2
    assert rows_of(v.basis) == [[1, 0, 1, 0], [0, 1, 0, 1]]


def test_from_spanning_dimension_mismatch():
    with pytest.raises(ValueError):
        Subspace.from_spanning(3, [(1, 0)])


def test_canonicity_under_shuffle_and_scale():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 6)
        k = rng.randint(1, n)
        vectors = [
            [F(rng.randint(-5, 5)) for _ in range(n)] for _ in range(k + 1)
        ]
        v = Subspace.from_spanning(n, vectors)
        shuffled = vectors[:]
        rng.shuffle(shuffled)
        scaled = []
        for vec in shuffled:
            c = F(rng.randint(1, 7), rng.randint(1, 7))
            scaled.append([c * e for e in vec])
        # adding span-redundant combinations must not change the value either
        scaled.append([a + b for a, b in zip(scaled[0], scaled[-1])])
        assert Subspace.from_spanning(n, scaled) == v


def test_sum_idempotent_and_coordinate_axes():
    e1 = Subspace.from_spanning(2, [(1, 0)])
    e2 = Subspace.from_spanning(2, [(0, 1)])
    assert subspace_sum(e1, e1) == e1
    assert subspace_sum(e1, e2) == Subspace.full(2)


def test_sum_elimination_case():
    a = Subspace.from_spanning(2, [(1, 1)])
    b = Subspace.from_spanning(2, [(0, 1)])
    assert subspace_sum(a, b) == Subspace.full(2)


def test_intersection_examples():
    v = Subspace.from_spanning(3, [(1, 0, 0), (0, 1, 0)])
    assert subspace_intersection(v, Subspace.full(3)) == v
    e1 = Subspace.from_spanning(2, [(1, 0)])
    e2 = Subspace.from_spanning(2, [(0, 1)])
    assert subspace_intersection(e1, e2) == Subspace.zero(2)
    a = Subspace.from_spanning(3, [(1, 1, 0), (0, 0, 1)])
    b = Subspace.from_spanning(3, [(0, 1, 0), (0, 0, 1)])
    assert subspace_intersection(a, b) == Subspace.from_spanning(3, [(0, 0, 1)])


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        subspace_sum(Subspace.zero(2), Subspace.zero(3))


def test_modular_grassmann_identity():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randint(1, 7)
        a = Subspace.from_spanning(
            n, [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(rng.randint(0, n))]
        )
        b = Subspace.from_spanning(
            n, [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(rng.randint(0, n))]
        )
        assert a.dim + b.dim == subspace_sum(a, b).dim + subspace_intersection(a, b).dim


def test_pluecker_axis_line():
    v = Subspace.from_spanning(2, [(1, 0)])
    assert pluecker(v) == {(0,): F(1), (1,): F(0)}


def test_pluecker_diagonal_line_in_four_space():
    v = Subspace.from_spanning(4, [(1, 0, 1, 0)])
    coords = pluecker(v)
    assert coords[(0,)] == 1 and coords[(2,)] == 1
    assert all(val == 0 for cols, val in coords.items() if cols not in {(0,), (2,)})


def test_pluecker_two_plane_brute_force():
    # all six 2x2 minors of [[1,0,1,0],[0,1,0,1]] by hand
    v = Subspace.from_spanning(4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    assert pluecker(v) == {
        (0, 1): F(1),
        (0, 2): F(0),
        (0, 3): F(1),
        (1, 2): F(-1),
        (1, 3): F(0),
        (2, 3): F(1),
    }


def test_pluecker_normalization():
    v = Subspace.from_spanning(2, [(0, 1)])
    assert pluecker(v)[(1,)] == 1


def test_pluecker_determines_the_subspace():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(1, 7)
        k = rng.randint(0, min(4, n))
        v = Subspace.from_spanning(
            n, [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(k)]
        )
        assert subspace_from_minors(n, v.dim, pluecker(v)) == v
        # the independently computed minor table gives the same reconstruction
        assert subspace_from_minors(n, v.dim, minor_table(v)) == v


def test_determinant_matches_cofactor_oracle():
    rng = random.Random(41)
    from nodalseries.oracle import _cofactor_det

    for _ in range(80):
        n = rng.randint(0, 5)
        rows = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        assert determinant(Matrix.from_rows(rows, ncols=n)) == _cofactor_det(rows)


def test_kernel_basis_solves():
    m = Matrix.from_rows([[1, 2, 3], [0, 1, 1]])
    for vec in kernel_basis(m):
        for i in range(m.nrows):
            assert sum(a * b for a, b in zip(m.row(i), vec)) == 0


def test_zero_coordinate_section():
    v = Subspace.full(3)
    cut = zero_coordinate_section(v, [1])
    assert cut == Subspace.from_spanning(3, [(1, 0, 0), (0, 0, 1)])
    assert zero_coordinate_section(cut, []) == cut


def test_subspace_rejects_non_rref_basis():
    with pytest.raises(ValueError):
        Subspace(2, Matrix.from_rows([[2, 0]]))


def test_rational_formatting():
    assert format_rational(F(3, 1)) == "3"
    assert format_rational(F(-7, 2)) == "-7/2"
    assert parse_rational("-7/2") == F(-7, 2)
    assert parse_rational("5") == F(5)


def test_contains_vector_and_subspace():
    v = Subspace.from_spanning(3, [(1, 1, 0), (0, 0, 1)])
    assert v.contains_vector((2, 2, 5))
    assert not v.contains_vector((1, 0, 0))
    assert v.contains(Subspace.from_spanning(3, [(1, 1, 1)]))
    assert not Subspace.zero(3).contains(v)
