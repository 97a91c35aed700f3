from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusloc import linalg
from torusloc.weights import Lattice, Projection, Weight, as_weight, gcd_of, lattice_contains, primitive_part, project, unimodular_to_axis

HALF = Fraction(1, 2)
vectors = st.lists(st.integers(-20, 20), min_size=1, max_size=5)


def test_weight_arithmetic():
    a, b = Weight([1, 2, 3]), Weight([HALF, 0, -1])
    assert a + b == Weight([Fraction(3, 2), 2, 2])
    assert a - a == Weight.zero(3)
    assert (a * 2) / 2 == a
    assert a.dot(b) == Fraction(-5, 2)
    assert b.norm2() == Fraction(5, 4)
    assert not b.is_integral() and a.is_integral()
    assert Weight.unit(3, 1, 2) == Weight([0, 2, 0])


def test_weight_rank_mismatch():
    with pytest.raises(ValueError):
        Weight([1, 2]) + Weight([1, 2, 3])


def test_weight_json_round_trip():
    w = Weight([HALF, -3, 0])
    assert Weight.from_json(w.to_json()) == w


def test_bd_lattice_membership():
    m = Lattice(3, [Weight.unit(3, i) for i in range(3)] + [Weight([HALF] * 3)])
    assert m.contains(Weight([HALF, HALF, -HALF]))
    assert not m.contains(Weight([HALF, HALF, 0]))
    assert lattice_contains(m, [1, 0, 0])
    assert m.dim == 3
    assert Lattice.standard(3).index_in(m) == 2


def test_lattice_coordinates_round_trip():
    m = Lattice(2, [[2, 0], [1, 1]])
    for w in ([3, 1], [4, 2], [-1, 1]):
        c = m.coordinates(Weight(w))
        assert m.from_coordinates(c) == Weight(w)
    assert m.contains(Weight([3, 1])) and not m.contains(Weight([1, 0]))


def test_lattice_outside_span():
    m = Lattice(3, [[1, -1, 0], [0, 1, -1]])
    assert m.coordinates(Weight([1, 0, 0])) is None
    assert m.contains(Weight([1, 0, -1]))
    with pytest.raises(ValueError):
        Lattice(2, [[1, 2, 3]])


def test_lattice_json_round_trip():
    m = Lattice(2, [[HALF, HALF], [1, 0]])
    assert Lattice.from_json(m.to_json()).basis == m.basis


def test_projection_kernel_is_computed():
    p = Projection([[1, 1, 0], [1, 0, 1]])
    assert len(p.kernel_basis) == 1
    k = p.kernel_basis[0]
    assert project(p, k).is_zero()
    assert p(Weight([1, 0, 0])) == Weight([1, 1])
    assert p.source_rank == 3 and p.target_rank == 2


def test_projection_rejects_bad_kernel():
    with pytest.raises(ValueError):
        Projection([[1, 0]], kernel_basis=[[1, 0]])


def test_identity_projection():
    p = Projection.identity(3)
    assert p(Weight([1, 2, 3])) == Weight([1, 2, 3])
    assert p.kernel_basis == ()


@given(vectors)
def test_unimodular_to_axis(v):
    if not any(v):
        with pytest.raises(ValueError):
            unimodular_to_axis(v)
        return
    u = unimodular_to_axis(v)
    assert abs(linalg.det(u)) == 1
    prim = primitive_part(v)
    image = [sum(a * b for a, b in zip(row, prim)) for row in u]
    assert image == [1] + [0] * (len(v) - 1)


@given(vectors)
def test_primitive_part_and_gcd(v):
    if not any(v):
        return
    g = gcd_of(v)
    assert primitive_part(v) * g == as_weight(v)
    assert gcd_of(primitive_part(v).ints()) == 1
