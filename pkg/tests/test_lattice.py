"""Divisor classes, gram validation and exact intersection arithmetic."""

import random

import pytest

from k3acm import (BadDimensionsError, DegenerateFormError,
                   DimensionMismatchError, DivClass, Lattice,
                   NonPositiveAmpleError, NonSymmetricError,
                   OddK3DiagonalError, PreconditionError, WrongSignatureError)
from k3acm.casework import delpezzo_lattice, quartic_lattice


def test_divclass_arithmetic():
    u = DivClass((3, -2))
    v = DivClass((1, 1))
    assert (u + v).coords == (4, -1)
    assert (u - v).coords == (2, -3)
    assert (-u).coords == (-3, 2)
    assert (2 * u).coords == (6, -4)
    assert (u * 2).coords == (6, -4)
    assert not u.is_zero()
    assert DivClass((0, 0, 0)).is_zero()
    assert len(u) == 2
    assert str(u) == "(3, -2)"


def test_divclass_is_hashable_and_comparable():
    assert DivClass((1, 0)) == DivClass([1, 0])
    assert len({DivClass((1, 0)), DivClass((1, 0)), DivClass((0, 1))}) == 2


def test_gram_must_be_square_and_symmetric():
    with pytest.raises(BadDimensionsError):
        Lattice(gram=[[4, 1]], labels=("h",), ample=DivClass((1,)))
    with pytest.raises(NonSymmetricError):
        Lattice(gram=[[4, 1], [2, -2]], labels=("h", "B"),
                ample=DivClass((1, 0)))


def test_labels_and_ample_are_validated():
    with pytest.raises(BadDimensionsError):
        Lattice(gram=[[4, 1], [1, -2]], labels=("h",), ample=DivClass((1, 0)))
    with pytest.raises(BadDimensionsError):
        Lattice(gram=[[4, 1], [1, -2]], labels=("h", "h"),
                ample=DivClass((1, 0)))
    with pytest.raises(BadDimensionsError):
        Lattice(gram=[[4, 1], [1, -2]], labels=("h", "B"),
                ample=DivClass((1, 0, 0)))
    with pytest.raises(NonPositiveAmpleError):
        Lattice(gram=[[4, 1], [1, -2]], labels=("h", "B"),
                ample=DivClass((0, 1)))


def test_k3_surface_checks():
    with pytest.raises(OddK3DiagonalError):
        Lattice(gram=[[4, 1], [1, 3]], labels=("h", "B"),
                ample=DivClass((1, 0)), k3=True)
    # positive definite rank 2 is not a K3 sublattice
    with pytest.raises(WrongSignatureError):
        Lattice(gram=[[4, 0], [0, 2]], labels=("h", "B"),
                ample=DivClass((1, 0)), k3=True)
    # the same data is fine once the surface checks are off
    lat = Lattice(gram=[[4, 0], [0, 2]], labels=("h", "B"),
                  ample=DivClass((1, 0)), k3=False)
    assert lat.signature() == (2, 0)


def test_quartic_pairings():
    lat = quartic_lattice(-2, 1)
    h, b = lat.basis()
    assert lat.pair(h, h) == 4
    assert lat.pair(b, b) == -2
    assert lat.pair(h, b) == 1
    c = DivClass((3, -2))
    assert lat.self_int(c) == 16
    assert lat.deg(c) == 10
    assert lat.pair(c, h - b) == 3


def test_basis_reproduces_gram():
    lat = delpezzo_lattice()
    basis = lat.basis()
    for i in range(lat.rank):
        for j in range(lat.rank):
            assert lat.pair(basis[i], basis[j]) == lat.gram[i][j]


def test_dimension_mismatch():
    lat = quartic_lattice(0, 4)
    with pytest.raises(DimensionMismatchError):
        lat.pair(DivClass((1, 0, 0)), DivClass((0, 1)))


def test_signature_diagonal_and_hyperbolic():
    assert delpezzo_lattice().signature() == (1, 7)
    hyp = Lattice(gram=[[0, 1], [1, 0]], labels=("u", "v"),
                  ample=DivClass((1, 1)))
    assert hyp.signature() == (1, 1)
    assert quartic_lattice(-2, 2).signature() == (1, 1)


def test_signature_rejects_degenerate_forms():
    lat = Lattice(gram=[[4, 4], [4, 4]], labels=("h", "B"),
                  ample=DivClass((1, 0)))
    with pytest.raises(DegenerateFormError):
        lat.signature()


def test_evenness():
    assert quartic_lattice(2, 5).is_even()
    assert delpezzo_lattice().is_even()
    odd = Lattice(gram=[[4, 1], [1, 3]], labels=("h", "B"),
                  ample=DivClass((1, 0)))
    assert not odd.is_even()


def test_hodge_check():
    lat = quartic_lattice(-2, 3)
    h, b = lat.basis()
    assert lat.hodge_check(h, 2 * h - b)
    with pytest.raises(PreconditionError):
        lat.hodge_check(h, b)   # B^2 = -2 is not positive


def test_pairing_is_symmetric_and_bilinear():
    rng = random.Random(20260814)
    lat = delpezzo_lattice()
    n = lat.rank
    for _ in range(300):
        u = DivClass(rng.randint(-9, 9) for _ in range(n))
        v = DivClass(rng.randint(-9, 9) for _ in range(n))
        w = DivClass(rng.randint(-9, 9) for _ in range(n))
        a = rng.randint(-4, 4)
        assert lat.pair(u, v) == lat.pair(v, u)
        assert lat.pair(a * u + w, v) == a * lat.pair(u, v) + lat.pair(w, v)
        assert lat.self_int(u) % 2 == 0
