import pytest

from conftest import vec
from mcgcert.gf2 import Z2Vector, rank
from mcgcert.homology import (
    Admissibility,
    Sidedness,
    characteristic,
    classify,
    decompose_even,
    iter_classes,
    pairing,
    plus_basis,
    w1,
)


def test_pairing_examples():
    x1, x2 = Z2Vector.basis(4, 1), Z2Vector.basis(4, 2)
    assert pairing(x1, x1) == 1
    assert pairing(x1, x2) == 0
    assert pairing(vec("1100"), vec("0110")) == 1


def test_w1_examples():
    for i in range(1, 6):
        assert w1(Z2Vector.basis(5, i)) == 1
    assert w1(Z2Vector.zero(4)) == 0
    assert w1(vec("1111")) == 0


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_pairing_bilinear_symmetric_and_w1(g):
    u = characteristic(g)
    classes = list(iter_classes(g))
    for x in classes:
        assert pairing(x, x) == w1(x) == pairing(x, u)
        for y in classes:
            assert pairing(x, y) == pairing(y, x)
            if g <= 4:
                for z in classes:
                    assert pairing(x + y, z) == pairing(x, z) ^ pairing(y, z)


@pytest.mark.parametrize("g", range(1, 9))
def test_two_sided_subspace_size_and_basis(g):
    plus = list(iter_classes(g, two_sided_only=True))
    assert len(plus) == 2 ** (g - 1)
    assert rank(plus) == g - 1
    assert rank(plus_basis(g)) == g - 1


def test_classify_examples():
    assert classify(Z2Vector.zero(4)).admissibility is Admissibility.POSSIBLY_NON_ADMISSIBLE
    assert classify(vec("1111")).admissibility is Admissibility.POSSIBLY_NON_ADMISSIBLE
    r = classify(vec("1100"))
    assert r.admissibility is Admissibility.FORCED_ADMISSIBLE
    assert r.sidedness is Sidedness.TWO_SIDED
    one = classify(vec("10000"))
    assert one.sidedness is Sidedness.ONE_SIDED
    assert one.admissibility is Admissibility.NOT_APPLICABLE
    # u is one-sided in odd genus
    assert classify(characteristic(5)).sidedness is Sidedness.ONE_SIDED


def test_decompose_even_examples():
    assert decompose_even(Z2Vector.zero(4)) == []
    assert decompose_even(vec("1111")) == [vec("1100"), vec("0011")]
    assert decompose_even(vec("01001")) == [vec("01001")]
    with pytest.raises(ValueError):
        decompose_even(vec("1110"))


@pytest.mark.parametrize("g", [4, 5, 6, 7])
def test_decompose_even_properties(g):
    for x in iter_classes(g, two_sided_only=True):
        parts = decompose_even(x)
        acc, seen = Z2Vector.zero(g), 0
        for p in parts:
            assert p.weight == 2
            assert classify(p).admissibility is Admissibility.FORCED_ADMISSIBLE
            assert seen & p.bits == 0
            seen |= p.bits
            acc = acc + p
        assert acc == x
