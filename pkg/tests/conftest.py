import random

import pytest

from mcgcert.gf2 import Z2Vector


def vec(s: str) -> Z2Vector:
    return Z2Vector.from_bitstring(s)


def span_brute(vs, dim):
    """Every subset sum of ``vs``; independent of the elimination code."""
    out = {0}
    for v in vs:
        out |= {s ^ v.bits for s in out}
    return out


def random_even(rng: random.Random, g: int) -> Z2Vector:
    bits = rng.getrandbits(g)
    if bits.bit_count() % 2:
        bits ^= 1 << rng.randrange(g)
    return Z2Vector(g, bits)


@pytest.fixture
def rng():
    return random.Random(20261015)
