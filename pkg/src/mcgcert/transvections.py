"""Induced action of Dehn twists and Y-homeomorphisms on H_1(N_g; Z/2)."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import DimensionError, GF2Matrix, Z2Vector
from .homology import pairing, w1


class OneSidedAxisError(ValueError):
    """Dehn twists exist only about two-sided curves."""


def _check_axis(y: Z2Vector) -> None:
    if w1(y):
        raise OneSidedAxisError(f"axis {y} is one-sided; no Dehn twist about it")


def transvect(y: Z2Vector, x: Z2Vector) -> Z2Vector:
    """tau_y(x) = x + (x, y) y."""
    _check_axis(y)
    if x.dim != y.dim:
        raise DimensionError(f"axis dimension {y.dim} != vector dimension {x.dim}")
    return Z2Vector(x.dim, x.bits ^ y.bits) if pairing(x, y) else x


@dataclass(frozen=True)
class Transvection:
    axis: Z2Vector

    def __post_init__(self) -> None:
        _check_axis(self.axis)

    def __call__(self, x: Z2Vector) -> Z2Vector:
        return transvect(self.axis, x)


@dataclass(frozen=True)
class InducedMap:
    """A matrix together with a word describing where it came from."""

    matrix: GF2Matrix
    provenance: str

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def __call__(self, x: Z2Vector) -> Z2Vector:
        return self.matrix(x)


def matrix_of(t: Transvection | Z2Vector) -> InducedMap:
    y = t.axis if isinstance(t, Transvection) else t
    _check_axis(y)
    cols = [transvect(y, Z2Vector.basis(y.dim, j)) for j in range(1, y.dim + 1)]
    return InducedMap(GF2Matrix.from_columns(cols), f"twist[{','.join(map(str, y.indices()))}]")


def y_homeomorphism_action(genus: int) -> InducedMap:
    return InducedMap(GF2Matrix.identity(genus), "y")


def identity(genus: int) -> InducedMap:
    return InducedMap(GF2Matrix.identity(genus), "id")


def compose(a: InducedMap, b: InducedMap) -> InducedMap:
    """``a`` after ``b``."""
    if a.dim != b.dim:
        raise DimensionError(f"cannot compose dimensions {a.dim} and {b.dim}")
    return InducedMap(a.matrix @ b.matrix, f"{a.provenance}*{b.provenance}")


def is_isometry(m: GF2Matrix) -> bool:
    """Columns orthonormal for the dot product, i.e. M^T M = I."""
    cols = m.columns
    for i, ci in enumerate(cols):
        for j in range(i, m.dim):
            if (ci & cols[j]).bit_count() & 1 != (i == j):
                return False
    return True


def fixes_characteristic(m: GF2Matrix) -> bool:
    u = (1 << m.dim) - 1
    return m.apply_bits(u) == u
