"""Z/2 homology of the non-orientable surface N_g.

The standard basis x_1..x_g consists of one-sided classes with identity
Gram matrix, so the intersection pairing is the dot product and the first
Stiefel-Whitney class is the weight parity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gf2 import DimensionError, Z2Vector, rank


def pairing(x: Z2Vector, y: Z2Vector) -> int:
    if x.dim != y.dim:
        raise DimensionError(f"cannot pair dimensions {x.dim} and {y.dim}")
    return (x.bits & y.bits).bit_count() & 1


def w1(x: Z2Vector) -> int:
    return x.bits.bit_count() & 1


def characteristic(genus: int) -> Z2Vector:
    """u = x_1 + ... + x_g."""
    return Z2Vector(genus, (1 << genus) - 1)


def is_two_sided(x: Z2Vector) -> bool:
    return w1(x) == 0


class Sidedness(str, enum.Enum):
    ONE_SIDED = "one-sided"
    TWO_SIDED = "two-sided"


class Admissibility(str, enum.Enum):
    FORCED_ADMISSIBLE = "forced_admissible"
    POSSIBLY_NON_ADMISSIBLE = "possibly_non_admissible"
    NOT_APPLICABLE = "not_a_curve_class_issue"


@dataclass(frozen=True)
class CurveClassReport:
    cls: Z2Vector
    sidedness: Sidedness
    admissibility: Admissibility


def classify(x: Z2Vector) -> CurveClassReport:
    """What the homology class alone says about curves representing it.

    A non-admissible two-sided curve represents 0 or u, so every two-sided
    curve in any other class is admissible.  The converse is not claimed:
    0 and u are only reported as possibly non-admissible.
    """
    if w1(x):
        return CurveClassReport(x, Sidedness.ONE_SIDED, Admissibility.NOT_APPLICABLE)
    # u is two-sided only for even genus, so it can reach this branch only then
    if x.bits == 0 or x == characteristic(x.dim):
        return CurveClassReport(x, Sidedness.TWO_SIDED, Admissibility.POSSIBLY_NON_ADMISSIBLE)
    return CurveClassReport(x, Sidedness.TWO_SIDED, Admissibility.FORCED_ADMISSIBLE)


def decompose_even(x: Z2Vector) -> list[Z2Vector]:
    """Split an even class into weight-2 classes x_i + x_j, pairing the support in order."""
    if w1(x):
        raise ValueError(f"class {x} is one-sided (odd weight)")
    support = x.indices()
    return [Z2Vector.from_indices(x.dim, support[k:k + 2]) for k in range(0, len(support), 2)]


def plus_basis(genus: int) -> list[Z2Vector]:
    """The basis x_i + x_{i+1} (i = 1..g-1) of the two-sided subspace."""
    return [Z2Vector.from_indices(genus, (i, i + 1)) for i in range(1, genus)]


def plus_rank(classes: list[Z2Vector]) -> int:
    """Rank of the two-sided classes among ``classes``; at most g - 1."""
    return rank([c for c in classes if is_two_sided(c)])


def iter_classes(genus: int, two_sided_only: bool = False):
    for bits in range(1 << genus):
        if two_sided_only and bits.bit_count() & 1:
            continue
        yield Z2Vector(genus, bits)
