"""Z/4-valued quadratic forms on H_1(N_g; Z/2).

A form q satisfies q(x + y) = q(x) + q(y) + 2(x, y) and is fixed by its
values on the standard basis, each of which is odd.  Writing
q(x_i) = 1 + 2 s_i turns every linear condition on q into an affine
system over GF(2) in the vector s:

    q(v) = |v| + 2 <v, s>   (mod 4)

which is what the solvers below use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .gf2 import (
    GF2Matrix,
    DimensionError,
    Z2Vector,
    affine_conflict,
    complete_to_basis,
    echelon,
    solve_affine,
)
from .homology import pairing, w1
from .transvections import InducedMap, matrix_of, transvect

ENUMERATION_CAP = 20


def double(bit: int) -> int:
    """The injection Z/2 -> Z/4, [n] -> [2n]."""
    return (2 * bit) % 4


@dataclass(frozen=True)
class Z4Form:
    genus: int
    basis_values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.basis_values)
        object.__setattr__(self, "basis_values", vals)
        if len(vals) != self.genus:
            raise ValueError(f"need {self.genus} basis values, got {len(vals)}")
        for i, v in enumerate(vals, 1):
            if isinstance(v, bool) or v not in (1, 3):
                raise ValueError(f"q(x_{i}) = {v!r}; basis classes are one-sided so values must be 1 or 3")

    @classmethod
    def from_shift(cls, s: Z2Vector) -> Z4Form:
        return cls(s.dim, tuple(3 if s.bits >> i & 1 else 1 for i in range(s.dim)))

    def shift(self) -> Z2Vector:
        """The vector s with q(x_i) = 1 + 2 s_i."""
        bits = 0
        for i, v in enumerate(self.basis_values):
            if v == 3:
                bits |= 1 << i
        return Z2Vector(self.genus, bits)

    def __call__(self, x: Z2Vector) -> int:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"genus": self.genus, "values": list(self.basis_values)}

    @classmethod
    def from_json(cls, obj: dict) -> Z4Form:
        return cls(int(obj["genus"]), tuple(obj["values"]))


def evaluate(q: Z4Form, x: Z2Vector) -> int:
    """Sum of basis values over the support, mod 4.

    Distinct basis vectors pair to zero, so no cross terms appear.
    """
    if x.dim != q.genus:
        raise DimensionError(f"form of genus {q.genus} evaluated on dimension {x.dim}")
    vals = q.basis_values
    return sum(vals[i - 1] for i in x.indices()) % 4


def evaluate_expanded(q: Z4Form, x: Z2Vector) -> int:
    # Independent path: build x one basis vector at a time through the
    # defining relation, using the pairing explicitly.
    if x.dim != q.genus:
        raise DimensionError(f"form of genus {q.genus} evaluated on dimension {x.dim}")
    v = Z2Vector.zero(q.genus)
    value = 0
    for i in x.indices():
        xi = Z2Vector.basis(q.genus, i)
        value = (value + q.basis_values[i - 1] + double(pairing(v, xi))) % 4
        v = v + xi
    return value


def pullback(q: Z4Form, m: InducedMap | GF2Matrix) -> Callable[[Z2Vector], int]:
    """x -> q(M x)."""
    mat = m.matrix if isinstance(m, InducedMap) else m
    if mat.dim != q.genus:
        raise DimensionError(f"form of genus {q.genus} pulled back along dimension {mat.dim}")
    return lambda x: evaluate(q, mat(x))


def value_table(q: Z4Form) -> list[int]:
    """q on every class, indexed by the packed bits."""
    table = [0] * (1 << q.genus)
    for b in range(1, 1 << q.genus):
        low = b & -b
        table[b] = (table[b ^ low] + q.basis_values[low.bit_length() - 1]) % 4
    return table


def preserved_pointwise(q: Z4Form, m: InducedMap | GF2Matrix) -> bool:
    """Compare q and q o M on every class; exponential in g."""
    mat = m.matrix if isinstance(m, InducedMap) else m
    if mat.dim != q.genus:
        raise DimensionError(f"form of genus {q.genus} pulled back along dimension {mat.dim}")
    table = value_table(q)
    image = [0] * len(table)
    for b in range(1, len(table)):
        low = b & -b
        image[b] = image[b ^ low] ^ mat.columns[low.bit_length() - 1]
        if table[image[b]] != table[b]:
            return False
    return True


def preserved_on_basis(q: Z4Form, m: InducedMap | GF2Matrix) -> bool:
    """q o M == q, checked on x_1..x_g.

    Enough when M is an isometry, since then q o M is itself a quadratic form.
    """
    f = pullback(q, m)
    return all(f(Z2Vector.basis(q.genus, i)) == q.basis_values[i - 1] for i in range(1, q.genus + 1))


def _require_two_sided(y: Z2Vector) -> None:
    if w1(y):
        raise ValueError(f"class {y} is one-sided")


def is_preserved_by(q: Z4Form, y: Z2Vector) -> bool:
    """Whether q is invariant under the transvection with axis ``y``.

    For (x, y) = 1 the pullback adds q(y) + 2, so invariance holds exactly
    when y = 0 or q(y) = 2.
    """
    _require_two_sided(y)
    return not y or evaluate(q, y) == 2


def breaking_witness(q: Z4Form, y: Z2Vector) -> Z2Vector | None:
    """A class x with q(tau_y(x)) != q(x), or ``None`` when q is preserved."""
    if is_preserved_by(q, y):
        return None
    return Z2Vector.basis(q.genus, y.indices()[0])


def discrepancy(q: Z4Form, axis: Z2Vector, x: Z2Vector) -> int:
    """q(tau_axis(x)) - q(x) in Z/4."""
    return (evaluate(q, transvect(axis, x)) - evaluate(q, x)) % 4


def _targets(classes: Sequence[Z2Vector], values: Sequence[int]) -> tuple[list[Z2Vector], list[int]]:
    # q(v) = t  <=>  <v, s> = (t - |v|) / 2  (mod 2); needs t = |v| mod 2
    rhs = []
    for v, t in zip(classes, values):
        if (t - v.weight) % 2:
            raise ValueError(f"value {t} has the wrong parity for class {v}")
        rhs.append(((t - v.weight) % 4) // 2)
    return list(classes), rhs


def form_with_values(genus: int, classes: Sequence[Z2Vector], values: Sequence[int]) -> Z4Form | None:
    """Some form taking ``values[i]`` on ``classes[i]``; lowest shift vector wins."""
    vs, rhs = _targets(classes, values)
    s = solve_affine(vs, rhs, genus)
    return None if s is None else Z4Form.from_shift(s)


def _odd_check(classes: Sequence[Z2Vector]) -> None:
    for c in classes:
        if w1(c):
            raise ValueError(f"twist class {c} is one-sided (odd weight)")


def construct_invariant_form(classes: Sequence[Z2Vector], genus: int | None = None) -> Z4Form:
    """The form with value 2 on each class and 1 on the lowest completing basis vector.

    ``classes`` must be two-sided and span the two-sided subspace.
    """
    if genus is None:
        if not classes:
            raise ValueError("genus required for an empty class list")
        genus = classes[0].dim
    _odd_check(classes)
    span = echelon(classes) if classes else []
    if len(span) < genus - 1:
        raise ValueError(f"classes have rank {len(span)}, need {genus - 1}")
    (alpha,) = complete_to_basis(span, genus)
    nonzero = [c for c in classes if c]
    q = form_with_values(genus, nonzero + [alpha], [2] * len(nonzero) + [1])
    if q is None:
        raise ValueError("classes are dependent and force a value other than 2")
    return q


def exists_invariant_form(classes: Sequence[Z2Vector], genus: int | None = None) -> Z4Form | None:
    """A form preserved by every transvection along ``classes``, if there is one.

    Zero classes impose nothing; every other class must take value 2.
    """
    if genus is None:
        if not classes:
            raise ValueError("genus required for an empty class list")
        genus = classes[0].dim
    _odd_check(classes)
    nonzero = [c for c in classes if c]
    return form_with_values(genus, nonzero, [2] * len(nonzero))


def invariant_form_obstruction(classes: Sequence[Z2Vector]) -> list[int] | None:
    """Positions into ``classes`` of a subset forcing some value away from 2.

    The returned classes sum to zero and their count plus the number of
    mutually intersecting pairs is odd, so q(0) would have to equal 2.
    """
    _odd_check(classes)
    positions = [i for i, c in enumerate(classes) if c]
    vs, rhs = _targets([classes[i] for i in positions], [2] * len(positions))
    conflict = affine_conflict(vs, rhs)
    return None if conflict is None else [positions[i] for i in conflict]


def find_violating_transvection(q: Z4Form) -> tuple[Z2Vector, Z2Vector]:
    """An axis x != 0 with q(x) = 0 and a class y with (y, x) = 1.

    The transvection along x then shifts q(y) by 2.
    """
    g = q.genus
    if g < 4:
        raise ValueError(f"genus {g} < 4")
    vals = q.basis_values
    for i, j in itertools.combinations(range(1, g + 1), 2):
        if (vals[i - 1] + vals[j - 1]) % 4 == 0:
            return Z2Vector.from_indices(g, (i, j)), Z2Vector.basis(g, i)
    return Z2Vector.from_indices(g, (1, 2, 3, 4)), Z2Vector.basis(g, 1)


def enumerate_forms(genus: int, cap: int = ENUMERATION_CAP) -> Iterator[Z4Form]:
    """All 2^g forms, basis values in lexicographic order."""
    if genus > cap:
        raise ValueError(f"genus {genus} exceeds enumeration cap {cap}")
    for vals in itertools.product((1, 3), repeat=genus):
        yield Z4Form(genus, vals)


def twist_preserves(q: Z4Form, axis: Z2Vector) -> bool:
    """Pointwise version of :func:`is_preserved_by` via the transvection matrix."""
    return preserved_pointwise(q, matrix_of(axis))
