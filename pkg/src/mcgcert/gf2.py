"""Word-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets: bit ``i`` (0-based) holds the
coefficient of the basis vector ``x_{i+1}``.  The public surface is 1-based
wherever basis indices are shown to a user.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

MAX_DIM = 64


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


def _check_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {dim}")


@dataclass(frozen=True, order=True)
class Z2Vector:
    """A vector in (Z/2)^dim packed into one integer."""

    dim: int
    bits: int = 0

    def __post_init__(self) -> None:
        _check_dim(self.dim)
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} exceed dimension {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> Z2Vector:
        return cls(dim, 0)

    @classmethod
    def basis(cls, dim: int, i: int) -> Z2Vector:
        """The standard basis vector x_i (1-based)."""
        if not 1 <= i <= dim:
            raise IndexError(f"basis index {i} out of range 1..{dim}")
        return cls(dim, 1 << (i - 1))

    @classmethod
    def from_indices(cls, dim: int, indices: Iterable[int]) -> Z2Vector:
        bits = 0
        for i in indices:
            if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= dim:
                raise ValueError(f"index {i!r} out of range 1..{dim}")
            bits ^= 1 << (i - 1)
        return cls(dim, bits)

    @classmethod
    def from_bitstring(cls, s: str) -> Z2Vector:
        """Parse ``"1100"``; the leftmost character is the x_1 coefficient."""
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    @classmethod
    def parse(cls, dim: int, obj: Union[str, Sequence[int]]) -> Z2Vector:
        """Accept either serialization: a bit string or a 1-based index list."""
        if isinstance(obj, str):
            v = cls.from_bitstring(obj)
            if v.dim != dim:
                raise DimensionError(f"bit string {obj!r} has length {v.dim}, expected {dim}")
            return v
        if isinstance(obj, (list, tuple)):
            if len(set(obj)) != len(obj):
                raise ValueError(f"repeated index in {list(obj)}")
            return cls.from_indices(dim, obj)
        raise TypeError(f"cannot parse vector from {type(obj).__name__}")

    def indices(self) -> list[int]:
        """Sorted 1-based support; the canonical serialization."""
        return [i + 1 for i in range(self.dim) if self.bits >> i & 1]

    def bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.dim))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: Z2Vector) -> Z2Vector:
        return add(self, other)

    def __str__(self) -> str:
        return self.bitstring()


def add(a: Z2Vector, b: Z2Vector) -> Z2Vector:
    if a.dim != b.dim:
        raise DimensionError(f"cannot add vectors of dimension {a.dim} and {b.dim}")
    return Z2Vector(a.dim, a.bits ^ b.bits)


def _common_dim(vs: Sequence[Z2Vector], dim: int | None = None) -> int | None:
    for v in vs:
        if dim is None:
            dim = v.dim
        elif v.dim != dim:
            raise DimensionError(f"mixed dimensions {dim} and {v.dim}")
    return dim


def _reduce(rows: list[int]) -> list[int]:
    """Fully reduced echelon basis of the span, ordered by pivot (lowest set bit)."""
    pivots: dict[int, int] = {}
    for r in rows:
        for p, row in pivots.items():
            if r >> p & 1:
                r ^= row
        if r:
            p = (r & -r).bit_length() - 1
            for q in pivots:
                if pivots[q] >> p & 1:
                    pivots[q] ^= r
            pivots[p] = r
    return [pivots[p] for p in sorted(pivots)]


def echelon(vs: Sequence[Z2Vector]) -> list[Z2Vector]:
    """Reduced row echelon basis of span(vs); deterministic for a given span."""
    dim = _common_dim(vs)
    if dim is None:
        return []
    return [Z2Vector(dim, r) for r in _reduce([v.bits for v in vs])]


def reduce_against(x: Z2Vector, basis: Sequence[Z2Vector]) -> Z2Vector:
    """Residue of ``x`` after clearing every pivot of a reduced echelon ``basis``."""
    _common_dim(basis, x.dim)
    r = x.bits
    for row in basis:
        p = (row.bits & -row.bits).bit_length() - 1
        if r >> p & 1:
            r ^= row.bits
    return Z2Vector(x.dim, r)


def rank(vs: Sequence[Z2Vector]) -> int:
    _common_dim(vs)
    return len(_reduce([v.bits for v in vs]))


def in_span(x: Z2Vector, vs: Sequence[Z2Vector]) -> list[int] | None:
    """Return positions ``S`` (0-based) into ``vs`` with ``x = sum(vs[i] for i in S)``.

    ``None`` means ``x`` is not in the span.  The combination is checked
    before being returned.
    """
    _common_dim(vs, x.dim)
    # each pivot row carries the set of input positions it is the sum of
    pivots: dict[int, tuple[int, int]] = {}
    for pos, v in enumerate(vs):
        r, combo = v.bits, 1 << pos
        for p, (row, rc) in pivots.items():
            if r >> p & 1:
                r ^= row
                combo ^= rc
        if r:
            pivots[(r & -r).bit_length() - 1] = (r, combo)
    r, combo = x.bits, 0
    for p in sorted(pivots):
        if r >> p & 1:
            row, rc = pivots[p]
            r ^= row
            combo ^= rc
    if r:
        return None
    positions = [i for i in range(len(vs)) if combo >> i & 1]
    total = 0
    for i in positions:
        total ^= vs[i].bits
    assert total == x.bits, "span combination failed to verify"
    return positions


def complete_to_basis(vs: Sequence[Z2Vector], dim: int | None = None) -> list[Z2Vector]:
    """Standard basis vectors, lowest index first, extending independent ``vs`` to a basis."""
    dim = _common_dim(vs, dim)
    if dim is None:
        raise ValueError("dimension required when vs is empty")
    rows = [v.bits for v in vs]
    if len(_reduce(rows)) != len(rows):
        raise ValueError("input vectors are linearly dependent")
    out = []
    for i in range(dim):
        if len(_reduce(rows + [1 << i])) > len(rows):
            rows.append(1 << i)
            out.append(Z2Vector(dim, 1 << i))
    return out


@dataclass(frozen=True)
class GF2Matrix:
    """Square matrix over GF(2); ``columns[j]`` is the image of x_{j+1} as a bitset."""

    dim: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.dim)
        if len(self.columns) != self.dim:
            raise ValueError(f"expected {self.dim} columns, got {len(self.columns)}")
        for c in self.columns:
            if c < 0 or c >> self.dim:
                raise ValueError(f"column {c:#x} exceeds dimension {self.dim}")

    @classmethod
    def identity(cls, dim: int) -> GF2Matrix:
        return cls(dim, tuple(1 << j for j in range(dim)))

    @classmethod
    def from_columns(cls, cols: Sequence[Z2Vector]) -> GF2Matrix:
        dim = len(cols)
        _common_dim(cols, dim)
        return cls(dim, tuple(c.bits for c in cols))

    @classmethod
    def from_packed(cls, dim: int, packed: int) -> GF2Matrix:
        mask = (1 << dim) - 1
        return cls(dim, tuple(packed >> (j * dim) & mask for j in range(dim)))

    def packed(self) -> int:
        """All columns concatenated into one integer; column 1 in the low bits."""
        out = 0
        for j, c in enumerate(self.columns):
            out |= c << (j * self.dim)
        return out

    def column(self, j: int) -> Z2Vector:
        """Image of x_j (1-based)."""
        return Z2Vector(self.dim, self.columns[j - 1])

    def apply_bits(self, bits: int) -> int:
        out = 0
        j = 0
        while bits:
            if bits & 1:
                out ^= self.columns[j]
            bits >>= 1
            j += 1
        return out

    def __call__(self, v: Z2Vector) -> Z2Vector:
        if v.dim != self.dim:
            raise DimensionError(f"matrix of dimension {self.dim} applied to vector of dimension {v.dim}")
        return Z2Vector(self.dim, self.apply_bits(v.bits))

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        if other.dim != self.dim:
            raise DimensionError(f"cannot multiply dimensions {self.dim} and {other.dim}")
        return GF2Matrix(self.dim, tuple(self.apply_bits(c) for c in other.columns))

    def rank(self) -> int:
        return len(_reduce(list(self.columns)))

    def is_invertible(self) -> bool:
        return self.rank() == self.dim

    def to_json(self) -> list[list[int]]:
        return [Z2Vector(self.dim, c).indices() for c in self.columns]

    @classmethod
    def from_json(cls, dim: int, cols: Sequence[Sequence[int]]) -> GF2Matrix:
        return cls.from_columns([Z2Vector.from_indices(dim, c) for c in cols])


def _affine_eliminate(vs: Sequence[Z2Vector], rhs: Sequence[int]) -> tuple[int | None, list[int] | None]:
    if len(vs) != len(rhs):
        raise ValueError("one right-hand side bit per equation required")
    dim = _common_dim(vs)
    # pivot -> (row, rhs bit, combination of equation positions)
    pivots: dict[int, tuple[int, int, int]] = {}
    for pos, (v, b) in enumerate(zip(vs, rhs)):
        r, c, combo = v.bits, b & 1, 1 << pos
        for p, (row, rb, rc) in pivots.items():
            if r >> p & 1:
                r ^= row
                c ^= rb
                combo ^= rc
        if r:
            pivots[(r & -r).bit_length() - 1] = (r, c, combo)
        elif c:
            return None, [i for i in range(len(vs)) if combo >> i & 1]
    # back substitution with free variables set to zero
    sol = 0
    for p in sorted(pivots, reverse=True):
        row, rb, _ = pivots[p]
        if ((row & ~(1 << p) & sol).bit_count() & 1) ^ rb:
            sol |= 1 << p
    if dim is not None:
        for v, b in zip(vs, rhs):
            assert (v.bits & sol).bit_count() & 1 == b & 1
    return sol, None


def solve_affine(vs: Sequence[Z2Vector], rhs: Sequence[int], dim: int) -> Z2Vector | None:
    """Some ``s`` with ``<vs[i], s> = rhs[i]`` for all ``i``, or ``None`` if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    _common_dim(vs, dim)
    sol, _ = _affine_eliminate(vs, rhs)
    return None if sol is None else Z2Vector(dim, sol)


def affine_conflict(vs: Sequence[Z2Vector], rhs: Sequence[int]) -> list[int] | None:
    """Positions of equations whose left sides cancel but whose right sides sum to 1."""
    _, conflict = _affine_eliminate(vs, rhs)
    return conflict
