"""Brute-force enumeration of the matrix groups generated by transvections.

Only practical for small genus; used as an independent check on the
certifier's quadratic-form obstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .gf2 import GF2Matrix, Z2Vector
from .homology import iter_classes, w1
from .quadforms import Z4Form, preserved_on_basis
from .transvections import matrix_of

DEFAULT_MAX_GENUS = 8
DEFAULT_MEMORY_BUDGET_MB = 256
# rough cost of one element: packed int in a set plus its column tuple in the frontier
BYTES_PER_ELEMENT = 160


class GroupTooLarge(RuntimeError):
    def __init__(self, genus: int, partial_count: int, budget_mb: int):
        super().__init__(
            f"genus {genus}: stopped after {partial_count} elements, "
            f"memory budget of {budget_mb} MB exhausted"
        )
        self.partial_count = partial_count


@dataclass(frozen=True)
class MatrixGroup:
    genus: int
    elements: tuple[int, ...]  # packed matrices, ascending
    generator_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: GF2Matrix | int) -> bool:
        key = m.packed() if isinstance(m, GF2Matrix) else m
        return key in self._members  # type: ignore[attr-defined]

    def matrices(self) -> Iterator[GF2Matrix]:
        for p in self.elements:
            yield GF2Matrix.from_packed(self.genus, p)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "order": self.order,
            "generators": list(self.generator_labels),
            "elements": [m.to_json() for m in self.matrices()],
        }


def _pack(cols: tuple[int, ...], g: int) -> int:
    out = 0
    for j, c in enumerate(cols):
        out |= c << (j * g)
    return out


def _closure(genus: int, tables: list[list[int]], budget_mb: int) -> set[int]:
    limit = budget_mb * 1024 * 1024 // BYTES_PER_ELEMENT
    start = tuple(1 << j for j in range(genus))
    seen = {_pack(start, genus)}
    frontier = [start]
    while frontier:
        nxt = []
        for cols in frontier:
            for t in tables:
                image = tuple(t[c] for c in cols)
                key = _pack(image, genus)
                if key not in seen:
                    seen.add(key)
                    nxt.append(image)
            if len(seen) > limit:
                raise GroupTooLarge(genus, len(seen), budget_mb)
        frontier = nxt
    return seen


def generate(
    axes: Sequence[Z2Vector],
    genus: int | None = None,
    *,
    max_genus: int = DEFAULT_MAX_GENUS,
    memory_budget_mb: int = DEFAULT_MEMORY_BUDGET_MB,
) -> MatrixGroup:
    """The group generated by the transvections along ``axes``.

    Generators are added one at a time and skipped when already in the
    group built so far, which keeps the breadth-first closure small when
    many axes are redundant.
    """
    if genus is None:
        if not axes:
            raise ValueError("genus required for an empty axis list")
        genus = axes[0].dim
    if genus > max_genus:
        raise ValueError(f"genus {genus} exceeds explorer cap {max_genus}")
    for a in axes:
        if a.dim != genus:
            raise ValueError(f"axis {a} does not have dimension {genus}")
        if w1(a):
            raise ValueError(f"axis {a} is one-sided")
    members = {GF2Matrix.identity(genus).packed()}
    used: list[list[int]] = []
    labels = []
    for a in axes:
        m = matrix_of(a).matrix
        if m.packed() in members:
            continue
        used.append([m.apply_bits(v) for v in range(1 << genus)])
        labels.append(f"tau[{','.join(map(str, a.indices()))}]")
        members = _closure(genus, used, memory_budget_mb)
    return MatrixGroup(genus, tuple(sorted(members)), tuple(labels))


def reference_group(genus: int, **kwargs) -> MatrixGroup:
    """Group generated by the transvections along every nonzero two-sided class."""
    axes = [v for v in iter_classes(genus, two_sided_only=True) if v]
    return generate(axes, genus, **kwargs)


def stabilizer_of_form(group: MatrixGroup, q: Z4Form) -> MatrixGroup:
    if q.genus != group.genus:
        raise ValueError(f"form genus {q.genus} != group genus {group.genus}")
    # elements are isometries, so agreement on the basis is agreement everywhere
    kept = tuple(p for p, m in zip(group.elements, group.matrices()) if preserved_on_basis(q, m))
    return MatrixGroup(group.genus, kept, ("stabilizer",))


def is_subgroup_proper(h: MatrixGroup, g: MatrixGroup) -> bool:
    if h.genus != g.genus:
        raise ValueError(f"genus mismatch: {h.genus} vs {g.genus}")
    return len(h) < len(g) and all(p in g for p in h.elements)


def is_subgroup(h: MatrixGroup, g: MatrixGroup) -> bool:
    if h.genus != g.genus:
        raise ValueError(f"genus mismatch: {h.genus} vs {g.genus}")
    return all(p in g for p in h.elements)
