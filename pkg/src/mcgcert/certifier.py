"""Necessary-condition checks for generating sets of the mapping class group of N_g.

A generating set is seen only through its homology shadow: the Z/2 classes
of the Dehn-twist curves and the number of Y-homeomorphisms (which act
trivially on homology).  Checks run in order and the first failure wins:

1. no Y-homeomorphism: Dehn twists alone never generate (an axiom here);
2. the twist classes, ignoring 0 and u, do not span the two-sided subspace;
3. some Z/4 quadratic form is preserved by every generator, while twists
   in general do not preserve any form.

Passing all three is necessary, not sufficient, for generation.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

from .gf2 import MAX_DIM, Z2Vector, echelon, in_span, rank, reduce_against
from .homology import characteristic, classify, pairing, plus_basis, w1
from .quadforms import (
    Z4Form,
    construct_invariant_form,
    evaluate,
    evaluate_expanded,
    exists_invariant_form,
    find_violating_transvection,
    invariant_form_obstruction,
    preserved_on_basis,
)
from .transvections import is_isometry, matrix_of, transvect

MIN_GENUS = 4

CITE_NO_Y = "Lickorish: the mapping class group of N_g is not generated by Dehn twists"
CITE_SPAN = "lower bound: classes of the twist curves must generate the two-sided subspace H_1^+"
CITE_INVARIANT = "invariant form: twists whose classes meet value 2 of a Z/4 quadratic form all preserve it"
CITE_NO_FORM = "no invariant form: every Z/4 quadratic form is broken by a twist about a class of value 0"
CITE_PASS = "necessary conditions n >= g and k >= 1 hold; sufficiency is not decided at the homology level"


class DocumentError(ValueError):
    """Input document does not match the generator-set schema."""


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL_NO_Y = "fail_no_y"
    FAIL_SPAN = "fail_span"
    FAIL_QUADRATIC_FORM = "fail_quadratic_form"


@dataclass(frozen=True)
class GeneratorSet:
    genus: int
    twist_classes: tuple[Z2Vector, ...]
    y_count: int
    twist_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "twist_classes", tuple(self.twist_classes))
        object.__setattr__(self, "twist_names", tuple(self.twist_names))
        if not MIN_GENUS <= self.genus <= MAX_DIM:
            raise ValueError(f"genus must be in {MIN_GENUS}..{MAX_DIM}, got {self.genus}")
        if self.y_count < 0:
            raise ValueError("y_count must be non-negative")
        for pos, c in enumerate(self.twist_classes):
            if c.dim != self.genus:
                raise ValueError(f"twist {pos} has dimension {c.dim}, genus is {self.genus}")
            if w1(c):
                raise ValueError(f"twist {pos} has one-sided class {c.indices()}")
        if self.twist_names and len(self.twist_names) != len(self.twist_classes):
            raise ValueError("one name per twist class required")

    @property
    def n(self) -> int:
        return len(self.twist_classes)

    @property
    def k(self) -> int:
        return self.y_count

    def name_of(self, pos: int) -> str:
        return self.twist_names[pos] if self.twist_names else f"t{pos + 1}"

    def spanning_classes(self) -> list[Z2Vector]:
        """Twist classes other than 0 and u; only these can enlarge the span."""
        u = characteristic(self.genus)
        return [c for c in self.twist_classes if c and c != u]

    @classmethod
    def from_json(cls, doc: Any) -> GeneratorSet:
        if not isinstance(doc, dict):
            raise DocumentError("document must be a JSON object")
        genus = doc.get("genus")
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise DocumentError("field 'genus' must be an integer")
        if not MIN_GENUS <= genus <= MAX_DIM:
            raise DocumentError(f"field 'genus': {genus} outside {MIN_GENUS}..{MAX_DIM}")
        gens = doc.get("generators")
        if not isinstance(gens, list):
            raise DocumentError("field 'generators' must be a list")
        classes, names, k = [], [], 0
        for pos, gen in enumerate(gens):
            where = f"generators[{pos}]"
            if not isinstance(gen, dict):
                raise DocumentError(f"{where}: must be an object")
            kind = gen.get("kind")
            if kind == "y_homeomorphism":
                k += 1
            elif kind == "dehn_twist":
                if "class" not in gen:
                    raise DocumentError(f"{where}.class: missing")
                try:
                    c = Z2Vector.parse(genus, gen["class"])
                except (ValueError, TypeError) as exc:
                    raise DocumentError(f"{where}.class: {exc}") from None
                if w1(c):
                    raise DocumentError(f"{where}.class: {c.indices()} is one-sided (odd weight)")
                classes.append(c)
                names.append(str(gen.get("name", f"t{len(classes)}")))
            else:
                raise DocumentError(f"{where}.kind: unknown kind {kind!r}")
        return cls(genus, tuple(classes), k, tuple(names))

    def to_json(self) -> dict:
        gens: list[dict] = [
            {"kind": "dehn_twist", "class": c.indices(), "name": self.name_of(i)}
            for i, c in enumerate(self.twist_classes)
        ]
        gens += [{"kind": "y_homeomorphism"} for _ in range(self.y_count)]
        return {"genus": self.genus, "generators": gens}


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    n: int
    k: int
    payload: dict = field(default_factory=dict)
    citations: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "k": self.k,
            "certificate": self.payload,
            "citations": list(self.citations),
        }

    @classmethod
    def from_json(cls, doc: dict) -> Certificate:
        return cls(
            Verdict(doc["verdict"]),
            doc["n"],
            doc["k"],
            doc["certificate"],
            tuple(doc["citations"]),
        )


def _span_failure(gs: GeneratorSet) -> dict | None:
    spanning = gs.spanning_classes()
    basis = echelon(spanning) if spanning else []
    if len(basis) == gs.genus - 1:
        return None
    witness = next(b for b in plus_basis(gs.genus) if in_span(b, spanning) is None)
    return {
        "genus": gs.genus,
        "twist_rank": len(basis),
        "echelon": [b.indices() for b in basis],
        "witness": witness.indices(),
        "residue": reduce_against(witness, basis).indices(),
    }


def _form_failure(gs: GeneratorSet) -> dict | None:
    nonzero = [c for c in gs.twist_classes if c]
    if len(nonzero) == gs.genus - 1 and rank(nonzero) == gs.genus - 1:
        q: Z4Form | None = construct_invariant_form(nonzero, gs.genus)
        construction = "basis_completion"
    else:
        q = exists_invariant_form(list(gs.twist_classes), gs.genus)
        construction = "constraint_solve"
    if q is None:
        return None
    axis, witness = find_violating_transvection(q)
    image = transvect(axis, witness)
    return {
        "genus": gs.genus,
        "form": list(q.basis_values),
        "construction": construction,
        "twist_values": [evaluate(q, c) for c in gs.twist_classes],
        "violation": {
            "axis": axis.indices(),
            "axis_value": evaluate(q, axis),
            "axis_admissibility": classify(axis).admissibility.value,
            "witness": witness.indices(),
            "witness_value": evaluate(q, witness),
            "image_value": evaluate(q, image),
            "discrepancy": (evaluate(q, image) - evaluate(q, witness)) % 4,
        },
    }


def certify(gs: GeneratorSet) -> Certificate:
    if gs.k == 0:
        return Certificate(Verdict.FAIL_NO_Y, gs.n, gs.k, {"genus": gs.genus, "axiom": "dehn_twists_do_not_generate"}, (CITE_NO_Y,))
    span = _span_failure(gs)
    if span is not None:
        return Certificate(Verdict.FAIL_SPAN, gs.n, gs.k, span, (CITE_SPAN,))
    form = _form_failure(gs)
    if form is not None:
        return Certificate(Verdict.FAIL_QUADRATIC_FORM, gs.n, gs.k, form, (CITE_INVARIANT, CITE_NO_FORM))
    obstruction = invariant_form_obstruction(list(gs.twist_classes))
    assert obstruction is not None
    return Certificate(
        Verdict.PASS,
        gs.n,
        gs.k,
        {
            "genus": gs.genus,
            "twist_rank": gs.genus - 1,
            "obstruction": obstruction,
            "necessary_only": True,
        },
        (CITE_SPAN, CITE_NO_FORM, CITE_PASS),
    )


# -- independent verification ------------------------------------------------


def _vec(genus: int, obj: Any) -> Z2Vector:
    if not isinstance(obj, list):
        raise TypeError("class must be an index list")
    return Z2Vector.parse(genus, obj)


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_span(gs: GeneratorSet, p: dict) -> list[str]:
    problems = []
    g = gs.genus
    spanning = gs.spanning_classes()
    rows = [_vec(g, r) for r in p["echelon"]]
    witness = _vec(g, p["witness"])
    residue = _vec(g, p["residue"])
    if p["twist_rank"] != rank(spanning):
        problems.append("twist_rank does not match the recomputed rank")
    if p["twist_rank"] >= g - 1:
        problems.append("twist classes already span the two-sided subspace")
    if len(rows) != rank(spanning) or rank(rows) != len(rows):
        problems.append("echelon rows are not a basis of the twist span")
    if any(in_span(r, spanning) is None for r in rows):
        problems.append("an echelon row lies outside the twist span")
    pivots = [r.bits & -r.bits for r in rows]
    if any(r.bits & p_ for r in rows for p_ in pivots if r.bits & -r.bits != p_) or pivots != sorted(pivots):
        problems.append("echelon rows are not in reduced form")
    if w1(witness):
        problems.append("witness is not two-sided")
    if reduce_against(witness, rows) != residue:
        problems.append("residue does not match the reduction of the witness")
    if not residue:
        problems.append("residue is zero so the witness lies in the span")
    if in_span(witness, spanning) is not None:
        problems.append("witness lies in the twist span")
    return problems


def _check_form(gs: GeneratorSet, p: dict) -> list[str]:
    problems = []
    g = gs.genus
    vals = p["form"]
    if not isinstance(vals, list) or len(vals) != g or any(v not in (1, 3) or not _is_int(v) for v in vals):
        return ["form values must be g entries from {1, 3}"]
    q = Z4Form(g, tuple(vals))
    if rank(gs.spanning_classes()) != g - 1:
        problems.append("twist classes do not span, so the span check should have failed first")
    if p.get("construction") not in ("basis_completion", "constraint_solve"):
        problems.append("unknown construction label")
    recorded = p["twist_values"]
    if not isinstance(recorded, list) or len(recorded) != gs.n:
        problems.append("twist_values has the wrong length")
        recorded = [None] * gs.n
    for pos, c in enumerate(gs.twist_classes):
        m = matrix_of(c).matrix
        if not is_isometry(m):
            problems.append(f"twist {pos} does not act by an isometry")
        if not preserved_on_basis(q, m):
            problems.append(f"form is not preserved by twist {gs.name_of(pos)}")
        if recorded[pos] != evaluate_expanded(q, c):
            problems.append(f"recorded value of twist {gs.name_of(pos)} is wrong")
    v = p["violation"]
    axis = _vec(g, v["axis"])
    witness = _vec(g, v["witness"])
    if w1(axis) or not axis:
        problems.append("violating axis must be a nonzero two-sided class")
        return problems
    if v["axis_value"] != evaluate_expanded(q, axis) or evaluate_expanded(q, axis) != 0:
        problems.append("violating axis must have form value 0")
    if v["axis_admissibility"] != classify(axis).admissibility.value:
        problems.append("axis admissibility label is wrong")
    if pairing(witness, axis) != 1:
        problems.append("witness does not meet the axis")
    before = evaluate_expanded(q, witness)
    after = evaluate_expanded(q, transvect(axis, witness))
    if v["witness_value"] != before:
        problems.append("recorded witness value is wrong")
    if v["image_value"] != after:
        problems.append("recorded image value is wrong")
    if (after - before) % 4 != 2 or v["discrepancy"] != 2:
        problems.append("discrepancy at the witness must be 2")
    return problems


def _check_pass(gs: GeneratorSet, p: dict) -> list[str]:
    problems = []
    if p["twist_rank"] != gs.genus - 1 or rank(gs.spanning_classes()) != gs.genus - 1:
        problems.append("twist classes do not span the two-sided subspace")
    if p.get("necessary_only") is not True:
        problems.append("pass must be marked as necessary-only")
    obs = p["obstruction"]
    if (
        not isinstance(obs, list)
        or not obs
        or len(set(obs)) != len(obs)
        or not all(_is_int(i) and 0 <= i < gs.n for i in obs)
    ):
        return problems + ["obstruction must list distinct twist positions"]
    subset = [gs.twist_classes[i] for i in obs]
    if any(not c for c in subset):
        problems.append("obstruction uses a zero class")
    total = Z2Vector.zero(gs.genus)
    for c in subset:
        total = total + c
    if total:
        problems.append("obstruction classes do not sum to zero")
    # q(sum) = sum of q(c) + 2 * (pairings) = 2|S| + 2 * crossings, but q(0) = 0
    crossings = sum(pairing(a, b) for a, b in itertools.combinations(subset, 2))
    if (len(subset) + crossings) % 2 == 0:
        problems.append("obstruction does not force a contradiction")
    return problems


def check_certificate(gs: GeneratorSet, cert: Certificate) -> list[str]:
    """Every reason ``cert`` fails to certify ``gs``; empty when it is valid."""
    try:
        problems = []
        p = cert.payload
        if not isinstance(p, dict):
            return ["payload must be an object"]
        if p.get("genus") != gs.genus:
            problems.append("genus mismatch")
            return problems
        if cert.n != gs.n or cert.k != gs.k:
            problems.append("generator counts do not match the set")
        verdict = Verdict(cert.verdict)
        if not cert.citations:
            problems.append("citations missing")
        if verdict is Verdict.FAIL_NO_Y:
            if gs.k != 0:
                problems.append("set contains a Y-homeomorphism")
            if p.get("axiom") != "dehn_twists_do_not_generate":
                problems.append("axiom marker missing")
            if CITE_NO_Y not in cert.citations:
                problems.append("axiom citation missing")
            return problems
        if gs.k == 0:
            problems.append("no Y-homeomorphism, so the first check should have failed")
        if verdict is Verdict.FAIL_SPAN:
            return problems + _check_span(gs, p)
        if verdict is Verdict.FAIL_QUADRATIC_FORM:
            return problems + _check_form(gs, p)
        return problems + _check_pass(gs, p)
    except (KeyError, TypeError, ValueError, AttributeError, IndexError) as exc:
        return [f"malformed certificate: {exc!r}"]


def verify_certificate(gs: GeneratorSet, cert: Certificate) -> bool:
    return not check_certificate(gs, cert)


def szepietowski_names(genus: int) -> list[str]:
    return [f"a{i}" for i in range(1, genus)] + ["b2", "y"]


def szepietowski_set(genus: int, drop: Sequence[str] = ()) -> GeneratorSet:
    """Homology shadow of t_{a_1..a_{g-1}}, t_{b_2}, Y_{m_{g-1},a_{g-1}}.

    [a_i] = x_i + x_{i+1} and [b_2] = x_1 + x_2 + x_3 + x_4, read off the
    standard curve picture.
    """
    if not MIN_GENUS <= genus <= MAX_DIM:
        raise ValueError(f"genus must be in {MIN_GENUS}..{MAX_DIM}, got {genus}")
    unknown = set(drop) - set(szepietowski_names(genus))
    if unknown:
        raise ValueError(f"unknown generator names: {sorted(unknown)}")
    named = [(f"a{i}", Z2Vector.from_indices(genus, (i, i + 1))) for i in range(1, genus)]
    named.append(("b2", Z2Vector.from_indices(genus, (1, 2, 3, 4))))
    kept = [(name, c) for name, c in named if name not in drop]
    return GeneratorSet(
        genus,
        tuple(c for _, c in kept),
        0 if "y" in drop else 1,
        tuple(name for name, _ in kept),
    )


def bundled_sets(genus: int) -> dict[str, GeneratorSet]:
    """The full set plus every single-generator removal, keyed ``full`` / ``drop_<name>``."""
    out = {"full": szepietowski_set(genus)}
    for name in szepietowski_names(genus):
        out[f"drop_{name}"] = szepietowski_set(genus, (name,))
    return out
