"""Exit criteria, one test per criterion; each prints a PASS/FAIL line (run with -s)."""

import itertools
import json
import random
import time
from contextlib import contextmanager

import pytest

from mcgcert.certifier import (
    Certificate,
    GeneratorSet,
    Verdict,
    bundled_sets,
    certify,
    szepietowski_names,
    verify_certificate,
)
from mcgcert.explorer import generate, is_subgroup, is_subgroup_proper, reference_group, stabilizer_of_form
from mcgcert.gf2 import Z2Vector, rank
from mcgcert.homology import characteristic, iter_classes, pairing, w1
from mcgcert.quadforms import (
    Z4Form,
    construct_invariant_form,
    double,
    enumerate_forms,
    evaluate,
    find_violating_transvection,
    is_preserved_by,
    preserved_pointwise,
    pullback,
)
from mcgcert.transvections import matrix_of, transvect

SEED = 20261015


@contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\nFAIL  {label}")
        raise
    print(f"\nPASS  {label}  ({time.perf_counter() - start:.3f}s)")


def _random_even(rng, g):
    bits = rng.getrandbits(g)
    if bits.bit_count() % 2:
        bits ^= 1 << rng.randrange(g)
    return Z2Vector(g, bits)


def test_ac1_theorem_reproduction():
    with criterion("AC1 bundled set passes, every single removal fails, g = 4..12"):
        for g in range(4, 13):
            start = time.perf_counter()
            sets = bundled_sets(g)
            full = certify(sets["full"])
            assert (full.verdict, full.n, full.k) == (Verdict.PASS, g, 1)
            for name in szepietowski_names(g):
                v = certify(sets[f"drop_{name}"]).verdict
                if name == "y":
                    assert v is Verdict.FAIL_NO_Y
                else:
                    assert v in (Verdict.FAIL_SPAN, Verdict.FAIL_QUADRATIC_FORM), (g, name, v)
            assert time.perf_counter() - start < 1.0


def test_ac2_every_form_broken():
    with criterion("AC2 every Z/4 form at g = 4, 5, 6 has a violating transvection"):
        start = time.perf_counter()
        for g in (4, 5, 6):
            count = 0
            for q in enumerate_forms(g):
                x, y = find_violating_transvection(q)
                assert x and w1(x) == 0 and pairing(y, x) == 1
                shifted = pullback(q, matrix_of(x))(y)
                assert (shifted - evaluate(q, y)) % 4 == 2
                count += 1
            assert count == 2 ** g
        assert time.perf_counter() - start < 1.0


def test_ac3_invariant_form_construction():
    with criterion("AC3 invariant form for 100 random spanning sets, g = 4..10"):
        rng = random.Random(SEED)
        start = time.perf_counter()
        for g in range(4, 11):
            for _ in range(100):
                while True:
                    classes = [_random_even(rng, g) for _ in range(g - 1)]
                    if rank(classes) == g - 1:
                        break
                q = construct_invariant_form(classes)
                for c in classes:
                    assert preserved_pointwise(q, matrix_of(c))
        assert time.perf_counter() - start < 5.0


def test_ac4_criterion_equivalence():
    with criterion("AC4 closed-form invariance criterion agrees with pointwise pullback at g = 4"):
        checked = 0
        for q in enumerate_forms(4):
            for y in iter_classes(4, two_sided_only=True):
                f = pullback(q, matrix_of(y))
                pointwise = all(f(x) == evaluate(q, x) for x in iter_classes(4))
                assert is_preserved_by(q, y) == pointwise
                checked += 1
        assert checked == 16 * 8


def test_ac5_n_below_genus_never_passes():
    with criterion("AC5 200 random sets with n = g - 1, k >= 1 never pass"):
        rng = random.Random(SEED + 5)
        for _ in range(200):
            g = rng.randint(4, 8)
            gs = GeneratorSet(g, tuple(_random_even(rng, g) for _ in range(g - 1)), rng.randint(1, 3))
            assert certify(gs).verdict is not Verdict.PASS


@pytest.mark.parametrize("g", [4, 5])
def test_ac6_group_cross_validation(g):
    with criterion(f"AC6 BFS cross-validation at g = {g}"):
        start = time.perf_counter()
        ref = reference_group(g)
        scenarios = 0
        for gs in bundled_sets(g).values():
            cert = certify(gs)
            if cert.verdict is not Verdict.FAIL_QUADRATIC_FORM:
                continue
            scenarios += 1
            h = generate(list(gs.twist_classes), g)
            stab = stabilizer_of_form(ref, Z4Form(g, tuple(cert.payload["form"])))
            assert is_subgroup_proper(h, ref)
            assert is_subgroup(h, stab)
        assert scenarios >= 1
        for q in enumerate_forms(g):
            assert is_subgroup_proper(stabilizer_of_form(ref, q), ref)
        assert time.perf_counter() - start < 10.0


def _algebra_case(g, y, a, b, q):
    assert transvect(y, transvect(y, a)) == a
    assert pairing(transvect(y, a), transvect(y, b)) == pairing(a, b)
    u = characteristic(g)
    assert transvect(y, u) == u
    assert evaluate(q, a + b) == (evaluate(q, a) + evaluate(q, b) + double(pairing(a, b))) % 4
    assert evaluate(q, a) % 2 == w1(a)


def test_ac7_algebraic_properties():
    with criterion("AC7 involution, isometry, u-fixing, quadratic relation, parity"):
        for g in range(1, 6):
            classes = list(iter_classes(g))
            evens = list(iter_classes(g, two_sided_only=True))
            forms = list(enumerate_forms(g))
            for y, a, b in itertools.product(evens, classes, classes):
                _algebra_case(g, y, a, b, forms[(y.bits + a.bits) % len(forms)])
            for q, a, b in itertools.product(forms, classes, classes):
                assert evaluate(q, a + b) == (evaluate(q, a) + evaluate(q, b) + double(pairing(a, b))) % 4
        rng = random.Random(SEED + 7)
        for _ in range(10_000):
            g = rng.randint(2, 16)
            y = _random_even(rng, g)
            a, b = Z2Vector(g, rng.getrandbits(g)), Z2Vector(g, rng.getrandbits(g))
            q = Z4Form(g, tuple(rng.choice((1, 3)) for _ in range(g)))
            _algebra_case(g, y, a, b, q)


def _mutants():
    """(label, generator set, tampered certificate) with exactly one field changed."""

    def mutate(gs, edit):
        doc = json.loads(json.dumps(certify(gs).to_json()))
        edit(doc)
        return gs, Certificate.from_json(doc)

    full = bundled_sets(5)["full"]
    span = bundled_sets(5)["drop_a2"]
    form = bundled_sets(5)["drop_b2"]
    no_y = bundled_sets(5)["drop_y"]

    def setp(key, value):
        def edit(doc):
            doc["certificate"][key] = value
        return edit

    def setv(key, value):
        def edit(doc):
            doc["certificate"]["violation"][key] = value
        return edit

    def flip_form(doc):
        doc["certificate"]["form"][0] = 4 - doc["certificate"]["form"][0]

    def drop_obstruction(doc):
        doc["certificate"]["obstruction"].pop()

    def alter_echelon(doc):
        doc["certificate"]["echelon"][0] = [1, 3]

    def alter_twist_value(doc):
        doc["certificate"]["twist_values"][0] = 0

    cases = [
        ("pass: verdict relabelled", full, lambda d: d.update(verdict="fail_span")),
        ("pass: n changed", full, lambda d: d.update(n=d["n"] + 1)),
        ("pass: k changed", full, lambda d: d.update(k=0)),
        ("pass: obstruction shortened", full, drop_obstruction),
        ("pass: rank changed", full, setp("twist_rank", 3)),
        ("pass: necessary-only flag cleared", full, setp("necessary_only", False)),
        ("pass: genus changed", full, setp("genus", 6)),
        ("span: witness inside span", span, setp("witness", [1, 2])),
        ("span: witness one-sided", span, setp("witness", [1])),
        ("span: rank inflated", span, setp("twist_rank", 4)),
        ("span: echelon row altered", span, alter_echelon),
        ("span: residue zeroed", span, setp("residue", [])),
        ("form: q(x1) flipped", form, flip_form),
        ("form: even basis value", form, setp("form", [2, 1, 1, 1, 1])),
        ("form: axis with value 2", form, setv("axis", [1, 2])),
        ("form: witness off the axis", form, setv("witness", [5])),
        ("form: discrepancy zeroed", form, setv("discrepancy", 0)),
        ("form: witness value wrong", form, setv("witness_value", 3)),
        ("form: image value wrong", form, setv("image_value", 1)),
        ("form: twist value wrong", form, alter_twist_value),
        ("form: admissibility label wrong", form, setv("axis_admissibility", "possibly_non_admissible")),
        ("form: citations removed", form, lambda d: d.update(citations=[])),
        ("no-y: axiom marker changed", no_y, setp("axiom", "none")),
        ("no-y: k changed", no_y, lambda d: d.update(k=1)),
    ]
    return [(label, *mutate(gs, edit)) for label, gs, edit in cases]


def test_ac8_certificate_soundness():
    with criterion("AC8 certificates verify; every single-field mutant is rejected"):
        produced = 0
        for g in range(4, 9):
            for gs in bundled_sets(g).values():
                assert verify_certificate(gs, certify(gs))
                produced += 1
        rng = random.Random(SEED + 8)
        for _ in range(200):
            g = rng.randint(4, 8)
            gs = GeneratorSet(g, tuple(_random_even(rng, g) for _ in range(rng.randint(0, g + 2))), rng.randint(0, 2))
            assert verify_certificate(gs, certify(gs))
        mutants = _mutants()
        assert len(mutants) >= 20
        for label, gs, bad in mutants:
            assert bad != certify(gs), label
            assert not verify_certificate(gs, bad), label
