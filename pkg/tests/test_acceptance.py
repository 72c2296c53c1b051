"""Acceptance suite.

One test per criterion, each printing a pass/fail line; every expected
value is either pinned exactly or guarded by an independent oracle inside
the test.  Run with `pytest tests/test_acceptance.py -s` to see the lines.
"""

import random
import time
from contextlib import contextmanager

import numpy as np

from autkum.curvelattice import (
    Divisor,
    GenericOnCurve,
    KodairaType,
    NamedPoint,
    blow_up,
    canonical_class,
    check_section,
    classify_fiber,
    gram_rank,
    i8_fiber_divisor,
    intersect,
    iv_star_fiber_divisor,
    kummer_config,
    total_transform,
)
from autkum.ellcurve import (
    LegendreCurve,
    enumerate_points,
    find_supersingular_lambda,
    hasse_bound_holds,
    hasse_poly,
    is_ordinary_generic,
    point_add,
    point_count,
)
from autkum.exactfield import (
    LaurentVector,
    PrimeFieldElem,
    RatFunc,
    ext_field_build,
    laurent_coeffs,
)
from autkum.fgcert import (
    build_coset_table,
    escape_witness,
    nielsen_schreier_expected,
    non_fg_certificate,
    schreier_generators,
    span_membership,
    word_permutation,
)
from autkum.lineaction import (
    AffineMap,
    DifferentialPair,
    GroupWord,
    affine,
    conjugate_generator,
    evaluate_word,
    fixed_points,
    scale_by_t,
    shift_by_one,
)

ODD_PRIMES_TO_50 = [p for p in range(3, 51) if all(p % d for d in range(2, p))]
PRIME_POWERS_TO_49 = [
    (p, n)
    for p in ODD_PRIMES_TO_50
    for n in (1, 2, 3)
    if p**n <= 49
]


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    print(f"[acceptance] {name}: PASS")


def test_criterion_1_lattice_rank():
    with criterion("1 lattice rank 18"):
        cfg = kummer_config()
        t0 = time.perf_counter()
        rank = gram_rank(cfg)
        elapsed = time.perf_counter() - t0
        assert rank == 18
        assert elapsed < 0.1


def test_criterion_2_fiber_types_and_sections():
    with criterion("2 fiber types and sections"):
        cfg = kummer_config()
        assert classify_fiber(cfg, i8_fiber_divisor()) == KodairaType("I", 8)
        assert classify_fiber(cfg, iv_star_fiber_divisor()) == KodairaType("IV*")
        assert check_section(cfg, i8_fiber_divisor(), "C31")
        assert check_section(cfg, i8_fiber_divisor(), "C41")
        assert check_section(cfg, iv_star_fiber_divisor(), "C21")
        assert check_section(cfg, iv_star_fiber_divisor(), "C31")
        assert intersect(cfg, i8_fiber_divisor(), Divisor({"C31": 1})) == 1
        assert intersect(cfg, i8_fiber_divisor(), Divisor({"C41": 1})) == 1
        assert intersect(cfg, iv_star_fiber_divisor(), Divisor({"C21": 1})) == 1
        assert intersect(cfg, iv_star_fiber_divisor(), Divisor({"C31": 1})) == 1


def test_criterion_3_canonical_class():
    with criterion("3 canonical class after two blow-ups"):
        cfg = kummer_config()
        once = blow_up(cfg, NamedPoint("P"), name="EP")
        assert canonical_class(once) == Divisor({"EP": 1})
        twice = blow_up(once, GenericOnCurve("EP"), name="EQ")
        assert canonical_class(twice) == Divisor({"EP": 1, "EQ": 2})


def test_criterion_4_conjugation_identity():
    with criterion("4 conjugation identity"):
        for p in (3, 5, 7):
            gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
            one = RatFunc.one(p)
            t = RatFunc.t(p)
            for n in range(-20, 21):
                word = GroupWord((("f1", n), ("f2", 1), ("f1", -n)))
                value = evaluate_word(word, gens)
                assert value == AffineMap(one, t**n)
                assert value == conjugate_generator(n, p)


def _random_translation_part(rng, p, gens):
    word = GroupWord.identity()
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(-6, 8)
        j = rng.randint(1, p - 1)
        word = word * GroupWord((("f1", n), ("f2", j), ("f1", -n)))
    value = evaluate_word(word, gens)
    assert value.is_translation
    return laurent_coeffs(value.b)


def test_criterion_5_non_finite_generation():
    with criterion("5 non-finite-generation certificate"):
        for p in (3, 5, 7):
            cert = non_fg_certificate(200, p)
            assert cert.dims == tuple(range(1, 202))
        rng = random.Random(20260810)
        for trial in range(100):
            p = (3, 5, 7)[trial % 3]
            gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
            vectors = [
                _random_translation_part(rng, p, gens)
                for _ in range(rng.randint(1, 4))
            ]
            n = escape_witness(vectors, p)
            assert not span_membership(LaurentVector(p, n, (1,)), vectors, p)
            for j in range(n):
                assert span_membership(LaurentVector(p, j, (1,)), vectors, p)


def test_criterion_6_supersingular_search():
    with criterion("6 supersingular parameters for p <= 50"):
        for p in ODD_PRIMES_TO_50:
            lam = find_supersingular_lambda(p)
            h = hasse_poly(p)
            if isinstance(lam, PrimeFieldElem):
                assert h.eval_int(lam.value) == 0
                curve = LegendreCurve(ext_field_build(p, 1), lam)
                count = point_count(curve)
                assert count == p + 1
                assert hasse_bound_holds(p, count)
            else:
                assert h.eval_at(lam).is_zero
                curve = LegendreCurve(lam.field, lam)
                count = point_count(curve)
                assert (p**2 + 1 - count) % p == 0
                assert hasse_bound_holds(p**2, count)
            ordinary, witness = is_ordinary_generic(p)
            assert ordinary and not witness.is_zero


def test_criterion_7_schreier_rank_formula():
    with criterion("7 Schreier generator counts"):
        fixed_cases = [
            {"a": (1, 0), "b": (1, 0)},
            {"a": (1, 2, 0), "b": (2, 0, 1)},
            {"a": (1, 0, 2), "b": (0, 2, 1), "c": (1, 2, 0)},
        ]
        rng = random.Random(514)
        random_cases = []
        while len(random_cases) < 12:
            degree = rng.randint(2, 6)
            rank = rng.randint(1, 3)
            gens = {
                f"g{k}": tuple(rng.sample(range(degree), degree)) for k in range(rank)
            }
            if build_coset_table(gens, 0).n_cosets == degree:
                random_cases.append(gens)
        for gens in fixed_cases + random_cases:
            table = build_coset_table(gens, 0)
            degree = len(next(iter(gens.values())))
            assert table.n_cosets == degree  # transitive action
            words = schreier_generators(gens, 0)
            assert len(words) == nielsen_schreier_expected(len(gens), degree)
            for w in words:
                assert word_permutation(w, gens)[0] == 0


class TestCriterion8StructuralSuites:
    def test_field_axioms(self):
        with criterion("8a field axioms, 1000 cases per field"):
            for p in (3, 5, 7):
                for n in (1, 2, 3):
                    field = ext_field_build(p, n)
                    rng = random.Random(1000 * p + n)
                    elems = list(field.elements())
                    for _ in range(1000):
                        x, y, z = (rng.choice(elems) for _ in range(3))
                        assert (x + y) + z == x + (y + z)
                        assert x * (y + z) == x * y + x * z
                        assert x + y == y + x
                        assert x * y == y * x
                        if not x.is_zero:
                            assert x * x.inv() == 1

    def test_group_law_all_triples(self):
        with criterion("8b group law on all triples, q <= 49"):
            for p, n in PRIME_POWERS_TO_49:
                field = ext_field_build(p, n)
                for lam in field.elements():
                    if lam == 0 or lam == 1:
                        continue
                    curve = LegendreCurve(field, lam)
                    pts = enumerate_points(curve)
                    index = {pt: i for i, pt in enumerate(pts)}
                    size = len(pts)
                    table = np.empty((size, size), dtype=np.int32)
                    for i, a in enumerate(pts):
                        for j, b in enumerate(pts):
                            table[i, j] = index[point_add(curve, a, b)]
                    assert np.array_equal(table, table.T)
                    assert np.array_equal(table[table], table[:, table])

    def test_adjunction_across_blow_up_stages(self):
        with criterion("8c adjunction at every stage"):
            cfg = kummer_config()
            stages = [cfg]
            stages.append(blow_up(stages[-1], NamedPoint("P"), name="EP"))
            stages.append(blow_up(stages[-1], GenericOnCurve("EP"), name="EQ"))
            stages.append(blow_up(stages[-1], NamedPoint("F1*C11"), name="ER"))
            for stage in stages:
                k = canonical_class(stage)
                for label in stage.labels:
                    c = Divisor({label: 1})
                    assert intersect(stage, c, c) + intersect(stage, k, c) == -2

    def test_total_transform_preservation(self):
        with criterion("8d total transforms preserve intersections"):
            rng = random.Random(77)
            cfg = kummer_config()
            chain = [
                blow_up(cfg, NamedPoint("P"), name="EP"),
            ]
            chain.append(blow_up(chain[-1], GenericOnCurve("EP"), name="EQ"))
            before = [cfg, chain[0]]
            for prev, cur in zip(before, chain):
                for _ in range(40):
                    d1 = Divisor(
                        {lbl: rng.randint(-2, 2) for lbl in rng.sample(prev.labels, 4)}
                    )
                    d2 = Divisor(
                        {lbl: rng.randint(-2, 2) for lbl in rng.sample(prev.labels, 4)}
                    )
                    assert intersect(
                        cur, total_transform(cur, d1), total_transform(cur, d2)
                    ) == intersect(prev, d1, d2)

    def test_multiplier_product(self):
        with criterion("8e fixed-point multipliers multiply to one"):
            rng = random.Random(88)
            for _ in range(200):
                p = rng.choice((3, 5, 7))
                t = RatFunc.t(p)
                a = RatFunc.zero(p)
                while a.is_zero or a == 1:
                    a = rng.randrange(p) * t ** rng.randint(-2, 2) + rng.randrange(p)
                b = rng.randrange(p) * t ** rng.randint(-2, 2)
                f = affine(p, a, b)
                prod = RatFunc.one(p)
                for fp in fixed_points(f):
                    prod = prod * fp.multiplier
                assert prod == 1

    def test_translation_order(self):
        with criterion("8f translations have order p"):
            rng = random.Random(99)
            for p in (3, 5, 7):
                for _ in range(60):
                    b = RatFunc.zero(p)
                    while b.is_zero:
                        b = rng.randrange(p) * RatFunc.t(p) ** rng.randint(-3, 3)
                    f = affine(p, 1, b)
                    assert f.power(p).is_identity
                    for k in range(1, p):
                        assert not f.power(k).is_identity

    def test_pair_calculus_kernel_identity(self):
        with criterion("8g pair-calculus kernel identity, 1000 pairs"):
            rng = random.Random(111)
            for _ in range(1000):
                p = rng.choice((3, 5, 7))
                t = RatFunc.t(p)
                a1 = rng.randrange(1, p) * t ** rng.randint(-1, 2)
                a2 = rng.randrange(1, p) * t ** rng.randint(-1, 2)
                pair = DifferentialPair(a1, a2)
                assert pair.fixes_all_tangents() == (
                    pair.fixes_curve_tangent() and pair.determinant() == 1
                )
