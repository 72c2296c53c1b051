import random

import pytest

from autkum.curvelattice import (
    Divisor,
    i8_fiber_divisor,
    iv_star_fiber_divisor,
    kummer_config,
)
from autkum.errors import (
    IdentityMap,
    UnknownAction,
    UnknownGenerator,
    UnverifiedFibration,
)
from autkum.exactfield import RatFunc, laurent_coeffs
from autkum.lineaction import (
    INFINITY,
    AffineMap,
    DifferentialPair,
    FixedPoint,
    GroupWord,
    affine,
    affine_group_ops,
    affine_text,
    certify_fibration,
    conjugate_generator,
    evaluate_word,
    fixed_points,
    mw_action,
    pair_calculus,
    parse_affine,
    scale_by_t,
    shift_by_one,
)


def random_affine(rng, p):
    t = RatFunc.t(p)
    a = RatFunc.zero(p)
    while a.is_zero:
        a = sum((rng.randrange(p) * t**e for e in range(-2, 3)), RatFunc.zero(p))
    b = sum((rng.randrange(p) * t**e for e in range(-2, 3)), RatFunc.zero(p))
    return AffineMap(a, b)


class TestAffineGroup:
    def test_compose(self):
        f1, f2 = scale_by_t(3), shift_by_one(3)
        assert affine_group_ops(f1, f2, "compose") == affine(3, RatFunc.t(3), RatFunc.t(3))

    def test_invert(self):
        f1 = scale_by_t(3)
        assert affine_group_ops(f1, op="invert") == AffineMap(
            RatFunc.t(3).inv(), RatFunc.zero(3)
        )

    def test_translation_power_p(self):
        for p in (3, 5, 7):
            assert affine_group_ops(shift_by_one(p), op="power", n=p).is_identity

    def test_group_axioms(self):
        rng = random.Random(13)
        for p in (3, 5, 7):
            for _ in range(25):
                f, g, h = (random_affine(rng, p) for _ in range(3))
                assert f.compose(g).compose(h) == f.compose(g.compose(h))
                assert f.compose(f.inverse()).is_identity
                assert f.inverse().compose(f).is_identity
                assert f.compose(AffineMap.identity(p)) == f

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            AffineMap(RatFunc.zero(3), RatFunc.zero(3))

    def test_serialization_round_trip(self):
        rng = random.Random(17)
        for _ in range(20):
            f = random_affine(rng, 5)
            assert parse_affine(affine_text(f), 5) == f


class TestWords:
    def test_conjugated_translation(self):
        p = 3
        gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
        w = GroupWord.from_text("f1 f2 f1^-1")
        assert evaluate_word(w, gens) == affine(p, 1, RatFunc.t(p))

    def test_empty_word(self):
        gens = {"f1": scale_by_t(3)}
        assert evaluate_word(GroupWord.identity(), gens).is_identity

    def test_characteristic_kills_translation(self):
        p = 5
        gens = {"f2": shift_by_one(p)}
        assert evaluate_word(GroupWord((("f2", p),)), gens).is_identity

    def test_unbound_generator(self):
        with pytest.raises(UnknownGenerator):
            evaluate_word(GroupWord((("g", 1),)), {"f1": scale_by_t(3)})

    def test_free_reduction(self):
        w = GroupWord((("a", 2), ("a", -2), ("b", 1)))
        assert w.entries == (("b", 1),)
        assert (w * w.inverse()).is_identity

    def test_word_text_round_trip(self):
        w = GroupWord.from_text("f1^3 f2 f1^-3")
        assert GroupWord.from_text(w.to_text()) == w


class TestConjugateGenerator:
    @pytest.mark.parametrize("n", (2, 0, -3))
    def test_examples(self, n):
        f = conjugate_generator(n, 5)
        assert f.a == 1
        assert f.b == RatFunc.t(5) ** n

    @pytest.mark.parametrize("p", (3, 5, 7))
    def test_matches_word_evaluation(self, p):
        gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
        for n in range(-20, 21):
            w = GroupWord((("f1", n), ("f2", 1), ("f1", -n)))
            assert evaluate_word(w, gens) == conjugate_generator(n, p)

    def test_conjugation_law(self):
        # g (1, c) g^-1 = (1, a c) for any g = (a, b)
        rng = random.Random(23)
        for p in (3, 5, 7):
            for _ in range(20):
                g = random_affine(rng, p)
                c = random_affine(rng, p).b
                conj = g.compose(affine(p, 1, c)).compose(g.inverse())
                assert conj == AffineMap(RatFunc.one(p), g.a * c)


class TestClosure:
    def test_words_have_monomial_scale_and_laurent_shift(self):
        rng = random.Random(29)
        for p in (3, 5, 7):
            gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
            for _ in range(25):
                entries = [
                    (rng.choice(("f1", "f2")), rng.randint(-3, 3)) for _ in range(6)
                ]
                value = evaluate_word(GroupWord(entries), gens)
                va = laurent_coeffs(value.a)  # must not raise NotLaurent
                assert len([c for c in va.coeffs if c]) == 1
                laurent_coeffs(value.b)
                assert value.is_translation == (value.a == 1)

    def test_nontrivial_translation_has_order_p(self):
        rng = random.Random(31)
        for p in (3, 5, 7):
            for _ in range(15):
                b = random_affine(rng, p).b
                if b.is_zero:
                    continue
                f = affine(p, 1, b)
                assert f.power(p).is_identity
                for k in range(1, p):
                    assert not f.power(k).is_identity


class TestFixedPoints:
    def test_scaling(self):
        p = 3
        t = RatFunc.t(p)
        pts = fixed_points(scale_by_t(p))
        assert pts == frozenset(
            {FixedPoint(RatFunc.zero(p), t), FixedPoint(INFINITY, t.inv())}
        )

    def test_translation_is_parabolic(self):
        pts = fixed_points(shift_by_one(5))
        assert pts == frozenset({FixedPoint(INFINITY, RatFunc.one(5), parabolic=True)})

    def test_involution_multipliers(self):
        p = 5
        f = affine(p, p - 1, 1)
        pts = fixed_points(f)
        assert len(pts) == 2
        assert all(fp.multiplier == p - 1 for fp in pts)

    def test_multiplier_product_is_one(self):
        rng = random.Random(37)
        for _ in range(30):
            f = random_affine(rng, 5)
            if f.a == 1:
                continue
            prod = RatFunc.one(5)
            for fp in fixed_points(f):
                prod = prod * fp.multiplier
            assert prod == 1

    def test_identity_rejected(self):
        with pytest.raises(IdentityMap):
            fixed_points(AffineMap.identity(3))


class TestMwActions:
    def test_octagon_gives_scaling(self):
        cfg = kummer_config()
        cert = certify_fibration(cfg, i8_fiber_divisor(), "C31", "C41", 3)
        assert cert.verified
        assert mw_action(cert, "C41") == scale_by_t(3)

    def test_star_gives_translation(self):
        cfg = kummer_config()
        cert = certify_fibration(cfg, iv_star_fiber_divisor(), "C21", "C31", 3)
        assert mw_action(cert, "C31") == shift_by_one(3)

    def test_zero_section_acts_trivially(self):
        cfg = kummer_config()
        cert = certify_fibration(cfg, i8_fiber_divisor(), "C31", "C41", 3)
        assert mw_action(cert, "C31").is_identity

    def test_unverified_refused(self):
        cfg = kummer_config()
        broken = i8_fiber_divisor() - Divisor({"C21": 1})
        cert = certify_fibration(cfg, broken, "C31", "C41", 3)
        assert not cert.verified
        with pytest.raises(UnverifiedFibration):
            mw_action(cert, "C41")

    def test_unknown_key_refused(self):
        cfg = kummer_config()
        cert = certify_fibration(cfg, i8_fiber_divisor(), "C31", "C41", 3)
        with pytest.raises(UnknownAction):
            mw_action(cert, "C22")


class TestPairCalculus:
    def test_restricted_scalar(self):
        pair = DifferentialPair(RatFunc.one(5), RatFunc.t(5))
        assert pair_calculus(pair, "determinant") == RatFunc.t(5)

    def test_scalar_differential(self):
        c = RatFunc.t(7)
        assert pair_calculus(DifferentialPair(c, c), "is_scalar")
        assert not pair_calculus(
            DifferentialPair(RatFunc.one(7), RatFunc.from_int(7, 2)), "is_scalar"
        )

    def test_trivial_differential(self):
        pair = DifferentialPair(RatFunc.one(3), RatFunc.one(3))
        assert pair_calculus(pair, "fixes_all_tangents")

    def test_kernel_identity(self):
        rng = random.Random(41)
        for _ in range(300):
            p = rng.choice((3, 5, 7))
            t = RatFunc.t(p)
            a1 = rng.randrange(1, p) * t ** rng.randint(0, 2)
            a2 = rng.randrange(1, p) * t ** rng.randint(0, 2)
            pair = DifferentialPair(a1, a2)
            lhs = pair.fixes_all_tangents()
            rhs = pair.fixes_curve_tangent() and pair.determinant() == 1
            assert lhs == rhs

    def test_zero_eigenvalue_rejected(self):
        with pytest.raises(ValueError):
            DifferentialPair(RatFunc.zero(3), RatFunc.one(3))
