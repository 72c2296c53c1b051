import itertools
import random
import time

import pytest

from autkum.errors import EmptyInput, FieldMismatch, UnknownGenerator
from autkum.exactfield import LaurentVector, parse_laurent
from autkum.fgcert import (
    build_coset_table,
    escape_witness,
    nielsen_schreier_expected,
    non_fg_certificate,
    parse_permutations,
    schreier_generators,
    span_basis,
    span_dimension,
    span_membership,
    word_permutation,
)
from autkum.lineaction import GroupWord, evaluate_word, scale_by_t, shift_by_one
from autkum.exactfield import laurent_coeffs


def lv(text, p):
    return parse_laurent(text, p)


class TestSpan:
    def test_powers_independent(self):
        assert span_dimension([lv("1", 3), lv("t", 3), lv("t^2", 3)], 3) == 3

    def test_scalar_multiples(self):
        assert span_dimension([lv("t", 5), lv("2*t", 5)], 5) == 1

    def test_dependent_triple(self):
        assert span_dimension([lv("1 + t", 3), lv("1", 3), lv("t", 3)], 3) == 2

    def test_empty(self):
        assert span_dimension([], 3) == 0

    def test_dimension_bounded_and_monotone(self):
        rng = random.Random(3)
        for _ in range(40):
            p = rng.choice((3, 5, 7))
            vectors = [
                LaurentVector(p, rng.randint(-3, 3), [rng.randrange(p) for _ in range(3)])
                for _ in range(rng.randint(1, 5))
            ]
            dim = span_dimension(vectors, p)
            assert dim <= len(vectors)
            assert span_dimension(vectors[:-1], p) <= dim

    def test_mixed_characteristic(self):
        with pytest.raises(FieldMismatch):
            span_dimension([lv("t", 3), lv("t", 5)], 3)

    def test_basis_rows_are_echelon(self):
        basis = span_basis([lv("1 + t", 3), lv("t + t^2", 3), lv("1 + 2*t + t^2", 3)], 3)
        assert basis.dimension == 2
        pivots = [next(i for i, c in enumerate(row) if c) for row in basis.rows]
        assert pivots == sorted(set(pivots))


class TestMembership:
    def test_transcendence(self):
        assert not span_membership(lv("t^2", 3), [lv("1", 3), lv("t", 3)], 3)

    def test_explicit_combination(self):
        assert span_membership(lv("2 + t", 3), [lv("1", 3), lv("t", 3)], 3)

    def test_zero_in_empty_span(self):
        zero = LaurentVector(3, 0, (0,))
        assert span_membership(zero, [], 3)

    def test_agrees_with_brute_force_enumeration(self):
        # oracle: enumerate every F_p combination of the generating set
        rng = random.Random(7)
        for _ in range(25):
            p = 3
            vectors = [
                LaurentVector(p, rng.randint(-2, 2), [rng.randrange(p) for _ in range(2)])
                for _ in range(3)
            ]
            target = LaurentVector(p, rng.randint(-2, 2), [rng.randrange(p) for _ in range(2)])
            combos = set()
            for coeffs in itertools.product(range(p), repeat=len(vectors)):
                total = LaurentVector(p, 0, (0,))
                acc = total.reconstruct()
                for c, v in zip(coeffs, vectors):
                    acc = acc + c * v.reconstruct()
                combos.add(laurent_coeffs(acc))
            assert span_membership(target, vectors, p) == (target in combos)


class TestEscapeWitness:
    def test_empty_set(self):
        assert escape_witness([], 3) == 0

    def test_gap_at_two(self):
        assert escape_witness([lv("1", 3), lv("t", 3), lv("t^3", 3)], 3) == 2

    def test_negative_window(self):
        assert escape_witness([lv("t^-1", 3), lv("1", 3), lv("t", 3)], 3) == 2

    def test_witness_is_least(self):
        rng = random.Random(11)
        for _ in range(30):
            p = rng.choice((3, 5, 7))
            vectors = [
                LaurentVector(p, rng.randint(-2, 3), [rng.randrange(p) for _ in range(2)])
                for _ in range(rng.randint(0, 4))
            ]
            n = escape_witness(vectors, p)
            assert not span_membership(LaurentVector(p, n, (1,)), vectors, p)
            for j in range(n):
                assert span_membership(LaurentVector(p, j, (1,)), vectors, p)


class TestNonFgCertificate:
    def test_small(self):
        cert = non_fg_certificate(3, 3)
        assert cert.dims == (1, 2, 3, 4)
        assert cert.valid

    @pytest.mark.parametrize("p", (3, 5, 7))
    def test_depth_one(self, p):
        assert non_fg_certificate(1, p).dims == (1, 2)

    def test_depth_200_fast(self):
        t0 = time.perf_counter()
        cert = non_fg_certificate(200, 7)
        assert time.perf_counter() - t0 < 1.0
        assert cert.dims == tuple(range(1, 202))

    def test_depth_guard(self):
        with pytest.raises(ValueError):
            non_fg_certificate(0, 3)


class TestWordBridge:
    def test_translation_parts_span_equals_generated_subgroup(self):
        # the subgroup generated by translations equals the F_p-span of
        # their shift parts; checked by brute-force enumeration
        p = 3
        gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
        words = [
            GroupWord((("f1", n), ("f2", 1), ("f1", -n))) for n in (-1, 0, 2)
        ]
        parts = [laurent_coeffs(evaluate_word(w, gens).b) for w in words]
        for coeffs in itertools.product(range(p), repeat=len(words)):
            total = evaluate_word(GroupWord.identity(), gens)
            for c, w in zip(coeffs, words):
                for _ in range(c):
                    total = total.compose(evaluate_word(w, gens))
            assert total.is_translation
            assert span_membership(laurent_coeffs(total.b), parts, p)
        assert not span_membership(lv("t^3", p), parts, p)


class TestSchreier:
    def test_index_two_regular(self):
        gens = {"a": (1, 0), "b": (1, 0)}
        words = schreier_generators(gens, 0)
        assert sorted(w.to_text() for w in words) == ["a b", "a^2", "b a^-1"]
        assert len(words) == nielsen_schreier_expected(2, 2)
        for w in words:
            assert word_permutation(w, gens)[0] == 0

    def test_cyclic_three(self):
        gens = {"a": (1, 2, 0)}
        words = schreier_generators(gens, 0)
        assert [w.to_text() for w in words] == ["a^3"]

    def test_identity_action_returns_generators(self):
        gens = {"a": (0, 1), "b": (0, 1)}
        words = schreier_generators(gens, 0)
        assert sorted(w.to_text() for w in words) == ["a", "b"]

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            schreier_generators({}, 0)

    def test_base_out_of_range(self):
        with pytest.raises(ValueError):
            schreier_generators({"a": (1, 0)}, 5)

    def test_transversal_deterministic(self):
        gens = {"a": (1, 2, 3, 0), "b": (0, 2, 1, 3)}
        w1 = [w.to_text() for w in schreier_generators(gens, 0)]
        w2 = [w.to_text() for w in schreier_generators(gens, 0)]
        assert w1 == w2

    def test_random_transitive_actions_match_rank_formula(self):
        rng = random.Random(13)
        trials = 0
        while trials < 15:
            degree = rng.randint(2, 6)
            rank = rng.randint(1, 3)
            gens = {
                f"g{k}": tuple(rng.sample(range(degree), degree)) for k in range(rank)
            }
            table_ok = True
            try:
                table = build_coset_table(gens, 0)
            except Exception:
                table_ok = False
            if not table_ok or table.n_cosets != degree:
                continue
            trials += 1
            words = schreier_generators(gens, 0)
            assert len(words) == nielsen_schreier_expected(rank, degree)
            for w in words:
                assert word_permutation(w, gens)[0] == 0


class TestCosetTable:
    def test_transitions_are_permutations(self):
        gens = {"a": (1, 2, 0, 3), "b": (0, 1, 3, 2)}
        table = build_coset_table(gens, 0)
        assert table.points[0] == 0
        for row in table.forward:
            assert sorted(row) == list(range(table.n_cosets))

    def test_transition_inverse(self):
        gens = {"a": (1, 2, 0)}
        table = build_coset_table(gens, 0)
        for c in range(table.n_cosets):
            fwd = table.transition(c, "a", 1)
            assert table.transition(fwd, "a", -1) == c


class TestPermutationText:
    def test_parse_pair(self):
        gens = parse_permutations("a=(0 1); b=(0 1)")
        assert gens == {"a": (1, 0), "b": (1, 0)}

    def test_parse_disjoint_cycles(self):
        gens = parse_permutations("a=(0 1)(2 3)")
        assert gens["a"] == (1, 0, 3, 2)

    def test_degree_padding(self):
        gens = parse_permutations("a=(0 1)", degree=4)
        assert gens["a"] == (1, 0, 2, 3)

    def test_word_permutation_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            word_permutation(GroupWord((("z", 1),)), {"a": (1, 0)})


class TestNielsenSchreier:
    def test_examples(self):
        assert nielsen_schreier_expected(2, 2) == 3
        assert nielsen_schreier_expected(1, 9) == 1
        assert nielsen_schreier_expected(3, 2) == 5

    def test_guards(self):
        with pytest.raises(ValueError):
            nielsen_schreier_expected(0, 1)
