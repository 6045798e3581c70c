"""The block classifier for simple comodules and the differential oracle."""

import pytest

from ncgl2.comodules import are_isomorphic, left_dual, weight_decomposition
from ncgl2.simples import (
    BlockExpression,
    ClassifierError,
    block_char,
    block_comodule,
    classify,
    classify_crosscheck,
    delta_grouping,
    sl2_commutation_check,
    sl2_rank_oracle,
    split_segments,
    validate_adjacency,
)
from ncgl2.standard import build_L
from ncgl2.weights import LambdaWord, enumerate_lambda, parse_lambda


def lam(text: str) -> LambdaWord:
    return parse_lambda(text)


def run_word(z: tuple[int, ...]) -> LambdaWord:
    return parse_lambda(".Di.".join(f"d^{k}" if k > 1 else "d" for k in z))


class TestSegments:
    def test_split_examples(self):
        lead, segments, connectors, trail = split_segments(lam("D.d^2.Di.d.D^3"))
        assert lead == 1
        assert segments == [(2, 1)]
        assert connectors == []
        assert trail == 3

    def test_split_two_segments(self):
        lead, segments, connectors, trail = split_segments(lam("d.Di.d.D^2.d^2"))
        assert lead == 0
        assert segments == [(1, 1), (2,)]
        assert connectors == [2]
        assert trail == 0

    def test_delta_grouping(self):
        # chains of unit gaps merge into single T factors
        assert delta_grouping((1, 1, 3)).render() == "T3 * S2"
        assert delta_grouping((2,)).render() == "S2"
        assert delta_grouping((1, 1)).render() == "T2"


class TestClassifier:
    # canonical block expressions and dimensions, frozen from the
    # greedy reduction plus exchange-move normalization
    CASES = [
        ((2,), "S2", 3),
        ((1, 1), "T2", 3),
        ((1, 2), "T2 * S1", 6),
        ((3, 1), "S3 * Ri * T1", 8),
        ((1, 1, 3), "T3 * S2", 12),
        ((2, 2), "S2 * Ri * S2", 9),
        ((2, 1, 2), "S1 * T3 * S1", 16),
        ((1, 1, 2, 1, 1), "T3 * T3", 16),
        ((2, 2, 2), "S2 * Ri * S2 * Ri * S2", 27),
        ((1, 3, 1, 1), "T2 * S1 * T3", 24),
        ((1, 4, 1, 1, 1, 1), "T1 * Ri * S3 * T5", 48),
    ]

    @pytest.mark.parametrize("z,expected,dim", CASES)
    def test_single_segment_words(self, z, expected, dim):
        expr = classify(run_word(z))
        assert expr.render() == expected
        assert expr.dim == dim

    def test_pure_determinant(self):
        assert classify(lam("D^2")).render() == "R^2"
        assert classify(lam("Di")).render() == "Ri"
        assert classify(LambdaWord.one()).render() == "1"

    def test_multi_segment_concatenates(self):
        # a connector that is not delta^-1 separates the problem completely
        whole = classify(lam("d.Di.d.D^2.d^2"))
        left = classify(lam("d.Di.d"))
        right = classify(lam("d^2"))
        assert whole.factors == left.factors + (("R", 2),) + right.factors
        assert whole.render() == "T2 * R^2 * S2"
        assert whole.dim == left.dim * right.dim

    def test_expression_dim_is_product(self):
        expr = BlockExpression((("T", 2), ("R", -1), ("S", 3)))
        assert expr.dim == 3 * 1 * 4
        assert expr.rinv_count() == 1

    def test_all_emitted_expressions_are_admissible(self):
        for l in enumerate_lambda(4):
            expr = classify(l)
            validate_adjacency(expr.factors)  # must not raise

    def test_adjacency_violations_raise(self):
        with pytest.raises(ClassifierError):
            validate_adjacency((("T", 1), ("S", 3)))
        with pytest.raises(ClassifierError):
            validate_adjacency((("T", 2), ("R", -1), ("S", 1)))

    def test_classifier_deterministic(self):
        for l in enumerate_lambda(3):
            assert classify(l) == classify(l)
            assert classify(l).render() == classify(l).render()


class TestCrosscheck:
    def test_crosscheck_fields(self):
        report = classify_crosscheck(lam("d^2.Di.d"))
        assert report["consistent"]
        assert report["dim"] == report["rank"] == report["dimL"] == 6
        assert report["expression"] == "S1 * T2"

    def test_crosscheck_small_sweep(self):
        # dims from the block expression, the canonical map rank, and the
        # built simple must all agree
        for l in enumerate_lambda(4):
            report = classify_crosscheck(l)
            assert report["consistent"], report

    def test_block_comodule_realizes_simple(self):
        for text in ("d", "d^2", "d.Di.d", "D", "d.Di.d^2"):
            L, _ = build_L(lam(text))
            B = block_comodule(classify(lam(text)))
            assert are_isomorphic(B, L)

    def test_block_char_matches_simple(self):
        for l in enumerate_lambda(3):
            L, _ = build_L(l)
            assert block_char(classify(l)) == weight_decomposition(L)

    def test_simple_dual_statement(self):
        # duality permutes the simples by the star map
        for text in ("d^2", "d.Di.d"):
            L, _ = build_L(lam(text))
            Lstar, _ = build_L(lam(text).star())
            assert are_isomorphic(left_dual(L), Lstar)


class TestDifferentialOracle:
    @pytest.mark.parametrize(
        "a,b,rank,inj,surj",
        [
            # ranks of the raising operator on bihomogeneous parts
            (2, 1, 6, True, True),
            (3, 2, 12, True, True),
            (1, 3, 5, False, True),
            (4, 1, 10, True, False),
            (0, 0, 0, False, True),
        ],
    )
    def test_left_rank_examples(self, a, b, rank, inj, surj):
        report = sl2_rank_oracle(a, b, "left")
        assert report["rank"] == rank
        assert report["injective"] is inj
        assert report["surjective"] is surj

    def test_flag_laws_small_grid(self):
        # injectivity and surjectivity are decided by one inequality
        for a in range(6):
            for b in range(6):
                left = sl2_rank_oracle(a, b, "left")
                assert left["injective"] == (a >= b + 1)
                assert left["surjective"] == (a <= b + 1)
                right = sl2_rank_oracle(a, b, "right")
                assert right["injective"] == (b >= a + 1)
                assert right["surjective"] == (b <= a + 1)

    def test_directions_are_mirror_images(self):
        for a in range(5):
            for b in range(5):
                left = sl2_rank_oracle(a, b, "left")
                right = sl2_rank_oracle(b, a, "right")
                assert left["rank"] == right["rank"]

    def test_commutation(self):
        assert sl2_commutation_check(3)
