"""Named comodules: standards, costandards, simples, multisets, layers."""

from collections import Counter
from fractions import Fraction

import pytest

from ncgl2.comodules import (
    are_isomorphic,
    highest_weight,
    hom_space,
    left_dual,
    tensor,
    verify_comodule,
    weight_decomposition,
)
from ncgl2.standard import (
    build_L,
    build_M,
    build_R,
    build_SymV,
    build_TV,
    build_V,
    build_delta,
    build_nabla,
    canonical_map,
    char_M,
    char_T,
    char_delta,
    char_nabla,
    decompose_layer,
    delta_multiset,
    layer_dimension,
    nabla_multiset,
    nabla_surjection,
    repring_decompose,
)
from ncgl2.weights import LambdaWord, Weight, enumerate_lambda, parse_lambda


def lam(text: str) -> LambdaWord:
    return parse_lambda(text)


def names(counter: Counter) -> dict[str, int]:
    return {str(k): v for k, v in counter.items()}


class TestBuilders:
    def test_sym_powers(self):
        for y in range(5):
            S = build_SymV(y)
            assert S.dim == y + 1
            assert verify_comodule(S)
            assert highest_weight(S) == (Weight(0, y), 1)

    def test_dual_sym_twist(self):
        for y in (1, 2, 3):
            T = build_TV(y)
            assert T.dim == y + 1
            assert weight_decomposition(T) == char_T(y)

    def test_nabla_dimensions(self):
        # dim of the costandard is the product of (run + 1)
        cases = {
            "1": 1,
            "d": 2,
            "D": 1,
            "d^2": 3,
            "d.Di.d": 4,
            "d^3": 4,
            "d^2.Di.d": 6,
        }
        for text, dim in cases.items():
            assert build_nabla(lam(text)).dim == dim

    def test_delta_dimension_differs_from_nabla(self):
        # standards and costandards of the same label can have
        # different dimensions; the label d^2 is the smallest witness
        assert build_delta(lam("d^2")).dim == 4
        assert build_nabla(lam("d^2")).dim == 3

    def test_delta_dimension_formula(self):
        for l in enumerate_lambda(4):
            expected = 1
            for kind, y in l.star_inv().atoms():
                if kind == "d":
                    expected *= y + 1
            assert build_delta(l).dim == expected

    def test_M_dimension(self):
        # each d letter contributes a two-dimensional factor
        for text, dim in (("d", 2), ("d^2", 4), ("d.Di.d", 4), ("D^3", 1)):
            assert build_M(lam(text)).dim == dim

    def test_nabla_surjection(self):
        for text in ("d", "d^2", "d.Di.d", "d^2.Di.d"):
            f = nabla_surjection(lam(text))
            assert f.is_intertwiner()
            assert f.rank() == f.target.dim
            assert f.source.dim == build_M(lam(text)).dim

    def test_highest_weights(self):
        for l in enumerate_lambda(3):
            nab = build_nabla(l)
            assert highest_weight(nab) == (l.wt(), 1)
            delta = build_delta(l)
            assert highest_weight(delta) == (l.wt(), 1)

    def test_characters_match_builders(self):
        for l in enumerate_lambda(3):
            assert weight_decomposition(build_nabla(l)) == char_nabla(l)
            assert weight_decomposition(build_delta(l)) == char_delta(l)
            assert weight_decomposition(build_M(l)) == char_M(l)

    def test_char_delta_reflects_char_nabla(self):
        # the standard character is the costandard character of
        # the star-inverse label with all weights negated
        for l in enumerate_lambda(3):
            mirrored = {
                Weight(-w.i, -w.j): m
                for w, m in char_nabla(l.star_inv()).items()
            }
            assert char_delta(l) == mirrored


class TestSimpleQuotients:
    def test_canonical_map_is_unique_up_to_scale(self):
        for text in ("d", "d^2", "d.Di.d", "D^2"):
            f = canonical_map(lam(text))
            assert f.is_intertwiner()
            assert len(hom_space(f.source, f.target)) == 1

    def test_simple_dimensions(self):
        # ranks of the canonical maps
        cases = {
            "1": 1,
            "d": 2,
            "D": 1,
            "d^2": 3,
            "d^3": 4,
            "d.Di.d": 3,
            "d.D.d": 4,
        }
        for text, dim in cases.items():
            L, incl = build_L(lam(text))
            assert L.dim == dim
            assert incl.is_intertwiner()

    def test_simple_is_subcomodule_of_nabla(self):
        for text in ("d^2", "d.Di.d"):
            L, incl = build_L(lam(text))
            assert incl.target.dim == build_nabla(lam(text)).dim
            assert incl.rank() == L.dim

    def test_simple_of_group_like_labels(self):
        for text in ("D", "Di", "D^2"):
            L, _ = build_L(lam(text))
            assert L.dim == 1

    def test_simple_duality(self):
        # the left dual of a simple is the simple of the starred label
        for text in ("d", "d^2", "d.Di.d"):
            L, _ = build_L(lam(text))
            Lstar, _ = build_L(lam(text).star())
            assert are_isomorphic(left_dual(L), Lstar)


class TestMultisets:
    def test_nabla_multiset_examples(self):
        # two hand-expanded runs of the multiset recursion
        assert names(nabla_multiset(lam("d^4"))) == {
            "d^4": 1,
            "d^2.D": 1,
            "d.D.d": 1,
            "D.d^2": 1,
            "D^2": 1,
        }
        assert names(nabla_multiset(lam("d^2.Di.d"))) == {
            "d^2.Di.d": 1,
            "d": 1,
        }

    def test_multiset_contains_label_once(self):
        for l in enumerate_lambda(4):
            assert nabla_multiset(l)[l] == 1
            assert delta_multiset(l)[l] == 1

    def test_lower_terms_strictly_below(self):
        for l in enumerate_lambda(4):
            for mu in nabla_multiset(l):
                if mu != l:
                    assert mu.lt1(l)

    def test_multiset_dimension_audit(self):
        # sum of costandard dimensions = dim of the tensor-power comodule
        for l in enumerate_lambda(4):
            total = sum(
                build_nabla(mu).dim * m for mu, m in nabla_multiset(l).items()
            )
            assert total == build_M(l).dim

    def test_delta_multiset_dimension_audit(self):
        for l in enumerate_lambda(4):
            total = sum(
                build_delta(mu).dim * m for mu, m in delta_multiset(l).items()
            )
            assert total == build_M(l).dim

    def test_multiset_character_audit(self):
        for l in enumerate_lambda(3):
            total: Counter = Counter()
            for mu, m in nabla_multiset(l).items():
                for w, k in char_nabla(mu).items():
                    total[w] += k * m
            assert +total == Counter(char_M(l))

    def test_delta_multiset_mirrors_nabla(self):
        for l in enumerate_lambda(3):
            mirrored = Counter(
                {mu.star(): m for mu, m in nabla_multiset(l.star_inv()).items()}
            )
            assert delta_multiset(l) == mirrored


class TestLayers:
    def test_layer_words_avoid_patterns(self):
        for word, label in decompose_layer(3):
            for p in range(len(word) - 1):
                assert word[p : p + 2] not in (("D", "Di"), ("Di", "D"))
            assert not any(
                word[p : p + 3] == ("d", "Di", "c") for p in range(len(word) - 2)
            )

    def test_layer_one(self):
        assert [(w, str(l)) for w, l in decompose_layer(1)] == [
            (("D",), "D"),
            (("Di",), "Di"),
            (("c",), "d"),
            (("d",), "d"),
        ]

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 6), (2, 30), (3, 142), (4, 666)])
    def test_layer_dimension_counts_basis(self, n, count):
        # summed costandard dimensions reproduce the basis count
        assert layer_dimension(n) == count

    def test_repring_decompose(self):
        # V * V = (d^2) + (D) as a product of classes
        assert names(repring_decompose(["V", "V"])) == {"d^2": 1, "D": 1}
        assert names(repring_decompose(["V", "V", "V"])) == {
            "d^3": 1,
            "d.D": 1,
            "D.d": 1,
        }
        assert names(repring_decompose(["R", "Ri"])) == {"1": 1}
