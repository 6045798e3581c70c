"""Comodule linear algebra: maps, duals, sub/quotient objects, characters."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncgl2.comodules import (
    Comodule,
    ComoduleMap,
    are_isomorphic,
    char_mul,
    comodule_from_json,
    comodule_from_regular,
    comodule_to_json,
    generated_subcomodule,
    highest_weight,
    hom_space,
    image,
    kernel,
    left_dual,
    lowest_weight,
    map_from_json,
    map_to_json,
    quotient,
    right_dual,
    subspace_comodule,
    tensor,
    tensor_many,
    torus_project,
    trivial,
    verify_comodule,
    weight_decomposition,
)
from ncgl2.ncalg import gen, parse_expression
from ncgl2.standard import (
    build_R,
    build_SymV,
    build_V,
    coevaluation_map,
    evaluation_map,
    sym_power_via_quotient,
)
from ncgl2.weights import Weight


V = build_V()
W = tensor(V, V)
DET_LINE = [[Fraction(0), Fraction(1), Fraction(-1), Fraction(0)]]


class TestBasics:
    def test_standard_comodule(self):
        assert V.dim == 2
        assert verify_comodule(V)
        assert weight_decomposition(V) == {Weight(1, 0): 1, Weight(0, 1): 1}

    def test_trivial(self):
        T = trivial()
        assert T.dim == 1
        assert weight_decomposition(T) == {Weight(0, 0): 1}

    def test_determinant_lines(self):
        for k in (-2, -1, 1, 3):
            R = build_R(k)
            assert R.dim == 1
            assert weight_decomposition(R) == {Weight(k, k): 1}
            assert verify_comodule(R)

    def test_tensor_weights(self):
        assert weight_decomposition(W) == {
            Weight(2, 0): 1,
            Weight(1, 1): 2,
            Weight(0, 2): 1,
        }
        assert highest_weight(W) == (Weight(0, 2), 1)
        assert lowest_weight(W) == (Weight(2, 0), 1)

    def test_tensor_many_matches_iterated(self):
        left = tensor_many([V, V, V])
        right = tensor(tensor(V, V), V)
        assert are_isomorphic(left, right)

    def test_char_mul(self):
        cV = weight_decomposition(V)
        assert char_mul(cV, cV) == weight_decomposition(W)

    def test_torus_project(self):
        # the torus image keeps only words in a, d, and the determinants
        assert torus_project(gen("b")) == {}
        assert torus_project(gen("a")) == {Weight(1, 0): Fraction(1)}
        assert torus_project(parse_expression("D^2")) == {Weight(2, 2): Fraction(1)}


class TestSubQuotient:
    def test_determinant_line_is_a_subcomodule(self):
        sub, incl = subspace_comodule(W, DET_LINE)
        assert sub.dim == 1
        assert incl.is_intertwiner()
        # the alternating line carries the determinant character
        assert are_isomorphic(sub, build_R(1))

    def test_non_subspace_rejected(self):
        with pytest.raises(ValueError):
            subspace_comodule(W, [[Fraction(1), Fraction(0), Fraction(0), Fraction(0)]])

    def test_quotient_is_symmetric_square(self):
        quo, proj = quotient(W, DET_LINE)
        assert quo.dim == 3
        assert proj.is_intertwiner()
        assert are_isomorphic(quo, build_SymV(2))

    def test_sym_power_via_quotient(self):
        # the explicit symmetric power agrees with the quotient
        for y in (2, 3):
            S, proj = sym_power_via_quotient(y)
            assert proj.is_intertwiner()
            assert are_isomorphic(S, build_SymV(y))

    def test_kernel_image_of_projection(self):
        quo, proj = quotient(W, DET_LINE)
        ker, _ = kernel(proj)
        img, _ = image(proj)
        assert are_isomorphic(ker, build_R(1))
        assert img.dim == quo.dim

    def test_generated_subcomodule(self):
        g, incl = generated_subcomodule(W, [0, 0, 0, 1])
        # the top vector of V x V generates everything
        assert g.dim == 4
        line, _ = generated_subcomodule(W, DET_LINE[0])
        assert line.dim == 1

    def test_comodule_from_regular(self):
        # one matrix column of coefficients spans a copy of V
        C, basis = comodule_from_regular([gen("a"), gen("c")])
        assert C.dim == 2
        assert are_isomorphic(C, V)
        D_line, _ = comodule_from_regular([gen("D")])
        assert are_isomorphic(D_line, build_R(1))


class TestHom:
    def test_endomorphisms_of_standard(self):
        maps = hom_space(V, V)
        assert len(maps) == 1
        assert maps[0].rank() == 2

    def test_no_maps_between_different_characters(self):
        assert hom_space(build_R(1), build_R(2)) == []
        assert hom_space(V, build_R(1)) == []

    def test_hom_tensor_square(self):
        # V x V is indecomposable: scalar endomorphisms only, the
        # determinant line includes but does not split off
        assert len(hom_space(W, W)) == 1
        assert len(hom_space(build_R(1), W)) == 1
        assert hom_space(W, build_R(1)) == []
        assert len(hom_space(W, build_SymV(2))) == 1
        assert hom_space(build_SymV(2), W) == []

    def test_weight_blocking_consistency(self):
        fast = hom_space(W, W, use_weight_blocking=True)
        slow = hom_space(W, W, use_weight_blocking=False)
        span_fast = [[c for row in f.matrix for c in row] for f in fast]
        span_slow = [[c for row in f.matrix for c in row] for f in slow]
        from ncgl2.linalg import same_row_space

        assert same_row_space(span_fast, span_slow)

    def test_are_isomorphic_negative(self):
        assert not are_isomorphic(V, build_SymV(2))
        assert not are_isomorphic(W, tensor(V, build_R(1)))


class TestDuals:
    def test_left_dual_of_standard(self):
        # dual pairing conventions: the left dual of V twists by
        # the inverse determinant on the right
        assert are_isomorphic(left_dual(V), tensor(V, build_R(-1)))
        assert are_isomorphic(tensor(left_dual(V), build_R(1)), V)

    def test_right_dual_of_standard(self):
        assert are_isomorphic(right_dual(V), tensor(build_R(-1), V))

    def test_dual_of_determinant(self):
        assert are_isomorphic(left_dual(build_R(2)), build_R(-2))
        assert are_isomorphic(right_dual(build_R(-1)), build_R(1))

    def test_duality_zigzag_maps(self):
        ev = evaluation_map()
        coev = coevaluation_map()
        assert ev.is_intertwiner()
        assert coev.is_intertwiner()
        assert ev.rank() == 1
        assert coev.rank() == 1

    def test_double_dual_not_identity(self):
        # the antipode has infinite order, so the double left dual
        # has the character of V without being isomorphic to it
        dd = left_dual(left_dual(V))
        assert weight_decomposition(dd) == weight_decomposition(V)
        assert not are_isomorphic(dd, V)
        assert hom_space(V, dd) == []


class TestSerialization:
    @pytest.mark.parametrize("X", [V, W, build_R(-1), build_SymV(3)])
    def test_comodule_roundtrip(self, X):
        data = comodule_to_json(X)
        back = comodule_from_json(data)
        assert back.labels == X.labels
        assert back.coaction == X.coaction

    def test_map_roundtrip(self):
        quo, proj = quotient(W, DET_LINE)
        data = map_to_json(proj)
        back = map_from_json(data, source=W, target=quo)
        assert back.matrix == proj.matrix
        assert back.is_intertwiner()

    def test_json_is_serializable(self):
        import json

        text = json.dumps(comodule_to_json(V))
        assert comodule_from_json(json.loads(text)).labels == V.labels
