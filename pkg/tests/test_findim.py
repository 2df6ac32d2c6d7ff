"""Structure-constant algebras: validation, products, serialization."""

import random

import pytest

from symhom.findim import (FinDimAlgebra, dual_numbers_algebra,
                           free_tensor_algebra, matrix_algebra,
                           truncated_poly_algebra, upper_triangular_algebra)
from symhom.rationals import QQ


def test_builtins_validate():
    for A in (dual_numbers_algebra(), matrix_algebra(2), matrix_algebra(3),
              upper_triangular_algebra(), truncated_poly_algebra(5),
              free_tensor_algebra(2, 3)):
        A.validate()


def test_broken_unit_rejected():
    # x*1 = 0 contradicts unitality
    with pytest.raises(ValueError):
        FinDimAlgebra(
            ["1", "x"], {"1": 1},
            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {}, (1, 1): {0: 1}})


def test_broken_associativity_rejected():
    # e12*e21 = e11 but e21*e12 deliberately wrong
    A = matrix_algebra(2)
    mult = dict(A.mult)
    mult[(A.index["e21"], A.index["e12"])] = {A.index["e11"]: QQ(1)}
    with pytest.raises(ValueError):
        FinDimAlgebra(A.basis, {"e11": 1, "e22": 1}, mult)


def test_non_homogeneous_weights_rejected():
    with pytest.raises(ValueError):
        FinDimAlgebra(
            ["1", "x"], {"1": 1},
            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}},
            weights={"1": 0, "x": 1})


def test_dual_numbers_products():
    A = dual_numbers_algebra()
    x = A.index["x"]
    assert A.multiply({x: QQ(1)}, {x: QQ(1)}) == {}
    assert A.multiply_word(()) == {A.index["1"]: QQ(1)}
    assert A.multiply_word((x, x)) == {}


def test_matrix_algebra_products():
    A = matrix_algebra(2)
    e12, e21, e11 = A.index["e12"], A.index["e21"], A.index["e11"]
    assert A.multiply({e12: QQ(1)}, {e21: QQ(1)}) == {e11: QQ(1)}
    assert A.multiply({e12: QQ(1)}, {e12: QQ(1)}) == {}


def test_multiply_word_associativity_random():
    rng = random.Random(31)
    for A in (matrix_algebra(2), upper_triangular_algebra(),
              free_tensor_algebra(2, 4)):
        for _ in range(30):
            word = [rng.randrange(A.dim) for _ in range(3)]
            if A.truncation is not None and \
                    sum(A.weights[i] for i in word) > A.truncation:
                continue
            left = A.multiply(A.multiply_basis(word[0], word[1]),
                              {word[2]: QQ(1)})
            right = A.multiply({word[0]: QQ(1)},
                               A.multiply_basis(word[1], word[2]))
            assert left == right


def test_augmented_split():
    A = dual_numbers_algebra()
    u, ideal = A.augmented_split()
    assert A.basis[u] == "1"
    assert [A.basis[i] for i in ideal] == ["x"]
    with pytest.raises(ValueError):
        matrix_algebra(2).augmented_split()  # no augmentation given


def test_ideal_product_guards():
    A = dual_numbers_algebra()
    u, (x,) = A.augmented_split()
    assert A.ideal_product([x, x], u) == {}
    with pytest.raises(ValueError):
        A.ideal_product([], u)


def test_truncated_poly_structure():
    A = truncated_poly_algebra(4)
    assert A.dim == 5
    i1, i3 = A.index["x^1"], A.index["x^3"]
    assert A.multiply({i1: QQ(1)}, {i3: QQ(1)}) == {A.index["x^4"]: QQ(1)}
    # products beyond the truncation are discarded
    assert A.multiply({i3: QQ(1)}, {i3: QQ(1)}) == {}


def test_free_tensor_algebra_structure():
    A = free_tensor_algebra(2, 3)
    assert A.dim == 1 + 2 + 4 + 8
    ia, ib = A.index["a"], A.index["b"]
    assert A.multiply({ia: QQ(1)}, {ib: QQ(1)}) == {A.index["ab"]: QQ(1)}
    assert A.weights[A.index["aba"]] == 3


def test_json_round_trip():
    for A in (dual_numbers_algebra(), truncated_poly_algebra(3),
              upper_triangular_algebra()):
        B = FinDimAlgebra.from_json(A.to_json())
        assert B.basis == A.basis
        assert B.unit == A.unit
        assert B.mult == A.mult
        assert B.weights == A.weights
        assert B.augmentation == A.augmentation
        assert B.truncation == A.truncation
