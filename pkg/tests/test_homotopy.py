import random

import pytest

from generators import planted_homotopy
from lgmorita.errors import ShapeMismatch, SourceTargetMismatch
from lgmorita.homotopy import (
    GradedMorphism,
    Homotopy,
    NotFoundUpToD,
    compose,
    morphism_space,
    random_combination,
    search_homotopy,
    verify_homotopy,
    verify_morphism,
)
from lgmorita.matrix import PolyMatrix
from lgmorita.mf import make, transpose_mf


def M(rows):
    return PolyMatrix.from_rows(rows)


def circle():
    return make("x^2+y^2", M([["x", "-y"], ["y", "x"]]), M([["x", "y"], ["-y", "x"]]))


def test_identity_and_zero_are_morphisms():
    x = circle()
    assert verify_morphism(GradedMorphism.identity(x))
    assert verify_morphism(GradedMorphism.zero(x, transpose_mf(x)))
    assert not verify_morphism(GradedMorphism(x, x, PolyMatrix.identity(2), PolyMatrix.zeros(2, 2)))


def test_morphism_shape_is_checked():
    x = circle()
    with pytest.raises(ShapeMismatch):
        GradedMorphism(x, x, PolyMatrix.identity(1), PolyMatrix.identity(2))


def test_composition():
    x = circle()
    i = GradedMorphism.identity(x)
    assert compose(i, i) == i
    other = make("x^2+y^2", M([["x^2+y^2"]]), M([["1"]]))
    with pytest.raises(SourceTargetMismatch):
        compose(GradedMorphism.zero(other, other), i)


def test_boundaries_are_null_homotopic():
    x = circle()
    lam = Homotopy(x, x, M([["x", "0"], ["1", "y"]]), M([["0", "y^2"], ["x", "1"]]))
    b = lam.boundary()
    assert verify_morphism(b)
    assert verify_homotopy(lam, b, GradedMorphism.zero(x, x))
    assert verify_homotopy(-lam, GradedMorphism.zero(x, x), b)
    assert not verify_homotopy(Homotopy.zero(x, x), b, GradedMorphism.zero(x, x))


def test_equal_morphisms_give_zero_homotopy():
    x = circle()
    i = GradedMorphism.identity(x)
    h = search_homotopy(i, i, 2)
    assert h.lambda0.is_zero() and h.lambda1.is_zero()


def test_identity_is_not_null_homotopic_up_to_degree_3():
    x = circle()
    with pytest.raises(NotFoundUpToD) as info:
        search_homotopy(GradedMorphism.identity(x), GradedMorphism.zero(x, x), 3)
    assert info.value.degree == 3


def test_trivial_factorization_is_contractible():
    x = make("x^2+y^2", M([["x^2+y^2"]]), M([["1"]]))
    h = search_homotopy(GradedMorphism.identity(x), GradedMorphism.zero(x, x), 0)
    assert verify_homotopy(h, GradedMorphism.identity(x), GradedMorphism.zero(x, x))


@pytest.mark.parametrize("seed", range(8))
def test_planted_witness_is_recovered(seed):
    rng = random.Random(seed)
    degree = seed % 3
    psi, phi, _ = planted_homotopy(rng, degree)
    h = search_homotopy(psi, phi, degree)
    assert verify_homotopy(h, psi, phi)


def test_morphism_space_contains_identity():
    x = circle()
    space = morphism_space(x, x, 1)
    assert space and all(verify_morphism(m) for m in space)
    rng = random.Random(0)
    assert verify_morphism(random_combination(space, rng))
    with pytest.raises(ValueError):
        random_combination([], rng)
