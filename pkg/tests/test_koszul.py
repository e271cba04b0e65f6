import pytest

from lgmorita.errors import IndexOutOfRange
from lgmorita.homotopy import verify_morphism
from lgmorita.koszul import ThetaWord, build_delta, contract, delta_factorization, pi_apply, pi_matrices, theta_basis, wedge
from lgmorita.matrix import PolyMatrix
from lgmorita.ring import Polynomial, divided_difference, identify_primes, prime_shift
from lgmorita.text import parse_polynomial as P

SUITE = [
    ("x^2", 1),
    ("x^3", 1),
    ("x^4 + 1", 1),
    ("x1*x2", 2),
    ("x1^2 + x2^3", 2),
    ("x*y + x*z^2 + y*z^2", 3),
]

T = ThetaWord.of


def test_contraction_and_wedge_signs():
    assert contract(1, T(1, 2)) == (1, T(2))
    assert contract(2, T(1, 2)) == (-1, T(1))
    assert contract(3, T(1, 2), 3) is None
    assert wedge(1, T(2)) == (1, T(1, 2))
    assert wedge(2, T(1)) == (-1, T(1, 2))
    assert wedge(2, T(1, 3)) == (-1, T(1, 2, 3))
    assert wedge(1, T(1)) is None
    for bad in (0, 4):
        with pytest.raises(IndexOutOfRange):
            contract(bad, T(1), 3)
        with pytest.raises(IndexOutOfRange):
            wedge(bad, T(1), 3)


def test_theta_basis():
    even, odd = theta_basis(3)
    assert [str(w) for w in even] == ["1", "theta1theta2", "theta1theta3", "theta2theta3"]
    assert [str(w) for w in odd] == ["theta1", "theta2", "theta3", "theta1theta2theta3"]


@pytest.mark.parametrize("text,n", SUITE)
def test_delta_is_factorization_of_difference(text, n):
    f = P(text)
    d = build_delta(f, n)
    size = 2 ** (n - 1)
    target = PolyMatrix.scalar(size, f - prime_shift(f))
    assert d.d0.shape == d.d1.shape == (size, size)
    assert d.d1 @ d.d0 == target
    assert d.d0 @ d.d1 == target


@pytest.mark.parametrize("text,n", SUITE)
def test_telescoping(text, n):
    f = P(text)
    d = build_delta(f, n)
    total = Polynomial.zero()
    for i, x in enumerate(d.variables, start=1):
        total = total + (Polynomial.var(x) - Polynomial.var(x.primed())) * divided_difference(f, i, d.variables)
    assert total == f - prime_shift(f)


@pytest.mark.parametrize("text,n", SUITE)
def test_square_of_differential_on_words(text, n):
    f = P(text)
    d = build_delta(f, n)
    for w in d.even_basis + d.odd_basis:
        twice = {}
        for v, c in d.apply(w).items():
            for u, e in d.apply(v).items():
                twice[u] = twice.get(u, Polynomial.zero()) + c * e
        twice = {k: v for k, v in twice.items() if v}
        assert twice == {w: d.potential}


def test_single_variable_square():
    d = delta_factorization(P("x^2"), 1)
    assert d.p == PolyMatrix.from_rows([["x + x'"]])
    assert d.q == PolyMatrix.from_rows([["x - x'"]])


def test_explicit_variable_order():
    a = build_delta(P("x1*x2"), ["x2", "x1"])
    b = build_delta(P("x1*x2"), 2)
    assert a.d0 != b.d0
    assert a.as_factorization().f == b.as_factorization().f


def test_variables_are_validated():
    with pytest.raises(ValueError):
        build_delta(P("x*y"), ["x"])
    with pytest.raises(ValueError):
        build_delta(P("1"), None)


@pytest.mark.parametrize("text,n", [s for s in SUITE if s[1] <= 3])
def test_pi_kills_the_differential(text, n):
    d = build_delta(P(text), n)
    assert verify_morphism(pi_matrices(d))
    for j in range(len(d.odd_basis)):
        column = [d.d1[i, j] for i in range(d.d1.rows)]
        assert pi_apply(d, column) == 0
    # without prime identification the image is not zero
    raw = [d.d1[i, 0] for i in range(d.d1.rows)]
    assert raw[0] != 0 and identify_primes(raw[0]) == 0
