import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import seed_factorizations
from lgmorita.errors import NotAFactorization, ShapeMismatch, TargetTooSmall, ZeroPolynomial
from lgmorita.matrix import PolyMatrix, det
from lgmorita.mf import (
    PadVariant,
    commute_check,
    det_divides_power,
    det_power_quotient,
    make,
    pad,
    tensor_determinants,
    transpose_mf,
    trivial,
    yoshino_tensor,
)
from lgmorita.ring import exact_divide
from lgmorita.text import parse_polynomial as P


def M(rows):
    return PolyMatrix.from_rows(rows)


def intro():
    return make("x^2+y^2", M([["x", "-y"], ["y", "x"]]), M([["x", "y"], ["-y", "x"]]))


def test_intro_example_verifies():
    m = intro()
    assert m.p @ m.q == PolyMatrix.scalar(2, P("x^2 + y^2"))
    assert m.n == 2


def test_mismatch_names_the_entry():
    with pytest.raises(NotAFactorization) as info:
        make("x^2+y^2", M([["x", "-y"], ["y", "x"]]), M([["x", "y"], ["y", "x"]]))
    err = info.value
    assert err.entry == (0, 0)
    assert err.expected == P("x^2 + y^2")
    assert err.received == P("x^2 - y^2")


def test_shape_checks():
    with pytest.raises(ShapeMismatch):
        make("x", M([["x", "0"]]), M([["1"], ["0"]]))
    with pytest.raises(ShapeMismatch):
        make("x", M([["x"]]), PolyMatrix.identity(2))


def test_trivial_and_pad():
    t = trivial("x*y")
    assert (t.p, t.q) == (M([["x*y"]]), M([["1"]]))
    p = pad(intro(), 3, PadVariant.PUT_F_ON_P)
    assert p.p[2, 2] == P("x^2 + y^2") and p.q[2, 2] == 1
    q = pad(intro(), 4, "q")
    assert q.q[3, 3] == P("x^2 + y^2") and q.p[3, 3] == 1 and q.p[2, 3] == 0
    with pytest.raises(TargetTooSmall):
        pad(intro(), 2)


def test_tensor_of_one_by_one_factorizations():
    x = make("x^4", M([["x^2"]]), M([["x^2"]]))
    x2 = make("y^6", M([["y^2"]]), M([["y^4"]]))
    t = yoshino_tensor(x, x2)
    assert t.p == M([["x^2", "y^2"], ["-y^4", "x^2"]])
    assert t.q == M([["x^2", "-y^2"], ["y^4", "x^2"]])
    assert t.f == P("x^4 + y^6")


def test_tensor_is_factorization_of_sum():
    x = intro()
    x2 = make("z^3", M([["z"]]), M([["z^2"]]))
    t = yoshino_tensor(x, x2)
    assert t.f == P("x^2 + y^2 + z^3")
    assert t.n == 2 * x.n * x2.n


@given(seed_factorizations())
@settings(max_examples=60, deadline=None)
def test_factorization_properties(m):
    fi = PolyMatrix.scalar(m.n, m.f)
    assert commute_check(m) and m.q @ m.p == fi
    t = transpose_mf(m)
    assert t.p @ t.q == fi
    if m.f:
        assert det(m.p) * det(m.q) == m.f ** m.n
        assert det_divides_power(m)
        assert det_power_quotient(m) * det(m.p) == m.f ** m.n
        assert exact_divide(m.f ** m.n, det(m.p)) == det(m.q)


@given(seed_factorizations(), st.sampled_from(list(PadVariant)), st.integers(1, 2))
@settings(max_examples=30, deadline=None)
def test_padding_preserves_factorization(m, variant, extra):
    p = pad(m, m.n + extra, variant)
    assert p.f == m.f and p.n == m.n + extra
    if m.f:
        assert det(p.p) * det(p.q) == m.f ** p.n


def test_zero_potential_divisibility_is_rejected():
    z = make("0", M([["x"]]), M([["0"]]))
    with pytest.raises(ZeroPolynomial):
        det_divides_power(z)
    with pytest.raises(ZeroPolynomial):
        det_power_quotient(z)


@given(seed_factorizations(names=("x",)), seed_factorizations(names=("y",)))
@settings(max_examples=15, deadline=None)
def test_tensor_determinants_closed_form(a, b):
    d = tensor_determinants(a, b)
    assert d.all_equal_expected
    assert d.expected == (a.f + b.f) ** (a.n * b.n)
