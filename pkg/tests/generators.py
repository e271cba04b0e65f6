"""Random builders, hypothesis strategies and independent oracles for the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from lgmorita.homotopy import GradedMorphism, Homotopy
from lgmorita.matrix import PolyMatrix
from lgmorita.mf import MatrixFactorization, PadVariant, pad, transpose_mf, yoshino_tensor
from lgmorita.morita import LGObject, Report, one_morphism, trivial_context
from lgmorita.ring import Polynomial, Variable

XS = ("x", "y", "z")


# ------------------------------------------------------------ hypothesis


def coefficients(allow_fractions=True):
    ints = st.integers(-6, 6)
    if not allow_fractions:
        return ints
    return st.one_of(ints, st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)))


@st.composite
def polynomials(draw, names=XS, max_terms=4, max_exp=3, allow_fractions=True, primes=False):
    levels = (0, 1) if primes else (0,)
    out = Polynomial.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(coefficients(allow_fractions))
        mono = {}
        for name in names:
            e = draw(st.integers(0, max_exp))
            if e:
                mono[Variable(name, draw(st.sampled_from(levels)))] = e
        out = out + Polynomial({tuple(sorted(mono.items())): c})
    return out


@st.composite
def matrices(draw, rows, cols, **kw):
    return PolyMatrix(rows, cols, [draw(polynomials(**kw)) for _ in range(rows * cols)])


@st.composite
def square_matrices(draw, max_n=3, **kw):
    n = draw(st.integers(1, max_n))
    return draw(matrices(n, n, **kw))


@st.composite
def seed_factorizations(draw, names=("x", "y"), max_exp=2):
    """Adjugate-type seeds ``([[a,b],[c,d]], [[d,-b],[-c,a]])`` and 1x1 products."""
    kw = dict(names=names, max_terms=2, max_exp=max_exp, allow_fractions=False)
    if draw(st.booleans()):
        a, b = draw(polynomials(**kw)), draw(polynomials(**kw))
        return MatrixFactorization(a * b, PolyMatrix.from_rows([[a]]), PolyMatrix.from_rows([[b]]))
    a, b, c, d = (draw(polynomials(**kw)) for _ in range(4))
    return adjugate_seed(a, b, c, d)


# ------------------------------------------------------------ plain random


def adjugate_seed(a, b, c, d) -> MatrixFactorization:
    return MatrixFactorization(a * d - b * c, PolyMatrix.from_rows([[a, b], [c, d]]), PolyMatrix.from_rows([[d, -b], [-c, a]]))


def random_polynomial(rng: random.Random, names, max_terms=3, max_degree=2, nonzero=True) -> Polynomial:
    while True:
        p = Polynomial.zero()
        for _ in range(rng.randint(1, max_terms)):
            m = Polynomial.constant(rng.choice([-3, -2, -1, 1, 2, 3]))
            for _ in range(rng.randint(0, max_degree)):
                m = m * Polynomial.var(rng.choice(names))
            p = p + m
        if p or not nonzero:
            return p


def random_seed(rng: random.Random, names, size=None, max_degree=2) -> MatrixFactorization:
    """A 1x1 or 2x2 factorization of a nonzero polynomial in ``names``."""
    size = size or rng.choice([1, 2])
    while True:
        if size == 1:
            a, b = (random_polynomial(rng, names, max_degree=max_degree) for _ in range(2))
            m = MatrixFactorization(a * b, PolyMatrix.from_rows([[a]]), PolyMatrix.from_rows([[b]]))
        else:
            m = adjugate_seed(*(random_polynomial(rng, names, max_degree=max_degree) for _ in range(4)))
        if m.f:
            return m


def negate(m: MatrixFactorization) -> MatrixFactorization:
    """A factorization of ``-f`` from one of ``f``."""
    return MatrixFactorization(-m.f, -m.p, m.q)


def reshape(rng: random.Random, m: MatrixFactorization, max_size=3) -> MatrixFactorization:
    """Randomly transpose and/or pad."""
    if rng.random() < 0.5:
        m = transpose_mf(m)
    if m.n < max_size and rng.random() < 0.5:
        m = pad(m, m.n + 1, rng.choice(list(PadVariant)))
    return m


def compatible_pair(rng: random.Random):
    """``(f, g, X, Y)`` with ``X`` factoring ``g - f`` and ``Y`` factoring ``f - g``.

    ``f = -a b`` lives in the x-variables and ``g = c d`` in the y-variables,
    so ``g - f = a b + c d`` factors as the tensor of ``(a, b)`` and ``(c, d)``.
    """
    while True:
        a, b = (random_polynomial(rng, ["x1", "x2"], max_terms=2) for _ in range(2))
        c, d = (random_polynomial(rng, ["y1", "y2"], max_terms=2) for _ in range(2))
        f, g = -(a * b), c * d
        if not f.is_constant() and not g.is_constant():
            break
    one = lambda u, v: MatrixFactorization(u * v, PolyMatrix.from_rows([[u]]), PolyMatrix.from_rows([[v]]))
    base = yoshino_tensor(one(a, b), one(c, d))
    trivial = MatrixFactorization(g - f, PolyMatrix.from_rows([[g - f]]), PolyMatrix.from_rows([[1]]))
    x = reshape(rng, rng.choice([base, trivial]))
    y = reshape(rng, negate(rng.choice([base, trivial, transpose_mf(base)])))
    return f, g, x, y


# ------------------------------------------------------------ oracles


def to_sympy(p: Polynomial):
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for v, e in mono:
            term *= sympy.Symbol(str(v)) ** e
        expr += term
    return sympy.expand(expr)


def cofactor_det(m: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row."""
    n = m.rows
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return m[0, 0]
    total = Polynomial.zero()
    for j in range(n):
        if m[0, j]:
            minor = m.submatrix(range(1, n), [c for c in range(n) if c != j])
            total = total + m[0, j] * cofactor_det(minor) * (-1 if j % 2 else 1)
    return total


def leibniz_det(m: PolyMatrix) -> Polynomial:
    n = m.rows
    total = Polynomial.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.constant(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * m[i, j]
        total = total + term
    return total


def random_matrix(rng: random.Random, rows, cols, names, max_degree) -> PolyMatrix:
    return PolyMatrix(
        rows, cols, [random_polynomial(rng, names, max_degree=max_degree, nonzero=False) if rng.random() < 0.7 else 0 for _ in range(rows * cols)]
    )


def planted_homotopy(rng: random.Random, degree: int):
    """``(psi, phi, lam)`` with ``psi - phi`` the boundary of a planted ``lam``."""
    names = ["x", "y"]
    x = random_seed(rng, names, max_degree=1)
    y = rng.choice([x, transpose_mf(x)])
    if rng.random() < 0.3:
        y = pad(y, y.n + 1, rng.choice(list(PadVariant)))
    lam = Homotopy(
        x, y, random_matrix(rng, y.n, x.n, names, degree), random_matrix(rng, y.n, x.n, names, degree)
    )
    phi = GradedMorphism.identity(x) if y == x and rng.random() < 0.5 else GradedMorphism.zero(x, y)
    b = lam.boundary()
    psi = GradedMorphism(x, y, phi.even + b.even, phi.odd + b.odd)
    return psi, phi, lam


def random_document(rng: random.Random):
    """One random object of every serializable kind, chosen by ``rng``."""
    kind = rng.choice(["polynomial", "matrix", "factorization", "morphism", "homotopy", "context", "report"])
    names = ["x", "y", "z'"]
    if kind == "polynomial":
        p = random_polynomial(rng, names, max_terms=4, max_degree=3, nonzero=False)
        return p * Fraction(rng.randint(-5, 5), rng.randint(1, 7))
    if kind == "matrix":
        return random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), names, 2)
    if kind == "factorization":
        return reshape(rng, random_seed(rng, names))
    if kind in ("morphism", "homotopy"):
        x = random_seed(rng, ["x", "y"])
        lam = Homotopy(x, x, random_matrix(rng, x.n, x.n, ["x", "y"], 1), random_matrix(rng, x.n, x.n, ["x", "y"], 1))
        return lam if kind == "homotopy" else lam.boundary()
    if kind == "context":
        f, g, xm, ym = compatible_pair(rng)
        x = one_morphism(LGObject.of(f, ["x1", "x2"]), LGObject.of(g, ["y1", "y2"]), xm)
        return trivial_context(x, one_morphism(x.target, x.source, ym))
    checks = [(f"check {i}", rng.random() < 0.8) for i in range(rng.randint(0, 4))]
    return Report(rng.choice(["a", "b report", "non-sufficiency"]), checks, {"k": str(rng.randint(0, 9)), "é": "x'"})
