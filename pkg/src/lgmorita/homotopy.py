"""Graded morphisms between matrix factorizations, and homotopies.

Convention: a factorization ``(P, Q)`` is a two-periodic complex with
``d0 = P : X0 -> X1`` and ``d1 = Q : X1 -> X0``.  A morphism
``(even, odd) : X -> Y`` must satisfy

    even @ Q_X == Q_Y @ odd        odd @ P_X == P_Y @ even

A homotopy ``(lambda0 : X0 -> Y1, lambda1 : X1 -> Y0)`` between ``phi`` and
``psi`` satisfies

    Q_Y @ lambda0 + lambda1 @ P_X == psi.even - phi.even
    P_Y @ lambda1 + lambda0 @ Q_X == psi.odd  - phi.odd
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from .errors import LGError, ShapeMismatch, SourceTargetMismatch
from .linsolve import LinearMatrix, equations_to_rows, matrix_variables, monomials_up_to, nullspace, solve
from .matrix import PolyMatrix
from .mf import MatrixFactorization
from .ring import Polynomial

DEFAULT_DEGREE_BOUND = 2


class NotFoundUpToD(LGError):
    """No homotopy with entries of degree <= D exists.

    This is not a proof that the morphisms are not homotopic: a witness of
    higher degree may still exist.
    """

    def __init__(self, degree: int):
        super().__init__(f"no homotopy with entries of degree <= {degree}")
        self.degree = degree


@dataclass(frozen=True)
class GradedMorphism:
    source: MatrixFactorization
    target: MatrixFactorization
    even: PolyMatrix
    odd: PolyMatrix
    # ring map applied before comparing entries (the projection onto R uses x' -> x)
    specialize: Optional[Callable[[Polynomial], Polynomial]] = field(default=None, compare=False)

    def __post_init__(self):
        want = (self.target.n, self.source.n)
        if self.even.shape != want or self.odd.shape != want:
            raise ShapeMismatch(f"morphism blocks {self.even.shape}, {self.odd.shape}; expected {want}")

    @classmethod
    def zero(cls, source: MatrixFactorization, target: MatrixFactorization) -> "GradedMorphism":
        z = PolyMatrix.zeros(target.n, source.n)
        return cls(source, target, z, z)

    @classmethod
    def identity(cls, mf: MatrixFactorization) -> "GradedMorphism":
        i = PolyMatrix.identity(mf.n)
        return cls(mf, mf, i, i)

    def __add__(self, other: "GradedMorphism") -> "GradedMorphism":
        _same_ends(self, other)
        return GradedMorphism(self.source, self.target, self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "GradedMorphism") -> "GradedMorphism":
        _same_ends(self, other)
        return GradedMorphism(self.source, self.target, self.even - other.even, self.odd - other.odd)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()


def _same_ends(a, b):
    if a.source != b.source or a.target != b.target:
        raise SourceTargetMismatch("morphisms have different sources or targets")


def verify_morphism(m: GradedMorphism) -> bool:
    lhs = (m.even @ m.source.q, m.odd @ m.source.p)
    rhs = (m.target.q @ m.odd, m.target.p @ m.even)
    for a, b in zip(lhs, rhs):
        diff = a - b
        if m.specialize is not None:
            diff = diff.map(m.specialize)
        if not diff.is_zero():
            return False
    return True


def compose(g: GradedMorphism, h: GradedMorphism) -> GradedMorphism:
    """``g after h``."""
    if h.target != g.source:
        raise SourceTargetMismatch("target of the first morphism is not the source of the second")
    return GradedMorphism(h.source, g.target, g.even @ h.even, g.odd @ h.odd)


@dataclass(frozen=True)
class Homotopy:
    source: MatrixFactorization
    target: MatrixFactorization
    lambda0: PolyMatrix  # X0 -> Y1
    lambda1: PolyMatrix  # X1 -> Y0

    def __post_init__(self):
        want = (self.target.n, self.source.n)
        if self.lambda0.shape != want or self.lambda1.shape != want:
            raise ShapeMismatch(f"homotopy blocks {self.lambda0.shape}, {self.lambda1.shape}; expected {want}")

    @classmethod
    def zero(cls, source: MatrixFactorization, target: MatrixFactorization) -> "Homotopy":
        z = PolyMatrix.zeros(target.n, source.n)
        return cls(source, target, z, z)

    def __neg__(self) -> "Homotopy":
        return Homotopy(self.source, self.target, -self.lambda0, -self.lambda1)

    def __add__(self, other: "Homotopy") -> "Homotopy":
        _same_ends(self, other)
        return Homotopy(self.source, self.target, self.lambda0 + other.lambda0, self.lambda1 + other.lambda1)

    def boundary(self) -> GradedMorphism:
        """``d lambda + lambda d``, the morphism this homotopy trivializes."""
        x, y = self.source, self.target
        even = y.q @ self.lambda0 + self.lambda1 @ x.p
        odd = y.p @ self.lambda1 + self.lambda0 @ x.q
        return GradedMorphism(x, y, even, odd)


def verify_homotopy(h: Homotopy, psi: GradedMorphism, phi: GradedMorphism) -> bool:
    """True iff ``d lambda + lambda d == psi - phi``."""
    _same_ends(psi, phi)
    if h.source != psi.source or h.target != psi.target:
        raise SourceTargetMismatch("homotopy and morphisms have different sources or targets")
    b = h.boundary()
    diff = psi - phi
    return b.even == diff.even and b.odd == diff.odd


def search_homotopy(psi: GradedMorphism, phi: GradedMorphism, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Homotopy:
    """Find a homotopy whose entries have total degree <= ``degree_bound``.

    The entries of ``lambda0`` and ``lambda1`` are expanded over every
    monomial in the variables of the problem, and the two homotopy equations
    become one exact linear system over Q.  Raises ``NotFoundUpToD`` when
    that system is inconsistent.
    """
    _same_ends(psi, phi)
    x, y = psi.source, psi.target
    variables = matrix_variables(x.p, x.q, y.p, y.q, psi.even, psi.odd, phi.even, phi.odd)
    basis = monomials_up_to(variables, degree_bound)
    lam0 = LinearMatrix.unknown(y.n, x.n, basis, 0)
    lam1 = LinearMatrix.unknown(y.n, x.n, basis, lam0.size)
    nvars = lam0.size + lam1.size
    even = lam0.left(y.q) + lam1.right(x.p)
    odd = lam1.left(y.p) + lam0.right(x.q)
    diff = psi - phi
    rows = equations_to_rows(even, diff.even) + equations_to_rows(odd, diff.odd)
    sol = solve(rows, nvars)
    if sol is None:
        raise NotFoundUpToD(degree_bound)
    h = Homotopy(x, y, lam0.evaluate(sol), lam1.evaluate(sol))
    assert verify_homotopy(h, psi, phi)
    return h


def morphism_space(source: MatrixFactorization, target: MatrixFactorization, degree_bound: int = DEFAULT_DEGREE_BOUND) -> List[GradedMorphism]:
    """Basis of the morphisms ``source -> target`` with entries of degree <= D.

    Solves the homogeneous system ``even Q_X = Q_Y odd``, ``odd P_X = P_Y even``.
    """
    variables = matrix_variables(source.p, source.q, target.p, target.q)
    basis = monomials_up_to(variables, degree_bound)
    ev = LinearMatrix.unknown(target.n, source.n, basis, 0)
    od = LinearMatrix.unknown(target.n, source.n, basis, ev.size)
    zero = PolyMatrix.zeros(target.n, source.n)
    rows = [r for r, _ in equations_to_rows(ev.right(source.q) - od.left(target.q), zero)]
    rows += [r for r, _ in equations_to_rows(od.right(source.p) - ev.left(target.p), zero)]
    out = []
    for v in nullspace(rows, ev.size + od.size):
        out.append(GradedMorphism(source, target, ev.evaluate(v), od.evaluate(v)))
    return out


def left_annihilators(q: PolyMatrix, rows: int, degree_bound: int, variables=None) -> List[PolyMatrix]:
    """Basis of the matrices ``E`` (``rows x q.rows``, degree <= D) with ``E @ q == 0``."""
    if variables is None:
        variables = matrix_variables(q)
    basis = monomials_up_to(variables, degree_bound)
    e = LinearMatrix.unknown(rows, q.rows, basis, 0)
    eqs = [r for r, _ in equations_to_rows(e.right(q), PolyMatrix.zeros(rows, q.cols))]
    return [e.evaluate(v) for v in nullspace(eqs, e.size)]


def random_combination(space: List[GradedMorphism], rng) -> GradedMorphism:
    """A random rational combination of morphisms sharing source and target."""
    if not space:
        raise ValueError("cannot combine an empty list of morphisms")
    acc = GradedMorphism.zero(space[0].source, space[0].target)
    for m in space:
        w = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        acc = acc + GradedMorphism(m.source, m.target, m.even.scale(w), m.odd.scale(w))
    return acc
