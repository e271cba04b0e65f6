"""Matrix factorizations ``(P, Q)`` of a polynomial ``f`` with ``PQ = f I``.

Construction always checks the defining product, so every
``MatrixFactorization`` in circulation is a genuine factorization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import IdentityViolation, NotAFactorization, ShapeMismatch, TargetTooSmall, ZeroPolynomial
from .matrix import PolyMatrix, block2x2, det, kron, transpose
from .ring import Polynomial, as_polynomial, exact_divide


def _first_mismatch(product: PolyMatrix, f: Polynomial):
    for i in range(product.rows):
        for j in range(product.cols):
            want = f if i == j else Polynomial.zero()
            if product[i, j] != want:
                return (i, j), want, product[i, j]
    return None


@dataclass(frozen=True)
class MatrixFactorization:
    """A pair of square matrices with ``p @ q == f * I``.

    Raises ``ShapeMismatch`` for non-square or differently sized matrices and
    ``NotAFactorization`` (naming the first bad entry) when the product is
    wrong.  ``f == 0`` is allowed.
    """

    f: Polynomial
    p: PolyMatrix
    q: PolyMatrix

    def __post_init__(self):
        object.__setattr__(self, "f", as_polynomial(self.f))
        if not self.p.is_square() or not self.q.is_square() or self.p.shape != self.q.shape:
            raise ShapeMismatch(f"P {self.p.shape} and Q {self.q.shape} must be square of equal size")
        bad = _first_mismatch(self.p @ self.q, self.f)
        if bad is not None:
            (i, j), want, got = bad
            raise NotAFactorization(
                f"(PQ)[{i},{j}] = {got}, expected {want}", entry=(i, j), expected=want, received=got
            )

    @property
    def n(self) -> int:
        return self.p.rows


def make(f, p: PolyMatrix, q: PolyMatrix) -> MatrixFactorization:
    return MatrixFactorization(as_polynomial(f), p, q)


def trivial(f) -> MatrixFactorization:
    """The 1x1 factorization ``([f], [1])``."""
    f = as_polynomial(f)
    return MatrixFactorization(f, PolyMatrix(1, 1, [f]), PolyMatrix.identity(1))


def commute_check(m: MatrixFactorization) -> bool:
    """``QP == fI``; holds for every factorization, checked by multiplication."""
    return m.q @ m.p == PolyMatrix.scalar(m.n, m.f)


def transpose_mf(m: MatrixFactorization) -> MatrixFactorization:
    """``(Q^t, P^t)``, again a factorization of ``f``."""
    return MatrixFactorization(m.f, transpose(m.q), transpose(m.p))


class PadVariant(enum.Enum):
    PUT_F_ON_P = "p"
    PUT_F_ON_Q = "q"


def pad(m: MatrixFactorization, target: int, variant: Union[PadVariant, str] = PadVariant.PUT_F_ON_P) -> MatrixFactorization:
    """Grow ``m`` to ``target x target`` by appending diagonal entries.

    New diagonal slots get ``f`` in one matrix and ``1`` in the other
    (which one is chosen by ``variant``); all other new entries are zero.
    """
    variant = PadVariant(variant)
    if target <= m.n:
        raise TargetTooSmall(f"target size {target} must exceed current size {m.n}")
    one = Polynomial.one()
    on_p, on_q = (m.f, one) if variant is PadVariant.PUT_F_ON_P else (one, m.f)

    def grow(mat, diag):
        rows = []
        for i in range(target):
            if i < m.n:
                rows.append(list(mat.row(i)) + [Polynomial.zero()] * (target - m.n))
            else:
                rows.append([diag if j == i else Polynomial.zero() for j in range(target)])
        return PolyMatrix.from_rows(rows)

    return MatrixFactorization(m.f, grow(m.p, on_p), grow(m.q, on_q))


def yoshino_tensor(x: MatrixFactorization, x2: MatrixFactorization) -> MatrixFactorization:
    """Tensor product of factorizations, a factorization of ``f + g`` of size ``2nm``.

    With ``x = (phi, psi)`` of size n and ``x2 = (phi2, psi2)`` of size m::

        P = [[phi (x) 1_m,    1_n (x) phi2],   Q = [[psi (x) 1_m, -1_n (x) phi2],
             [-1_n (x) psi2,  psi (x) 1_m ]]        [1_n (x) psi2, phi (x) 1_m  ]]

    Variables are not renamed; shared variables are read in one ring.
    """
    i_n, i_m = PolyMatrix.identity(x.n), PolyMatrix.identity(x2.n)
    phi_1, psi_1 = kron(x.p, i_m), kron(x.q, i_m)
    one_phi2, one_psi2 = kron(i_n, x2.p), kron(i_n, x2.q)
    p = block2x2(phi_1, one_phi2, -one_psi2, psi_1)
    q = block2x2(psi_1, -one_phi2, one_psi2, phi_1)
    return MatrixFactorization(x.f + x2.f, p, q)


def det_power_quotient(m: MatrixFactorization) -> Polynomial:
    """The exact quotient ``f^n / det(P)``."""
    if m.f.is_zero():
        raise ZeroPolynomial("divisibility of f^n needs f != 0")
    return exact_divide(m.f ** m.n, det(m.p))


def det_divides_power(m: MatrixFactorization) -> bool:
    """``det(P)`` divides ``f^n``; the witness is ``det_power_quotient(m)``."""
    if m.f.is_zero():
        raise ZeroPolynomial("divisibility of f^n needs f != 0")
    d = det(m.p)
    if d.is_zero():
        return False
    fn = m.f ** m.n
    q = exact_divide(fn, d)
    return q * d == fn


class TensorDeterminants(NamedTuple):
    det_p: Polynomial
    det_q: Polynomial
    det_p2: Polynomial
    det_q2: Polynomial
    expected: Polynomial

    @property
    def all_equal_expected(self) -> bool:
        return all(d == self.expected for d in self[:4])


def tensor_determinants(x: MatrixFactorization, x2: MatrixFactorization, check: bool = True) -> TensorDeterminants:
    """Determinants of both tensor orderings, ``x (x) x2 = (P, Q)`` and
    ``x2 (x) x = (P', Q')``, all equal to ``(f + g)^(nm)``."""
    a = yoshino_tensor(x, x2)
    b = yoshino_tensor(x2, x)
    result = TensorDeterminants(det(a.p), det(a.q), det(b.p), det(b.q), (x.f + x2.f) ** (x.n * x2.n))
    if check and not result.all_equal_expected:
        raise IdentityViolation(f"tensor determinants {result[:4]} differ from {result.expected}")
    return result
