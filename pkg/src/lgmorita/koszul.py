"""The unit factorization of ``f(x) - f(x')`` on an exterior algebra.

The module has basis the theta-words ``theta_I`` for subsets ``I`` of
``{1..n}``, graded by word length mod 2.  The differential is

    d = sum_i (x_i - x'_i) * contract_i + divided_difference_i(f) * wedge_i

and its even-to-odd and odd-to-even blocks ``(d0, d1)`` form a matrix
factorization of ``f(x) - f(x')`` of size ``2^(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import IndexOutOfRange
from .matrix import PolyMatrix
from .mf import MatrixFactorization
from .ring import Polynomial, Variable, as_variables, divided_difference, identify_primes, prime_shift, unprimed_variables


@dataclass(frozen=True, order=True)
class ThetaWord:
    """``theta_{i1} ... theta_{ik}`` with ascending indices, stored as a bit-set
    (bit ``i - 1`` set iff ``theta_i`` occurs)."""

    mask: int

    @classmethod
    def of(cls, *indices: int) -> "ThetaWord":
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        return cls(mask)

    @property
    def degree(self) -> int:
        return bin(self.mask).count("1")

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> (i - 1) & 1)

    def __str__(self):
        if not self.mask:
            return "1"
        return "".join(f"theta{i}" for i in self.indices)


def _check_index(i: int, n: Optional[int]):
    if i < 1 or (n is not None and i > n):
        raise IndexOutOfRange(f"theta index {i} outside 1..{n if n is not None else 'n'}")


def _sign_before(i: int, w: ThetaWord) -> int:
    below = w.mask & ((1 << (i - 1)) - 1)
    return -1 if bin(below).count("1") % 2 else 1


def contract(i: int, w: ThetaWord, n: Optional[int] = None) -> Optional[Tuple[int, ThetaWord]]:
    """Apply the derivation ``theta_i^*``; None when ``theta_i`` is absent.

    If ``theta_i`` sits at 1-based position ``p`` the sign is ``(-1)^(p+1)``.
    """
    _check_index(i, n)
    if i not in w:
        return None
    return _sign_before(i, w), ThetaWord(w.mask & ~(1 << (i - 1)))


def wedge(i: int, w: ThetaWord, n: Optional[int] = None) -> Optional[Tuple[int, ThetaWord]]:
    """``theta_i ^ w`` reordered ascending; None when ``theta_i`` already occurs."""
    _check_index(i, n)
    if i in w:
        return None
    return _sign_before(i, w), ThetaWord(w.mask | (1 << (i - 1)))


def theta_basis(n: int) -> Tuple[List[ThetaWord], List[ThetaWord]]:
    """Even and odd words, each ordered by (length, mask)."""
    words = sorted((ThetaWord(m) for m in range(1 << n)), key=lambda w: (w.degree, w.mask))
    return [w for w in words if w.degree % 2 == 0], [w for w in words if w.degree % 2 == 1]


@dataclass(frozen=True)
class DeltaFactorization:
    f: Polynomial
    variables: Tuple[Variable, ...]
    even_basis: Tuple[ThetaWord, ...]
    odd_basis: Tuple[ThetaWord, ...]
    d0: PolyMatrix
    d1: PolyMatrix

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def potential(self) -> Polynomial:
        """``f(x) - f(x')``."""
        return self.f - prime_shift(self.f)

    def as_factorization(self) -> MatrixFactorization:
        return MatrixFactorization(self.potential, self.d0, self.d1)

    def apply(self, w: ThetaWord) -> dict:
        """``d(w)`` as a map ``ThetaWord -> Polynomial``."""
        diffs = [divided_difference(self.f, i, self.variables) for i in range(1, self.n + 1)]
        return _differential(self.variables, diffs, w)


def _resolve_variables(f: Polynomial, n_or_vars) -> Tuple[Variable, ...]:
    if n_or_vars is None:
        return unprimed_variables(f)
    if isinstance(n_or_vars, int):
        own = unprimed_variables(f)
        if len(own) == n_or_vars:
            return own
        if n_or_vars == 1 and set(own) <= {Variable("x")}:
            return (Variable("x"),)
        indexed = tuple(Variable(f"x{k}") for k in range(1, n_or_vars + 1))
        if set(own) <= set(indexed):
            return indexed
        raise ValueError(f"cannot choose {n_or_vars} variables for {f}; pass them explicitly")
    return as_variables(n_or_vars)


def _differential(xs: Sequence[Variable], diffs: Sequence[Polynomial], w: ThetaWord) -> dict:
    n = len(xs)
    out: dict = {}
    for i, x in enumerate(xs, start=1):
        c = contract(i, w, n)
        if c is not None:
            sign, rest = c
            out[rest] = out.get(rest, Polynomial.zero()) + (Polynomial.var(x) - Polynomial.var(x.primed())) * sign
        wd = wedge(i, w, n)
        if wd is not None:
            sign, rest = wd
            out[rest] = out.get(rest, Polynomial.zero()) + diffs[i - 1] * sign
    return {k: v for k, v in out.items() if v}


def build_delta(f: Polynomial, n: Union[int, Sequence, None] = None) -> DeltaFactorization:
    """Matrices of the unit factorization of ``f(x) - f(x')``.

    ``n`` is the variable count or an explicit ordered variable list;
    column ``j`` of ``d0`` is ``d(even_basis[j])`` written in the odd basis,
    and likewise for ``d1``.
    """
    xs = _resolve_variables(f, n)
    stray = [v for v in f.variables() if v.prime_level or v not in xs]
    if stray:
        raise ValueError(f"f uses variables outside {[str(x) for x in xs]}: {[str(v) for v in stray]}")
    if not xs:
        raise ValueError("the unit factorization needs at least one variable")
    even, odd = theta_basis(len(xs))
    diffs = [divided_difference(f, i, xs) for i in range(1, len(xs) + 1)]

    def column_matrix(src, dst):
        images = [_differential(xs, diffs, w) for w in src]
        return PolyMatrix(len(dst), len(src), [img.get(v, Polynomial.zero()) for v in dst for img in images])

    d0 = column_matrix(even, odd)
    d1 = column_matrix(odd, even)
    delta = DeltaFactorization(f, xs, tuple(even), tuple(odd), d0, d1)
    delta.as_factorization()  # PQ = (f - f')I is verified on construction
    return delta


def delta_factorization(f: Polynomial, n=None) -> MatrixFactorization:
    return build_delta(f, n).as_factorization()


def pi_matrices(delta: DeltaFactorization):
    """The projection onto theta-degree 0 followed by ``x' -> x``.

    Returned as a ``GradedMorphism`` into the rank-one factorization of 0
    with zero differential; ``specialize`` marks that entries are read after
    ``identify_primes``.
    """
    from .homotopy import GradedMorphism

    size = len(delta.even_basis)
    zero_mf = MatrixFactorization(Polynomial.zero(), PolyMatrix.zeros(1, 1), PolyMatrix.zeros(1, 1))
    even = PolyMatrix(1, size, [Polynomial.one() if w.mask == 0 else Polynomial.zero() for w in delta.even_basis])
    odd = PolyMatrix.zeros(1, size)
    return GradedMorphism(delta.as_factorization(), zero_mf, even, odd, specialize=identify_primes)


def pi_apply(delta: DeltaFactorization, even_vector: Sequence[Polynomial]) -> Polynomial:
    """``pi`` on an even element given by its coordinates in ``even_basis``."""
    for w, c in zip(delta.even_basis, even_vector):
        if w.mask == 0:
            return identify_primes(c)
    return Polynomial.zero()
