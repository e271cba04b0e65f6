"""Exact linear algebra over Q, and polynomial-matrix unknowns.

Unknown polynomial matrices are expanded over a finite monomial basis:
each entry is ``sum_k c_k * m_k`` with unknown rationals ``c_k``.  Matrix
equations that are linear in the unknowns then reduce to a sparse rational
system, solved here by Gauss-Jordan elimination on ``Fraction`` rows.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ShapeMismatch
from .matrix import PolyMatrix
from .ring import Monomial, Polynomial, Variable

Row = Dict[int, Fraction]


def _reduce(rows: List[Tuple[Row, Fraction]], ncols: int):
    """Gauss-Jordan elimination in place; returns (reduced rows, pivot columns).

    Columns are eliminated in increasing order, so the pivot of each row is
    the first unknown it still mentions.
    """
    pivots: List[int] = []
    reduced: List[Tuple[Row, Fraction]] = []
    pending = [(dict(r), Fraction(b)) for r, b in rows]
    for row, rhs in pending:
        # eliminate existing pivots from the incoming row
        for (prow, prhs), pc in zip(reduced, pivots):
            c = row.get(pc)
            if c:
                for k, v in prow.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                rhs -= c * prhs
        if not row:
            if rhs:
                return None, None
            continue
        pc = min(row)
        lead = row[pc]
        row = {k: v / lead for k, v in row.items()}
        rhs /= lead
        # back-eliminate the new pivot from earlier rows
        for idx, (prow, prhs) in enumerate(reduced):
            c = prow.get(pc)
            if c:
                for k, v in row.items():
                    nv = prow.get(k, 0) - c * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
                reduced[idx] = (prow, prhs - c * rhs)
        reduced.append((row, rhs))
        pivots.append(pc)
    return reduced, pivots


def solve(rows: Sequence[Tuple[Row, Fraction]], ncols: int) -> Optional[List[Fraction]]:
    """One solution of the sparse system (free unknowns set to 0), or None."""
    reduced, pivots = _reduce(list(rows), ncols)
    if reduced is None:
        return None
    x = [Fraction(0)] * ncols
    for (row, rhs), pc in zip(reduced, pivots):
        x[pc] = rhs
    return x


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of the solutions of the homogeneous system, one vector per free unknown."""
    reduced, pivots = _reduce([(r, Fraction(0)) for r in rows], ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for (row, _), pc in zip(reduced, pivots):
            c = row.get(free)
            if c:
                v[pc] = -c
        basis.append(v)
    return basis


def monomials_up_to(variables: Sequence[Variable], degree: int) -> List[Monomial]:
    """All monomials in ``variables`` of total degree at most ``degree``."""
    xs = sorted(set(variables))
    out: List[Monomial] = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(xs, d):
            exps: Dict[Variable, int] = {}
            for v in combo:
                exps[v] = exps.get(v, 0) + 1
            out.append(tuple(sorted(exps.items())))
    return out


# A linear form is {unknown index: polynomial coefficient}.
LinearForm = Dict[int, Polynomial]


class LinearMatrix:
    """Matrix whose entries are polynomial-coefficient linear forms."""

    def __init__(self, rows: int, cols: int, entries: List[LinearForm]):
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def unknown(cls, rows: int, cols: int, basis: Sequence[Monomial], start: int) -> "LinearMatrix":
        entries = []
        k = start
        for _ in range(rows * cols):
            form = {}
            for m in basis:
                form[k] = Polynomial({m: 1})
                k += 1
            entries.append(form)
        return cls(rows, cols, entries)

    @property
    def size(self) -> int:
        return sum(len(e) for e in self.entries)

    def __getitem__(self, ij) -> LinearForm:
        i, j = ij
        return self.entries[i * self.cols + j]

    def left(self, known: PolyMatrix) -> "LinearMatrix":
        """``known @ self``."""
        if known.cols != self.rows:
            raise ShapeMismatch(f"cannot multiply {known.shape} by {(self.rows, self.cols)}")
        out = []
        for i in range(known.rows):
            for j in range(self.cols):
                acc: LinearForm = {}
                for t in range(known.cols):
                    a = known[i, t]
                    if a:
                        _accumulate(acc, self[t, j], a)
                out.append(acc)
        return LinearMatrix(known.rows, self.cols, out)

    def right(self, known: PolyMatrix) -> "LinearMatrix":
        """``self @ known``."""
        if self.cols != known.rows:
            raise ShapeMismatch(f"cannot multiply {(self.rows, self.cols)} by {known.shape}")
        out = []
        for i in range(self.rows):
            for j in range(known.cols):
                acc: LinearForm = {}
                for t in range(self.cols):
                    b = known[t, j]
                    if b:
                        _accumulate(acc, self[i, t], b)
                out.append(acc)
        return LinearMatrix(self.rows, known.cols, out)

    def __add__(self, other: "LinearMatrix") -> "LinearMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("linear matrices of different shapes")
        out = []
        for a, b in zip(self.entries, other.entries):
            acc = dict(a)
            _accumulate(acc, b, Polynomial.one())
            out.append(acc)
        return LinearMatrix(self.rows, self.cols, out)

    def __neg__(self) -> "LinearMatrix":
        return LinearMatrix(self.rows, self.cols, [{k: -v for k, v in e.items()} for e in self.entries])

    def __sub__(self, other: "LinearMatrix") -> "LinearMatrix":
        return self + (-other)

    def evaluate(self, values: Sequence[Fraction]) -> PolyMatrix:
        out = []
        for form in self.entries:
            acc = Polynomial.zero()
            for k, p in form.items():
                if values[k]:
                    acc = acc + p * values[k]
            out.append(acc)
        return PolyMatrix(self.rows, self.cols, out)


def _accumulate(acc: LinearForm, form: LinearForm, factor: Polynomial):
    for k, p in form.items():
        v = acc.get(k, Polynomial.zero()) + p * factor
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def equations_to_rows(lhs: LinearMatrix, rhs: PolyMatrix) -> List[Tuple[Row, Fraction]]:
    """Coefficient-wise equations of ``lhs == rhs``, one per (entry, monomial)."""
    if (lhs.rows, lhs.cols) != rhs.shape:
        raise ShapeMismatch(f"equation sides {(lhs.rows, lhs.cols)} and {rhs.shape}")
    rows = []
    for form, target in zip(lhs.entries, rhs.entries):
        by_mono: Dict[Monomial, Row] = {}
        for k, p in form.items():
            for m, c in p.terms.items():
                by_mono.setdefault(m, {})[k] = Fraction(c)
        for m in set(by_mono) | set(target.terms):
            rows.append((by_mono.get(m, {}), Fraction(target.coeff(m))))
    return rows


def matrix_variables(*mats: PolyMatrix) -> Tuple[Variable, ...]:
    return tuple(sorted({v for mat in mats for e in mat.entries for v in e.variables()}))


def combine(vectors: Iterable[Sequence[Fraction]], weights: Iterable) -> List[Fraction]:
    vectors = list(vectors)
    out = [Fraction(0)] * len(vectors[0])
    for v, w in zip(vectors, weights):
        for i, x in enumerate(v):
            if x:
                out[i] += w * x
    return out
