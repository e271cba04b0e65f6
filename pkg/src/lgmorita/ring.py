"""Sparse multivariate polynomials with exact rational coefficients.

Variables carry a prime level so that ``x`` and ``x'`` (the two tensor
factors of ``R (x) R``) live in one polynomial ring.  Monomials are sorted
tuples of ``(Variable, exponent)`` pairs; polynomials map monomials to
nonzero ``int`` or ``Fraction`` coefficients.  Coefficients that are whole
numbers are always stored as ``int``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import cmp_to_key
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import DoesNotDivide, IndexOutOfRange, ZeroDivisor

Coefficient = Union[int, Fraction]


class Variable(NamedTuple):
    """A named indeterminate; ``prime_level`` 1 is ``x'``, 2 is ``x''``."""

    name: str
    prime_level: int = 0

    def primed(self, levels: int = 1) -> "Variable":
        return Variable(self.name, self.prime_level + levels)

    def unprimed(self) -> "Variable":
        return Variable(self.name, 0)

    def __str__(self) -> str:
        return self.name + "'" * self.prime_level


# A monomial is a tuple of (Variable, exponent) pairs, sorted by variable,
# with every exponent positive.  The empty tuple is the monomial 1.
Monomial = Tuple[Tuple[Variable, int], ...]

ONE_MONOMIAL: Monomial = ()


def _coerce(c) -> Coefficient:
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _norm(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Return ``a / b`` or None when ``b`` does not divide ``a``."""
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        have = exps.get(v, 0)
        if have < e:
            return None
        if have == e:
            del exps[v]
        else:
            exps[v] = have - e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def lex_cmp(a: Monomial, b: Monomial) -> int:
    """Lexicographic comparison: the first variable on which the exponents
    differ decides, larger exponent wins."""
    for (va, ea), (vb, eb) in zip(a, b):
        if va != vb:
            # the smaller variable is present in one monomial and absent in the other
            return 1 if va < vb else -1
        if ea != eb:
            return 1 if ea > eb else -1
    return (len(a) > len(b)) - (len(a) < len(b))


lex_key = cmp_to_key(lex_cmp)


def _union_variables(*ps: "Polynomial") -> Tuple[Variable, ...]:
    return tuple(sorted({v for p in ps for m in p._terms for v, _ in m}))


# Exponent vectors are packed into one int, FIELD bits per variable with the
# first variable in the most significant field, so integer order is lex
# order and monomial multiplication is integer addition.  The top bit of
# each field is a guard used by the divisibility test.
_FIELD = 32
_MAX_EXP = (1 << (_FIELD - 1)) - 1


def _to_vectors(p: "Polynomial", xs: Tuple[Variable, ...]) -> Dict[int, Coefficient]:
    n = len(xs)
    shift = {v: _FIELD * (n - 1 - k) for k, v in enumerate(xs)}
    out = {}
    for m, c in p._terms.items():
        key = 0
        for v, e in m:
            key |= e << shift[v]
        out[key] = c
    return out


def _guard_mask(n: int) -> int:
    return sum(1 << (_FIELD * k + _FIELD - 1) for k in range(n))


def _from_vectors(terms: Dict[int, Coefficient], xs: Tuple[Variable, ...]) -> "Polynomial":
    n = len(xs)
    mask = (1 << _FIELD) - 1
    out = {}
    for key, c in terms.items():
        c = _norm(c)
        if c:
            m = []
            for k, v in enumerate(xs):
                e = (key >> (_FIELD * (n - 1 - k))) & mask
                if e:
                    m.append((v, e))
            out[tuple(m)] = c
    return Polynomial._raw(out)

class Polynomial:
    """Immutable polynomial in canonical form.

    Supports ``+ - * **`` with other polynomials and exact rational scalars.
    Equality is structural equality of the canonical term maps, and a
    polynomial compares equal to a scalar when it is that constant.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        clean: Dict[Monomial, Coefficient] = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    exps: Dict[Variable, int] = {}
                    for v, e in m:
                        if not isinstance(e, int) or e < 0:
                            raise ValueError(f"bad exponent {e!r}")
                        if e:
                            exps[v] = exps.get(v, 0) + e
                    m = tuple(sorted(exps.items()))
                    s = _norm(clean.get(m, 0) + c)
                    if s:
                        clean[m] = s
                    else:
                        clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coefficient]) -> "Polynomial":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = _coerce(c)
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, name: Union[str, Variable], prime_level: int = 0) -> "Polynomial":
        v = name if isinstance(name, Variable) else variable(name).primed(prime_level)
        return cls._raw({((v, 1),): 1})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({ONE_MONOMIAL: 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_term(self) -> Coefficient:
        return self._terms.get(ONE_MONOMIAL, 0)

    def coeff(self, m: Monomial) -> Coefficient:
        return self._terms.get(m, 0)

    def variables(self) -> Tuple[Variable, ...]:
        vs = {v for m in self._terms for v, _ in m}
        return tuple(sorted(vs))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self._terms), default=-1)

    def sorted_terms(self):
        """Terms in descending lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: lex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Coefficient]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=lex_key)
        return m, self._terms[m]

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = _norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return Polynomial._raw({})
        if o.is_constant() or self.is_constant():
            c, p = (o.constant_term(), self) if o.is_constant() else (self.constant_term(), o)
            return Polynomial._raw({m: _norm(c * v) for m, v in p._terms.items()})
        xs = _union_variables(self, o)
        a, b = _to_vectors(self, xs), _to_vectors(o, xs)
        out: Dict[int, Coefficient] = {}
        get = out.get
        if self.degree() + o.degree() > _MAX_EXP:
            raise OverflowError("exponent too large")
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        return _from_vectors({m: c for m, c in out.items() if c}, xs)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- variable bookkeeping ----------------------------------------------

    def map_variables(self, fn: Callable[[Variable], Variable]) -> "Polynomial":
        out: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            exps: Dict[Variable, int] = {}
            for v, e in m:
                w = fn(v)
                exps[w] = exps.get(w, 0) + e
            nm = tuple(sorted(exps.items()))
            out[nm] = out.get(nm, 0) + c
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c})

    def substitute(self, values: Mapping[Variable, "Polynomial"]) -> "Polynomial":
        """Replace each listed variable by a polynomial (or scalar)."""
        vals = {v: (p if isinstance(p, Polynomial) else Polynomial.constant(p)) for v, p in values.items()}
        result = Polynomial.zero()
        for m, c in self._terms.items():
            term = Polynomial.constant(c)
            kept = []
            for v, e in m:
                if v in vals:
                    term = term * vals[v] ** e
                else:
                    kept.append((v, e))
            if kept:
                term = term * Polynomial._raw({tuple(kept): 1})
            result = result + term
        return result

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        from .text import print_polynomial

        return print_polynomial(self)


PolyLike = Union[Polynomial, int, Fraction]


def as_polynomial(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, str):
        from .text import parse_polynomial

        return parse_polynomial(p)
    return Polynomial.constant(p)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def neg(a: Polynomial) -> Polynomial:
    return -a


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return ``q`` with ``b * q == a``.

    Multivariate division by leading terms in lex order; over an integral
    domain the division is exact iff no leading term gets stuck.

    Raises:
        ZeroDivisor: if ``b`` is zero.
        DoesNotDivide: if ``b`` does not divide ``a``.
    """
    if not b._terms:
        raise ZeroDivisor("division by the zero polynomial")
    if b.is_constant():
        c = Fraction(b.constant_term())
        return Polynomial._raw({m: _norm(Fraction(v) / c) for m, v in a._terms.items()})
    # packed exponent vectors over the sorted variables order as lex
    xs = _union_variables(a, b)
    if a.degree() > _MAX_EXP:
        raise OverflowError("exponent too large")
    av, bv = _to_vectors(a, xs), _to_vectors(b, xs)
    guard = _guard_mask(len(xs))
    lead_m = max(bv)
    lead_c = bv[lead_m]
    rest = [(m, c) for m, c in bv.items() if m != lead_m]
    rem: Dict[int, Coefficient] = dict(av)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quotient: Dict[int, Coefficient] = {}
    while heap:
        key = heapq.heappop(heap)
        m = -key
        c = rem.pop(m, 0)
        if not c:
            continue
        while heap and heap[0] == key:
            heapq.heappop(heap)
        if ((m | guard) - lead_m) & guard != guard:
            raise DoesNotDivide(f"{b} does not divide {a}")
        qm = m - lead_m
        if type(c) is int and type(lead_c) is int and c % lead_c == 0:
            qc = c // lead_c
        else:
            qc = _norm(Fraction(c) / lead_c)
        quotient[qm] = qc
        for bm, bc in rest:
            t = qm + bm
            s = _norm(rem.get(t, 0) - qc * bc)
            if s:
                if t not in rem:
                    heapq.heappush(heap, -t)
                rem[t] = s
            else:
                rem.pop(t, None)
    return _from_vectors(quotient, xs)


def divides(b: Polynomial, a: Polynomial) -> bool:
    try:
        exact_divide(a, b)
    except DoesNotDivide:
        return False
    return True


def prime_shift(p: Polynomial, levels: int = 1) -> Polynomial:
    """``f(x) -> f(x')``: raise every variable's prime level."""
    return p.map_variables(lambda v: Variable(v.name, v.prime_level + levels))


def identify_primes(p: Polynomial) -> Polynomial:
    """Multiplication map ``R (x) R -> R``: send every ``x'`` to ``x``."""
    return p.map_variables(Variable.unprimed)


def variable(text: str) -> Variable:
    """``"x1''"`` -> ``Variable("x1", 2)``: trailing apostrophes are primes."""
    name = text.rstrip("'")
    return Variable(name, len(text) - len(name))


def as_variables(variables: Iterable[Union[str, Variable]]) -> Tuple[Variable, ...]:
    return tuple(v if isinstance(v, Variable) else variable(v) for v in variables)


def unprimed_variables(p: Polynomial) -> Tuple[Variable, ...]:
    return tuple(sorted({v.unprimed() for v in p.variables()}))


def divided_difference(f: Polynomial, i: int, variables: Optional[Sequence[Union[str, Variable]]] = None) -> Polynomial:
    """Divided difference of ``f`` in its ``i``-th variable (1-based).

    With ordered variables ``x_1..x_n``, returns

        [f(x'_1..x'_{i-1}, x_i..x_n) - f(x'_1..x'_i, x_{i+1}..x_n)] / (x_i - x'_i)

    where only unprimed occurrences are substituted.  Defaults to the sorted
    unprimed variables of ``f``.
    """
    xs = as_variables(variables) if variables is not None else unprimed_variables(f)
    if not 1 <= i <= len(xs):
        raise IndexOutOfRange(f"variable index {i} outside 1..{len(xs)}")
    before = {v for v in xs[: i - 1]}
    upto = before | {xs[i - 1]}

    def shift(which):
        return lambda v: v.primed() if (v.prime_level == 0 and v in which) else v

    numerator = f.map_variables(shift(before)) - f.map_variables(shift(upto))
    xi = xs[i - 1]
    denominator = Polynomial.var(xi) - Polynomial.var(xi.primed())
    try:
        return exact_divide(numerator, denominator)
    except DoesNotDivide as exc:  # pragma: no cover - algebraically impossible
        raise AssertionError(f"divided difference not exact for {f}") from exc
