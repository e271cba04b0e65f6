"""Morita contexts between Landau-Ginzburg objects.

A 1-morphism ``(R, f) -> (S, g)`` is a matrix factorization of ``g - f``.
A context ``(X, Y, eta, rho)`` pairs ``X : f -> g`` and ``Y : g -> f`` with
morphisms ``eta : X (x) Y -> Delta_f`` and ``rho : Y (x) X -> Delta_g``,
where ``(x)`` is the block tensor product of factorizations and ``Delta`` the unit
factorization.  Naming follows the usual matrix conventions:
``X (x) Y = (P, Q)``, ``Delta_f = (R, T)``, ``Y (x) X = (P', Q')``,
``Delta_g = (R', T')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstantPotential, NotAMorphism, PolynomialMismatch, ShapeMismatch
from .homotopy import GradedMorphism, Homotopy, left_annihilators, verify_homotopy, verify_morphism
from .koszul import DeltaFactorization, build_delta
from .matrix import PolyMatrix, det
from .mf import MatrixFactorization, yoshino_tensor
from .ring import Polynomial, Variable, as_polynomial, as_variables, unprimed_variables


@dataclass(frozen=True)
class LGObject:
    variables: Tuple[Variable, ...]
    f: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "variables", as_variables(self.variables))
        object.__setattr__(self, "f", as_polynomial(self.f))
        stray = [str(v) for v in self.f.variables() if v not in self.variables]
        if stray:
            raise ValueError(f"{self.f} uses undeclared variables {stray}")

    @classmethod
    def of(cls, f, variables: Optional[Sequence] = None) -> "LGObject":
        f = as_polynomial(f)
        return cls(as_variables(variables) if variables is not None else unprimed_variables(f), f)


@dataclass(frozen=True)
class LGOneMorphism:
    source: LGObject
    target: LGObject
    mf: MatrixFactorization

    def __post_init__(self):
        expected = self.target.f - self.source.f
        if self.mf.f != expected:
            raise PolynomialMismatch(
                f"1-morphism {self.source.f} -> {self.target.f} must factor {expected}, got {self.mf.f}",
                expected=expected,
                received=self.mf.f,
            )


@dataclass(frozen=True)
class MoritaContext:
    x: LGOneMorphism
    y: LGOneMorphism
    eta: GradedMorphism
    rho: GradedMorphism

    @property
    def f(self) -> LGObject:
        return self.x.source

    @property
    def g(self) -> LGObject:
        return self.x.target


@dataclass
class Report:
    """Named boolean checks plus printable details."""

    name: str
    checks: List[Tuple[str, bool]] = field(default_factory=list)
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def check(self, label: str) -> bool:
        for name, ok in self.checks:
            if name == label:
                return ok
        raise KeyError(label)

    def add(self, label: str, ok: bool):
        self.checks.append((label, bool(ok)))


def _check_pair(x: LGOneMorphism, y: LGOneMorphism):
    if y.source != x.target or y.target != x.source:
        raise PolynomialMismatch(
            "Y must run from the target of X back to its source",
            expected=x.source.f - x.target.f,
            received=y.mf.f,
        )


def one_morphism(source: LGObject, target: LGObject, mf: MatrixFactorization) -> LGOneMorphism:
    return LGOneMorphism(source, target, mf)


def unit(obj: LGObject) -> DeltaFactorization:
    return build_delta(obj.f, obj.variables)


def eta_ends(x: LGOneMorphism, y: LGOneMorphism) -> Tuple[MatrixFactorization, MatrixFactorization]:
    return yoshino_tensor(x.mf, y.mf), unit(x.source).as_factorization()


def rho_ends(x: LGOneMorphism, y: LGOneMorphism) -> Tuple[MatrixFactorization, MatrixFactorization]:
    return yoshino_tensor(y.mf, x.mf), unit(x.target).as_factorization()


def make_context(x: LGOneMorphism, y: LGOneMorphism, eta, rho) -> MoritaContext:
    """Validate and assemble ``(X, Y, eta, rho)``.

    ``eta`` and ``rho`` may be ``GradedMorphism`` objects or ``(even, odd)``
    matrix pairs; their ends are checked against ``X (x) Y -> Delta_f`` and
    ``Y (x) X -> Delta_g``.

    Raises:
        PolynomialMismatch: ``Y`` does not factor ``f - g`` or the endpoints disagree.
        ConstantPotential: ``f`` or ``g`` is constant.
        NotAMorphism: wrong shapes or failed morphism equations.
    """
    _check_pair(x, y)
    for obj in (x.source, x.target):
        if obj.f.is_constant():
            raise ConstantPotential(f"potential {obj.f} is constant")
    eta = _as_morphism(eta, *eta_ends(x, y), "eta")
    rho = _as_morphism(rho, *rho_ends(x, y), "rho")
    return MoritaContext(x, y, eta, rho)


def _as_morphism(m, source: MatrixFactorization, target: MatrixFactorization, label: str) -> GradedMorphism:
    if isinstance(m, GradedMorphism):
        if m.source != source or m.target != target:
            raise NotAMorphism(f"{label} has the wrong source or target")
        even, odd = m.even, m.odd
    else:
        even, odd = m
    try:
        gm = GradedMorphism(source, target, even, odd)
    except ShapeMismatch as exc:
        raise NotAMorphism(f"{label}: {exc}") from exc
    if not verify_morphism(gm):
        raise NotAMorphism(f"{label} does not commute with the differentials")
    return gm


def necessary_condition(ctx: MoritaContext) -> Report:
    """The four conditions ``eta1 = 0``, ``eta0 Q = 0``, ``rho1 = 0``, ``rho0 Q' = 0``."""
    q = ctx.eta.source.q
    q2 = ctx.rho.source.q
    r = Report("necessary-condition")
    r.add("eta1 = 0", ctx.eta.odd.is_zero())
    r.add("eta0 Q = 0", (ctx.eta.even @ q).is_zero())
    r.add("rho1 = 0", ctx.rho.odd.is_zero())
    r.add("rho0 Q' = 0", (ctx.rho.even @ q2).is_zero())
    return r


def zero_determinant_check(x: LGOneMorphism, y: LGOneMorphism) -> Report:
    """All four determinants of ``X (x) Y`` and ``Y (x) X`` vanish."""
    _check_pair(x, y)
    xy = yoshino_tensor(x.mf, y.mf)
    yx = yoshino_tensor(y.mf, x.mf)
    r = Report("zero-determinants")
    for label, m in (("det(P)", xy.p), ("det(Q)", xy.q), ("det(P')", yx.p), ("det(Q')", yx.q)):
        d = det(m)
        r.details[label] = str(d)
        r.add(f"{label} = 0", d.is_zero())
    return r


def trivial_context(x: LGOneMorphism, y: LGOneMorphism) -> MoritaContext:
    """``(X, Y, 0, 0)``, a Morita context for every compatible pair."""
    _check_pair(x, y)
    src, tgt = eta_ends(x, y)
    src2, tgt2 = rho_ends(x, y)
    return make_context(x, y, GradedMorphism.zero(src, tgt), GradedMorphism.zero(src2, tgt2))


def corollary_check(ctx: MoritaContext) -> bool:
    return ctx.eta.odd.is_zero() and ctx.rho.odd.is_zero()


def triangle_sources(ctx: MoritaContext) -> Tuple[MatrixFactorization, MatrixFactorization]:
    """``Z = (Y (x) X) (x) Y`` and ``Z' = (X (x) Y) (x) X``."""
    z = yoshino_tensor(yoshino_tensor(ctx.y.mf, ctx.x.mf), ctx.y.mf)
    z2 = yoshino_tensor(yoshino_tensor(ctx.x.mf, ctx.y.mf), ctx.x.mf)
    return z, z2


def verify_triangles(ctx: MoritaContext, witnesses=None) -> Report:
    """Check both triangle diagrams up to homotopy.

    The unit maps inside the diagrams are not modelled as matrices, so the
    two sides are only synthesized for ``eta = rho = 0`` (both vanish).
    For other contexts pass ``witnesses = ((psi, phi, lam), (psi2, phi2, xi))``
    with explicit morphisms ``Z -> Y``, ``Z' -> X`` and homotopies.
    """
    z, z2 = triangle_sources(ctx)
    r = Report("triangle-diagrams")
    if witnesses is None:
        if not (ctx.eta.is_zero() and ctx.rho.is_zero()):
            raise ValueError("diagram sides for nonzero eta, rho must be supplied as witnesses")
        zero_y = GradedMorphism.zero(z, ctx.y.mf)
        zero_x = GradedMorphism.zero(z2, ctx.x.mf)
        witnesses = (
            (zero_y, zero_y, Homotopy.zero(z, ctx.y.mf)),
            (zero_x, zero_x, Homotopy.zero(z2, ctx.x.mf)),
        )
    (psi, phi, lam), (psi2, phi2, xi) = witnesses
    r.add("diagram Y commutes up to homotopy", verify_homotopy(lam, psi, phi))
    r.add("diagram X commutes up to homotopy", verify_homotopy(xi, psi2, phi2))
    return r


@dataclass
class NonSufficiency:
    report: Report
    nullspace_dimension: int
    alternative_eta0: Optional[PolyMatrix]


def non_sufficiency_witness(ctx: MoritaContext, degree_bound: int = 1) -> NonSufficiency:
    """Show that ``eta0 Q = 0`` does not pin down ``eta0``.

    Computes ``det(Q)`` (zero, so ``Q`` is singular) and a basis of the
    solutions of ``eta0 Q = 0`` with entries of degree <= D.  When that space
    has dimension > 1 a solution different from the context's own ``eta0``
    is returned.  The report never claims sufficiency.
    """
    q = ctx.eta.source.q
    d = det(q)
    r = Report("non-sufficiency")
    r.details["det(Q)"] = str(d)
    r.add("Q is singular", d.is_zero())
    src, tgt = ctx.eta.source, ctx.eta.target
    variables = sorted(_vars(src.p, src.q, tgt.p, tgt.q))
    space = left_annihilators(q, tgt.n, degree_bound, variables)
    alternative = next((e for e in space if e != ctx.eta.even), None)
    r.details["solution space dimension"] = str(len(space))
    r.details["degree bound"] = str(degree_bound)
    r.add("eta0 Q = 0 has a solution other than the context's", alternative is not None)
    r.details["sufficient"] = "not established"
    return NonSufficiency(r, len(space), alternative)


def _vars(*mats: PolyMatrix):
    return {v for m in mats for e in m.entries for v in e.variables()}
