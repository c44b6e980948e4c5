"""Classified surface families: builders, predictions, verification.

Each family is a small parameter record that builds a closed-form factorable
surface as an expression tree, so the same parsing, printing, and jet
machinery applies to generated and hand-written surfaces alike.

Constant-curvature families (CaseA, CaseB, CaseC, ParabolicSphere,
NonIsotropicPlane) carry predictions that verify_family checks on a grid.
Case31Candidate is a negative control: a reciprocal-shift factor times a
quadratic factor that admits no constant linear relation between the
curvatures; its check is the contradiction scan, which shows the relation
residual varies along x.

The wire format is a JSON object with a "kind" discriminator matching the
class name and the numeric fields of that class, nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass, fields as dataclass_fields, replace
from typing import Optional, Union

from .curvature import curvatures
from .domain import GridDomain, SingularLocus, VerticalLine
from .errors import (
    EmptyDomainError,
    InvalidSpecError,
    NoConstantPredictionError,
    SingularPointError,
)
from .expr import Add, Const, Div, Expr, Mul, Neg, Pow, Sub, Var, eval_jet, num
from .weingarten import LWParams, ResidualReport, scan_grid, summarize


@dataclass(frozen=True, slots=True)
class CaseA:
    """Constant factor times quadratic factor: z = f0 * g(y) with
    g(y) = n0/(f0*m0) * y^2 + d1*y + d2. Flat, constant mean curvature."""

    f0: float
    m0: float
    n0: float
    d1: float
    d2: float

    def __post_init__(self):
        if self.f0 == 0.0:
            raise InvalidSpecError("CaseA requires f0 != 0")
        if self.m0 == 0.0:
            raise InvalidSpecError("CaseA requires m0 != 0")


@dataclass(frozen=True, slots=True)
class CaseB:
    """Mirror of CaseA: z = f(x) * g0 with
    f(x) = n0/(g0*m0) * x^2 + d3*x + d4."""

    g0: float
    m0: float
    n0: float
    d3: float
    d4: float

    def __post_init__(self):
        if self.g0 == 0.0:
            raise InvalidSpecError("CaseB requires g0 != 0")
        if self.m0 == 0.0:
            raise InvalidSpecError("CaseB requires m0 != 0")


@dataclass(frozen=True, slots=True)
class CaseC:
    """Product of linear factors: z = (c8*x + d15)(c9*y + d16). Minimal
    (H = 0) with constant negative K."""

    c8: float
    d15: float
    c9: float
    d16: float

    def __post_init__(self):
        if self.c8 == 0.0:
            raise InvalidSpecError("CaseC requires c8 != 0")
        if self.c9 == 0.0:
            raise InvalidSpecError("CaseC requires c9 != 0")


@dataclass(frozen=True, slots=True)
class ParabolicSphere:
    """z = c3*(x^2 + y^2) + d8*x + d9*y + d10; constant K = 4 c3^2 and
    H = 2 c3, so K = H^2."""

    c3: float
    d8: float
    d9: float
    d10: float

    def __post_init__(self):
        if self.c3 == 0.0:
            raise InvalidSpecError("ParabolicSphere requires c3 != 0")


@dataclass(frozen=True, slots=True)
class NonIsotropicPlane:
    """z = p*x + q*y + r; both curvatures vanish."""

    p: float
    q: float
    r: float


@dataclass(frozen=True, slots=True)
class Case31Candidate:
    """Negative control: z = f(x) g(y) with f(x) = -(1/(c4*x + d9) + m0/(2*c3))
    and g(y) = c3*y^2 + d7*y + d8. Singular along the vertical line
    x = -d9/c4; admits no constant linear relation between K and H."""

    c3: float
    c4: float
    d7: float
    d8: float
    d9: float
    m0: float

    def __post_init__(self):
        if self.c3 == 0.0:
            raise InvalidSpecError("Case31Candidate requires c3 != 0")
        if self.c4 == 0.0:
            raise InvalidSpecError("Case31Candidate requires c4 != 0")
        if self.m0 == 0.0:
            raise InvalidSpecError("Case31Candidate requires m0 != 0")


FamilySpec = Union[
    CaseA, CaseB, CaseC, ParabolicSphere, NonIsotropicPlane, Case31Candidate
]


@dataclass(frozen=True, slots=True)
class FamilyPrediction:
    """Constant invariants a family should exhibit, plus (when one exists)
    a linear Weingarten triple the surface satisfies identically."""

    K_expected: Optional[float]
    H_expected: Optional[float]
    lw: Optional[LWParams]


# -- builders ----------------------------------------------------------------


def _term(coeff: float, factor: Optional[Expr]) -> Expr:
    # The coefficient stays explicit even when it is 1 so printed surfaces
    # match the classification formulas shape for shape.
    if factor is None:
        return num(abs(coeff))
    return Mul(num(abs(coeff)), factor)


def _signed_sum(parts: list[tuple[float, Optional[Expr]]]) -> Expr:
    """Sum of coeff*factor terms; zero coefficients drop, negatives attach
    through Sub/Neg so constants stay in parse normal form."""
    acc: Optional[Expr] = None
    for coeff, factor in parts:
        if coeff == 0.0:
            continue
        term = _term(coeff, factor)
        if acc is None:
            acc = Neg(term) if coeff < 0.0 else term
        else:
            acc = Sub(acc, term) if coeff < 0.0 else Add(acc, term)
    return acc if acc is not None else Const(0.0)


def _x() -> Expr:
    return Var("x")


def _y() -> Expr:
    return Var("y")


def build(spec: FamilySpec) -> Expr:
    """Closed-form surface of a family spec, as an expression tree."""
    match spec:
        case CaseA(f0=f0, m0=m0, n0=n0, d1=d1, d2=d2):
            g = _signed_sum([(n0 / (f0 * m0), Pow(_y(), 2.0)), (d1, _y()), (d2, None)])
            return Mul(num(f0), g)
        case CaseB(g0=g0, m0=m0, n0=n0, d3=d3, d4=d4):
            f = _signed_sum([(n0 / (g0 * m0), Pow(_x(), 2.0)), (d3, _x()), (d4, None)])
            return Mul(f, num(g0))
        case CaseC(c8=c8, d15=d15, c9=c9, d16=d16):
            return Mul(
                _signed_sum([(c8, _x()), (d15, None)]),
                _signed_sum([(c9, _y()), (d16, None)]),
            )
        case ParabolicSphere(c3=c3, d8=d8, d9=d9, d10=d10):
            return _signed_sum(
                [
                    (c3, Add(Pow(_x(), 2.0), Pow(_y(), 2.0))),
                    (d8, _x()),
                    (d9, _y()),
                    (d10, None),
                ]
            )
        case NonIsotropicPlane(p=p, q=q, r=r):
            return _signed_sum([(p, _x()), (q, _y()), (r, None)])
        case Case31Candidate(c3=c3, c4=c4, d7=d7, d8=d8, d9=d9, m0=m0):
            denom = _signed_sum([(c4, _x()), (d9, None)])
            shift = m0 / (2.0 * c3)
            recip = Div(Const(1.0), denom)
            inner = (
                Add(recip, Const(shift))
                if shift > 0.0
                else Sub(recip, Const(-shift))
            )
            f = Neg(inner)
            g = _signed_sum([(c3, Pow(_y(), 2.0)), (d7, _y()), (d8, None)])
            return Mul(f, g)
        case _:
            raise InvalidSpecError(f"not a family spec: {spec!r}")


def singular_loci(spec: FamilySpec) -> tuple[SingularLocus, ...]:
    """Loci a sampling grid must avoid for this family."""
    if isinstance(spec, Case31Candidate):
        return (VerticalLine(-spec.d9 / spec.c4),)
    return ()


def predict(spec: FamilySpec) -> Optional[FamilyPrediction]:
    """Constant invariants of the family, or None when it has none.

    CaseA/CaseB surfaces are flat with H = n0/m0 and satisfy the relation
    m0*H + K = n0 identically; that triple is returned so callers can check
    the relation in normalized form. CaseC is minimal with constant K, and
    any mean-curvature coefficient paired with n0 = K fits, so no single
    triple is singled out.
    """
    match spec:
        case CaseA(m0=m0, n0=n0) | CaseB(m0=m0, n0=n0):
            return FamilyPrediction(
                K_expected=0.0,
                H_expected=n0 / m0,
                lw=LWParams(a=m0, b=1.0, c=n0),
            )
        case CaseC(c8=c8, c9=c9):
            return FamilyPrediction(
                K_expected=-((c8 * c9) ** 2), H_expected=0.0, lw=None
            )
        case ParabolicSphere(c3=c3):
            return FamilyPrediction(
                K_expected=4.0 * c3 * c3, H_expected=2.0 * c3, lw=None
            )
        case NonIsotropicPlane():
            return FamilyPrediction(K_expected=0.0, H_expected=0.0, lw=None)
        case Case31Candidate():
            return None
        case _:
            raise InvalidSpecError(f"not a family spec: {spec!r}")


def verify_family(spec: FamilySpec, domain: Optional[GridDomain] = None) -> ResidualReport:
    """Max deviation of sampled (K, H) from the family's predicted constants.

    The family's singular loci are merged into the domain before scanning.
    Raises NoConstantPrediction for Case31Candidate; use the contradiction
    scan for that kind.
    """
    prediction = predict(spec)
    if prediction is None:
        raise NoConstantPredictionError(
            "family has no constant prediction; run the contradiction scan"
        )
    surface = build(spec)
    if domain is None:
        domain = GridDomain()
    loci = singular_loci(spec)
    if loci:
        domain = replace(domain, singular_loci=domain.singular_loci + loci)

    k_exp = prediction.K_expected
    h_exp = prediction.H_expected

    def deviation(s: Expr, x: float, y: float) -> float:
        pair = curvatures(eval_jet(s, (x, y)))
        dev = 0.0
        if k_exp is not None:
            dev = max(dev, abs(pair.K - k_exp))
        if h_exp is not None:
            dev = max(dev, abs(pair.H - h_exp))
        return dev

    return scan_grid(surface, domain, deviation)


def case31_residual(spec: Case31Candidate, n0: float, x: float) -> float:
    """Relation defect of the candidate surface as a closed form in x alone:

        c4^2 (4 c3 d8 - d7^2) / (c4 x + d9)^4 - 2 m0 c3 / (c4 x + d9)
            - m0^2 - n0

    This equals the pointwise residual of 2 m0 H + K = n0 on the built
    surface (y drops out). A relation would need it to vanish identically;
    with d7 = d8 = 0 it is strictly monotone in x, so it cannot.
    """
    t = spec.c4 * x + spec.d9
    if abs(t) < 1e-12:
        raise SingularPointError(f"sample x = {x!r} hits the pole")
    lead = spec.c4 * spec.c4 * (4.0 * spec.c3 * spec.d8 - spec.d7 * spec.d7)
    return lead / t**4 - 2.0 * spec.m0 * spec.c3 / t - spec.m0 * spec.m0 - n0


def case31_contradiction_scan(
    spec: Case31Candidate, n0: float, xs: list[float]
) -> ResidualReport:
    """Statistics of the relation defect over sample abscissas.

    A strictly positive std_dev over at least 3 samples shows the defect is
    non-constant, i.e. no constant n0 can close the relation.
    """
    if not isinstance(spec, Case31Candidate):
        raise InvalidSpecError("contradiction scan applies to Case31Candidate only")
    if not xs:
        raise EmptyDomainError("no sample abscissas given")
    values = [case31_residual(spec, n0, x) for x in xs]
    points = [(x, 0.0) for x in xs]
    return summarize(values, points)


# -- JSON wire format --------------------------------------------------------

_KINDS: dict[str, type] = {
    "CaseA": CaseA,
    "CaseB": CaseB,
    "CaseC": CaseC,
    "ParabolicSphere": ParabolicSphere,
    "NonIsotropicPlane": NonIsotropicPlane,
    "Case31Candidate": Case31Candidate,
}


def spec_to_dict(spec: FamilySpec) -> dict:
    out: dict = {"kind": type(spec).__name__}
    for f in dataclass_fields(spec):
        out[f.name] = getattr(spec, f.name)
    return out


def spec_from_dict(data: object) -> FamilySpec:
    """Strict decoder: unknown kinds, unknown fields, missing fields, and
    non-numeric values are all errors."""
    if not isinstance(data, dict):
        raise InvalidSpecError("family spec must be a JSON object")
    kind = data.get("kind")
    if kind is None:
        raise InvalidSpecError("family spec needs a 'kind' field")
    cls = _KINDS.get(kind)
    if cls is None:
        raise InvalidSpecError(f"unknown family kind {kind!r}")
    expected = {f.name for f in dataclass_fields(cls)}
    given = set(data) - {"kind"}
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unknown {extra}")
        raise InvalidSpecError(f"bad fields for {kind}: " + ", ".join(detail))
    kwargs = {}
    for name in expected:
        value = data[name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidSpecError(f"field {name!r} must be a number")
        kwargs[name] = float(value)
    return cls(**kwargs)
