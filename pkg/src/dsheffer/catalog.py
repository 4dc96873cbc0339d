"""The built-in families of d-orthogonal Sheffer sets.

Each family is stored twice over: as a couple (gamma, sigma) and as closed
generating functions, so the construction can be verified along two
independent routes.  Families whose generating function carries exp(pi(t))
for an auxiliary polynomial pi are normalized to exp(pi(t) - pi(0)): the
couple only ever sees pi', and exact rational arithmetic cannot represent
the constant factor e^(pi(0)) anyway.

Discrete families are stated in the Newton form A(t) (1 + omega*H(t))^(x/omega);
expansion goes through the equivalent exponential form with
log(1 + omega*H)/omega, while the lowering operator keeps the original H and
acts through the forward difference of step omega.

The Laguerre-type 2-orthogonal family and the Meixner-type family also carry
explicit moment functionals (series in derivatives of f, respectively sums
over integer nodes); these give closed-form cross-checks for the operator
route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Optional

from mpmath import mp, mpf

from dsheffer.exactnum import binomial, pochhammer, stirling2
from dsheffer.operators import (
    DERIVATIVE,
    DIFFERENCE,
    FunctionalVector,
    LoweringOp,
    lowering_from_H,
)
from dsheffer.series import Poly, Series
from dsheffer.sheffer import CoupleSpec, ShefferPair

LAGUERRE_EQ9 = "laguerre-eq9"
LAGUERRE_EQ10 = "laguerre-eq10"
LAGUERRE_EQ11 = "laguerre-eq11"
HERMITE_EQ12 = "hermite-eq12"
CHARLIER_EQ13 = "charlier-eq13"
MEIXNER_EQ14 = "meixner-eq14"
MEIXNER_EQ16 = "meixner-eq16"
MEIXNER_EQ21 = "meixner-eq21"


class InvalidParameterError(ValueError):
    """Family parameters violate a named restriction."""


class DivergentParameterError(InvalidParameterError):
    """Parameters put the defining series outside its region of convergence."""


@dataclass(frozen=True)
class FamilySpec:
    """A family id with a concrete d, parameter values, and aux polynomial."""

    family: str
    d: int
    params: Mapping[str, Fraction] = field(default_factory=dict)
    aux: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameterError(f"unknown family: {self.family!r}")
        object.__setattr__(
            self, "params", {str(k): Fraction(v) for k, v in dict(self.params).items()}
        )
        if self.aux is not None:
            object.__setattr__(self, "aux", tuple(Fraction(a) for a in self.aux))

    def param(self, name: str) -> Fraction:
        return self.params[name]


@dataclass(frozen=True)
class FamilyInfo:
    family: str
    label: str
    kind: str                      # derivative | difference
    params: tuple[str, ...]
    aux_len: Optional[Callable[[int], int]]
    aux_text: Optional[str]
    d_min: int
    d_fixed: Optional[int]
    restrictions: str
    generating_text: str


FAMILIES: dict[str, FamilyInfo] = {}


def _register(info: FamilyInfo):
    FAMILIES[info.family] = info


_register(FamilyInfo(
    family=LAGUERRE_EQ9,
    label="Laguerre type, sigma = -(1/d)(1-t)^(d+1)",
    kind=DERIVATIVE,
    params=("alpha",),
    aux_len=None,
    aux_text=None,
    d_min=1,
    d_fixed=None,
    restrictions="n/d + alpha + 1 != 0 for all n >= 0",
    generating_text="(1-t)^(-(alpha+1)d) * exp(-x[(1-t)^(-d) - 1])",
))
_register(FamilyInfo(
    family=LAGUERRE_EQ10,
    label="Laguerre type with auxiliary exp(pi_(d-1))",
    kind=DERIVATIVE,
    params=("alpha",),
    aux_len=lambda d: d,
    aux_text="a_0..a_(d-1), degree d-1",
    d_min=1,
    d_fixed=None,
    restrictions="a_(d-1) != 0 for d >= 2; alpha + n + 1 != 0 for d = 1",
    generating_text="exp(pi(t)-pi(0)) * (1-t)^(-alpha-1) * exp(-x t/(1-t))",
))
_register(FamilyInfo(
    family=LAGUERRE_EQ11,
    label="Laguerre type, 2-orthogonal, with closed-form functionals",
    kind=DERIVATIVE,
    params=("alpha",),
    aux_len=None,
    aux_text=None,
    d_min=2,
    d_fixed=2,
    restrictions="alpha + n + 1 != 0 for all n >= 0",
    generating_text="(1-t)^(-alpha-1) * exp(x (t^2 - 2t) / (2 (1-t)^2))",
))
_register(FamilyInfo(
    family=HERMITE_EQ12,
    label="Hermite type (Appell)",
    kind=DERIVATIVE,
    params=(),
    aux_len=lambda d: d + 2,
    aux_text="a_0..a_(d+1), degree d+1",
    d_min=1,
    d_fixed=None,
    restrictions="a_(d+1) != 0",
    generating_text="exp(pi(t)-pi(0)) * exp(x t)",
))
_register(FamilyInfo(
    family=CHARLIER_EQ13,
    label="Charlier type (discrete Appell)",
    kind=DIFFERENCE,
    params=("omega",),
    aux_len=lambda d: d + 1,
    aux_text="a_0..a_d, degree d",
    d_min=1,
    d_fixed=None,
    restrictions="a_d != 0; omega != 0",
    generating_text="exp(pi(t)-pi(0)) * (1 + omega t)^(x/omega)",
))
_register(FamilyInfo(
    family=MEIXNER_EQ14,
    label="Meixner type with auxiliary exp(pi_(d-1))",
    kind=DIFFERENCE,
    params=("c", "beta"),
    aux_len=lambda d: d,
    aux_text="a_0..a_(d-1), degree d-1",
    d_min=1,
    d_fixed=None,
    restrictions="c not in {0, 1}; a_(d-1) != 0 for d >= 2; "
                 "beta not a nonpositive integer for d = 1",
    generating_text="exp(pi(t)-pi(0)) * (1-t)^(-beta) * (1 + ((c-1)/c) t/(1-t))^x",
))
_register(FamilyInfo(
    family=MEIXNER_EQ16,
    label="Meixner type with closed-form moment functionals",
    kind=DIFFERENCE,
    params=("c", "beta"),
    aux_len=None,
    aux_text=None,
    d_min=1,
    d_fixed=None,
    restrictions="c not in {0, 1/(1-d), 1}; beta != -n/d for all n >= 0",
    generating_text="(1-t)^(-beta d) * (1 + ((c-1)/(dc)) [(1-t)^(-d) - 1])^x",
))
_register(FamilyInfo(
    family=MEIXNER_EQ21,
    label="Meixner type with quadratic Newton argument (d >= 2)",
    kind=DIFFERENCE,
    params=("c", "beta"),
    aux_len=lambda d: d - 1,
    aux_text="a_0..a_(d-2), degree d-2",
    d_min=2,
    d_fixed=None,
    restrictions="c not in {0, 1/3, 1}; a_(d-2) != 0",
    generating_text="exp(pi(t)-pi(0)) * (1-t)^(-beta) * "
                    "(1 + ((c-1)/(2c)) (t^2 - 2t)/(1-t)^2)^x",
))


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def validate_params(spec: FamilySpec) -> tuple[str, ...]:
    """Return the violated restrictions (empty tuple means valid)."""
    info = FAMILIES[spec.family]
    violations = []

    if info.d_fixed is not None and spec.d != info.d_fixed:
        violations.append(f"{spec.family} requires d = {info.d_fixed}, got d = {spec.d}")
    elif spec.d < info.d_min:
        violations.append(f"{spec.family} requires d >= {info.d_min}, got d = {spec.d}")

    missing = [p for p in info.params if p not in spec.params]
    unknown = [p for p in spec.params if p not in info.params]
    if missing:
        violations.append(f"missing parameter(s): {', '.join(missing)}")
    if unknown:
        violations.append(f"unknown parameter(s): {', '.join(sorted(unknown))}")

    aux = spec.aux
    if info.aux_len is None:
        if aux is not None:
            violations.append(f"{spec.family} takes no auxiliary polynomial")
    else:
        want = max(info.aux_len(spec.d), 0) if spec.d >= 1 else 0
        if aux is None:
            # an omitted auxiliary polynomial means the zero polynomial;
            # families needing a nonzero leading coefficient flag that below
            aux = (Fraction(0),) * want
        elif len(aux) != want:
            violations.append(
                f"auxiliary polynomial needs {want} coefficient(s) ({info.aux_text}), "
                f"got {len(aux)}"
            )

    if violations:
        # structural problems first; value restrictions need the right shape
        return tuple(violations)

    p = spec.params
    d = spec.d
    fam = spec.family
    if fam == LAGUERRE_EQ9:
        if _is_nonpositive_integer((p["alpha"] + 1) * d):
            violations.append(
                f"alpha = {p['alpha']} violates n/d + alpha + 1 != 0 (n >= 0)"
            )
    elif fam == LAGUERRE_EQ10:
        if d >= 2:
            if aux[d - 1] == 0:
                violations.append("leading auxiliary coefficient a_(d-1) must be nonzero")
        elif _is_nonpositive_integer(p["alpha"] + 1):
            violations.append(
                f"alpha = {p['alpha']} violates alpha + n + 1 != 0 (n >= 0) for d = 1"
            )
    elif fam == LAGUERRE_EQ11:
        if _is_nonpositive_integer(p["alpha"] + 1):
            violations.append(
                f"alpha = {p['alpha']} violates alpha + n + 1 != 0 (n >= 0)"
            )
    elif fam == HERMITE_EQ12:
        if aux[d + 1] == 0:
            violations.append("leading auxiliary coefficient a_(d+1) must be nonzero")
    elif fam == CHARLIER_EQ13:
        if p["omega"] == 0:
            violations.append("omega must be nonzero")
        if aux[d] == 0:
            violations.append("leading auxiliary coefficient a_d must be nonzero")
    elif fam == MEIXNER_EQ14:
        if p["c"] in (0, 1):
            violations.append(f"c = {p['c']} must avoid 0 and 1")
        if d >= 2:
            if aux[d - 1] == 0:
                violations.append("leading auxiliary coefficient a_(d-1) must be nonzero")
        elif _is_nonpositive_integer(p["beta"]):
            violations.append(
                f"beta = {p['beta']} must not be a nonpositive integer for d = 1"
            )
    elif fam == MEIXNER_EQ16:
        if p["c"] in (0, 1):
            violations.append(f"c = {p['c']} must avoid 0 and 1")
        elif d >= 2 and p["c"] == Fraction(1, 1 - d):
            violations.append(f"c = {p['c']} must avoid 1/(1-d)")
        if _is_nonpositive_integer(p["beta"] * d):
            violations.append(f"beta = {p['beta']} violates beta != -n/d (n >= 0)")
    elif fam == MEIXNER_EQ21:
        if p["c"] in (0, Fraction(1, 3), 1):
            violations.append(f"c = {p['c']} must avoid 0, 1/3 and 1")
        if aux[d - 2] == 0:
            violations.append("leading auxiliary coefficient a_(d-2) must be nonzero")
    return tuple(violations)


def require_valid(spec: FamilySpec):
    violations = validate_params(spec)
    if violations:
        raise InvalidParameterError("; ".join(violations))


_ONE_MINUS_T = Poly((1, -1))


def _aux_poly(spec: FamilySpec) -> Poly:
    return Poly(spec.aux or ())


def _aux_tilde(spec: FamilySpec) -> Poly:
    # pi(t) - pi(0): the constant term never reaches the couple and would
    # need the transcendental factor e^(a_0) in the generating function
    aux = spec.aux or ()
    return Poly((0,) + tuple(aux[1:]))


def family_couple(spec: FamilySpec) -> CoupleSpec:
    """The couple (gamma, sigma) of a valid family instance."""
    require_valid(spec)
    d = spec.d
    p = spec.params
    fam = spec.family
    if fam == LAGUERRE_EQ9:
        a = p["alpha"]
        gamma = _ONE_MINUS_T ** d * (-(a + 1))
        sigma = _ONE_MINUS_T ** (d + 1) * Fraction(-1, d)
    elif fam == LAGUERRE_EQ10:
        a = p["alpha"]
        dpi = _aux_poly(spec).derivative()
        sq = _ONE_MINUS_T ** 2
        gamma = -(sq * dpi) - _ONE_MINUS_T * (a + 1)
        sigma = -sq
    elif fam == LAGUERRE_EQ11:
        a = p["alpha"]
        gamma = _ONE_MINUS_T ** 2 * (-(a + 1))
        sigma = -(_ONE_MINUS_T ** 3)
    elif fam == HERMITE_EQ12:
        gamma = _aux_poly(spec).derivative()
        sigma = Poly.one()
    elif fam == CHARLIER_EQ13:
        lin = Poly((1, p["omega"]))
        gamma = lin * _aux_poly(spec).derivative()
        sigma = lin
    elif fam == MEIXNER_EQ14:
        c, beta = p["c"], p["beta"]
        base = Poly((c, -1)) * _ONE_MINUS_T * (1 / (c - 1))
        gamma = base * _aux_poly(spec).derivative() + Poly((c, -1)) * (beta / (c - 1))
        sigma = base
    elif fam == MEIXNER_EQ16:
        c, beta = p["c"], p["beta"]
        bracket = _ONE_MINUS_T ** d * ((d * c - c + 1) / (d * c)) + Poly.constant((c - 1) / (d * c))
        gamma = bracket * (d * c * beta / (c - 1))
        sigma = _ONE_MINUS_T * bracket * (c / (c - 1))
    elif fam == MEIXNER_EQ21:
        c, beta = p["c"], p["beta"]
        bracket = Poly((1, -2, 1)) * ((3 * c - 1) / (2 * c)) - Poly.constant((c - 1) / (2 * c))
        dpi = _aux_poly(spec).derivative()
        gamma = -(_ONE_MINUS_T * bracket * dpi) * (c / (c - 1)) - bracket * (beta * c / (c - 1))
        sigma = -(_ONE_MINUS_T * bracket) * (c / (c - 1))
    else:  # pragma: no cover
        raise InvalidParameterError(f"unknown family: {fam!r}")
    return CoupleSpec(d=d, gamma=gamma.coeffs, sigma=sigma.coeffs)


@dataclass(frozen=True)
class _Realization:
    A: Series
    Hx: Series
    newton_H: Optional[Series]
    omega: Optional[Fraction]


def _realize(spec: FamilySpec, N: int) -> _Realization:
    require_valid(spec)
    if N < 1:
        raise ValueError("order must be at least 1")
    d = spec.d
    p = spec.params
    fam = spec.family
    one_minus_t = Series.from_poly(_ONE_MINUS_T, N)
    if fam == LAGUERRE_EQ9:
        a = p["alpha"]
        A = one_minus_t.pow_rat(-(a + 1) * d)
        Hx = 1 - one_minus_t.pow_rat(-d)
        return _Realization(A, Hx, None, None)
    if fam == LAGUERRE_EQ10:
        a = p["alpha"]
        A = Series.from_poly(_aux_tilde(spec), N).exp() * one_minus_t.pow_rat(-(a + 1))
        Hx = Series.from_poly(Poly((0, -1)), N) * one_minus_t.invert_mul()
        return _Realization(A, Hx, None, None)
    if fam == LAGUERRE_EQ11:
        a = p["alpha"]
        A = one_minus_t.pow_rat(-(a + 1))
        Hx = (Series.from_poly(Poly((0, -2, 1)), N) * Fraction(1, 2)
              * Series.from_poly(Poly((1, -2, 1)), N).invert_mul())
        return _Realization(A, Hx, None, None)
    if fam == HERMITE_EQ12:
        A = Series.from_poly(_aux_tilde(spec), N).exp()
        return _Realization(A, Series.identity(N), None, None)
    if fam == CHARLIER_EQ13:
        omega = p["omega"]
        A = Series.from_poly(_aux_tilde(spec), N).exp()
        Hx = Series.from_poly(Poly((1, omega)), N).log() * (1 / omega)
        return _Realization(A, Hx, Series.identity(N), omega)
    if fam == MEIXNER_EQ14:
        c, beta = p["c"], p["beta"]
        A = Series.from_poly(_aux_tilde(spec), N).exp() * one_minus_t.pow_rat(-beta)
        newton = Series.from_poly(Poly((0, (c - 1) / c)), N) * one_minus_t.invert_mul()
        return _Realization(A, (1 + newton).log(), newton, Fraction(1))
    if fam == MEIXNER_EQ16:
        c, beta = p["c"], p["beta"]
        A = one_minus_t.pow_rat(-beta * d)
        newton = (one_minus_t.pow_rat(-d) - 1) * ((c - 1) / (d * c))
        return _Realization(A, (1 + newton).log(), newton, Fraction(1))
    if fam == MEIXNER_EQ21:
        c, beta = p["c"], p["beta"]
        A = Series.from_poly(_aux_tilde(spec), N).exp() * one_minus_t.pow_rat(-beta)
        newton = (Series.from_poly(Poly((0, -2, 1)), N) * ((c - 1) / (2 * c))
                  * Series.from_poly(Poly((1, -2, 1)), N).invert_mul())
        return _Realization(A, (1 + newton).log(), newton, Fraction(1))
    raise InvalidParameterError(f"unknown family: {fam!r}")  # pragma: no cover


def family_generating(spec: FamilySpec, N: int) -> ShefferPair:
    """The closed-form generating pair, truncated at order N."""
    r = _realize(spec, N)
    return ShefferPair(A=r.A, Hx=r.Hx)


def family_lowering(spec: FamilySpec, N: int) -> LoweringOp:
    """The family's native lowering operator at truncation order N.

    Continuous families revert H itself (derivative kind); Newton-form
    families revert the H inside (1 + omega H)^(x/omega) and act through the
    forward difference of step omega.
    """
    r = _realize(spec, N)
    if r.newton_H is None:
        return lowering_from_H(r.Hx, DERIVATIVE, N)
    return lowering_from_H(r.newton_H, DIFFERENCE, N, omega=r.omega)


def family_functionals(spec: FamilySpec, N: int) -> FunctionalVector:
    """Functional vector built from the family's own A and lowering operator."""
    r = _realize(spec, N)
    if r.newton_H is None:
        lop = lowering_from_H(r.Hx, DERIVATIVE, N)
    else:
        lop = lowering_from_H(r.newton_H, DIFFERENCE, N, omega=r.omega)
    return FunctionalVector(A=r.A, lop=lop, d=spec.d)


def laguerre2_functionals(alpha: Fraction, i: int, f: Poly) -> Fraction:
    """Closed-form functionals of the 2-orthogonal Laguerre-type family.

    <u_i, f> = sum_{r=0}^{i} C(i,r) (-1)^r sum_k ((alpha+r+1)/2)_k 2^k f^(k)(0) / k!

    The derivative series terminates at deg f, so the value is exact.  The
    rewriting behind it is certified in the tests by the duplication identity
    (alpha+1)_{2k} = 4^k ((alpha+1)/2)_k ((alpha+2)/2)_k.
    """
    alpha = Fraction(alpha)
    if alpha == -1:
        raise InvalidParameterError("alpha = -1 is excluded")
    if not 0 <= i <= 1:
        raise IndexError(f"functional index {i} out of range for d=2")
    deg = f.degree()
    if deg is None:
        return Fraction(0)
    derivs = []
    g = f
    for _ in range(deg + 1):
        derivs.append(g(Fraction(0)))
        g = g.derivative()
    total = Fraction(0)
    for r in range(i + 1):
        part = Fraction(0)
        pw = Fraction(1)  # 2^k / k!
        for k in range(deg + 1):
            part += pochhammer(Fraction(alpha + r + 1, 2), k) * pw * derivs[k]
            pw = pw * 2 / (k + 1)
        total += binomial(i, r) * (-1) ** r * part
    return total / factorial(i)


def _meixner_weight_ratio(d: int, c: Fraction) -> Fraction:
    # w = dc / (1 + c(d-1)); the defining node series converges iff |w| < 1
    denom = 1 + c * (d - 1)
    if denom == 0:
        raise InvalidParameterError(f"c = {c} must avoid 1/(1-d)")
    return d * c / denom


def _meixner_gates(d: int, c: Fraction, beta: Fraction, r: int) -> Fraction:
    if d < 1:
        raise InvalidParameterError(f"d must be >= 1, got {d}")
    if c in (0, 1):
        raise InvalidParameterError(f"c = {c} must avoid 0 and 1")
    if not 0 <= r < d:
        raise IndexError(f"functional index {r} out of range for d={d}")
    w = _meixner_weight_ratio(d, Fraction(c))
    if abs(w) >= 1:
        raise DivergentParameterError(
            f"node series diverges: |dc/(1 + c(d-1))| = {abs(w)} >= 1"
        )
    return w


def meixner_functional_exact(d: int, c: Fraction, beta: Fraction,
                             r: int, f: Poly) -> Fraction:
    """Exact <u_r, f> for the Meixner-type family, via the Stirling transform.

    The defining value is (1/r!) sum_i C(r,i)(-1)^i times a series over
    integer nodes j; expanding f(j) in falling factorials collapses each node
    series to the finite sum over k of S(m,k) (beta+i/d)_k w^k (1-w)^(-k)
    with w = dc/(1 + c(d-1)), using (1 - dc/(c-1)) (1 - w) = 1.  Demands
    |w| < 1, where the node series converges.
    """
    c = Fraction(c)
    beta = Fraction(beta)
    w = _meixner_gates(d, c, beta, r)
    z = w / (1 - w)
    deg = f.degree()
    if deg is None:
        return Fraction(0)
    total = Fraction(0)
    for i in range(r + 1):
        b = beta + Fraction(i, d)
        part = Fraction(0)
        for m, fm in enumerate(f.coeffs):
            if fm == 0:
                continue
            s = Fraction(0)
            for k in range(m + 1):
                s2 = stirling2(m, k)
                if s2:
                    s += s2 * pochhammer(b, k) * z ** k
            part += fm * s
        total += binomial(r, i) * (-1) ** i * part
    return total / factorial(r)


def _to_mpf(x: Fraction):
    return mpf(x.numerator) / mpf(x.denominator)


def meixner_functional_numeric(d: int, c: Fraction, beta: Fraction,
                               r: int, f: Poly, dps: int = 40):
    """High-precision <u_r, f> for the Meixner-type family, summed verbatim.

    Partial sums of the defining node series, cut off once the term ratio is
    provably below q = (1+|w|)/2 and the geometric tail bound drops under the
    working tolerance.  Returns an mpmath float.
    """
    c = Fraction(c)
    beta = Fraction(beta)
    w = _meixner_gates(d, c, beta, r)
    deg = f.degree()
    if deg is None:
        return mpf(0)
    abs_f = Poly(tuple(abs(fc) for fc in f.coeffs))
    with mp.workdps(dps):
        z = _to_mpf(d * c / (1 - c))
        big_m = _to_mpf(1 - d * c / (c - 1))
        w_abs = abs(_to_mpf(w))
        q = (1 + w_abs) / 2
        tol = mpf(10) ** (-(dps - 8))
        total = mpf(0)
        for i in range(r + 1):
            b = beta + Fraction(i, d)
            b_mp = _to_mpf(b)
            base = mp.power(big_m, -b_mp)   # (b)_j z^j / (M^(b+j) j!) at j = 0
            inner = mpf(0)
            j = 0
            while True:
                inner += base * _to_mpf(f(Fraction(j)))
                nxt = base * (b_mp + j) * z / (big_m * (j + 1))
                ratio_bound = (w_abs * (1 + (abs(b_mp) + 1) / (j + 1))
                               * ((j + 2) / (j + 1)) ** deg)
                tail_bound = abs(nxt) * _to_mpf(abs_f(Fraction(j + 1))) / (1 - q)
                if j > deg and ratio_bound <= q and tail_bound < tol * (1 + abs(inner)):
                    break
                base = nxt
                j += 1
                if j > 100000:  # pragma: no cover
                    raise RuntimeError("node series failed to converge numerically")
            total += binomial(r, i) * (-1) ** i * inner
        return total / factorial(r)


def meixner_classical_functional(c: Fraction, beta: Fraction, f: Poly) -> Fraction:
    """Exact classical Meixner functional (1-c)^beta sum_j (beta)_j c^j f(j)/j!.

    Evaluated through the same falling-factorial collapse, which for d = 1
    leaves sum_k S(m,k) (beta)_k (c/(1-c))^k.  Requires 0 < c < 1.
    """
    c = Fraction(c)
    beta = Fraction(beta)
    if not 0 < c < 1:
        raise InvalidParameterError(f"c = {c} must lie strictly between 0 and 1")
    deg = f.degree()
    if deg is None:
        return Fraction(0)
    z = c / (1 - c)
    total = Fraction(0)
    for m, fm in enumerate(f.coeffs):
        if fm == 0:
            continue
        s = Fraction(0)
        for k in range(m + 1):
            s2 = stirling2(m, k)
            if s2:
                s += s2 * pochhammer(beta, k) * z ** k
        total += fm * s
    return total


def explicit_functional(spec: FamilySpec):
    """Closed-form evaluator for families that have one, or None.

    Returns (label, eval_fn) with eval_fn(i, f) -> Fraction, for use as an
    independent cross-check against the operator-series route.
    """
    p = spec.params
    if spec.family == LAGUERRE_EQ11:
        alpha = p["alpha"]
        return ("laguerre2-series", lambda i, f: laguerre2_functionals(alpha, i, f))
    if spec.family == MEIXNER_EQ16:
        c, beta = p["c"], p["beta"]
        if abs(_meixner_weight_ratio(spec.d, c)) < 1:
            return (
                "meixner-node-series",
                lambda i, f: meixner_functional_exact(spec.d, c, beta, i, f),
            )
        return None
    if spec.family == MEIXNER_EQ14 and spec.d == 1:
        c, beta = p["c"], p["beta"]
        if 0 < c < 1:
            return (
                "meixner-classical",
                lambda i, f: meixner_classical_functional(c, beta, f),
            )
    return None


def default_spec(family: str, d: int) -> FamilySpec:
    """The documented default parameter sample for a family at a given d."""
    info = FAMILIES[family]
    params = {}
    if "alpha" in info.params:
        params["alpha"] = Fraction(1, 2)
    if "beta" in info.params:
        params["beta"] = Fraction(1)
    if "c" in info.params:
        params["c"] = Fraction(1, 2)
    if "omega" in info.params:
        params["omega"] = Fraction(1)
    aux = None
    if info.aux_len is not None:
        aux = tuple(Fraction(1) for _ in range(info.aux_len(d)))
    return FamilySpec(family=family, d=d, params=params, aux=aux)


def default_sample_specs() -> tuple[FamilySpec, ...]:
    """One valid default FamilySpec per family and applicable d in {1, 2, 3}."""
    out = []
    for family, info in FAMILIES.items():
        if info.d_fixed is not None:
            ds = (info.d_fixed,)
        else:
            ds = tuple(d for d in (1, 2, 3) if d >= info.d_min)
        for d in ds:
            out.append(default_spec(family, d))
    return tuple(out)
