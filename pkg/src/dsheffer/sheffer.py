"""Couples of polynomials, Sheffer generating pairs, and their expansions.

A d-orthogonal Sheffer set is determined by a couple (gamma, sigma): gamma of
degree exactly d, sigma of degree at most d+1, through

    A(t)    = exp( integral_0^t gamma/sigma )
    H(t)    = integral_0^t 1/sigma
    G(x, t) = A(t) exp(x H(t)) = sum_n P_n(x) t^n / n!

subject to the regularity conditions alpha_0 != 0 and
n*alpha_{d+1} - beta_d != 0 for n >= 1 (beta_d, alpha_0, alpha_{d+1} being
the leading/constant coefficients involved).  Everything here works over a
fixed truncation order with exact rationals, so the inverse direction
(recovering the couple from a pair) can certify "polynomial of the right
degree" by checking that every higher series coefficient vanishes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dsheffer.exactnum import parse_rational
from dsheffer.series import Poly, Series


class InvalidCoupleError(ValueError):
    """A couple violates a value-level restriction (beta_d = 0, alpha_0 = 0)."""


class NotDOrthogonalShefferError(ValueError):
    """The given pair does not come from any degree-(d, d+1) couple."""


class CoupleFileError(ValueError):
    """A couple document is structurally malformed."""


def _coerce_coeffs(values, name: str, length: int) -> tuple[Fraction, ...]:
    out = [Fraction(v) for v in values]
    if len(out) > length:
        extra = out[length:]
        if any(extra):
            raise ValueError(
                f"{name} has {len(out)} coefficients; at most {length} allowed"
            )
        out = out[:length]
    out.extend([Fraction(0)] * (length - len(out)))
    return tuple(out)


@dataclass(frozen=True)
class CoupleSpec:
    """Couple (gamma, sigma) for a claimed d; trailing zeros are padded.

    Value-level restrictions (beta_d != 0, alpha_0 != 0) are deliberately not
    enforced at construction: check_conditions must be able to report on
    broken couples.  pair_from_couple enforces them.
    """

    d: int
    gamma: tuple[Fraction, ...]
    sigma: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        object.__setattr__(self, "gamma", _coerce_coeffs(self.gamma, "gamma", self.d + 1))
        object.__setattr__(self, "sigma", _coerce_coeffs(self.sigma, "sigma", self.d + 2))

    @property
    def beta_d(self) -> Fraction:
        return self.gamma[self.d]

    @property
    def alpha_0(self) -> Fraction:
        return self.sigma[0]

    @property
    def alpha_top(self) -> Fraction:
        return self.sigma[self.d + 1]

    def validate(self):
        if self.beta_d == 0:
            raise InvalidCoupleError(
                f"gamma must have degree exactly d={self.d} (leading coefficient is 0)"
            )
        if self.alpha_0 == 0:
            raise InvalidCoupleError("sigma must have a nonzero constant term")

    def to_jsonable(self) -> dict:
        return {
            "d": self.d,
            "gamma": [str(c) for c in self.gamma],
            "sigma": [str(c) for c in self.sigma],
        }


def couple_from_json_dict(obj) -> CoupleSpec:
    """Build a CoupleSpec from a parsed JSON document.

    Coefficients are "p/q" strings or integers; decimals are rejected.
    """
    if not isinstance(obj, dict):
        raise CoupleFileError("couple document must be a JSON object")
    try:
        d = obj["d"]
        gamma = obj["gamma"]
        sigma = obj["sigma"]
    except KeyError as exc:
        raise CoupleFileError(f"couple document is missing key {exc.args[0]!r}") from None
    if not isinstance(d, int) or isinstance(d, bool):
        raise CoupleFileError("'d' must be an integer")
    if not isinstance(gamma, list) or not isinstance(sigma, list):
        raise CoupleFileError("'gamma' and 'sigma' must be arrays")

    def conv(values, name):
        out = []
        for v in values:
            if isinstance(v, bool) or isinstance(v, float):
                raise CoupleFileError(f"{name}: coefficients must be exact ('p/q' strings)")
            if isinstance(v, int):
                out.append(Fraction(v))
            elif isinstance(v, str):
                try:
                    out.append(parse_rational(v))
                except ValueError as exc:
                    raise CoupleFileError(f"{name}: {exc}") from None
            else:
                raise CoupleFileError(f"{name}: coefficients must be exact ('p/q' strings)")
        return out

    g = conv(gamma, "gamma")
    s = conv(sigma, "sigma")
    try:
        return CoupleSpec(d=d, gamma=tuple(g), sigma=tuple(s))
    except ValueError as exc:
        raise CoupleFileError(str(exc)) from None


@dataclass(frozen=True)
class ShefferPair:
    """Generating pair (A, H) with A(0) = 1, H(0) = 0, H'(0) != 0."""

    A: Series
    Hx: Series

    def __post_init__(self):
        if self.A.order != self.Hx.order:
            raise ValueError("A and H must share a truncation order")
        if self.Hx.order < 1:
            raise ValueError("pair order must be at least 1")
        if self.A.coeffs[0] != 1:
            raise ValueError("A(0) must be 1")
        if self.Hx.coeffs[0] != 0:
            raise ValueError("H(0) must be 0")
        if self.Hx.coeffs[1] == 0:
            raise ValueError("H'(0) must be nonzero")

    @property
    def order(self) -> int:
        return self.A.order


@dataclass(frozen=True)
class PolySequence:
    """P_0..P_N with deg P_n = n and P_0 = 1."""

    polys: tuple[Poly, ...]

    def __post_init__(self):
        if not self.polys:
            raise ValueError("empty polynomial sequence")
        if self.polys[0] != Poly.one():
            raise ValueError("P_0 must be 1")
        for n, p in enumerate(self.polys):
            if p.degree() != n:
                raise ValueError(f"P_{n} must have degree exactly {n}")

    @property
    def max_index(self) -> int:
        return len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __iter__(self):
        return iter(self.polys)


def check_conditions(couple: CoupleSpec, N: int):
    """Evaluate the regularity conditions for n = 1..N without raising.

    Returns a ConditionReport; a couple that fails (even structurally, with
    alpha_0 = 0 or beta_d = 0) yields a failing report rather than an error.
    """
    entries = []
    failures = []
    for n in range(1, N + 1):
        value = n * couple.alpha_top - couple.beta_d
        ok = value != 0
        if not ok:
            failures.append(n)
        entries.append((n, value, ok))
    return ConditionReport(
        d=couple.d,
        alpha_0=couple.alpha_0,
        beta_d=couple.beta_d,
        alpha_top=couple.alpha_top,
        entries=tuple(entries),
        failures=tuple(failures),
        passed=(couple.alpha_0 != 0 and couple.beta_d != 0 and not failures),
    )


@dataclass(frozen=True)
class ConditionReport:
    d: int
    alpha_0: Fraction
    beta_d: Fraction
    alpha_top: Fraction
    entries: tuple
    failures: tuple
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "d": self.d,
            "alpha_0": str(self.alpha_0),
            "beta_d": str(self.beta_d),
            "alpha_top": str(self.alpha_top),
            "checked_n": len(self.entries),
            "failures": [
                {"n": n, "value": str(v)} for n, v, ok in self.entries if not ok
            ],
            "alpha_0_nonzero": self.alpha_0 != 0,
            "beta_d_nonzero": self.beta_d != 0,
        }


def pair_from_couple(couple: CoupleSpec, N: int) -> ShefferPair:
    """Integrate the couple into its generating pair at truncation order N."""
    if N < 1:
        raise ValueError("order must be at least 1")
    couple.validate()
    sigma = Series.from_poly(Poly(couple.sigma), N)
    gamma = Series.from_poly(Poly(couple.gamma), N)
    inv_sigma = sigma.invert_mul()
    hx = inv_sigma.integrate()
    a = (gamma * inv_sigma).integrate().exp()
    return ShefferPair(A=a, Hx=hx)


def expand_polynomials(pair: ShefferPair, N: int) -> PolySequence:
    """Expand A(t) exp(x H(t)) into P_0..P_N (with the n! normalization)."""
    if pair.order < N:
        raise ValueError(f"pair order {pair.order} too small for expansion order {N}")
    a = pair.A.truncate(N)
    hx = pair.Hx.truncate(N)
    x_h = Series(tuple(Poly((0, c)) for c in hx.coeffs))
    lifted_a = Series(tuple(Poly.constant(c) for c in a.coeffs))
    g = lifted_a * x_h.exp()
    polys = []
    fact = 1
    for n, c in enumerate(g.coeffs):
        if n:
            fact *= n
        polys.append(c * fact)
    return PolySequence(tuple(polys))


def couple_from_pair(pair: ShefferPair, d: int) -> CoupleSpec:
    """Recover the couple from a pair, certifying the degree bounds.

    1/H' must be a polynomial of degree <= d+1 and A'/(A H') a polynomial of
    degree exactly d; any nonzero coefficient beyond those bounds (checkable
    because the arithmetic is exact) means the pair is not a d-orthogonal
    Sheffer pair.  The truncation order must exceed 2(d+1) so that the
    vanishing checks see a meaningful stretch of coefficients.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    N = pair.order
    if N <= 2 * (d + 1):
        raise ValueError(
            f"pair order {N} too small to certify degrees for d={d}; need order > {2 * (d + 1)}"
        )
    hp = pair.Hx.differentiate()           # order N-1, exact
    sigma = hp.invert_mul()
    for k in range(d + 2, sigma.order + 1):
        if sigma.coeffs[k] != 0:
            raise NotDOrthogonalShefferError(
                f"1/H' has a nonzero t^{k} coefficient ({sigma.coeffs[k]}); "
                f"not a polynomial of degree <= {d + 1}"
            )
    inv_a = pair.A.truncate(N - 1).invert_mul()
    gamma = pair.A.differentiate() * inv_a * sigma
    for k in range(d + 1, gamma.order + 1):
        if gamma.coeffs[k] != 0:
            raise NotDOrthogonalShefferError(
                f"A'/(A H') has a nonzero t^{k} coefficient ({gamma.coeffs[k]}); "
                f"not a polynomial of degree <= {d}"
            )
    if gamma.coeffs[d] == 0:
        raise NotDOrthogonalShefferError(
            f"A'/(A H') has degree < {d}; the set is not exactly d-orthogonal for d={d}"
        )
    return CoupleSpec(
        d=d,
        gamma=tuple(gamma.coeffs[: d + 1]),
        sigma=tuple(sigma.coeffs[: d + 2]),
    )
