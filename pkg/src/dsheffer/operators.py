"""Lowering operators and the moment functionals built from them.

For a pair (A, H) the lowering operator is sigma = H*(B), where H* is the
compositional inverse of H and B is the base operator: d/dx for sets written
as A(t) exp(x H(t)), or the forward difference of step omega for sets written
in the Newton form A(t) (1 + omega H(t))^(x/omega).  Both base operators
strictly lower degree, so operator series act on polynomials as finite sums.

The functional vector (u_0, ..., u_{d-1}) dual to the sequence is

    <u_i, f> = (1/i!) [ sigma^i / A(sigma) f(x) ]_{x=0}

and is evaluated by assembling t^i / A(t) composed with H* into a single
operator series in B, then applying it once.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from dsheffer.series import Poly, Series

DERIVATIVE = "derivative"
DIFFERENCE = "difference"


def apply_base(kind: str, f: Poly, omega: Fraction | None = None) -> Poly:
    """Apply the base operator: f' or (f(x + omega) - f(x)) / omega."""
    if kind == DERIVATIVE:
        return f.derivative()
    if kind == DIFFERENCE:
        if omega is None or omega == 0:
            raise ValueError("difference operator needs a nonzero step omega")
        return (f.shift(omega) - f) * (Fraction(1) / Fraction(omega))
    raise ValueError(f"unknown base operator kind: {kind!r}")


class LoweringOp:
    """Operator series H*(B) with H*(0) = 0 and a nonzero linear term."""

    __slots__ = ("kind", "hstar", "omega")

    def __init__(self, kind: str, hstar: Series, omega: Fraction | None = None):
        if kind not in (DERIVATIVE, DIFFERENCE):
            raise ValueError(f"unknown base operator kind: {kind!r}")
        if kind == DIFFERENCE:
            if omega is None or Fraction(omega) == 0:
                raise ValueError("difference kind needs a nonzero step omega")
            omega = Fraction(omega)
        else:
            if omega is not None:
                raise ValueError("derivative kind takes no step")
        if hstar.coeffs[0] != 0:
            raise ValueError("hstar must have zero constant term")
        if hstar.order < 1 or hstar.coeffs[1] == 0:
            raise ValueError("hstar must have a nonzero linear coefficient")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "hstar", hstar)
        object.__setattr__(self, "omega", omega)

    def __setattr__(self, name, value):
        raise AttributeError("LoweringOp is immutable")

    def __repr__(self) -> str:
        step = "" if self.omega is None else f", omega={self.omega}"
        return f"LoweringOp({self.kind}{step}, order={self.hstar.order})"

    def apply_base(self, f: Poly) -> Poly:
        return apply_base(self.kind, f, self.omega)


def lowering_from_H(H: Series, kind: str, N: int | None = None,
                    omega: Fraction | None = None) -> LoweringOp:
    """Revert H and wrap it as an operator series at truncation order N."""
    if N is None:
        N = H.order
    return LoweringOp(kind=kind, hstar=H.truncate(N).reversion(), omega=omega)


def apply_lowering(op: LoweringOp, f: Poly) -> Poly:
    """Apply sigma = H*(B) to a polynomial (finite because B lowers degree)."""
    deg = f.degree()
    if deg is None:
        return Poly.zero()
    if op.hstar.order < deg:
        raise ValueError(
            f"operator order {op.hstar.order} too small for degree {deg}"
        )
    out = Poly.zero()
    g = f
    for k in range(1, deg + 1):
        g = op.apply_base(g)
        if g.is_zero():
            break
        out = out + g * op.hstar.coeffs[k]
    return out


class FunctionalVector:
    """The d moment functionals of a pair, ready for exact evaluation.

    The operator series t^i (1/A(t)) composed with H* is precomputed per
    index at construction, so evaluations share work and the object stays
    immutable afterwards.
    """

    __slots__ = ("A", "lop", "d", "_ops")

    def __init__(self, A: Series, lop: LoweringOp, d: int):
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        if A.coeffs[0] == 0:
            raise ValueError("A(0) must be nonzero")
        order = min(A.order, lop.hstar.order)
        if d - 1 > order:
            raise ValueError(f"order {order} too small for d={d}")
        a = A.truncate(order)
        hstar = lop.hstar.truncate(order)
        inv_a = a.invert_mul()
        ops = []
        for i in range(d):
            u = Series.monomial(i, order) * inv_a if i else inv_a
            ops.append(u.compose(hstar))
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "lop", LoweringOp(lop.kind, hstar, lop.omega))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_ops", tuple(ops))

    def __setattr__(self, name, value):
        raise AttributeError("FunctionalVector is immutable")

    @property
    def order(self) -> int:
        return self.A.order

    def __repr__(self) -> str:
        return f"FunctionalVector(d={self.d}, kind={self.lop.kind}, order={self.order})"


def functional_eval(v: FunctionalVector, i: int, f: Poly) -> Fraction:
    """Exact <u_i, f>; the polynomial degree must fit the built order."""
    if not 0 <= i < v.d:
        raise IndexError(f"functional index {i} out of range for d={v.d}")
    deg = f.degree()
    if deg is None:
        return Fraction(0)
    if deg > v.order:
        raise ValueError(
            f"functional order {v.order} too small for polynomial degree {deg}"
        )
    w = v._ops[i]
    total = w.coeffs[0] * f(Fraction(0))
    g = f
    for k in range(1, deg + 1):
        g = v.lop.apply_base(g)
        if g.is_zero():
            break
        total += w.coeffs[k] * g(Fraction(0))
    return total / factorial(i)
