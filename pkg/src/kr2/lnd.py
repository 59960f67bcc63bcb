"""The locally nilpotent derivation of C[X] and its exponentials.

The canonical derivation kills x and z and acts by

    d(y) = a3 * t^(a3 - 1),    d(t) = -f^l.

Every other one is ``q(x,z) * d``; a :class:`Derivation` stores only ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .coordring import RingElement, ThreefoldParams, normal_form
from .polynomials import VARS, Poly, T

__all__ = [
    "CapExceeded",
    "Derivation",
    "apply",
    "exp_apply",
    "exp_images",
    "exp_lnd",
    "iterate",
    "jacobian_check",
    "jacobian_derivation",
    "nilpotency_index",
]


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Derivation:
    params: ThreefoldParams
    q: Poly = field(default_factory=lambda: Poly.const(1))

    def __post_init__(self):
        if self.q.involves("y", "t"):
            raise ValueError(f"multiplier must lie in C[x,z], got {self.q}")

    def on_poly(self, g: Poly) -> Poly:
        """Leibniz extension to a polynomial representative (not normalized)."""
        p = self.params
        dy = T ** (p.a3 - 1) * p.a3
        raw = g.diff("y") * dy - g.diff("t") * p.f_l
        return raw * self.q


def _as_poly(g) -> Poly:
    return g.to_poly() if isinstance(g, RingElement) else g


def apply(D: Derivation, g) -> RingElement:
    return normal_form(D.on_poly(_as_poly(g)), D.params)


def iterate(D: Derivation, g, k: int) -> RingElement:
    cur = normal_form(_as_poly(g), D.params)
    for _ in range(k):
        if cur.is_zero():
            break
        cur = apply(D, cur)
    return cur


def jacobian_derivation(params: ThreefoldParams, g: Poly) -> Poly:
    """g -> dP/dt * dg/dy - dP/dy * dg/dt.

    With rows (dP/dy, dg/dy) and (dP/dt, dg/dt) the plain 2x2 determinant is
    the negative of the canonical derivation; this is that determinant with
    the rows swapped.
    """
    P = params.P
    return P.diff("t") * g.diff("y") - P.diff("y") * g.diff("t")


def jacobian_check(params: ThreefoldParams) -> bool:
    D = Derivation(params)
    for v in VARS:
        g = Poly.var(v)
        if normal_form(jacobian_derivation(params, g), params) != apply(D, g):
            return False
    return True


def _default_cap(params: ThreefoldParams, g: Poly) -> int:
    # deg t = 1, deg y = a3 is a degree function for the derivation
    if g.is_zero():
        return 1
    top = max(m[3] + params.a3 * m[1] for m, _ in g.items())
    return top + params.a3 + 4


def nilpotency_index(D: Derivation, g, cap: int | None = None) -> int:
    """Smallest n with D^n(g) = 0."""
    cur = normal_form(_as_poly(g), D.params)
    if cap is None:
        cap = _default_cap(D.params, cur.to_poly())
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = 0
    while not cur.is_zero():
        if n >= cap:
            raise CapExceeded(f"D^{cap}(g) is still nonzero")
        cur = apply(D, cur)
        n += 1
    return n


def exp_apply(D: Derivation, g) -> RingElement:
    """exp(D)(g) = sum_k D^k(g)/k!, a finite sum by local nilpotency."""
    params = D.params
    cur = normal_form(_as_poly(g), params)
    total = Poly()
    k = 0
    while not cur.is_zero():
        total = total + cur.to_poly() * Fraction(1, factorial(k))
        cur = apply(D, cur)
        k += 1
    return normal_form(total, params)


def exp_images(D: Derivation) -> dict[str, Poly]:
    """Images of x, y, z, t under exp(D), as normal-form polynomials."""
    return {v: exp_apply(D, Poly.var(v)).to_poly() for v in VARS}


def exp_lnd(D: Derivation):
    """The group element of exp(q*d): it sends t to t + f^l*(-q)."""
    from .autgroup import Automorphism

    return Automorphism(D.params, -D.q, Fraction(1))
