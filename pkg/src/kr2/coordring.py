"""The coordinate ring C[X] = C[x,y,z,t]/(P) of a second-kind threefold.

Here ``P = x + y*f^l + t^a3`` with ``f = x^d + z^a2``. Elements are kept in
y-adic normal form ``sum_i p_i(x,z,t) * y^i`` where every ``p_i`` with
``i >= 1`` is reduced modulo ``f^l`` (no monomial divisible by the grlex
leading monomial of ``f^l``). Each reduction step trades ``q*f^l*y^i`` for
``-q*(x + t^a3)*y^(i-1)``, which is the defining relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Sequence

from .polynomials import Poly, T, X, Z, NotDivisible

__all__ = [
    "ConstraintViolation",
    "IMembership",
    "JMembership",
    "RingElement",
    "ThreefoldParams",
    "ideal_I_membership",
    "ideal_J_membership",
    "make_params",
    "normal_form",
    "ring_eq",
]


class ConstraintViolation(ValueError):
    """Parameters outside the second-kind family."""


@dataclass(frozen=True)
class ThreefoldParams:
    d: int
    l: int
    a2: int
    a3: int

    def __post_init__(self):
        d, l, a2, a3 = self.d, self.l, self.a2, self.a3
        if d < 2:
            raise ConstraintViolation(f"d >= 2 violated (d = {d})")
        if l < 1:
            raise ConstraintViolation(f"l >= 1 violated (l = {l})")
        if a2 < 2:
            raise ConstraintViolation(f"a2 >= 2 violated (a2 = {a2})")
        if a2 > a3:
            raise ConstraintViolation(f"a2 <= a3 violated (a2 = {a2}, a3 = {a3})")
        if gcd(a2, d) != 1:
            raise ConstraintViolation(f"gcd(a2, d) = 1 violated (gcd = {gcd(a2, d)})")
        if gcd(a2, a3) != 1:
            raise ConstraintViolation(f"gcd(a2, a3) = 1 violated (gcd = {gcd(a2, a3)})")

    def __str__(self):
        return f"(d={self.d}, l={self.l}, a2={self.a2}, a3={self.a3})"

    @cached_property
    def f(self) -> Poly:
        return X ** self.d + Z ** self.a2

    @cached_property
    def f_l(self) -> Poly:
        return self.f ** self.l

    @cached_property
    def x_plus_t(self) -> Poly:
        """The generator x + t^a3 of the relation side of I."""
        return X + T ** self.a3

    @cached_property
    def P(self) -> Poly:
        return defining_poly(self)

    @property
    def weights(self) -> tuple[int, int, int, int]:
        """Torus weights of (x, y, z, t)."""
        d, l, a2, a3 = self.d, self.l, self.a2, self.a3
        return (a2 * a3, -(d * l - 1) * a2 * a3, d * a3, a2)

    @property
    def cocycle_exponent(self) -> int:
        """K = a2*(d*l*a3 - 1), the torus twist on the additive part."""
        return self.a2 * (self.d * self.l * self.a3 - 1)


def make_params(d: int, l: int, a2: int, a3: int) -> ThreefoldParams:
    return ThreefoldParams(int(d), int(l), int(a2), int(a3))


def defining_poly(params: ThreefoldParams) -> Poly:
    return X + Poly.var("y") * params.f_l + T ** params.a3


@dataclass(frozen=True)
class RingElement:
    """Normal-form element of C[X]; ``coeffs[i]`` multiplies ``y**i``."""

    params: ThreefoldParams
    coeffs: tuple[Poly, ...] = field(default=())

    def to_poly(self) -> Poly:
        return Poly.from_coefficients(self.coeffs, "y")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.params == other.params and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.params, self.coeffs))

    def __str__(self):
        return str(self.to_poly())

    def to_json(self) -> dict:
        return {"y_coeffs": [str(c) for c in self.coeffs]}


def _pruned(coeffs: list[Poly]) -> tuple[Poly, ...]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def _reduce_top_down(coeffs: list[Poly], params: ThreefoldParams) -> list[Poly]:
    fl, rel = params.f_l, params.x_plus_t
    for i in range(len(coeffs) - 1, 0, -1):
        q, r = coeffs[i].divmod(fl)
        coeffs[i] = r
        if q:
            coeffs[i - 1] = coeffs[i - 1] - q * rel
    return coeffs


def _reduce_bottom_up(coeffs: list[Poly], params: ThreefoldParams) -> list[Poly]:
    fl, rel = params.f_l, params.x_plus_t
    changed = True
    while changed:
        changed = False
        for i in range(1, len(coeffs)):
            q, r = coeffs[i].divmod(fl)
            if q:
                coeffs[i] = r
                coeffs[i - 1] = coeffs[i - 1] - q * rel
                changed = True
    return coeffs


def normal_form(g, params: ThreefoldParams, strategy: str = "top-down") -> RingElement:
    """Canonical representative of ``g`` (a Poly or RingElement) in C[X].

    ``strategy`` picks the order in which rewrite positions are visited;
    both orders reach the same result.
    """
    if isinstance(g, RingElement):
        g = g.to_poly()
    coeffs = g.coefficients_in("y")
    if strategy == "top-down":
        coeffs = _reduce_top_down(coeffs, params)
    elif strategy == "bottom-up":
        coeffs = _reduce_bottom_up(coeffs, params)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return RingElement(params, _pruned(coeffs))


def ring_eq(g, h, params: ThreefoldParams) -> bool:
    if isinstance(g, RingElement):
        g = g.to_poly()
    if isinstance(h, RingElement):
        h = h.to_poly()
    return normal_form(g - h, params).is_zero()


@dataclass(frozen=True)
class IMembership:
    """Outcome of an I-membership test; on success ``Q == A*f^l + B*(x+t^a3)``."""

    member: bool
    A: Poly | None = None
    B: Poly | None = None

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class JMembership:
    member: bool
    witness: Poly | None = None

    def __bool__(self):
        return self.member


def ideal_I_membership(Q: Poly, params: ThreefoldParams) -> IMembership:
    """Decide ``Q in (f^l, x + t^a3)`` inside C[x,z,t].

    Modulo ``x + t^a3`` the ring C[x,z,t] becomes C[z,t] via x -> -t^a3, so
    membership is exact divisibility of the image by the image of ``f^l``.
    The certificate is rebuilt from the two quotients.
    """
    if Q.involves("y"):
        raise ValueError("I-membership expects a polynomial in x, z, t")
    fl, rel = params.f_l, params.x_plus_t
    collapse = {"x": -(T ** params.a3), "z": Z, "t": T}
    Q_bar = Q.substitute(collapse)
    fl_bar = fl.substitute(collapse)
    try:
        A = Q_bar.exact_div(fl_bar)
    except NotDivisible:
        return IMembership(False)
    # Q - Q_bar and f^l - fl_bar both vanish at x = -t^a3
    B = (Q - Q_bar).exact_div(rel) - A * (fl - fl_bar).exact_div(rel)
    return IMembership(True, A, B)


def ideal_J_membership(g: Poly, params: ThreefoldParams) -> JMembership:
    """Decide whether ``g`` lies in ``f^l * C[X]``.

    The preimage of ``f^l * C[X]`` in C[x,y,z,t] is ``(f^l, P)``, and since
    ``P - y*f^l = x + t^a3`` this equals ``I * C[x,z,t][y]``. So ``g`` is a
    member iff every y-coefficient of its normal form lies in I. From
    certificates ``p_i = A_i*f^l + B_i*(x+t^a3)`` the witness is
    ``h = sum_i (A_i - B_i*y) * y^i``.
    """
    nf = normal_form(g, params)
    y = Poly.var("y")
    parts = []
    for i, p in enumerate(nf.coeffs):
        cert = ideal_I_membership(p, params)
        if not cert:
            return JMembership(False)
        parts.append((cert.A - cert.B * y) * y ** i)
    witness = sum(parts, Poly())
    return JMembership(True, normal_form(witness, params).to_poly())


def from_coeffs(params: ThreefoldParams, coeffs: Sequence[Poly]) -> RingElement:
    """Normalize an explicit y-coefficient list."""
    return normal_form(Poly.from_coefficients(coeffs, "y"), params)
