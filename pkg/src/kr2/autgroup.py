"""Aut(X) as the semidirect product of (C[x,z], +) by the torus G_m.

An element ``(p, mu)`` is the ring map ``phi_p o sigma_mu``: first the
torus scaling sigma_mu, then the additive map phi_p with

    x -> x,  z -> z,  t -> t + f^l * p(x,z),  y -> y + H_p,
    H_p = -((t + f^l*p)^a3 - t^a3) / f^l.

On generators this gives

    x -> mu^(a2*a3) x,  z -> mu^(d*a3) z,  t -> mu^a2 (t + f^l p),
    y -> mu^(-(d*l-1)*a2*a3) (y + H_p).

Composition ``compose(a1, a2)`` is the ring map ``a1 o a2``, which works out
to ``(p1 + mu1^K * p2(mu1^(a2*a3) x, mu1^(d*a3) z), mu1*mu2)`` with
``K = a2*(d*l*a3 - 1)``. The other ordering sigma o phi yields an isomorphic
group with a different twist; it is not used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .coordring import RingElement, ThreefoldParams, normal_form, ring_eq
from .polynomials import VARS, NotDivisible, Poly, T, X, Z
from .scalars import Scalar, as_scalar, scalar_pow

__all__ = [
    "Automorphism",
    "NotAnAutomorphismOfX",
    "ParamMismatch",
    "SubstitutionData",
    "act_on_point",
    "apply_aut",
    "compose",
    "decompose",
    "generator_images",
    "identity",
    "inverse",
    "lift_from_A",
]


class ParamMismatch(ValueError):
    pass


class NotAnAutomorphismOfX(ValueError):
    """Substitution data that does not have the shape (p, mu) prescribes."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


@dataclass(frozen=True)
class Automorphism:
    params: ThreefoldParams
    p: Poly
    mu: Scalar = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "mu", as_scalar(self.mu))
        if self.mu == 0:
            raise ValueError("torus parameter mu must be nonzero")
        if self.p.involves("y", "t"):
            raise ValueError(f"additive part must lie in C[x,z], got {self.p}")

    def is_additive(self) -> bool:
        return self.mu == 1

    def to_json(self) -> dict:
        from .scalars import scalar_to_json

        return {"p": str(self.p), "mu": scalar_to_json(self.mu)}


@dataclass(frozen=True)
class SubstitutionData:
    x: Poly
    y: Poly
    z: Poly
    t: Poly

    def as_dict(self) -> dict[str, Poly]:
        return {"x": self.x, "y": self.y, "z": self.z, "t": self.t}

    def to_json(self) -> dict:
        return {v: str(img) for v, img in self.as_dict().items()}


def identity(params: ThreefoldParams) -> Automorphism:
    return Automorphism(params, Poly(), Fraction(1))


def _check_same(a1: Automorphism, a2: Automorphism):
    if a1.params != a2.params:
        raise ParamMismatch(f"{a1.params} vs {a2.params}")


def additive_y_correction(params: ThreefoldParams, p: Poly) -> Poly:
    """H_p, the polynomial with phi_p(y) = y + H_p."""
    t_img = T + params.f_l * p
    num = t_img ** params.a3 - T ** params.a3
    return -num.exact_div(params.f_l)


def generator_images(a: Automorphism) -> SubstitutionData:
    params = a.params
    wx, wy, wz, wt = params.weights
    mu = a.mu
    H = additive_y_correction(params, a.p)
    return SubstitutionData(
        x=X * scalar_pow(mu, wx),
        y=(Poly.var("y") + H) * scalar_pow(mu, wy),
        z=Z * scalar_pow(mu, wz),
        t=(T + params.f_l * a.p) * scalar_pow(mu, wt),
    )


def _torus_twist(params: ThreefoldParams, p: Poly, mu: Scalar) -> Poly:
    """p(mu^(a2 a3) x, mu^(d a3) z)."""
    wx, _, wz, _ = params.weights
    return p.scale_vars({"x": scalar_pow(mu, wx), "z": scalar_pow(mu, wz)})


def compose(a1: Automorphism, a2: Automorphism) -> Automorphism:
    """The ring map a1 o a2: ``compose(a1, a2)(g) == a1(a2(g))``."""
    _check_same(a1, a2)
    params = a1.params
    K = params.cocycle_exponent
    p = a1.p + _torus_twist(params, a2.p, a1.mu) * scalar_pow(a1.mu, K)
    return Automorphism(params, p, a1.mu * a2.mu)


def inverse(a: Automorphism) -> Automorphism:
    params = a.params
    mu_inv = scalar_pow(a.mu, -1)
    p = -_torus_twist(params, a.p, mu_inv) * scalar_pow(a.mu, -params.cocycle_exponent)
    return Automorphism(params, p, mu_inv)


def apply_aut(a: Automorphism, g: Union[Poly, RingElement]) -> RingElement:
    if isinstance(g, RingElement):
        g = g.to_poly()
    return normal_form(g.substitute(generator_images(a).as_dict()), a.params)


def lift_from_A(p: Poly, params: ThreefoldParams) -> Automorphism:
    """The unique extension to X of the C[x,z]-map t -> t + f^l*p."""
    return Automorphism(params, p, Fraction(1))


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(u, v) with u*a + v*b == gcd(a, b)."""
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return u0, v0


def _monomial_multiple(img: Poly, var: str) -> Scalar | None:
    """c if img == c*var with c != 0, else None."""
    v = Poly.var(var)
    if len(img) != 1:
        return None
    (m, c), = img.items()
    return c if Poly.monomial(1, *m) == v else None


def decompose(s: SubstitutionData, params: ThreefoldParams) -> Automorphism:
    """Recover ``(p, mu)`` from generator images, validating their shape.

    Raises :class:`NotAnAutomorphismOfX` with ``reason`` one of
    ``"non-monomial x/z image"``, ``"t-image not c*t + h(x,z)"``,
    ``"f^l does not divide h"``, ``"inconsistent mu powers"``,
    ``"y-image mismatch"``.
    """
    cx = _monomial_multiple(s.x, "x")
    cz = _monomial_multiple(s.z, "z")
    if cx is None or cz is None:
        raise NotAnAutomorphismOfX("non-monomial x/z image", f"x -> {s.x}, z -> {s.z}")

    t_split = s.t.coefficients_in("t")
    if len(t_split) != 2 or not t_split[1].is_constant() or s.t.involves("y"):
        raise NotAnAutomorphismOfX("t-image not c*t + h(x,z)", f"t -> {s.t}")
    ct = t_split[1].constant_value()
    h = t_split[0]
    try:
        h_over = h.exact_div(params.f_l)
    except NotDivisible:
        raise NotAnAutomorphismOfX("f^l does not divide h", f"h = {h}") from None

    wx, _, wz, wt = params.weights
    u, v = _bezout(params.a2, params.d * params.a3)
    mu = scalar_pow(ct, u) * scalar_pow(cz, v)
    if (scalar_pow(mu, wx) != cx or scalar_pow(mu, wz) != cz
            or scalar_pow(mu, wt) != ct):
        raise NotAnAutomorphismOfX(
            "inconsistent mu powers", f"c_x = {cx}, c_z = {cz}, c_t = {ct}")

    result = Automorphism(params, h_over * scalar_pow(mu, -wt), mu)
    if not ring_eq(generator_images(result).y, s.y, params):
        raise NotAnAutomorphismOfX("y-image mismatch", f"y -> {s.y}")
    return result


def act_on_point(a: Automorphism, pt):
    """Pull a point back along ``a``: new coordinates are a(v) evaluated at pt.

    This is contravariant:
    ``act_on_point(compose(a, b), pt) == act_on_point(b, act_on_point(a, pt))``.
    """
    from .geometry import SurfacePoint, make_point

    if not isinstance(pt, SurfacePoint):
        raise TypeError("expected a SurfacePoint")
    if pt.params != a.params:
        raise ParamMismatch(f"{pt.params} vs {a.params}")
    images = generator_images(a).as_dict()
    coords = pt.as_dict()
    new = {v: images[v].evaluate(coords) for v in VARS}
    return make_point(a.params, new["x"], new["y"], new["z"], new["t"])
