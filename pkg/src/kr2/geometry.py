"""Points of X, fibers of the projection to the (x, z)-plane, and orbit tags.

Orbit tags:

* ``Origin`` -- the fixed point (0, 0, 0, 0).
* ``PuncturedLine`` -- x = z = t = 0, y != 0.
* ``BigOrbit`` -- f(x, z) != 0; keyed by the curve ``alpha x^d + beta z^a2 = 0``
  through (x, z), as the normalized pair ``[z^a2 : -x^d]``.
* ``CuspFamily`` -- f(x, z) = 0 away from the line; keyed by
  ``v = y * t^((d*l - 1)*a3)``, which has torus weight 0.

The CuspFamily key is invariant under the torus only. The additive maps
fix x, z and t on the cusp fibers but move y by ``-a3 * t^(a3-1) * p(x, z)``,
so ``same_orbit`` on two CuspFamily points compares torus orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coordring import ThreefoldParams
from .scalars import Cyclo, Scalar, as_scalar, scalar_pow, scalar_to_json

__all__ = [
    "FiberType",
    "NotOnX",
    "OrbitClass",
    "SurfacePoint",
    "fiber_type",
    "make_point",
    "orbit_classify",
    "same_orbit",
]

ORIGIN, PUNCTURED_LINE, BIG_ORBIT, CUSP_FAMILY = "Origin", "PuncturedLine", "BigOrbit", "CuspFamily"


class NotOnX(ValueError):
    pass


@dataclass(frozen=True)
class SurfacePoint:
    params: ThreefoldParams
    x: Scalar
    y: Scalar
    z: Scalar
    t: Scalar

    def as_dict(self) -> dict[str, Scalar]:
        return {"x": self.x, "y": self.y, "z": self.z, "t": self.t}

    def coords(self) -> tuple:
        return (self.x, self.y, self.z, self.t)


def make_point(params: ThreefoldParams, x, y, z, t) -> SurfacePoint:
    x, y, z, t = (as_scalar(c) for c in (x, y, z, t))
    value = params.P.evaluate({"x": x, "y": y, "z": z, "t": t})
    if value != 0:
        raise NotOnX(f"P({x}, {y}, {z}, {t}) = {value} != 0")
    return SurfacePoint(params, x, y, z, t)


def _f0(params: ThreefoldParams, x0: Scalar, z0: Scalar) -> Scalar:
    return scalar_pow(x0, params.d) + scalar_pow(z0, params.a2)


@dataclass(frozen=True)
class FiberType:
    tag: str  # "Line" or "MultiLine"
    count: int

    def __str__(self):
        return self.tag if self.tag == "Line" else f"{self.tag} {self.count}"


def fiber_type(params: ThreefoldParams, x0, z0) -> FiberType:
    """Shape of the fiber over (x0, z0).

    Off the cusp curve the fiber is a line (t free, y solved for). On it,
    y is free and t runs over the a3 roots of ``x0 + t^a3 = 0``, which are
    distinct unless x0 = 0, and then z0 = 0 too.
    """
    x0, z0 = as_scalar(x0), as_scalar(z0)
    if _f0(params, x0, z0) != 0 or x0 == 0:
        return FiberType("Line", 1)
    return FiberType("MultiLine", params.a3)


@dataclass(frozen=True)
class OrbitClass:
    tag: str
    key: object = None  # (alpha, beta) for BigOrbit, a Scalar for CuspFamily

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.tag == BIG_ORBIT:
            out["key"] = [scalar_to_json(k) for k in self.key]
        elif self.tag == CUSP_FAMILY:
            out["key"] = scalar_to_json(self.key)
        return out

    def __str__(self):
        from .scalars import format_scalar

        if self.tag == BIG_ORBIT:
            a, b = self.key
            return f"{self.tag} [{format_scalar(a)} : {format_scalar(b)}]"
        if self.tag == CUSP_FAMILY:
            return f"{self.tag} {format_scalar(self.key)}"
        return self.tag


def _normalize_pair(a: Scalar, b: Scalar) -> tuple[Scalar, Scalar]:
    # first nonzero coordinate becomes 1; (0, 0) never occurs off the cusp
    if a != 0:
        return Fraction(1), b / a
    return Fraction(0), Fraction(1)


def orbit_classify(pt: SurfacePoint) -> OrbitClass:
    params = pt.params
    x, y, z, t = pt.coords()
    if x == 0 and z == 0 and t == 0:
        return OrbitClass(ORIGIN if y == 0 else PUNCTURED_LINE)
    f0 = _f0(params, x, z)
    if f0 != 0:
        alpha, beta = _normalize_pair(scalar_pow(z, params.a2), -scalar_pow(x, params.d))
        return OrbitClass(BIG_ORBIT, (_tidy(alpha), _tidy(beta)))
    v = y * scalar_pow(t, (params.d * params.l - 1) * params.a3)
    return OrbitClass(CUSP_FAMILY, _tidy(v))


def _tidy(s: Scalar) -> Scalar:
    # collapse rational-valued cyclotomic keys so equal keys compare and print alike
    if isinstance(s, Cyclo) and s.is_rational():
        return s.rational_value()
    return s


def same_orbit(p1: SurfacePoint, p2: SurfacePoint) -> bool:
    from .autgroup import ParamMismatch

    if p1.params != p2.params:
        raise ParamMismatch(f"{p1.params} vs {p2.params}")
    return orbit_classify(p1) == orbit_classify(p2)
