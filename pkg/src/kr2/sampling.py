"""Deterministic pseudo-random samples for the verification suite.

The generator is SplitMix64 (Steele, Lea, Flood 2014) with the usual
constants:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

all modulo 2^64. ``below(n)`` is ``out % n``. Any implementation following
these steps reproduces the same sample stream for a given seed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

from .coordring import ThreefoldParams
from .geometry import SurfacePoint, make_point
from .polynomials import Poly
from .scalars import Scalar, scalar_pow, zeta

_MASK = (1 << 64) - 1
_T = TypeVar("_T")


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence[_T]) -> _T:
        return seq[self.below(len(seq))]


SMALL_COEFFS = tuple(Fraction(n, d) for n in (-3, -2, -1, 1, 2, 3) for d in (1, 2))
TORUS_SAMPLES = tuple(Fraction(c) for c in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)))


def random_coeff(rng: SplitMix64) -> Fraction:
    return rng.choice(SMALL_COEFFS)


def random_poly(rng: SplitMix64, variables: str, max_deg: int,
                max_terms: int = 4, allow_zero: bool = False) -> Poly:
    """Sparse polynomial in ``variables`` (a string like "xz") of total degree <= max_deg."""
    while True:
        n_terms = rng.randint(0 if allow_zero else 1, max_terms)
        terms: dict = {}
        for _ in range(n_terms):
            m = [0, 0, 0, 0]
            budget = rng.randint(0, max_deg)
            for v in variables:
                e = rng.randint(0, budget)
                m["xyzt".index(v)] += e
                budget -= e
            terms[tuple(m)] = random_coeff(rng)
        p = Poly(terms)
        if allow_zero or p:
            return p


def random_mu(rng: SplitMix64, cyclo: int | None = None) -> Scalar:
    if cyclo == 3 and rng.below(3) == 0:
        return scalar_pow(zeta(3), rng.randint(1, 2)) * rng.choice(TORUS_SAMPLES)
    return rng.choice(TORUS_SAMPLES)


def random_nonzero_rational(rng: SplitMix64, lo: int = -4, hi: int = 4) -> Fraction:
    while True:
        num = rng.randint(lo, hi)
        if num:
            return Fraction(num, rng.randint(1, 3))


def random_generic_point(rng: SplitMix64, params: ThreefoldParams) -> SurfacePoint:
    """A point with f(x, z) != 0: pick x, z, t and solve for y."""
    while True:
        x = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        z = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        f0 = x ** params.d + z ** params.a2
        if f0 != 0:
            break
    t = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    y = -(x + t ** params.a3) / f0 ** params.l
    return make_point(params, x, y, z, t)


def cusp_point(params: ThreefoldParams, w: Fraction, y) -> SurfacePoint:
    """A point over the cusp curve with t = w^a2 != 0.

    x = -t^a3 and z = s * w^(d*a3) with s^a2 = (-1)^(d+1); when d is even,
    a2 is odd, so s = -1 works.
    """
    if w == 0:
        raise ValueError("w must be nonzero")
    d, a2, a3 = params.d, params.a2, params.a3
    t = w ** a2
    x = -t ** a3
    s = 1 if d % 2 else -1
    z = s * w ** (d * a3)
    return make_point(params, x, y, z, t)


def random_cusp_point(rng: SplitMix64, params: ThreefoldParams) -> SurfacePoint:
    w = Fraction(rng.choice((1, -1, 2, -2)), rng.randint(1, 2))
    return cusp_point(params, w, Fraction(rng.randint(-5, 5)))


def witness_points(params: ThreefoldParams) -> dict[str, SurfacePoint]:
    """One explicit point per orbit tag."""
    from .geometry import BIG_ORBIT, CUSP_FAMILY, ORIGIN, PUNCTURED_LINE

    one, zero = Fraction(1), Fraction(0)
    f0 = one + one  # x = z = 1 gives f0 = 2
    big = make_point(params, one, -(one + one) / f0 ** params.l, one, one)
    return {
        ORIGIN: make_point(params, zero, zero, zero, zero),
        PUNCTURED_LINE: make_point(params, zero, Fraction(5), zero, zero),
        BIG_ORBIT: big,
        CUSP_FAMILY: cusp_point(params, one, Fraction(7)),
    }
