"""Exact scalars: rationals and elements of a cyclotomic field Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values. Elements of Q(zeta_n)
are :class:`Cyclo` instances holding the residue of a polynomial in ``zeta``
modulo the n-th cyclotomic polynomial, as a tuple of ``phi(n)`` Fractions in
ascending degree.

Rationals mix freely with cyclotomic elements (Q embeds in Q(zeta_n)); two
cyclotomic elements of different orders do not.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

__all__ = [
    "Cyclo",
    "MixedCyclotomicOrders",
    "Scalar",
    "as_scalar",
    "cyclotomic_minimal_poly",
    "is_rational",
    "scalar_pow",
    "zeta",
]


class MixedCyclotomicOrders(ValueError):
    """Arithmetic between elements of Q(zeta_n) and Q(zeta_m) with n != m."""


# Dense univariate helpers over Fraction, ascending coefficient order.

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _psub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _pdivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([Fraction(c) for c in a])
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] -= c * bi
        _trim(r)
    return _trim(q), r


@lru_cache(maxsize=None)
def cyclotomic_minimal_poly(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed as (w^n - 1) divided by the product of Phi_d for the proper
    divisors d of n.

    >>> [int(c) for c in cyclotomic_minimal_poly(6)]
    [1, -1, 1]
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _pmul(den, cyclotomic_minimal_poly(d))
    q, r = _pdivmod(num, den)
    assert not r, "cyclotomic division left a remainder"
    return tuple(q)


def _reduce(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_minimal_poly(n)
    _, r = _pdivmod(coeffs, phi)
    deg = len(phi) - 1
    return tuple(r) + (Fraction(0),) * (deg - len(r))


class Cyclo:
    """An element of Q(zeta_n), stored reduced modulo Phi_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence = ()):
        self.n = n
        self.coeffs = _reduce([Fraction(c) for c in coeffs], n)

    @classmethod
    def _raw(cls, n: int, coeffs: tuple) -> Cyclo:
        obj = object.__new__(cls)
        obj.n = n
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, n: int, value) -> Cyclo:
        deg = len(cyclotomic_minimal_poly(n)) - 1
        return cls._raw(n, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    # coercion ---------------------------------------------------------

    def _coerce(self, other) -> Cyclo | None:
        if isinstance(other, Cyclo):
            if other.n != self.n:
                raise MixedCyclotomicOrders(
                    f"cannot combine Q(zeta_{self.n}) with Q(zeta_{other.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.n, other)
        return None

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._raw(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.n, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._raw(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._raw(self.n, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._raw(self.n, _reduce(_pmul(self.coeffs, o.coeffs), self.n))

    __rmul__ = __mul__

    def inverse(self) -> Cyclo:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.n)
        # invariant: s*self == r (mod Phi_n)
        r0, r1 = list(cyclotomic_minimal_poly(self.n)), a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant since Phi_n is irreducible
        c = r1[0]
        return Cyclo(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo._raw(self.n, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        return scalar_pow(self, k)

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            if other.n != self.n:
                return self.is_rational() and other.is_rational() and \
                    self.coeffs[0] == other.coeffs[0]
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cyclo({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, Cyclo]


def zeta(n: int) -> Scalar:
    """The primitive n-th root of unity, as an element of Q(zeta_n)."""
    return Cyclo(n, [0, 1])


def as_scalar(value) -> Scalar:
    if isinstance(value, Cyclo):
        return value
    return Fraction(value)


def is_rational(value: Scalar) -> bool:
    return not isinstance(value, Cyclo) or value.is_rational()


def scalar_pow(a: Scalar, k: int) -> Scalar:
    """a**k by square-and-multiply; negative k goes through the inverse."""
    if not isinstance(a, Cyclo):
        a = Fraction(a)
        if a == 0 and k < 0:
            raise ZeroDivisionError("zero to a negative power")
        return a ** k
    if k < 0:
        a = a.inverse()
        k = -k
    result: Scalar = Cyclo.from_rational(a.n, 1)
    base = a
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(a: Scalar) -> str:
    """Render a scalar in the CLI literal syntax (``3/4``, ``zeta^2 - 1``)."""
    if not isinstance(a, Cyclo):
        return _format_rational(Fraction(a))
    if a.is_rational():
        return _format_rational(a.coeffs[0])
    parts: list[str] = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("zeta" if k == 1 else f"zeta^{k}")
        mag = abs(c)
        if not mono:
            body = _format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def scalar_to_json(a: Scalar) -> dict:
    if isinstance(a, Cyclo):
        return {"cyclo": a.n,
                "coeffs": [{"num": c.numerator, "den": c.denominator} for c in a.coeffs]}
    a = Fraction(a)
    return {"num": a.numerator, "den": a.denominator}


def scalar_from_json(obj: dict) -> Scalar:
    if "cyclo" in obj:
        return Cyclo(obj["cyclo"], [Fraction(c["num"], c["den"]) for c in obj["coeffs"]])
    return Fraction(obj["num"], obj["den"])
