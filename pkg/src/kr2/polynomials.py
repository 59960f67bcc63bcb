"""Sparse polynomials in the fixed variables x, y, z, t over exact scalars.

A :class:`Poly` maps exponent 4-tuples ``(ex, ey, ez, et)`` to nonzero
scalars. Every polynomial lives in the full four-variable ring; a polynomial
"in x, z" is simply one whose y- and t-exponents are all zero.

Division uses graded lexicographic order with x > y > z > t. Printing uses
plain lexicographic order, descending, which is deterministic and keeps
the lower-degree x-terms in front (``-x - t^3``).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalars import Cyclo, Scalar, as_scalar, format_scalar, is_rational, scalar_pow

VARS = ("x", "y", "z", "t")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Monomial = tuple  # (ex, ey, ez, et)
ZERO_MONO: Monomial = (0, 0, 0, 0)


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Poly.exact_div` when the remainder is nonzero."""


class MissingImage(KeyError):
    pass


class MissingBinding(KeyError):
    pass


class NotHomogeneous(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2] and a[3] <= b[3]


def _mono_sub(b: Monomial, a: Monomial) -> Monomial:
    return (b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3])


class Poly:
    """Immutable sparse polynomial in x, y, z, t."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    m = tuple(m)
                    if len(m) != 4 or any(e < 0 for e in m):
                        raise ValueError(f"bad exponent vector {m!r}")
                    clean[m] = as_scalar(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> Poly:
        # terms already clean: tuple keys, nonzero scalar values
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> Poly:
        return cls({ZERO_MONO: c})

    @classmethod
    def var(cls, name: str) -> Poly:
        m = [0, 0, 0, 0]
        m[VAR_INDEX[name]] = 1
        return cls._wrap({tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, c, x=0, y=0, z=0, t=0) -> Poly:
        return cls({(x, y, z, t): c})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ZERO_MONO in self._terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(ZERO_MONO, Fraction(0))

    def coeff(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = VAR_INDEX[var]
        return max(m[i] for m in self._terms)

    def variables(self) -> set[str]:
        used = set()
        for m in self._terms:
            for v, e in zip(VARS, m):
                if e:
                    used.add(v)
        return used

    def involves(self, *names: str) -> bool:
        return bool(self.variables() & set(names))

    def leading(self) -> tuple[Monomial, Scalar]:
        """Leading monomial and coefficient in grlex order."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self._terms.values())

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            if other == 0:
                return Poly()
            return Poly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3])
                s = out.get(m)
                out[m] = ca * cb if s is None else s + ca * cb
        return Poly._wrap({m: c for m, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial exponent")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # division -------------------------------------------------------------

    def divmod(self, b: Poly) -> tuple[Poly, Poly]:
        """Multivariate division by a single polynomial in grlex order.

        Returns ``(q, r)`` with ``self == q*b + r`` and no monomial of ``r``
        divisible by the leading monomial of ``b``. The remainder is unique,
        so this is a normal form modulo the principal ideal ``(b)``.
        """
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = b.leading()
        rest = [(m, c) for m, c in b._terms.items() if m != lm]
        work = dict(self._terms)
        heap = [(-sum(m), tuple(-e for e in m)) for m in work]
        heapq.heapify(heap)
        quot: dict = {}
        rem: dict = {}
        while heap:
            _, neg = heapq.heappop(heap)
            m = tuple(-e for e in neg)
            c = work.pop(m, None)
            if c is None:
                continue
            if not _mono_divides(lm, m):
                rem[m] = c
                continue
            qm = _mono_sub(m, lm)
            qc = c / lc
            quot[qm] = qc
            for bm, bc in rest:
                nm = _mono_mul(qm, bm)
                old = work.get(nm)
                val = -qc * bc if old is None else old - qc * bc
                if val == 0:
                    work.pop(nm, None)
                else:
                    if old is None:
                        heapq.heappush(heap, (-sum(nm), tuple(-e for e in nm)))
                    work[nm] = val
        return Poly._wrap(quot), Poly._wrap(rem)

    def exact_div(self, b: Poly) -> Poly:
        q, r = self.divmod(b)
        if r:
            raise NotDivisible(f"({b}) does not divide ({self})")
        return q

    def divides(self, a: Poly) -> bool:
        return not a.divmod(self)[1]

    # calculus and structure ----------------------------------------------

    def diff(self, var: str) -> Poly:
        i = VAR_INDEX[var]
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                nm = list(m)
                nm[i] = e - 1
                out[tuple(nm)] = c * e
        return Poly._wrap(out)

    def coefficients_in(self, var: str) -> list[Poly]:
        """Split as sum_i c_i * var^i; c_i free of ``var``. Empty for zero."""
        i = VAR_INDEX[var]
        buckets: dict[int, dict] = {}
        for m, c in self._terms.items():
            nm = list(m)
            e = nm[i]
            nm[i] = 0
            buckets.setdefault(e, {})[tuple(nm)] = c
        if not buckets:
            return []
        return [Poly._wrap(buckets.get(k, {})) for k in range(max(buckets) + 1)]

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Poly], var: str) -> Poly:
        i = VAR_INDEX[var]
        out: dict = {}
        for k, c in enumerate(coeffs):
            for m, v in c._terms.items():
                nm = list(m)
                nm[i] += k
                nm = tuple(nm)
                s = out.get(nm)
                out[nm] = v if s is None else s + v
        return Poly._wrap({m: c for m, c in out.items() if c != 0})

    def substitute(self, images: Mapping[str, Poly]) -> Poly:
        """Simultaneous substitution ``v -> images[v]``, fully expanded."""
        needed = self.variables()
        missing = needed - set(images)
        if missing:
            raise MissingImage(f"no image for {sorted(missing)}")
        lifted = {v: self._lift(images[v]) for v in needed}
        powers: dict[tuple[str, int], Poly] = {}

        def power(v: str, e: int) -> Poly:
            key = (v, e)
            if key not in powers:
                powers[key] = lifted[v] if e == 1 else power(v, e - 1) * lifted[v]
            return powers[key]

        total: dict = {}
        for m, c in self._terms.items():
            term = Poly.const(c)
            for v, e in zip(VARS, m):
                if e:
                    term = term * power(v, e)
            for tm, tc in term._terms.items():
                s = total.get(tm)
                total[tm] = tc if s is None else s + tc
        return Poly._wrap({m: c for m, c in total.items() if c != 0})

    def scale_vars(self, factors: Mapping[str, Scalar]) -> Poly:
        """Substitute v -> factors[v]*v; cheaper than :meth:`substitute`."""
        f = [factors.get(v) for v in VARS]
        out = {}
        for m, c in self._terms.items():
            for fi, e in zip(f, m):
                if e and fi is not None:
                    c = c * scalar_pow(fi, e)
            out[m] = c
        return Poly._wrap(out)

    def weight_of(self, weights: Iterable[int]) -> int:
        """Common weighted degree of all terms.

        Raises :class:`ZeroPolynomial` for 0 and :class:`NotHomogeneous`
        when two terms disagree.
        """
        w = tuple(weights)
        if not self._terms:
            raise ZeroPolynomial("weight of the zero polynomial is undefined")
        degs = {sum(e * wi for e, wi in zip(m, w)) for m in self._terms}
        if len(degs) != 1:
            raise NotHomogeneous(f"weighted degrees {sorted(degs)} differ")
        return degs.pop()

    def evaluate(self, point: Mapping[str, Scalar]) -> Scalar:
        missing = self.variables() - set(point)
        if missing:
            raise MissingBinding(f"no value for {sorted(missing)}")
        vals = [point.get(v) for v in VARS]
        total: Scalar = Fraction(0)
        for m, c in self._terms.items():
            for val, e in zip(vals, m):
                if e:
                    c = c * scalar_pow(val, e)
            total = total + c
        return total

    # printing -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0], reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e)
            if is_rational(c):
                c = c.rational_value() if isinstance(c, Cyclo) else c
                neg = c < 0
                mag = -c if neg else c
                if not mono:
                    body = format_scalar(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{format_scalar(mag)}*{mono}"
            elif sum(1 for v in c.coeffs if v != 0) == 1:
                # single zeta power: print like a rational coefficient
                text = format_scalar(c)
                neg = text.startswith("-")
                body = text.lstrip("-") + (f"*{mono}" if mono else "")
            else:
                neg = False
                body = f"({format_scalar(c)})" + (f"*{mono}" if mono else "")
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Poly({str(self)!r})"


X, Y, Z, T = (Poly.var(v) for v in VARS)
