"""Independent deciders used to cross-check the fast paths.

``linear_I_membership`` decides ``Q in (f^l, x + t^a3)`` by linear algebra
over Q. Both generators are homogeneous for the torus weights of x, z, t
(all positive), so the ideal is graded: Q is a member iff each weighted
component Q_w is, and then Q_w = A*f^l + B*(x + t^a3) with A, B homogeneous
of weights w - wt(f^l) and w - a2*a3. That is a finite linear system per
component, solved by exact Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coordring import ThreefoldParams
from .polynomials import Poly


def monomials_of_weight(w: int, weights: Sequence[int]) -> list[tuple]:
    """Exponent vectors (ex, 0, ez, et) with ex*wx + ez*wz + et*wt == w."""
    wx, wz, wt = weights
    out = []
    if w < 0:
        return out
    for ex in range(w // wx + 1):
        rest = w - ex * wx
        for ez in range(rest // wz + 1):
            r = rest - ez * wz
            if r % wt == 0:
                out.append((ex, 0, ez, r // wt))
    return out


def _in_span(columns: list[dict], target: dict) -> list[Fraction] | None:
    """Solve sum_j c_j * columns[j] == target; None if inconsistent."""
    rows = sorted({m for col in columns for m in col} | set(target))
    index = {m: i for i, m in enumerate(rows)}
    n = len(columns)
    # augmented matrix, one row per monomial
    mat = [[Fraction(0)] * (n + 1) for _ in rows]
    for j, col in enumerate(columns):
        for m, c in col.items():
            mat[index[m]][j] = c
    for m, c in target.items():
        mat[index[m]][n] = c
    pivots = []
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][j] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][j]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][j] != 0:
                factor = mat[i][j]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(j)
        r += 1
    if any(row[n] != 0 for row in mat[r:]):
        return None
    sol = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        sol[j] = mat[i][n]
    return sol


def linear_I_membership(Q: Poly, params: ThreefoldParams) -> tuple[bool, Poly | None, Poly | None]:
    """Return (member, A, B) computed without substitution or division."""
    if Q.involves("y") or not Q.is_rational():
        raise ValueError("oracle handles rational polynomials in x, z, t only")
    wx, _, wz, wt = params.weights
    w3 = (wx, wz, wt)
    fl, rel = params.f_l, params.x_plus_t
    wt_fl = params.d * params.l * params.a2 * params.a3
    wt_rel = params.a2 * params.a3

    def weight(m):
        return m[0] * wx + m[2] * wz + m[3] * wt

    components: dict[int, dict] = {}
    for m, c in Q.items():
        components.setdefault(weight(m), {})[m] = c

    A, B = Poly(), Poly()
    for w, target in sorted(components.items()):
        a_monos = monomials_of_weight(w - wt_fl, w3)
        b_monos = monomials_of_weight(w - wt_rel, w3)
        cols = [(Poly.monomial(1, *m) * fl).terms for m in a_monos]
        cols += [(Poly.monomial(1, *m) * rel).terms for m in b_monos]
        sol = _in_span(cols, target)
        if sol is None:
            return False, None, None
        for m, c in zip(a_monos, sol):
            A = A + Poly.monomial(c, *m)
        for m, c in zip(b_monos, sol[len(a_monos):]):
            B = B + Poly.monomial(c, *m)
    return True, A, B
