"""Deterministic invariant suite behind ``kr2 verify``.

Every check draws its samples from a SplitMix64 stream seeded from the
suite seed and the check's position, so a given seed always reproduces the
same transcript.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from .autgroup import (Automorphism, act_on_point, apply_aut, compose, decompose,
                       generator_images, identity, inverse, SubstitutionData)
from .coordring import (ThreefoldParams, ideal_I_membership, ideal_J_membership,
                        make_params, normal_form, ring_eq)
from .geometry import ORIGIN, PUNCTURED_LINE, fiber_type, orbit_classify
from .lnd import Derivation, exp_images, exp_lnd, iterate, jacobian_check, nilpotency_index
from .oracles import linear_I_membership
from .polynomials import VARS, Poly, X, Z
from .sampling import (SplitMix64, random_cusp_point, random_generic_point, random_mu,
                       random_poly, witness_points)
from .scalars import Cyclo, scalar_pow, zeta

DEFAULT_TUPLES = ((3, 1, 2, 3), (2, 1, 3, 4), (2, 2, 3, 4))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class Counts:
    exp_samples: int = 50
    group_pairs: int = 100
    ideal_samples: int = 200
    normal_form_samples: int = 200
    orbit_elements: int = 50
    orbit_points: int = 20


def _fail(name: str, failures: list[str]) -> CheckResult:
    if failures:
        more = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
        return CheckResult(name, False, failures[0] + more)
    return CheckResult(name, True)


# 1 ------------------------------------------------------------------------

def check_homogeneity(tuples: list[ThreefoldParams], rng: SplitMix64, counts: Counts):
    bad = [f"{p}: weight {p.P.weight_of(p.weights)}" for p in tuples
           if p.P.weight_of(p.weights) != p.a2 * p.a3]
    return [_fail("relation homogeneity", bad)]


# 2 ------------------------------------------------------------------------

def check_derivation(tuples, rng, counts):
    jac = [str(p) for p in tuples if not jacobian_check(p)]
    kills_P, nil = [], []
    y = Poly.var("y")
    for p in tuples:
        D = Derivation(p)
        if not normal_form(D.on_poly(p.P), p).is_zero():
            kills_P.append(str(p))
        top = iterate(D, y, p.a3)
        expected = normal_form((-p.f_l) ** (p.a3 - 1) * factorial(p.a3), p)
        if top != expected or not iterate(D, y, p.a3 + 1).is_zero() \
                or nilpotency_index(D, y) != p.a3 + 1:
            nil.append(str(p))
    return [
        _fail("jacobian construction matches derivation", jac),
        _fail("derivation kills the relation", kills_P),
        _fail("nilpotency of y", nil),
    ]


# 3 ------------------------------------------------------------------------

def check_exponentials(tuples, rng, counts):
    relation, images_match, one_param = [], [], []
    for p in tuples:
        for _ in range(counts.exp_samples):
            q = random_poly(rng, "xz", 3, allow_zero=True)
            q2 = random_poly(rng, "xz", 3, allow_zero=True)
            D = Derivation(p, q)
            imgs = exp_images(D)
            if not normal_form(p.P.substitute(imgs), p).is_zero():
                relation.append(f"{p} q={q}")
            g = generator_images(exp_lnd(D)).as_dict()
            if any(not ring_eq(imgs[v], g[v], p) for v in VARS):
                images_match.append(f"{p} q={q}")
            lhs = compose(exp_lnd(D), exp_lnd(Derivation(p, q2)))
            if lhs != exp_lnd(Derivation(p, q + q2)):
                one_param.append(f"{p} q={q} q'={q2}")
    return [
        _fail("exp(q d) preserves the relation", relation),
        _fail("exp(q d) images match (-q, 1)", images_match),
        _fail("exp one-parameter law", one_param),
    ]


# 4 ------------------------------------------------------------------------

def substituted_images(a1: Automorphism, a2: Automorphism) -> dict[str, Poly]:
    """Generator images of a1 o a2 computed by plain substitution."""
    params = a1.params
    outer = generator_images(a1).as_dict()
    inner = generator_images(a2).as_dict()
    return {v: normal_form(inner[v].substitute(outer), params).to_poly() for v in VARS}


def _random_element(rng, p: ThreefoldParams, cyclo: int | None, max_deg: int = 2) -> Automorphism:
    return Automorphism(p, random_poly(rng, "xz", max_deg, max_terms=3, allow_zero=True),
                        random_mu(rng, cyclo))


def check_group_law(tuples, rng, counts):
    law, images, roundtrip = [], [], []
    for p in tuples:
        cyclo = 3 if (p.d, p.l, p.a2, p.a3) == (3, 1, 2, 3) else None
        for _ in range(counts.group_pairs):
            a1 = _random_element(rng, p, cyclo)
            a2 = _random_element(rng, p, cyclo)
            by_formula = compose(a1, a2)
            subst = substituted_images(a1, a2)
            formula_imgs = generator_images(by_formula).as_dict()
            if any(normal_form(formula_imgs[v], p).to_poly() != subst[v] for v in VARS):
                images.append(f"{p} ({a1.p}, {a1.mu}) * ({a2.p}, {a2.mu})")
            if by_formula != decompose(SubstitutionData(**subst), p):
                law.append(f"{p} ({a1.p}, {a1.mu}) * ({a2.p}, {a2.mu})")
            for a in (a1, a2):
                if decompose(generator_images(a), p) != a:
                    roundtrip.append(f"{p} ({a.p}, {a.mu})")
    return [
        _fail("compose formula equals substitution", law),
        _fail("composed images match componentwise", images),
        _fail("decompose inverts generator_images", roundtrip),
    ]


# 5 ------------------------------------------------------------------------

def check_semidirect(tuples, rng, counts):
    normal, abelian = [], []
    for p in tuples:
        for _ in range(20):
            g = _random_element(rng, p, None)
            n = Automorphism(p, random_poly(rng, "xz", 2, allow_zero=True))
            conj = compose(g, compose(n, inverse(g)))
            if conj.mu != 1:
                normal.append(f"{p} g=({g.p}, {g.mu})")
            m = Automorphism(p, random_poly(rng, "xz", 2, allow_zero=True))
            if compose(n, m) != compose(m, n) or compose(n, m).p != n.p + m.p:
                abelian.append(f"{p} {n.p}, {m.p}")
            if compose(g, inverse(g)) != identity(p):
                normal.append(f"{p} inverse law for ({g.p}, {g.mu})")
    return [
        _fail("additive part is normal", normal),
        _fail("additive part is abelian and adds", abelian),
    ]


# 6 ------------------------------------------------------------------------

def random_I_candidate(rng: SplitMix64, p: ThreefoldParams):
    """Members built from random certificates, raw random polynomials and
    perturbed members, all of total degree <= 8."""
    kind = rng.below(3)
    if kind == 2:
        return random_poly(rng, "xzt", 8, max_terms=5)
    A = random_poly(rng, "xzt", max(0, 8 - p.f_l.degree()), max_terms=3, allow_zero=True)
    B = random_poly(rng, "xzt", 8 - p.a3, max_terms=3, allow_zero=True)
    Q = A * p.f_l + B * p.x_plus_t
    if kind == 1:
        Q = Q + random_poly(rng, "xzt", 8, max_terms=1)
    return Q


def check_ideal_certificates(tuples, rng, counts):
    disagree, certs, jcerts = [], [], []
    for p in tuples:
        members = 0
        for _ in range(counts.ideal_samples):
            Q = random_I_candidate(rng, p)
            fast = ideal_I_membership(Q, p)
            slow, _, _ = linear_I_membership(Q, p)
            if fast.member != slow:
                disagree.append(f"{p} Q={Q}: fast={fast.member} oracle={slow}")
            if fast.member:
                members += 1
                if fast.A * p.f_l + fast.B * p.x_plus_t != Q:
                    certs.append(f"{p} Q={Q}")
            # the same polynomial times a power of y, through J
            g = Q * Poly.var("y") ** rng.below(3)
            j = ideal_J_membership(g, p)
            if j.member != fast.member or (j.member and not ring_eq(p.f_l * j.witness, g, p)):
                jcerts.append(f"{p} g={g}")
        if members == 0 or members == counts.ideal_samples:
            disagree.append(f"{p}: degenerate sample ({members} members)")
    return [
        _fail("I-membership agrees with linear-algebra oracle", disagree),
        _fail("I certificates re-multiply", certs),
        _fail("J witnesses re-multiply", jcerts),
    ]


# 7 ------------------------------------------------------------------------

def check_normal_form(tuples, rng, counts):
    idem, confl, shift = [], [], []
    for p in tuples:
        for _ in range(counts.normal_form_samples):
            g = random_poly(rng, "xyzt", 7, max_terms=5)
            r = random_poly(rng, "xyzt", 3, max_terms=3)
            nf = normal_form(g, p)
            if normal_form(nf.to_poly(), p) != nf:
                idem.append(f"{p} g={g}")
            if normal_form(g, p, strategy="bottom-up") != nf:
                confl.append(f"{p} g={g}")
            if normal_form(g + r * p.P, p) != nf:
                shift.append(f"{p} g={g} r={r}")
    return [
        _fail("normal form idempotent", idem),
        _fail("normal form confluent", confl),
        _fail("normal form ignores multiples of P", shift),
    ]


# 8 ------------------------------------------------------------------------

def check_orbits(tuples, rng, counts):
    realized, tag_inv, key_inv, fixes = [], [], [], []
    for p in tuples:
        wits = witness_points(p)
        for tag, pt in wits.items():
            if orbit_classify(pt).tag != tag:
                realized.append(f"{p} {tag}")
        pts = [random_generic_point(rng, p) for _ in range(counts.orbit_points - 4)]
        pts += [random_cusp_point(rng, p) for _ in range(2)]
        pts += [wits[PUNCTURED_LINE], wits[ORIGIN]]
        for _ in range(counts.orbit_elements):
            a = _random_element(rng, p, None)
            for pt in pts:
                before, after = orbit_classify(pt), orbit_classify(act_on_point(a, pt))
                if before.tag != after.tag:
                    tag_inv.append(f"{p} ({a.p}, {a.mu}) on {pt.coords()}")
                elif before != after:
                    key_inv.append(f"{p} ({a.p}, {a.mu}) on {_coords(pt)}: "
                                   f"{before} -> {after}")
            add = Automorphism(p, a.p)
            for pt in pts:
                if _on_cusp(pt) and act_on_point(add, pt) != pt:
                    fixes.append(f"{p} ({add.p}, 1) moves {_coords(pt)} to "
                                 f"{_coords(act_on_point(add, pt))}")
    return [
        _fail("every orbit tag realized", realized),
        _fail("orbit tags invariant", tag_inv),
        _fail("orbit keys invariant", key_inv),
        _fail("additive part fixes cusp-fiber points", fixes),
    ]


def _coords(pt) -> str:
    from .scalars import format_scalar

    return "(" + ", ".join(format_scalar(c) for c in pt.coords()) + ")"


def _on_cusp(pt) -> bool:
    p = pt.params
    return scalar_pow(pt.x, p.d) + scalar_pow(pt.z, p.a2) == 0


# 9 ------------------------------------------------------------------------

def _rational_root(c: Fraction, n: int) -> Fraction | None:
    """r >= 0 with r^n == |c|, if rational."""
    c = abs(c)

    def iroot(k: int) -> int | None:
        r = round(k ** (1.0 / n))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** n == k:
                return cand
        return None

    a, b = iroot(c.numerator), iroot(c.denominator)
    return None if a is None or b is None else Fraction(a, b)


def count_t_solutions(p: ThreefoldParams, x0: Fraction) -> int | None:
    """Distinct roots of x0 + t^a3 among zeta_(2 a3)^j * r, or None if
    |x0| has no rational a3-th root."""
    r = _rational_root(x0, p.a3)
    if r is None:
        return None
    n = 2 * p.a3
    z = zeta(n)
    roots = set()
    for j in range(n):
        t = scalar_pow(z, j) * r
        if x0 + scalar_pow(t, p.a3) == 0:
            roots.add(t.coeffs if isinstance(t, Cyclo) else t)
    return len(roots)


def check_fibers(tuples, rng, counts):
    bad = []
    grid = [Fraction(v) for v in (-2, -1, 0, 1, 2)]
    for p in tuples:
        for x0 in grid:
            for z0 in grid:
                got = fiber_type(p, x0, z0)
                f0 = x0 ** p.d + z0 ** p.a2
                if f0 != 0:
                    ok = (got.tag, got.count) == ("Line", 1)
                elif x0 == 0:
                    ok = (got.tag, got.count) == ("Line", 1)
                else:
                    roots = count_t_solutions(p, x0)
                    ok = got.tag == "MultiLine" and got.count == p.a3 and roots in (None, p.a3)
                if not ok:
                    bad.append(f"{p} ({x0}, {z0}) -> {got}")
    return [_fail("fiber types on 5x5 grid", bad)]


# 10 -----------------------------------------------------------------------

def check_ml_stability(tuples, rng, counts):
    bad = []
    for p in tuples:
        tests = [X, Z, X ** 2 * Z, p.f]
        for _ in range(20):
            a = _random_element(rng, p, None)
            for g in tests + [random_poly(rng, "xz", 3)]:
                out = apply_aut(a, g)
                if out.to_poly().involves("y", "t"):
                    bad.append(f"{p} ({a.p}, {a.mu}) on {g}")
    return [_fail("C[x,z] is stable", bad)]


# 11 -----------------------------------------------------------------------

def check_root_of_unity(tuples, rng, counts):
    p = make_params(3, 1, 2, 3)
    z3 = zeta(3)
    a = Automorphism(p, Poly(), scalar_pow(z3, 2))
    imgs = generator_images(a)
    failures = []
    if imgs.x != X or imgs.z != Z or imgs.t != Poly.var("t") * z3:
        failures.append(f"images {imgs.to_json()}")
    a2 = compose(a, a)
    a3 = compose(a2, a)
    e = identity(p)
    if a == e or a2 == e or a3 != e:
        failures.append("order is not 3")
    return [_fail("zeta_3^2 torus element", failures)]


CHECKS: tuple[Callable, ...] = (
    check_homogeneity,
    check_derivation,
    check_exponentials,
    check_group_law,
    check_semidirect,
    check_ideal_certificates,
    check_normal_form,
    check_orbits,
    check_fibers,
    check_ml_stability,
    check_root_of_unity,
)


def run_suite(seed: int = 0, tuples: Iterable[tuple] = DEFAULT_TUPLES,
              counts: Counts = Counts()) -> list[CheckResult]:
    params = [make_params(*t) for t in tuples]
    results: list[CheckResult] = []
    for i, check in enumerate(CHECKS):
        rng = SplitMix64(seed * 1000003 + i)
        results.extend(check(params, rng, counts))
    return results
