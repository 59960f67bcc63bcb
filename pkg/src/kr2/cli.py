"""``kr2`` command line.

Exit codes: 0 success or true, 1 false or not a member (or a failed verify
check), 2 validation error, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import autgroup, coordring, geometry, lnd
from .autgroup import Automorphism, NotAnAutomorphismOfX, SubstitutionData
from .coordring import ConstraintViolation, make_params, normal_form
from .parsing import ParseError, parse_poly, parse_scalar
from .polynomials import VARS, Poly
from .scalars import format_scalar, scalar_to_json

EXIT_OK, EXIT_FALSE, EXIT_INVALID, EXIT_PARSE = 0, 1, 2, 3


class _Session:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.params = make_params(args.d, args.l, args.a2, args.a3)
        self.cyclo = args.cyclo
        self.json = _json_mode(args)

    def poly(self, src: str) -> Poly:
        return parse_poly(src, self.cyclo)

    def xz_poly(self, src: str) -> Poly:
        p = self.poly(src)
        if p.involves("y", "t"):
            raise ValueError(f"expected a polynomial in x and z, got {p}")
        return p

    def scalar(self, src: str):
        return parse_scalar(src, self.cyclo)

    def element(self, p: str, mu: str) -> Automorphism:
        return Automorphism(self.params, self.xz_poly(p), self.scalar(mu))


def _json_mode(args: argparse.Namespace) -> bool:
    return args.json or os.environ.get("KR2_OUTPUT", "text") == "json"


def _emit(session: _Session, text: str, payload) -> None:
    if session.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def _element_text(a: Automorphism) -> str:
    return f"p = {a.p}\nmu = {format_scalar(a.mu)}"


def _images_text(s: SubstitutionData) -> str:
    return "\n".join(f"{v} -> {img}" for v, img in s.as_dict().items())


# subcommands -----------------------------------------------------------------

def cmd_params(s: _Session) -> int:
    p = s.params
    w = dict(zip(VARS, p.weights))
    text = (f"params: d={p.d} l={p.l} a2={p.a2} a3={p.a3}\n"
            f"f = {p.f}\nP = {p.P}\n"
            "weights: " + " ".join(f"{v}={w[v]}" for v in VARS))
    _emit(s, text, {"d": p.d, "l": p.l, "a2": p.a2, "a3": p.a3,
                    "f": str(p.f), "P": str(p.P), "weights": w})
    return EXIT_OK


def cmd_normalize(s: _Session) -> int:
    nf = normal_form(s.poly(s.args.poly), s.params)
    _emit(s, str(nf), nf.to_json())
    return EXIT_OK


def cmd_eq(s: _Session) -> int:
    same = coordring.ring_eq(s.poly(s.args.lhs), s.poly(s.args.rhs), s.params)
    _emit(s, "true" if same else "false", {"equal": same})
    return EXIT_OK if same else EXIT_FALSE


def cmd_apply(s: _Session) -> int:
    out = autgroup.apply_aut(s.element(s.args.p, s.args.mu), s.poly(s.args.poly))
    _emit(s, str(out), out.to_json())
    return EXIT_OK


def cmd_compose(s: _Session) -> int:
    a = autgroup.compose(s.element(s.args.p1, s.args.mu1), s.element(s.args.p2, s.args.mu2))
    _emit(s, _element_text(a), a.to_json())
    return EXIT_OK


def cmd_inverse(s: _Session) -> int:
    a = autgroup.inverse(s.element(s.args.p, s.args.mu))
    _emit(s, _element_text(a), a.to_json())
    return EXIT_OK


def _read_images(s: _Session) -> SubstitutionData:
    given = {v: getattr(s.args, v) for v in VARS}
    if all(val is None for val in given.values()):
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            name, sep, rhs = line.partition("=")
            name = name.strip()
            if not sep or name not in VARS:
                raise ValueError(f"expected a line 'v=<poly>' with v in x,y,z,t, got {line!r}")
            given[name] = rhs
    missing = [v for v in VARS if given[v] is None]
    if missing:
        raise ValueError(f"missing image(s) for {', '.join(missing)}")
    return SubstitutionData(**{v: s.poly(given[v]) for v in VARS})


def cmd_decompose(s: _Session) -> int:
    a = autgroup.decompose(_read_images(s), s.params)
    _emit(s, _element_text(a), a.to_json())
    return EXIT_OK


def _emit_element_with_images(s: _Session, a: Automorphism, images: SubstitutionData) -> None:
    _emit(s, _images_text(images) + "\n" + _element_text(a),
          {"images": images.to_json(), "element": a.to_json()})


def cmd_exp(s: _Session) -> int:
    D = lnd.Derivation(s.params, s.xz_poly(s.args.q))
    images = SubstitutionData(**lnd.exp_images(D))
    _emit_element_with_images(s, lnd.exp_lnd(D), images)
    return EXIT_OK


def cmd_lift(s: _Session) -> int:
    a = autgroup.lift_from_A(s.xz_poly(s.args.p), s.params)
    _emit_element_with_images(s, a, autgroup.generator_images(a))
    return EXIT_OK


def _point(s: _Session, coords) -> geometry.SurfacePoint:
    return geometry.make_point(s.params, *(s.scalar(c) for c in coords))


def _point_payload(pt: geometry.SurfacePoint):
    text = "(" + ", ".join(format_scalar(c) for c in pt.coords()) + ")"
    return text, {v: scalar_to_json(c) for v, c in pt.as_dict().items()}


def cmd_orbit(s: _Session) -> int:
    cls = geometry.orbit_classify(_point(s, s.args.coords))
    _emit(s, str(cls), cls.to_json())
    return EXIT_OK


def cmd_fiber(s: _Session) -> int:
    ft = geometry.fiber_type(s.params, s.scalar(s.args.x0), s.scalar(s.args.z0))
    _emit(s, str(ft), {"tag": ft.tag, "count": ft.count})
    return EXIT_OK


def cmd_member_i(s: _Session) -> int:
    res = coordring.ideal_I_membership(s.poly(s.args.poly), s.params)
    if res.member:
        _emit(s, f"member\nA = {res.A}\nB = {res.B}",
              {"member": True, "A": str(res.A), "B": str(res.B)})
        return EXIT_OK
    _emit(s, "not member", {"member": False})
    return EXIT_FALSE


def cmd_member_j(s: _Session) -> int:
    res = coordring.ideal_J_membership(s.poly(s.args.poly), s.params)
    if res.member:
        _emit(s, f"member\nh = {res.witness}", {"member": True, "witness": str(res.witness)})
        return EXIT_OK
    _emit(s, "not member", {"member": False})
    return EXIT_FALSE


def cmd_point_act(s: _Session) -> int:
    out = autgroup.act_on_point(s.element(s.args.p, s.args.mu), _point(s, s.args.coords))
    _emit(s, *_point_payload(out))
    return EXIT_OK


def cmd_verify(s: _Session) -> int:
    from .verify import run_suite

    results = run_suite(seed=s.args.seed)
    ok = all(r.passed for r in results)
    _emit(s, "\n".join(r.line() for r in results),
          {"seed": s.args.seed, "passed": ok,
           "results": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                       for r in results]})
    return EXIT_OK if ok else EXIT_FALSE


# parser -----------------------------------------------------------------------

def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--d", type=int, default=default(3), help="exponent d (default 3)")
    parser.add_argument("--l", type=int, default=default(1), help="exponent l (default 1)")
    parser.add_argument("--a2", type=int, default=default(2), help="exponent alpha_2 (default 2)")
    parser.add_argument("--a3", type=int, default=default(3), help="exponent alpha_3 (default 3)")
    parser.add_argument("--cyclo", type=int, default=default(None), metavar="N",
                        help="enable the scalar 'zeta', a primitive N-th root of unity")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit JSON (also KR2_OUTPUT=json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kr2",
        description="Exact computations on the affine threefold "
                    "x + y*(x^d + z^a2)^l + t^a3 = 0.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        _common(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    add("params", cmd_params, "show f, P and the torus weights")
    add("normalize", cmd_normalize, "normal form in C[X]").add_argument("poly")
    sp = add("eq", cmd_eq, "equality in C[X]")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp = add("apply", cmd_apply, "apply the automorphism (p, mu) to a polynomial")
    sp.add_argument("--p", default="0")
    sp.add_argument("--mu", default="1")
    sp.add_argument("poly")
    sp = add("compose", cmd_compose, "(p1, mu1) o (p2, mu2)")
    for flag, dflt in (("--p1", "0"), ("--mu1", "1"), ("--p2", "0"), ("--mu2", "1")):
        sp.add_argument(flag, default=dflt)
    sp = add("inverse", cmd_inverse, "inverse of (p, mu)")
    sp.add_argument("--p", default="0")
    sp.add_argument("--mu", default="1")
    sp = add("decompose", cmd_decompose,
             "recover (p, mu) from images (flags, or stdin lines x=..., y=..., z=..., t=...)")
    for v in VARS:
        sp.add_argument(f"--{v}", dest=v, default=None, metavar="POLY")
    add("exp", cmd_exp, "exp(q * d) for q in C[x,z]").add_argument("--q", default="1")
    add("lift", cmd_lift, "lift t -> t + f^l p to X").add_argument("--p", default="0")
    add("orbit", cmd_orbit, "orbit tag and key of a point").add_argument("coords", nargs=4)
    sp = add("fiber", cmd_fiber, "fiber type over (x0, z0)")
    sp.add_argument("x0")
    sp.add_argument("z0")
    add("member-i", cmd_member_i, "membership in (f^l, x + t^a3)").add_argument("poly")
    add("member-j", cmd_member_j, "membership in f^l C[X]").add_argument("poly")
    sp = add("point-act", cmd_point_act, "act on a point by (p, mu)")
    sp.add_argument("--p", default="0")
    sp.add_argument("--mu", default="1")
    sp.add_argument("coords", nargs=4)
    add("verify", cmd_verify, "run the invariant suite").add_argument(
        "--seed", type=int, default=0)
    return parser


def _report_error(as_json: bool, kind: str, message: str, extra=None) -> None:
    if as_json:
        payload = {"error": kind, "message": message}
        if extra:
            payload.update(extra)
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(f"{kind}: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = _json_mode(args)
    try:
        return args.func(_Session(args))
    except ParseError as exc:
        diag = exc.diagnostic
        _report_error(as_json, "parse error", str(diag),
                      {"offset": diag.offset, "expected": diag.expected, "found": diag.found})
        return EXIT_PARSE
    except NotAnAutomorphismOfX as exc:
        _report_error(as_json, "not an automorphism of X", str(exc), {"reason": exc.reason})
        return EXIT_INVALID
    except ConstraintViolation as exc:
        _report_error(as_json, "constraint violation", str(exc))
        return EXIT_INVALID
    except (ValueError, ArithmeticError, KeyError, lnd.CapExceeded) as exc:
        _report_error(as_json, "invalid input", str(exc))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
