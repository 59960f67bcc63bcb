"""The twelve acceptance criteria, each at its exact stated sample size.

Every criterion records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary. Run ``python3 tests/test_acceptance.py`` to get just the lines.
"""

import subprocess
import sys

import pytest

from kr2.coordring import make_params
from kr2.verify import CHECKS, Counts, DEFAULT_TUPLES
from kr2.sampling import SplitMix64

SEED = 0
COUNTS = Counts(exp_samples=50, group_pairs=100, ideal_samples=200,
                normal_form_samples=200, orbit_elements=50, orbit_points=20)

TITLES = {
    1: "relation homogeneity",
    2: "derivation correctness",
    3: "exponential automorphisms",
    4: "group-law oracle",
    5: "semidirect structure",
    6: "ideal certificates",
    7: "normal-form uniqueness",
    8: "orbit inventory",
    9: "fiber types",
    10: "ML-stability surrogate",
    11: "root-of-unity torus element",
    12: "CLI golden transcripts",
}

RESULT_LINES: dict[int, str] = {}

GOLDEN = [
    (["--d", "3", "--l", "1", "--a2", "2", "--a3", "3", "normalize", "y*(x^3+z^2)"],
     0, "-x - t^3\n"),
    (["member-i", "x"], 1, "not member\n"),
    (["orbit", "-1", "7", "1", "1", "--json"], 0,
     '{"tag":"CuspFamily","key":{"num":7,"den":1}}\n'),
    (["exp", "--q", "1"], 0,
     "x -> x\n"
     "y -> x^6 + 2*x^3*z^2 - 3*x^3*t + y + z^4 - 3*z^2*t + 3*t^2\n"
     "z -> z\n"
     "t -> -x^3 - z^2 + t\n"
     "p = -1\n"
     "mu = 1\n"),
]


def _cli_failures() -> list[str]:
    bad = []
    for argv, code, out in GOLDEN:
        proc = subprocess.run([sys.executable, "-m", "kr2", *argv], capture_output=True, text=True)
        if (proc.returncode, proc.stdout) != (code, out):
            bad.append(f"{' '.join(argv)}: exit {proc.returncode}, output {proc.stdout!r}")
    return bad


def evaluate(n: int) -> tuple[bool, str]:
    if n == 12:
        bad = _cli_failures()
        return not bad, "; ".join(bad)
    params = [make_params(*t) for t in DEFAULT_TUPLES]
    rng = SplitMix64(SEED * 1000003 + (n - 1))
    results = CHECKS[n - 1](params, rng, COUNTS)
    failed = [r for r in results if not r.passed]
    return not failed, "; ".join(f"{r.name}: {r.detail}" for r in failed)


def _record(n: int, ok: bool, detail: str) -> str:
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {TITLES[n]}"
    if not ok:
        line += f" -- {detail}"
    RESULT_LINES[n] = line
    print(line)
    return line


@pytest.mark.parametrize("n", list(range(1, 13)), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(n):
    ok, detail = evaluate(n)
    _record(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    all_ok = True
    for n in range(1, 13):
        ok, detail = evaluate(n)
        _record(n, ok, detail)
        all_ok &= ok
    sys.exit(0 if all_ok else 1)
