"""Replay of the worked examples and counterexamples as a pass/fail checklist.

Each case is a small deterministic function returning ``(passed, detail)``.
Exact cases run in rational mode regardless of any CLI scalar setting.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from cdalg.algebra import (
    bilinear, format_element, identity_report, octonions, quaternions,
    sedenions, solve_left,
)
from cdalg.eigen import (
    Matrix2, associated_quadratic, invert_h_matrix, lmr_member, spectrum_oracle,
    triangular_spectrum, verify_eigenpair, zero_in_spectrum,
)
from cdalg.poly import CDPoly, companion, derivative, right_divide_linear
from cdalg.roots import all_roots, factorize, hull_distance, coefficient_scale

Detail = dict


@dataclass(frozen=True)
class ReproCase:
    id: str
    topic: str
    title: str
    mode: str
    runner: Callable[[int], tuple[bool, Detail]]


@dataclass
class CaseResult:
    id: str
    topic: str
    title: str
    passed: bool
    detail: Detail
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bits = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.id:<4} {status}  [{self.topic}] {self.title} :: {bits}"

    def to_dict(self) -> dict:
        return {
            "id": self.id, "topic": self.topic, "title": self.title,
            "passed": self.passed, "detail": self.detail, "seconds": self.seconds,
        }


def _sedenion_pair():
    S = sedenions()
    return S, S.basis(1) + S.basis(10), S.basis(7) + S.basis(12)


def r1_zero_divisors(seed: int):
    S, a, b = _sedenion_pair()
    ab, ba = a * b, b * a
    ok = (ab.is_zero() and ba.is_zero() and a.norm() == 2 and b.norm() == 2
          and ab.norm() == 0 and a.norm() * b.norm() == 4)
    return ok, {"ab": str(ab), "ba": str(ba), "N(a)": str(a.norm()),
                "N(b)": str(b.norm()), "N(ab)": str(ab.norm())}


def r2_linear_quadratic(seed: int):
    O = octonions()
    rng = random.Random(seed)
    checked = 0
    for _ in range(20):
        a = O.random_nonzero(rng)
        lam = O.random_element(rng)
        other = O.random_element(rng)
        lin = CDPoly(O, [-(a * lam), a])
        quad = CDPoly(O, [-(lam * lam) - a * lam, a, O.one])
        for f in (lin, quad):
            g, r = right_divide_linear(f, lam)
            if f(lam) != O.zero or r != O.zero:
                return False, {"poly": str(f), "lambda": str(lam)}
            if (f(other) == O.zero) != (right_divide_linear(f, other)[1] == O.zero):
                return False, {"poly": str(f), "other": str(other)}
            checked += 1
        g, _ = right_divide_linear(quad, lam)
        if g != CDPoly(O, [lam + a, O.one]):
            return False, {"quotient": str(g)}
    return True, {"instances": checked}


def r3_root_vs_factor(seed: int):
    S, a, b = _sedenion_pair()
    f1 = CDPoly(S, [b, S.zero, b * Fraction(1, 2)])
    _, r1 = right_divide_linear(f1, a)
    f2 = CDPoly(S, [S.zero, b, b])
    prod = CDPoly(S, [b, b]) * CDPoly.linear(S, a)
    _, r2 = right_divide_linear(f2, a)
    ok = (f1(a).is_zero() and r1 == b and prod == f2 and r2.is_zero()
          and f2(a) == b.scale(-2))
    return ok, {"f1(a)": str(f1(a)), "rem1": str(r1), "f2(a)": str(f2(a)), "rem2": str(r2)}


def r4_octonion_closure(seed: int):
    O = octonions()
    rng = random.Random(seed)
    worst_root = worst_fac = 0.0
    for _ in range(10):
        deg = rng.randint(2, 4)
        f = CDPoly(O, [O.random_element(rng) for _ in range(deg)] + [O.random_nonzero(rng)])
        roots = [c for c in all_roots(f) if c.kind != "none"]
        if not roots:
            return False, {"rootless": str(f)}
        for c in roots:
            if c.kind == "isolated":
                worst_root = max(worst_root, c.residual / coefficient_scale(f, c.n))
        fac = factorize(f)
        worst_fac = max(worst_fac, fac.residual(f) / (1 + f.max_coeff()))
    ok = worst_root <= 1e-6 and worst_fac <= 1e-6
    return ok, {"max_root_residual": f"{worst_root:.2e}", "max_factor_residual": f"{worst_fac:.2e}"}


def r5_rootless(seed: int):
    S, a, b = _sedenion_pair()
    sol = solve_left(a, b)
    rng = random.Random(seed)
    chain = True
    for _ in range(25):
        x = S.random_element(rng)
        lhs = bilinear(a * x, b)
        chain &= lhs == -bilinear(x, a * b) == 0
    f = CDPoly(S, [-b, a])
    cf = companion(f)
    ok = sol is None and chain and bilinear(b, b) == 2 and cf == [2, 0, 2]
    return ok, {"solve_left": "none" if sol is None else str(sol),
                "<b,b>": str(bilinear(b, b)), "C_f": list(map(str, cf.coeffs))}


def r6_companion_failure(seed: int):
    S, a, b = _sedenion_pair()
    f = CDPoly(S, [S.zero, a])
    cf = companion(f)
    cf_at_b = CDPoly(S, [S.scalar(c) for c in cf.coeffs])(b)
    g = CDPoly(S, [-b, a])
    cg = companion(g)
    # every trace-0 norm-1 element is a root of 2x^2 + 2
    unit = S.basis(3)
    cg_root = CDPoly(S, [S.scalar(c) for c in cg.coeffs])(unit).is_zero()
    ok = (f(b).is_zero() and cf == [0, 0, 2] and not cf_at_b.is_zero()
          and cg == [2, 0, 2] and cg_root and solve_left(a, b) is None)
    return ok, {"f(b)": str(f(b)), "C_f": list(map(str, cf.coeffs)),
                "C_f(b)": str(cf_at_b), "C_g": list(map(str, cg.coeffs))}


def r7_not_spherical(seed: int):
    S, a, b = _sedenion_pair()
    f = CDPoly(S, [S.zero, a])
    same_class = (a.trace(), a.norm()) == (b.trace(), b.norm()) == ((-b).trace(), (-b).norm())
    ok = f(b).is_zero() and f(-b).is_zero() and same_class and f(a) == S.scalar(-2)
    return ok, {"f(b)": str(f(b)), "f(-b)": str(f(-b)), "f(a)": str(f(a)),
                "class": f"(t,n)=({a.trace()},{a.norm()})"}


def r8_critical_points(seed: int):
    H = quaternions()
    f = CDPoly(H, [H.basis(1), H.one, H.zero, H.scalar(Fraction(1, 3))])
    classes = all_roots(f)
    isolated = [c for c in classes if c.kind == "isolated"]
    off_plane = max(max(abs(c.lam.coords[2]), abs(c.lam.coords[3])) for c in isolated)
    dclasses = all_roots(derivative(f))
    spherical = [c for c in dclasses if c.kind == "spherical"]
    on_unit = any(abs(c.t) <= 1e-9 and abs(c.n - 1) <= 1e-9 for c in spherical)
    j = H.with_mode("f64").basis(2)
    dist = hull_distance([c.lam for c in isolated], j)
    ok = (len(isolated) == 3 and len(classes) == 3 and off_plane <= 1e-8
          and on_unit and dist > 0)
    return ok, {"isolated": len(isolated), "off_plane": f"{off_plane:.1e}",
                "f'_spherical": on_unit, "hull_distance(j)": f"{dist:.6f}"}


def _example_matrix():
    O = octonions()
    i, j = O.basis(1), O.basis(2)
    return O, Matrix2(i, O.one, i * j, j)


def r9_matrix_example(seed: int):
    O, B = _example_matrix()
    i, j, l = O.basis(1), O.basis(2), O.basis(4)
    half = Fraction(-1, 2)
    expected_inv = Matrix2(i.scale(half), (i * j).scale(half), O.scalar(-half), j.scale(half))
    inv_ok = invert_h_matrix(B) == expected_inv
    zero = zero_in_spectrum(B)
    w = (-l, i * l)
    w_ok = verify_eigenpair(B, O.zero, w)
    wl = (w[0] * l.inverse(), w[1] * l.inverse())
    wl_ok = not verify_eigenpair(B, O.zero, wl)
    left = Matrix2(i, O.zero, O.zero, i * j)
    right = Matrix2(O.one, -i, O.one, i)
    spec_left = {str(p.lam) for p in triangular_spectrum(left)}
    right_zero = zero_in_spectrum(right).member
    lmr = lmr_member(associated_quadratic(B), -i)
    ok = (inv_ok and zero.member and zero.witness == l and w_ok and wl_ok
          and left @ right == B and spec_left == {"e1", "e3"} and not right_zero
          and lmr.member and spectrum_oracle(B, O.zero))
    return ok, {"inverse": inv_ok, "zero_witness": str(zero.witness), "Bw=0": w_ok,
                "w*l^-1_not_eigvec": wl_ok, "left_spectrum": sorted(spec_left),
                "right_has_0": right_zero, "-i_in_LMR": lmr.member}


def r10_identities(seed: int):
    rep_o = identity_report(octonions(), 200, seed)
    rep_s = identity_report(sedenions(), 200, seed)
    o_ok = all(r.passed for r in rep_o.results.values())
    s_fail = {n for n, r in rep_s.results.items() if not r.passed}
    s_ok = ({"left_alternative", "right_alternative", "norm_multiplicative"} <= s_fail
            and rep_s["power_associative"].passed
            and all(rep_s[n].witness is not None for n in s_fail))
    return o_ok and s_ok, {"octonion_all_pass": o_ok, "sedenion_failures": sorted(s_fail),
                           "sedenion_norm_witness": [format_element(w) for w in
                                                     rep_s["norm_multiplicative"].witness][:2]}


CASES: tuple[ReproCase, ...] = (
    ReproCase("R1", "zero divisors", "sedenion zero divisors break norm multiplicativity", "exact", r1_zero_divisors),
    ReproCase("R2", "factors", "linear / monic quadratic: root iff right factor", "exact", r2_linear_quadratic),
    ReproCase("R3", "factors", "root without factor, factor without root", "exact", r3_root_vs_factor),
    ReproCase("R4", "roots", "octonion polynomials have roots and factor fully", "float", r4_octonion_closure),
    ReproCase("R5", "roots", "a x - b has no sedenion root", "exact", r5_rootless),
    ReproCase("R6", "companion", "companion / root correspondence fails in S", "exact", r6_companion_failure),
    ReproCase("R7", "roots", "roots neither isolated nor spherical in S", "exact", r7_not_spherical),
    ReproCase("R8", "critical points", "cubic quaternion critical points", "float", r8_critical_points),
    ReproCase("R9", "eigenvalues", "invertible octonion matrix with 0 in its spectrum", "exact", r9_matrix_example),
    ReproCase("R10", "identities", "identity suites for O and S", "exact", r10_identities),
)


def case_ids() -> list[str]:
    return [c.id for c in CASES]


def run_case(case: ReproCase, seed: int = 42) -> CaseResult:
    start = time.perf_counter()
    try:
        passed, detail = case.runner(seed)
    except Exception as exc:  # a crash is a failed case, not a crashed harness
        passed, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    return CaseResult(case.id, case.topic, case.title, bool(passed), detail,
                      time.perf_counter() - start)


def repro_all(seed: int = 42, only: list[str] | None = None) -> list[CaseResult]:
    selected = [c for c in CASES if only is None or c.id in only]
    return [run_case(c, seed) for c in selected]


__all__ = ["ReproCase", "CaseResult", "CASES", "case_ids", "run_case", "repro_all"]
