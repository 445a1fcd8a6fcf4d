"""Roots of one-sided polynomials over quaternion and octonion division algebras.

The roots of ``f`` live on the spheres ``x^2 - t x + n = 0`` cut out by the
complex roots of the companion ``C_f``.  On each sphere the remainder
``a x + b`` of ``f`` modulo ``x^2 - t x + n`` decides everything: ``a = b = 0``
makes the whole sphere roots, otherwise the only candidate is ``-a^{-1} b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np
from scipy.optimize import minimize
from shapely.geometry import MultiPoint, Point
from sympy import Poly, QQ, Rational, symbols

from cdalg.algebra import Algebra, Element
from cdalg.poly import (
    CDPoly, ScalarPoly, companion, divide_central_quadratic, right_divide_linear,
)

MAX_ITER = 500
SPHERE_SAMPLES = 20


class ConvergenceError(ArithmeticError):
    pass


class RootFindingError(ArithmeticError):
    pass


# -- scalar polynomial engine ----------------------------------------------


def durand_kerner(coeffs: Sequence[complex], tol: float = 1e-9,
                  max_iter: int = MAX_ITER) -> list[complex]:
    """All complex roots of ``sum coeffs[k] x^k`` (constant term first).

    Weierstrass / Durand-Kerner iteration from the points ``(0.4+0.9i)^k``.
    Stops when every correction is below ``tol`` (relative to ``|z|`` once
    ``|z| > 1``); failing that after ``max_iter`` sweeps the estimates are
    still accepted if their residuals pass, which covers the slow linear
    convergence at multiple roots.
    """
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    n = len(cs) - 1
    if n < 1:
        raise ValueError("need degree >= 1")
    lead = cs[-1]
    monic = [c / lead for c in cs]

    def p(z):
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    seed = complex(0.4, 0.9)
    z = [seed ** k for k in range(n)]
    for _ in range(max_iter):
        biggest = 0.0
        for i in range(n):
            denom = 1 + 0j
            for j in range(n):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = complex(tol, tol)
            step = p(z[i]) / denom
            z[i] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[i])))
        if biggest <= tol:
            break
    for zi in z:
        # backward-error bound; stays meaningful near multiple roots
        scale = sum(abs(c) * max(1.0, abs(zi)) ** k for k, c in enumerate(monic))
        if abs(p(zi)) > max(tol, 1e-12) * scale:
            raise ConvergenceError(f"Durand-Kerner did not converge (root estimate {zi})")
    return z


@dataclass(frozen=True)
class Sphere:
    """Quadratic-equivalence class ``x^2 - t x + n`` carried by a root pair."""

    t: float
    n: float
    multiplicity: int
    root: complex

    @property
    def is_real(self) -> bool:
        return self.root.imag == 0


def _cluster(points: list[complex], tol: float, per_root: int = 1) -> list[tuple[complex, int]]:
    """Group root estimates that belong to one multiple root.

    An m-fold root scatters its estimates over roughly ``tol**(1/m)``.  Around
    each unassigned estimate we take the largest ``m`` whose ball of radius
    ``max(sqrt(tol), tol**(1/m))`` (relative once ``|z| > 1``) holds at least
    ``m * per_root`` unassigned estimates.  ``per_root`` is how many estimates
    one unit of multiplicity contributes.
    """
    left = list(points)
    out = []
    while left:
        z = left[0]
        scale = max(1.0, abs(z))
        group = [z]
        for m in range(len(left) // per_root, 0, -1):
            radius = max(math.sqrt(tol), tol ** (1.0 / m)) * scale
            near = [w for w in left if abs(w - z) <= radius]
            if len(near) >= m * per_root:
                group = near
                break
        for w in group:
            left.remove(w)
        out.append((sum(group) / len(group), len(group)))
    return out


def _spheres_from_roots(zs: list[complex], mult: int, tol: float) -> list[Sphere]:
    radius = math.sqrt(tol)
    real, upper = [], []
    for z in zs:
        if abs(z.imag) <= radius * max(1.0, abs(z)):
            real.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            upper.append(z.conjugate())
    out = []
    for z, m in _cluster(real, tol):
        r = z.real
        out.append(Sphere(2 * r, r * r, m * mult, complex(r, 0.0)))
    # a conjugate pair lands twice in the upper half plane
    for z, m in _cluster(upper, tol, per_root=2):
        out.append(Sphere(2 * z.real, abs(z) ** 2, max(1, m // 2) * mult, z))
    return out


def real_roots_complex(p: ScalarPoly, tol: float = 1e-9) -> list[Sphere]:
    """Complex roots of a real polynomial grouped into spheres ``(t, n)``.

    Conjugate pairs become ``(2 Re z, |z|^2)``; real roots come back as
    degenerate spheres with ``root.imag == 0``.  Exact (rational) input is made
    square-free first so the iteration only sees simple roots.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if p.is_exact:
        x = symbols("x")
        sp = Poly([Rational(str(c)) for c in reversed(p.coeffs)], x, domain=QQ)
        _, factors = sp.sqf_list()
        spheres: list[Sphere] = []
        for fac, mult in factors:
            if fac.degree() < 1:
                continue
            cs = [float(c) for c in reversed(fac.all_coeffs())]
            spheres.extend(_spheres_from_roots(durand_kerner(cs, tol), mult, tol))
        return _merge(spheres, tol)
    zs = durand_kerner([float(c) for c in p.coeffs], tol)
    return _merge(_spheres_from_roots(zs, 1, tol), tol)


def _merge(spheres: list[Sphere], tol: float) -> list[Sphere]:
    out: list[Sphere] = []
    radius = math.sqrt(tol)
    for s in sorted(spheres, key=lambda s: (s.t, s.n)):
        for k, o in enumerate(out):
            if abs(o.root - s.root) <= radius * max(1.0, abs(s.root)):
                out[k] = Sphere(o.t, o.n, o.multiplicity + s.multiplicity, o.root)
                break
        else:
            out.append(s)
    return out


# -- sphere classification --------------------------------------------------

Kind = Literal["isolated", "spherical", "none"]


@dataclass
class SphereClass:
    t: float
    n: float
    kind: Kind
    lam: Element | None = None
    residual: float = 0.0
    multiplicity: int = 1

    def to_dict(self) -> dict:
        out = {"t": self.t, "n": self.n, "kind": self.kind, "residual": self.residual}
        if self.lam is not None:
            out["lambda"] = [repr(float(c) + 0.0) for c in self.lam.coords]
        return out


def _require_division(A: Algebra) -> None:
    if A.dim > 8 or not A.is_anisotropic:
        raise ValueError(
            "root classification needs a division algebra of dimension <= 8 "
            "(anisotropic norm)"
        )


def _float_algebra(A: Algebra) -> Algebra:
    return A if not A.exact else A.with_mode("f64")


def coefficient_scale(f: CDPoly, n: float) -> float:
    r = math.sqrt(max(n, 0.0))
    return 1.0 + f.max_coeff() * (1.0 + r) ** max(f.degree, 0)


def sphere_point(A: Algebra, t: float, n: float, direction: Element | None = None) -> Element:
    """The point ``t/2 + r u`` of the sphere, ``u`` a unit pure imaginary."""
    A = _float_algebra(A)
    if direction is None:
        direction = A.basis(1)
    u = [0.0] + [float(c) for c in direction.coords[1:]]
    length = math.sqrt(sum(c * c for c in u))
    radius = math.sqrt(max(n - t * t / 4, 0.0))
    coords = [c / length * radius for c in u]
    coords[0] = t / 2
    return Element(A, coords)


def sphere_directions(A: Algebra, count: int = SPHERE_SAMPLES) -> list[Element]:
    """Deterministic pure-imaginary directions: basis vectors, then pair sums."""
    A = _float_algebra(A)
    dirs = [A.basis(k) for k in range(1, A.dim)]
    k = 1
    while len(dirs) < count:
        for j in range(1, A.dim):
            i = (j + k) % (A.dim - 1) + 1
            if i != j:
                dirs.append(A.basis(j) + A.basis(i).scale((-1) ** k))
            if len(dirs) >= count:
                break
        k += 1
    return dirs[:count]


def _project_to_sphere(lam: Element, t: float, n: float) -> Element:
    imag = Element(lam.algebra, [0.0] + list(lam.coords[1:]))
    if imag.magnitude() == 0:
        return lam
    return sphere_point(lam.algebra, t, n, imag)


def classify_sphere(f: CDPoly, t: float, n: float) -> SphereClass:
    """Decide whether the sphere ``(t, n)`` carries no root, one, or only roots."""
    _require_division(f.algebra)
    A = _float_algebra(f.algebra)
    ff = f.to_mode(A)
    loose = math.sqrt(A.tol)
    scale = coefficient_scale(ff, n)

    disc = t * t - 4 * n
    if disc >= -loose * (1 + abs(n)):
        # real sphere: x^2 - t x + n has only real solutions in a division algebra
        s = math.sqrt(max(disc, 0.0))
        best = None
        for r in sorted({(t - s) / 2, (t + s) / 2}):
            lam = A.scalar(r)
            res = ff(lam).max_abs()
            if best is None or res < best[1]:
                best = (lam, res)
        lam, res = best
        if res <= loose * scale:
            return SphereClass(t, n, "isolated", lam, res)
        return SphereClass(t, n, "none", None, res)

    _, a, b = divide_central_quadratic(ff, t, n)
    if a.max_abs() <= loose * scale:
        if b.max_abs() <= loose * scale:
            worst = max(ff(sphere_point(A, t, n, d)).max_abs() for d in sphere_directions(A))
            return SphereClass(t, n, "spherical", None, worst)
        return SphereClass(t, n, "none", None, b.max_abs())
    lam = -(a.inverse() * b)
    on_sphere = (abs(lam.trace() - t) <= loose * (1 + abs(t))
                 and abs(lam.norm() - n) <= loose * (1 + abs(n)))
    if not on_sphere:
        return SphereClass(t, n, "none", None, ff(lam).max_abs())
    lam = _project_to_sphere(lam, t, n)
    res = ff(lam).max_abs()
    if res <= loose * scale:
        return SphereClass(t, n, "isolated", lam, res)
    return SphereClass(t, n, "none", None, res)


def all_roots(f: CDPoly) -> list[SphereClass]:
    """Classify every sphere of the companion polynomial of ``f``.

    Includes ``kind == "none"`` entries; filter on ``kind`` for the roots.
    """
    _require_division(f.algebra)
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    spheres = real_roots_complex(companion(f), f.algebra.tol)
    out = []
    for s in spheres:
        cls = classify_sphere(f, s.t, s.n)
        cls.multiplicity = s.multiplicity
        out.append(cls)
    return out


def a_root(f: CDPoly) -> Element:
    """One root of ``f``: the first isolated one, else a point of a spherical class."""
    classes = all_roots(f)
    for c in classes:
        if c.kind == "isolated":
            return c.lam
    for c in classes:
        if c.kind == "spherical":
            return sphere_point(f.algebra, c.t, c.n)
    raise RootFindingError(f"no root found for {f}")


# -- factorization ------------------------------------------------------------


@dataclass
class Factorization:
    """``((c (x - lambdas[0])) (x - lambdas[1])) ... (x - lambdas[-1])``.

    ``lambdas[-1]`` is a root of the original polynomial; earlier entries are
    roots of successive quotients only.
    """

    leading: Element
    lambdas: list[Element] = field(default_factory=list)

    def expand(self) -> CDPoly:
        A = self.leading.algebra
        p = CDPoly(A, [self.leading])
        for lam in self.lambdas:
            p = p * CDPoly.linear(A, lam)
        return p

    def residual(self, f: CDPoly) -> float:
        g = self.expand()
        A = g.algebra
        ff = f.to_mode(A)
        n = max(len(ff.coeffs), len(g.coeffs))
        return max((ff.coeff(k) - g.coeff(k)).max_abs() for k in range(n))

    def to_dict(self, f: CDPoly | None = None) -> dict:
        out = {
            "leading": [repr(float(c)) for c in self.leading.coords],
            "lambdas": [[repr(float(c)) for c in lam.coords] for lam in self.lambdas],
        }
        if f is not None:
            out["residual"] = self.residual(f)
        return out


def factorize(f: CDPoly) -> Factorization:
    _require_division(f.algebra)
    A = _float_algebra(f.algebra)
    current = f.to_mode(A)
    if current.degree < 1:
        raise ValueError("need degree >= 1")
    if current.coeffs[-1].norm() <= A.tol:
        raise ValueError("leading coefficient is not invertible")
    loose = math.sqrt(A.tol)
    found: list[Element] = []
    while current.degree >= 1:
        lam = a_root(current)
        g, r = right_divide_linear(current, lam)
        if r.max_abs() > loose * coefficient_scale(current, lam.norm()):
            raise RootFindingError(f"x - {lam} left remainder {r}")
        found.append(lam)
        current = g
    return Factorization(current.coeffs[0], found[::-1])


# -- convex hull geometry -----------------------------------------------------


def _as_vectors(points) -> np.ndarray:
    rows = []
    for p in points:
        if isinstance(p, Element):
            rows.append([float(c) for c in p.coords])
        elif isinstance(p, (complex, float, int)):
            rows.append([complex(p).real, complex(p).imag])
        else:
            rows.append([float(c) for c in p])
    return np.asarray(rows, dtype=float)


def hull_distance(points, z) -> float:
    """Euclidean distance from ``z`` to the convex hull of ``points``.

    Points may be complex numbers, Elements, or real coordinate sequences.
    The planar case is exact via shapely; higher dimensions solve the simplex
    least-squares problem.
    """
    pts = _as_vectors(points)
    if len(pts) == 0:
        raise ValueError("need at least one point")
    zv = _as_vectors([z])[0]
    if pts.shape[1] == 2:
        return float(MultiPoint([tuple(p) for p in pts]).convex_hull.distance(Point(*zv)))
    k = len(pts)

    def obj(w):
        d = pts.T @ w - zv
        return float(d @ d)

    def grad(w):
        return 2 * pts @ (pts.T @ w - zv)

    res = minimize(
        obj, np.full(k, 1.0 / k), jac=grad, method="SLSQP",
        bounds=[(0.0, 1.0)] * k,
        constraints=[{"type": "eq", "fun": lambda w: w.sum() - 1, "jac": lambda w: np.ones(k)}],
        options={"ftol": 1e-15, "maxiter": 500},
    )
    return math.sqrt(max(res.fun, 0.0))


def as_complex(lam: Element) -> complex:
    """Representative of ``lam``'s sphere in the complex plane (upper half)."""
    t = float(lam.trace())
    n = float(lam.norm())
    return complex(t / 2, math.sqrt(max(n - t * t / 4, 0.0)))

