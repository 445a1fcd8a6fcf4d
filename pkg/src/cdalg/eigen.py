"""Left eigenvalues of 2x2 matrices over octonion and quaternion division algebras.

``lam`` is a left eigenvalue of ``B`` when ``B v = lam v`` for some nonzero
column ``v``.  For ``B = [[a, b], [c, d]]`` with ``b != 0`` every eigenpair has
the form ``(a + t((t^-1 b) s), (t, s t))`` where ``s`` is a root of
``t^-1 f`` and ``f = b x^2 + (a - d) x - c``.  The block matrix of left
multiplications ``[[L_(a-lam), L_b], [L_c, L_(d-lam)]]`` is singular exactly
at the eigenvalues, which gives an independent oracle for everything here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.stats import norm as normal_dist
from scipy.stats import qmc

from cdalg import linalg
from cdalg.algebra import Algebra, Element, left_mul_op, right_mul_op
from cdalg.poly import CDPoly, left_scale
from cdalg.roots import all_roots, sphere_directions, sphere_point

DEFAULT_SAMPLES = 256


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Matrix2:
    """``[[a, b], [c, d]]`` over one algebra."""

    a: Element
    b: Element
    c: Element
    d: Element

    def __post_init__(self):
        gs = {x.algebra.gammas for x in self.entries}
        if len(gs) != 1:
            raise ValueError("matrix entries belong to different algebras")

    @property
    def entries(self) -> tuple[Element, Element, Element, Element]:
        return (self.a, self.b, self.c, self.d)

    @property
    def algebra(self) -> Algebra:
        return self.a.algebra

    @classmethod
    def identity(cls, A: Algebra) -> Matrix2:
        return cls(A.one, A.zero, A.zero, A.one)

    def rows(self) -> list[list[Element]]:
        return [[self.a, self.b], [self.c, self.d]]

    def apply(self, v: Sequence[Element]) -> tuple[Element, Element]:
        v1, v2 = v
        return (self.a * v1 + self.b * v2, self.c * v1 + self.d * v2)

    def left_scale(self, e: Element) -> Matrix2:
        """``e B`` entrywise."""
        return Matrix2(*(e * x for x in self.entries))

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def to_mode(self, A: Algebra) -> Matrix2:
        return Matrix2(*(x.to_mode(A) for x in self.entries))

    def max_abs(self) -> float:
        return max(x.max_abs() for x in self.entries)

    def isclose(self, other: Matrix2, tol: float | None = None) -> bool:
        return all(x.isclose(y, tol) for x, y in zip(self.entries, other.entries))


@dataclass(frozen=True)
class EigenPair:
    lam: Element
    v: tuple[Element, Element]

    def to_dict(self) -> dict:
        fmt = _coords_out
        return {"lambda": fmt(self.lam), "v": [fmt(self.v[0]), fmt(self.v[1])]}


def _coords_out(x: Element) -> list[str]:
    return [str(c) if x.algebra.exact else repr(float(c)) for c in x.coords]


def _require_division(A: Algebra) -> None:
    if A.dim > 8 or not A.is_anisotropic:
        raise ValueError("needs a division algebra of dimension <= 8")


def associated_quadratic(B: Matrix2) -> CDPoly:
    """``f = b x^2 + (a - d) x - c``."""
    return CDPoly(B.algebra, [-B.c, B.a - B.d, B.b])


# -- verification -----------------------------------------------------------


def eigen_residual(B: Matrix2, lam: Element, v: Sequence[Element]) -> float:
    w = B.apply(v)
    return max((w[0] - lam * v[0]).max_abs(), (w[1] - lam * v[1]).max_abs())


def verify_eigenpair(B: Matrix2, lam: Element, v: Sequence[Element],
                     tol: float | None = None) -> bool:
    if all(x.is_zero() for x in v):
        raise ValueError("eigenvectors must be nonzero")
    A = B.algebra
    if A.exact and lam.algebra.exact and all(x.algebra.exact for x in v) and tol is None:
        return eigen_residual(B, lam, v) == 0
    tol = A.tol if tol is None else tol
    scale = max(1.0, B.max_abs() + lam.max_abs()) * max(x.max_abs() for x in v)
    return eigen_residual(B.to_mode(lam.algebra), lam, v) <= tol * scale


# -- triangular matrices ------------------------------------------------------


def _is_triangular(rows: list[list[Element]]) -> str | None:
    n = len(rows)
    lower = all(rows[i][j].is_zero() for i in range(n) for j in range(i + 1, n))
    if lower:
        return "lower"
    upper = all(rows[i][j].is_zero() for i in range(n) for j in range(i))
    return "upper" if upper else None


def triangular_spectrum(rows) -> list[EigenPair]:
    """Distinct diagonal entries of a triangular matrix, each with an eigenvector.

    The eigenvector is built by substitution, starting from the last
    occurrence (lower) or first occurrence (upper) of the diagonal value so
    the remaining diagonal pivots differ from it.
    """
    if isinstance(rows, Matrix2):
        rows = rows.rows()
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    kind = _is_triangular(rows)
    if kind is None:
        raise ValueError("matrix is not triangular")
    A = rows[0][0].algebra
    _require_division(A)
    diag = [rows[i][i] for i in range(n)]
    pairs: list[EigenPair] = []
    seen: list[Element] = []
    for lam in diag:
        if any(lam.isclose(s) for s in seen):
            continue
        seen.append(lam)
        v = [A.zero] * n
        if kind == "lower":
            i = max(k for k in range(n) if diag[k].isclose(lam))
            v[i] = A.one
            for j in range(i + 1, n):
                rhs = -sum((rows[j][k] * v[k] for k in range(i, j)), A.zero)
                v[j] = (diag[j] - lam).inverse() * rhs
        else:
            i = min(k for k in range(n) if diag[k].isclose(lam))
            v[i] = A.one
            for j in range(i - 1, -1, -1):
                rhs = -sum((rows[j][k] * v[k] for k in range(j + 1, i + 1)), A.zero)
                v[j] = (diag[j] - lam).inverse() * rhs
        pairs.append(EigenPair(lam, tuple(v)))
    return pairs


# -- eigenpairs via the associated quadratic -----------------------------------


def shift_eigenpair(e: Element, pair: EigenPair) -> EigenPair:
    """``(e lam, v e)``, an eigenpair of ``e B`` when ``pair`` is one of ``B``."""
    if e.is_zero():
        raise ValueError("shift element must be nonzero")
    _require_division(e.algebra)
    return EigenPair(e * pair.lam, (pair.v[0] * e, pair.v[1] * e))


def _roots_of(g: CDPoly) -> list[Element]:
    """Isolated roots plus deterministic samples of every spherical class."""
    out = []
    for cls in all_roots(g):
        if cls.kind == "isolated":
            out.append(cls.lam)
        elif cls.kind == "spherical":
            out.extend(sphere_point(g.algebra, cls.t, cls.n, u)
                       for u in sphere_directions(g.algebra))
    return out


def eig_from_t(B: Matrix2, t: Element) -> list[EigenPair]:
    """Eigenpairs ``(a + t((t^-1 b) s), (t, s t))`` for the roots ``s`` of ``t^-1 f``."""
    A = B.algebra
    _require_division(A)
    if t.is_zero():
        raise ValueError("t must be nonzero")
    if B.b.is_zero():
        raise ValueError("b = 0: use triangular_spectrum")
    ti = t.inverse()
    g = left_scale(ti, associated_quadratic(B))
    pairs = []
    for s in _roots_of(g):
        Af = s.algebra
        a, b = B.a.to_mode(Af), B.b.to_mode(Af)
        tf, tif = t.to_mode(Af), ti.to_mode(Af)
        lam = a + tf * ((tif * b) * s)
        pairs.append(EigenPair(lam, (tf, s * tf)))
    return pairs


def eig_exists(B: Matrix2) -> EigenPair:
    """One eigenpair: the triangular case, or ``(a + b s, (1, s))``."""
    A = B.algebra
    _require_division(A)
    if B.b.is_zero():
        return triangular_spectrum(B)[0]
    pairs = eig_from_t(B, A.one)
    if not pairs:
        raise ArithmeticError("associated quadratic has no root")
    return pairs[0]


# -- LMR membership --------------------------------------------------------------


class LMRResult(NamedTuple):
    member: bool
    witness: Element | None


def lmr_matrix(f: CDPoly, s: Element) -> list[list]:
    """Matrix of ``u -> (u c2) s^2 + (u c1) s + u c0``."""
    A = s.algebra
    c0, c1, c2 = (f.coeff(k).to_mode(A) for k in range(3))
    m = right_mul_op(s * s) @ right_mul_op(c2)
    m1 = right_mul_op(s) @ right_mul_op(c1)
    m0 = right_mul_op(c0)
    return [[x + y + z for x, y, z in zip(r2, r1, r0)]
            for r2, r1, r0 in zip(m.matrix, m1.matrix, m0.matrix)]


def lmr_member(f: CDPoly, s: Element, tol: float | None = None) -> LMRResult:
    """Is ``s`` a root of ``u f`` for some nonzero ``u``?  Witness ``u`` if so."""
    if f.degree != 2:
        raise ValueError("lmr_member expects a quadratic")
    A = s.algebra
    _require_division(A)
    tol = A.tol if tol is None else tol
    m = lmr_matrix(f, s)
    if not linalg.is_singular(m, A.exact, tol):
        return LMRResult(False, None)
    u = linalg.kernel_vector(m, A.exact, tol)
    return LMRResult(True, Element(A, u))


@dataclass
class LMRSpectrum:
    """Left spectrum of ``B`` with scalar ``b``: ``lam`` is in it iff
    ``b^-1 (lam - a)`` lies in LMR of the associated quadratic."""

    B: Matrix2
    f: CDPoly = field(init=False)

    def __post_init__(self):
        b = self.B.b
        if b.is_zero() or not b.is_scalar():
            raise ValueError("b must be a nonzero scalar")
        self.f = associated_quadratic(self.B)

    def contains(self, lam: Element, tol: float | None = None) -> bool:
        A = lam.algebra
        s = (lam - self.B.a.to_mode(A)) * self.B.b.to_mode(A).inverse()
        return lmr_member(self.f, s, tol).member

    def sample(self, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> list[Element]:
        return spectrum_sample(self.B, samples, seed)


def spectrum_from_lmr(B: Matrix2) -> LMRSpectrum:
    return LMRSpectrum(B)


def unit_sequence(A: Algebra, count: int, seed: int = 0) -> list[Element]:
    """Seeded scrambled-Halton points pushed to the unit sphere of ``A``."""
    Af = A.with_mode("f64") if A.exact else A
    pts = qmc.Halton(d=A.dim, scramble=True, seed=seed).random(count)
    gauss = normal_dist.ppf(np.clip(pts, 1e-12, 1 - 1e-12))
    out = []
    for row in gauss:
        row = row / np.linalg.norm(row)
        out.append(Element(Af, [float(v) for v in row]))
    return out


def spectrum_sample(B: Matrix2, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> list[Element]:
    """Approximate left spectrum from a t-sweep; eigenvalues merged within 10 tol."""
    A = B.algebra
    _require_division(A)
    if B.b.is_zero():
        return [p.lam for p in triangular_spectrum(B)]
    Bf = B.to_mode(A.with_mode("f64") if A.exact else A)
    merge = 10 * Bf.algebra.tol
    found: list[Element] = []
    for t in [Bf.algebra.one] + unit_sequence(A, samples - 1, seed):
        for pair in eig_from_t(Bf, t):
            if not any(pair.lam.isclose(x, merge) for x in found):
                found.append(pair.lam)
    return found


# -- zero in the spectrum --------------------------------------------------------


class ZeroResult(NamedTuple):
    member: bool
    witness: Element | None


def zero_in_spectrum(B: Matrix2) -> ZeroResult:
    """Is 0 a left eigenvalue?  Witness ``t`` with ``d^-1(c t) - b^-1(a t) = 0``."""
    A = B.algebra
    _require_division(A)
    if B.b.is_zero():
        raise ValueError("b = 0: use triangular_spectrum")
    if B.d.is_zero():
        return ZeroResult(B.c.is_zero(), None)
    m1 = left_mul_op(B.d.inverse()) @ left_mul_op(B.c)
    m2 = left_mul_op(B.b.inverse()) @ left_mul_op(B.a)
    m = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(m1.matrix, m2.matrix)]
    if not linalg.is_singular(m, A.exact, A.tol):
        return ZeroResult(False, None)
    return ZeroResult(True, Element(A, linalg.kernel_vector(m, A.exact, A.tol)))


# -- oracle ------------------------------------------------------------------------


def oracle_matrix(B: Matrix2, lam: Element) -> list[list]:
    """Real matrix of ``v -> (B - lam I) v`` on ``A^2``."""
    la = left_mul_op(B.a - lam).matrix
    lb = left_mul_op(B.b).matrix
    lc = left_mul_op(B.c).matrix
    ld = left_mul_op(B.d - lam).matrix
    top = [list(r1) + list(r2) for r1, r2 in zip(la, lb)]
    bottom = [list(r1) + list(r2) for r1, r2 in zip(lc, ld)]
    return top + bottom


def spectrum_oracle(B: Matrix2, lam: Element, tol: float | None = None) -> bool:
    A = lam.algebra
    Bm = B.to_mode(A)
    m = oracle_matrix(Bm, lam)
    if A.exact and tol is None:
        return linalg.is_singular(m, True, 0.0)
    return linalg.is_singular(m, False, A.tol if tol is None else tol)


def oracle_sigma_min(B: Matrix2, lam: Element) -> tuple[float, float]:
    """Smallest and largest singular values of the oracle matrix."""
    s = linalg.singular_values(oracle_matrix(B.to_mode(lam.algebra), lam))
    return float(s[-1]), float(s[0])


# -- associative case ------------------------------------------------------------


@dataclass
class AssocSpectrum:
    """Left spectrum over an associative division algebra.

    ``points`` are isolated eigenvalues; each ``(t, n)`` in ``spheres``
    contributes the infinite family ``a + b s`` with ``s^2 - t s + n = 0``.
    """

    B: Matrix2
    points: list[Element]
    spheres: list[tuple[float, float]]

    def is_finite(self) -> bool:
        return not self.spheres

    def sample(self) -> list[Element]:
        out = list(self.points)
        A = self.points[0].algebra if self.points else self.B.algebra.with_mode("f64")
        a, b = self.B.a.to_mode(A), self.B.b.to_mode(A)
        for t, n in self.spheres:
            for u in sphere_directions(A):
                out.append(a + b * sphere_point(A, t, n, u))
        return out


def assoc_eig2x2(B: Matrix2) -> AssocSpectrum:
    A = B.algebra
    if A.dim > 4 or not A.is_anisotropic:
        raise ValueError("assoc_eig2x2 needs an associative division algebra (dim <= 4)")
    if B.b.is_zero():
        pts = [B.a] if B.a == B.d else [B.a, B.d]
        return AssocSpectrum(B, pts, [])
    points, spheres = [], []
    Af = A.with_mode("f64") if A.exact else A
    a, b = B.a.to_mode(Af), B.b.to_mode(Af)
    for cls in all_roots(associated_quadratic(B)):
        if cls.kind == "isolated":
            points.append(a + b * cls.lam)
        elif cls.kind == "spherical":
            spheres.append((cls.t, cls.n))
    return AssocSpectrum(B, points, spheres)


# -- inverse over an associative subalgebra --------------------------------------


def invert_h_matrix(B: Matrix2) -> Matrix2:
    """Two-sided inverse by block elimination; entries must associate."""
    A = B.algebra
    _require_division(A)
    a, b, c, d = B.entries
    if not a.is_zero():
        ai = a.inverse()
        schur = d - c * (ai * b)
        if schur.is_zero():
            raise SingularMatrixError("matrix is singular")
        si = schur.inverse()
        inv = Matrix2(ai + ai * (b * (si * (c * ai))), -(ai * (b * si)),
                      -(si * (c * ai)), si)
    elif not b.is_zero() and not c.is_zero():
        bi, ci = b.inverse(), c.inverse()
        inv = Matrix2(-(ci * (d * bi)), ci, bi, A.zero)
    else:
        raise SingularMatrixError("matrix is singular")
    ident = Matrix2.identity(A)
    if not ((B @ inv).isclose(ident) and (inv @ B).isclose(ident)):
        raise ValueError("entries do not generate an associative subalgebra")
    return inv

