"""One-sided polynomials over a Cayley-Dickson algebra.

The indeterminate is central, so a polynomial is just its coefficient list
``c_0 .. c_n``.  Substitution keeps coefficients on the left of the powers:
``f(lam) = sum c_k (lam ** k)``.  Products keep the left factor's coefficients
on the left, which is the orientation every right-factor decomposition uses.
"""

from __future__ import annotations

from typing import Iterable

from cdalg.algebra import Algebra, Element, format_element


class CDPoly:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Iterable):
        cs = []
        for c in coeffs:
            if not isinstance(c, Element):
                c = algebra.scalar(c)
            elif c.algebra.gammas != algebra.gammas:
                raise ValueError("coefficient from a different algebra")
            cs.append(c)
        while cs and _exactly_zero(cs[-1]):
            cs.pop()
        self.algebra = algebra
        self.coeffs: tuple[Element, ...] = tuple(cs)

    @classmethod
    def x(cls, algebra: Algebra) -> CDPoly:
        return cls(algebra, [algebra.zero, algebra.one])

    @classmethod
    def linear(cls, algebra: Algebra, lam: Element) -> CDPoly:
        """``x - lam``."""
        return cls(algebra, [-lam, algebra.one])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Element:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.algebra.zero

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __call__(self, lam: Element) -> Element:
        return evaluate(self, lam)

    def __add__(self, other: CDPoly) -> CDPoly:
        return add(self, other)

    def __neg__(self) -> CDPoly:
        return CDPoly(self.algebra, [-c for c in self.coeffs])

    def __sub__(self, other: CDPoly) -> CDPoly:
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, CDPoly):
            return mul_poly(self, other)
        return CDPoly(self.algebra, [c * other for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, CDPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) == other.coeff(k) for k in range(n))

    def __hash__(self):
        return hash(self.coeffs)

    def isclose(self, other: CDPoly, tol: float) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k).isclose(other.coeff(k), tol) for k in range(n))

    def max_coeff(self) -> float:
        return max((c.max_abs() for c in self.coeffs), default=0.0)

    def to_mode(self, algebra: Algebra) -> CDPoly:
        return CDPoly(algebra, [c.to_mode(algebra) for c in self.coeffs])

    def __repr__(self):
        return f"CDPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _exactly_zero(c: Element) -> bool:
    return not any(c.coords)


def format_poly(f: CDPoly) -> str:
    """``;``-separated coefficients, constant term first."""
    if not f.coeffs:
        return "0"
    return "; ".join(format_element(c) for c in f.coeffs)


def evaluate(f: CDPoly, lam: Element) -> Element:
    """``sum c_k (lam ** k)`` with the powers built up left to right."""
    if lam.algebra.gammas != f.algebra.gammas:
        raise ValueError("point and polynomial belong to different algebras")
    total = f.algebra.zero.to_mode(lam.algebra)
    p = lam.algebra.one
    for k, c in enumerate(f.coeffs):
        if k:
            p = p * lam
        total = total + c.to_mode(lam.algebra) * p
    return total


def add(f: CDPoly, g: CDPoly) -> CDPoly:
    _check(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return CDPoly(f.algebra, [f.coeff(k) + g.coeff(k) for k in range(n)])


def mul_poly(f: CDPoly, g: CDPoly) -> CDPoly:
    """Coefficient convolution; ``f`` coefficients multiply from the left."""
    _check(f, g)
    if not f.coeffs or not g.coeffs:
        return CDPoly(f.algebra, [])
    out = [f.algebra.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return CDPoly(f.algebra, out)


def left_scale(c: Element, f: CDPoly) -> CDPoly:
    """``c f(x)``."""
    return CDPoly(f.algebra, [c * a for a in f.coeffs])


def conj_poly(f: CDPoly) -> CDPoly:
    return CDPoly(f.algebra, [c.conj() for c in f.coeffs])


def _check(f: CDPoly, g: CDPoly) -> None:
    if f.algebra.gammas != g.algebra.gammas:
        raise ValueError("polynomials over different algebras")


class ScalarPoly:
    """Polynomial with base-field coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if isinstance(other, ScalarPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self == ScalarPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.coeffs)

    def __repr__(self):
        return f"ScalarPoly({[str(c) for c in self.coeffs]})"


class CompanionError(ArithmeticError):
    """A companion coefficient came out non-scalar."""


def companion(f: CDPoly) -> ScalarPoly:
    """``f(x) conj(f)(x)``, certified to have base-field coefficients."""
    if not f.coeffs:
        raise ValueError("companion of the zero polynomial")
    prod = mul_poly(f, conj_poly(f))
    A = f.algebra
    if A.exact:
        bad = [c for c in prod.coeffs if any(c.coords[1:])]
    else:
        bound = A.tol * (1 + f.max_coeff() ** 2)
        bad = [c for c in prod.coeffs if max(abs(v) for v in c.coords[1:]) > bound] if A.dim > 1 else []
    if bad:
        raise CompanionError(f"non-scalar companion coefficient {bad[0]}")
    return ScalarPoly([c.coords[0] for c in prod.coeffs])


def right_divide_linear(f: CDPoly, lam: Element) -> tuple[CDPoly, Element]:
    """Synthetic division ``f = g (x - lam) + r``.

    ``r`` vanishes exactly when ``x - lam`` is a right factor; it need not
    equal ``f(lam)`` once zero divisors are around.
    """
    n = f.degree
    if n < 1:
        raise ValueError("right division needs degree >= 1")
    g = [f.algebra.zero] * n
    g[n - 1] = f.coeffs[n]
    for i in range(n - 1, 0, -1):
        g[i - 1] = f.coeffs[i] + g[i] * lam
    r = f.coeffs[0] + g[0] * lam
    return CDPoly(f.algebra, g), r


def divide_central_quadratic(f: CDPoly, t, n) -> tuple[CDPoly, Element, Element]:
    """Long division by ``x^2 - t x + n`` with scalar ``t, n``.

    Returns ``(q, a, b)`` with ``f = q (x^2 - t x + n) + a x + b``.
    """
    A = f.algebra
    t = A._coerce(t)
    n = A._coerce(n)
    rem = list(f.coeffs)
    if len(rem) < 3:
        rem += [A.zero] * (2 - len(rem))
        return CDPoly(A, []), rem[1], rem[0]
    q = [A.zero] * (len(rem) - 2)
    for k in range(len(rem) - 1, 1, -1):
        lead = rem[k]
        q[k - 2] = lead
        rem[k] = A.zero
        rem[k - 1] = rem[k - 1] + lead.scale(t)
        rem[k - 2] = rem[k - 2] - lead.scale(n)
    return CDPoly(A, q), rem[1], rem[0]


def derivative(f: CDPoly) -> CDPoly:
    return CDPoly(f.algebra, [c.scale(k) for k, c in enumerate(f.coeffs)][1:])

