"""Small linear-algebra layer shared by the exact and float code paths.

Exact matrices are solved over QQ with sympy's ``DomainMatrix``; float
matrices go through numpy's SVD / least squares.  Matrices are passed around
as lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Rows = Sequence[Sequence]


def _to_qq(v) -> object:
    f = Fraction(v)
    return QQ(f.numerator, f.denominator)


def _from_qq(v) -> Fraction | int:
    f = Fraction(int(v.numerator), int(v.denominator))
    return f.numerator if f.denominator == 1 else f


def _domain(rows: Rows) -> DomainMatrix:
    n, m = len(rows), len(rows[0])
    return DomainMatrix([[_to_qq(v) for v in row] for row in rows], (n, m), QQ)


def singular_values(rows: Rows) -> np.ndarray:
    return np.linalg.svd(np.asarray(rows, dtype=float), compute_uv=False)


def is_singular(rows: Rows, exact: bool, tol: float) -> bool:
    """Square matrix singularity: exact rank, or ``s_min <= tol * s_max``."""
    if exact:
        return _domain(rows).rank() < len(rows)
    s = singular_values(rows)
    return bool(s[-1] <= tol * max(s[0], 1.0))


def rank(rows: Rows, exact: bool, tol: float) -> int:
    if exact:
        return _domain(rows).rank()
    s = singular_values(rows)
    return int(np.sum(s > tol * max(s[0], 1.0)))


def kernel_vector(rows: Rows, exact: bool, tol: float) -> list | None:
    """One nonzero kernel vector, or None when the kernel is trivial."""
    if exact:
        null = _domain(rows).nullspace()
        if null.shape[0] == 0:
            return None
        return [_from_qq(v) for v in null.to_list()[0]]
    a = np.asarray(rows, dtype=float)
    _, s, vt = np.linalg.svd(a)
    if s[-1] > tol * max(s[0], 1.0) and a.shape[0] >= a.shape[1]:
        return None
    return [float(v) for v in vt[-1]]


def solve(rows: Rows, rhs: Sequence, exact: bool, tol: float) -> list | None:
    """Some solution of ``rows @ x = rhs``, or None when inconsistent."""
    n = len(rows[0])
    if exact:
        aug = _domain([list(r) + [b] for r, b in zip(rows, rhs)])
        red, pivots = aug.rref()
        if n in pivots:
            return None
        red_rows = red.to_list()
        x: list = [0] * n
        for i, p in enumerate(pivots):
            x[p] = _from_qq(red_rows[i][n])
        return x
    a = np.asarray(rows, dtype=float)
    b = np.asarray(rhs, dtype=float)
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    resid = np.max(np.abs(a @ x - b)) if len(b) else 0.0
    if resid > tol * (1.0 + np.max(np.abs(b))):
        return None
    return [float(v) for v in x]
