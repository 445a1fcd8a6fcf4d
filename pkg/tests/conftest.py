import random

import pytest
from hypothesis import strategies as st

from cdalg import standard_algebra


def elements(A, low=-3, high=3):
    """Hypothesis strategy for integer-coordinate elements of ``A``."""
    return st.lists(st.integers(low, high), min_size=A.dim, max_size=A.dim).map(A.element)


def nonzero_elements(A, low=-3, high=3):
    return elements(A, low, high).filter(lambda x: not x.is_zero())


def cd_product(x, y, gammas):
    """Reference Cayley-Dickson product on plain coordinate lists.

    Deliberately independent of the cached basis table: it recurses on halves.
    """
    if not gammas:
        return [x[0] * y[0]]
    h = len(x) // 2
    q, r, s, t = x[:h], x[h:], y[:h], y[h:]
    g = gammas[-1]
    rest = gammas[:-1]

    def cj(v):
        if len(v) == 1:
            return list(v)
        k = len(v) // 2
        return cj(v[:k]) + [-c for c in v[k:]]

    lo = [a + g * b for a, b in zip(cd_product(q, s, rest), cd_product(cj(t), r, rest))]
    hi = [a + b for a, b in zip(cd_product(t, q, rest), cd_product(r, cj(s), rest))]
    return lo + hi


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(params=[0, 1, 2, 3, 4], ids=["R", "C", "H", "O", "S"])
def std_algebra(request):
    return standard_algebra(request.param)
