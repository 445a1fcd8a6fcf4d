"""Text and JSON forms for algebras, elements, polynomials and 2x2 matrices.

Element text: signed terms ``c*e<k>``, ``e<k>`` or a bare scalar, e.g.
``e1+e10`` or ``-1/2*e7+3``.  Polynomial text: ``;``-separated element
literals, constant term first.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from cdalg.algebra import Algebra, Element, format_element
from cdalg.eigen import Matrix2
from cdalg.poly import CDPoly, format_poly


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)


# exponents only after a decimal point, so "2e3" is never read as 2000
_NUM = r"(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+)(?:/\d+)?"
_TERM = re.compile(
    rf"(?P<sign>[+-])?(?:(?P<num>{_NUM})(?P<star>\*)?)?(?:e(?P<idx>\d+))?"
)


def parse_scalar(text: str, A: Algebra):
    text = text.strip()
    try:
        if A.exact:
            if "/" in text:
                p, q = text.split("/")
                if int(q) == 0:
                    raise ParseError("zero denominator", text, text.index("/") + 1)
                return Fraction(Fraction(p), int(q))
            return Fraction(text)
        if "/" in text:
            p, q = text.split("/")
            if float(q) == 0:
                raise ParseError("zero denominator", text, text.index("/") + 1)
            return float(p) / float(q)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad scalar literal ({exc})", text, 0) from None


def parse_element(text: str, A: Algebra) -> Element:
    """Parse an element literal; error positions index into ``text`` as given."""
    raw = text
    # the grammar ignores whitespace; keep a map back to the raw offsets
    where = [k for k, ch in enumerate(raw) if not ch.isspace()]
    s = "".join(raw[k] for k in where)
    if not s:
        raise ParseError("empty element literal", raw, 0)

    def fail(message: str, at: int):
        raise ParseError(message, raw, where[at] if at < len(where) else len(raw))

    coords: list = [0] * A.dim
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group("num") is None and m.group("idx") is None):
            fail("expected a term", pos)
        if not first and m.group("sign") is None:
            fail("missing '+' or '-' between terms", pos)
        if m.group("num") is not None and m.group("idx") is not None and m.group("star") is None:
            fail("write 'c*e<k>' with an explicit '*'", m.start("idx") - 1)
        if m.group("star") is not None and m.group("idx") is None:
            fail("dangling '*'", m.start("star"))
        coeff = 1
        if m.group("num") is not None:
            try:
                coeff = parse_scalar(m.group("num"), A)
            except ParseError as exc:
                fail(str(exc).split(" at position")[0], m.start("num") + (exc.pos or 0))
        if m.group("sign") == "-":
            coeff = -coeff
        k = int(m.group("idx")) if m.group("idx") is not None else 0
        if k >= A.dim:
            fail(f"basis index e{k} out of range for dimension {A.dim}", m.start("idx"))
        coords[k] += coeff
        pos = m.end()
        first = False
    return Element(A, coords)


def parse_poly(text: str, A: Algebra) -> CDPoly:
    parts = text.split(";")
    return CDPoly(A, [parse_element(p, A) for p in parts])


def element_to_json(x: Element) -> list[str]:
    if x.algebra.exact:
        return [str(c) for c in x.coords]
    return [repr(float(c)) for c in x.coords]


def element_from_json(obj: Any, A: Algebra) -> Element:
    if isinstance(obj, str):
        return parse_element(obj, A)
    if not isinstance(obj, list) or len(obj) != A.dim:
        raise ParseError(f"element JSON must be a list of {A.dim} scalars")
    return Element(A, [parse_scalar(str(v), A) for v in obj])


def poly_to_json(f: CDPoly) -> list[list[str]]:
    return [element_to_json(c) for c in f.coeffs]


def poly_from_json(obj: Any, A: Algebra) -> CDPoly:
    if isinstance(obj, str):
        return parse_poly(obj, A)
    return CDPoly(A, [element_from_json(c, A) for c in obj])


def matrix_to_json(B: Matrix2) -> dict:
    return {k: element_to_json(getattr(B, k)) for k in "abcd"}


def parse_matrix(obj: Any, A: Algebra) -> Matrix2:
    """Matrix from a JSON object (or its text) with keys ``a, b, c, d``."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"matrix JSON: {exc.msg}", obj, exc.pos) from None
    missing = [k for k in "abcd" if k not in obj]
    if missing:
        raise ParseError(f"matrix JSON is missing {', '.join(missing)}")
    return Matrix2(*(element_from_json(obj[k], A) for k in "abcd"))


def algebra_to_json(A: Algebra) -> dict:
    return {"gammas": [str(g) for g in A.gammas], "scalar": A.scalar_mode, "tol": A.tol}


def algebra_from_json(obj: Any) -> Algebra:
    if isinstance(obj, str):
        obj = json.loads(obj)
    mode = obj.get("scalar", "rational")
    probe = Algebra((), mode)
    gammas = tuple(parse_scalar(str(g), probe) for g in obj.get("gammas", []))
    return Algebra(gammas, mode, float(obj.get("tol", 1e-9)))


def parse_gammas(text: str, scalar_mode: str = "rational") -> tuple:
    text = text.strip()
    if not text:
        return ()
    probe = Algebra((), scalar_mode)
    return tuple(parse_scalar(g, probe) for g in text.split(","))


__all__ = [
    "ParseError", "parse_scalar", "parse_element", "parse_poly", "parse_matrix",
    "parse_gammas", "element_to_json", "element_from_json", "poly_to_json",
    "poly_from_json", "matrix_to_json", "algebra_to_json", "algebra_from_json",
    "format_element", "format_poly",
]
