"""Exact Laurent polynomials in one variable ``A`` with dyadic coefficients.

Every invariant computed by this package lives in Z[1/2][A, A^-1], so the
coefficients are :class:`fractions.Fraction` values whose denominators are
restricted to powers of two.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPolynomial", "monomial", "A", "ZERO", "ONE", "LOOP_FACTOR"]

Scalar = Union[int, Fraction]

_EXPONENT_LIMIT = 2**63


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _dyadic(c) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, (int, Rational)):
        raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")
    c = Fraction(c)
    if not _is_power_of_two(c.denominator):
        raise ValueError(f"coefficient {c} has a non-dyadic denominator")
    return c


def _check_exponent(e: int) -> int:
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError(f"exponent must be an int, got {type(e).__name__}")
    if not -_EXPONENT_LIMIT <= e < _EXPONENT_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


class LaurentPolynomial:
    """Immutable polynomial ``sum c_e A^e`` stored as ``{e: c_e}`` without zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            c = _dyadic(c)
            if c:
                clean[_check_exponent(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "LaurentPolynomial":
        p = cls.__new__(cls)
        p._terms = {e: c for e, c in terms.items() if c}
        for e in p._terms:
            _check_exponent(e)
        p._hash = None
        return p

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def coefficient(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial | None":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return monomial(other, 0)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in q._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in q._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                inv = 1 / c
                if not _is_power_of_two(inv.denominator):
                    raise ValueError("inverse coefficient is not dyadic")
                return monomial(inv, -e) ** (-n)
            raise ValueError("negative powers are only defined for monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "LaurentPolynomial":
        c = _dyadic(c)
        return LaurentPolynomial._raw({e: c * v for e, v in self._terms.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``A**k``."""
        return LaurentPolynomial._raw({e + k: c for e, c in self._terms.items()})

    def __call__(self, value):
        return sum((c * value**e for e, c in self._terms.items()), Fraction(0))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text and JSON forms ----------------------------------------------

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mag.denominator == 1:
                coef = str(mag.numerator)
            else:
                coef = f"({mag.numerator}/2^{mag.denominator.bit_length() - 1})"
            if e == 0:
                body = coef.strip("()") if mag.denominator != 1 else coef
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else coef + var
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    _TERM = re.compile(
        r"""\s*(?P<sign>[+-])?\s*
        (?:\(?(?P<num>\d+)(?:/2\^(?P<k>\d+))?\)?)?
        (?P<var>A(?:\^(?P<exp>-?\d+))?)?\s*""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Inverse of ``str``: accepts e.g. ``"A^2 + 2 + A^-2"`` or ``"(3/2^1)A - 1/2^2"``."""
        s = text.strip()
        if s == "0":
            return ZERO
        # split on binary +/- only (not the minus inside an exponent)
        pieces = re.split(r"(?<!\^)\s+(?=[+-]\s)", s)
        total = ZERO
        for piece in pieces:
            m = cls._TERM.fullmatch(piece)
            if not m or (m.group("num") is None and m.group("var") is None):
                raise ValueError(f"cannot parse term {piece!r} in {text!r}")
            c = Fraction(int(m.group("num") or 1), 2 ** int(m.group("k") or 0))
            if m.group("sign") == "-":
                c = -c
            e = 0
            if m.group("var"):
                e = int(m.group("exp")) if m.group("exp") is not None else 1
            total = total + monomial(c, e)
        return total

    def to_json(self) -> list[list[int]]:
        """``[exponent, numerator, log2_denominator]`` triples sorted by exponent."""
        return [
            [e, c.numerator, c.denominator.bit_length() - 1]
            for e, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> "LaurentPolynomial":
        terms: dict[int, Fraction] = {}
        for e, num, k in triples:
            if k < 0:
                raise ValueError("log2 denominator must be nonnegative")
            if e in terms:
                raise ValueError(f"duplicate exponent {e}")
            terms[e] = Fraction(num, 2**k)
        return cls(terms)


def monomial(coefficient: Scalar, exponent: int = 0) -> LaurentPolynomial:
    """``coefficient * A**exponent``; a zero coefficient gives the zero polynomial."""
    return LaurentPolynomial({exponent: coefficient})


ZERO = LaurentPolynomial()
ONE = monomial(1, 0)
A = monomial(1, 1)
# value of a trivial vertex loop, -A - A^-1
LOOP_FACTOR = monomial(-1, 1) + monomial(-1, -1)
