"""Exact arithmetic on univariate polynomials over the integers.

A polynomial is a dense tuple of arbitrary-precision coefficients in
ascending powers, so ``IntPoly((5, -1, 1))`` is ``x^2 - x + 5``.  The zero
polynomial is the empty tuple and its degree is ``None`` (a distinguished
marker, never a number).  All operations are exact; there is no floating
point anywhere in this package.

The module also provides the phi-expansion ``f = sum b_i(x) * phi(x)^i``
with ``deg b_i < deg phi``, which exists and is unique whenever ``phi`` is
monic of degree at least 1, together with the two wire formats used
everywhere else: the JSON literal (a list of decimal integer strings,
ascending powers) and a human-friendly inline syntax like ``"x^2-x+5"``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; index i holds the coefficient of x^i.

    >>> IntPoly.of(5, -1, 1)
    IntPoly('x^2 - x + 5')
    >>> IntPoly.of(5, -1, 1).degree
    2
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients must be normalized (no trailing zeros)")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be integers")

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        return IntPoly(_normalize(coeffs))

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "IntPoly":
        return IntPoly(_normalize(coeffs))

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly.of(c)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        return IntPoly(_normalize(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return _coerce(other) - self

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(_normalize(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: int) -> int:
        return eval_at_integer(self, t)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return ZERO
        return IntPoly((0,) * k + self.coeffs)

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """Exact polynomial composition self(inner(x)) by Horner."""
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


ZERO = IntPoly(())
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def _coerce(v: Union[IntPoly, int]) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly.of(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to IntPoly")


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pointwise coefficient sum, normalized."""
    return a + b


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact convolution product."""
    return a * b


def content(f: IntPoly) -> int:
    """gcd of all coefficients; content(0) = 0, otherwise strictly positive."""
    g = 0
    for c in f.coeffs:
        g = gcd(g, c)
    return g


def eval_at_integer(f: IntPoly, t: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


def divmod_monic(f: IntPoly, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact division with remainder by a monic polynomial of degree >= 1.

    Returns (q, r) with f = q*phi + r and deg r < deg phi.
    """
    if not phi.is_monic or phi.degree < 1:
        raise ValueError("divisor must be monic of degree >= 1")
    d = phi.degree
    rem = list(f.coeffs)
    if len(rem) <= d:
        return ZERO, f
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - d] = c
        for j, pc in enumerate(phi.coeffs):
            rem[i - d + j] -= c * pc
    return IntPoly(_normalize(quot)), IntPoly(_normalize(rem[:d]))


@dataclass(frozen=True)
class PhiExpansion:
    """The unique representation f = sum terms[i] * phi^i with deg terms[i] < deg phi."""

    phi: IntPoly
    terms: tuple[IntPoly, ...]

    def __post_init__(self) -> None:
        if not self.phi.is_monic or self.phi.degree < 1:
            raise ValueError("phi must be monic of degree >= 1")
        for t in self.terms:
            if not t.is_zero and t.degree >= self.phi.degree:
                raise ValueError("expansion term with degree >= deg phi")
        if self.terms and self.terms[-1].is_zero:
            raise ValueError("expansion terms must be normalized (nonzero top term)")


def phi_expand(f: IntPoly, phi: IntPoly) -> PhiExpansion:
    """Compute the phi-expansion of f by repeated division by phi."""
    if not phi.is_monic or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    terms = []
    rest = f
    while not rest.is_zero:
        rest, r = divmod_monic(rest, phi)
        terms.append(r)
    return PhiExpansion(phi, tuple(terms))


def phi_assemble(e: PhiExpansion) -> IntPoly:
    """Reassemble sum terms[i] * phi^i exactly (inverse of phi_expand)."""
    result = ZERO
    for t in reversed(e.terms):
        result = result * e.phi + t
    return result


# ---------------------------------------------------------------------------
# Wire formats
# ---------------------------------------------------------------------------

def poly_to_literal(f: IntPoly) -> list[str]:
    """JSON literal: decimal integer strings, ascending powers.

    Strings rather than JSON numbers so coefficients survive 53-bit readers.
    """
    return [str(c) for c in f.coeffs]


def poly_from_literal(literal: Sequence[Union[str, int]]) -> IntPoly:
    """Parse the JSON literal form; accepts strings or (small) integers."""
    coeffs = []
    for item in literal:
        if isinstance(item, bool):
            raise ValueError("polynomial literal entries must be integers or strings")
        if isinstance(item, int):
            coeffs.append(item)
        elif isinstance(item, str):
            coeffs.append(int(item.strip(), 10))
        else:
            raise ValueError("polynomial literal entries must be integers or strings")
    return IntPoly.from_coeffs(coeffs)


_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?:
        (?P<coeff>\d+)\s*(?:\*?\s*x(?:\s*\^\s*(?P<exp1>\d+))?)?
      | x(?:\s*\^\s*(?P<exp2>\d+))?
    )
    \s*
    """,
    re.VERBOSE,
)


def parse_poly_text(text: str) -> IntPoly:
    """Parse inline syntax like "x^2 - x + 5" or "3x^4+2" (integer coefficients).

    >>> parse_poly_text("x^2-x+5")
    IntPoly('x^2 - x + 5')
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial text at: {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing sign between terms in {text!r}")
        sgn = -1 if sign == "-" else 1
        if m.group("coeff") is not None:
            c = int(m.group("coeff"))
            exp = m.group("exp1")
            # bare number unless an x follows in the matched text
            has_x = "x" in s[m.start():m.end()]
            e = int(exp) if exp is not None else (1 if has_x else 0)
        else:
            c = 1
            exp = m.group("exp2")
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, 0) + sgn * c
        pos = m.end()
        first = False
    top = max(coeffs) if coeffs else 0
    return IntPoly.from_coeffs(coeffs.get(i, 0) for i in range(top + 1))


def format_poly(f: IntPoly, var: str = "x") -> str:
    """Human-readable rendering, highest power first.

    >>> format_poly(IntPoly.of(3, 0, -6, 0, 1))
    'x^4 - 6x^2 + 3'
    """
    if f.is_zero:
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpart = var if i == 1 else f"{var}^{i}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
