"""Integer-valued Hilbert polynomials, finite differences and Gotzmann numbers."""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import NotAdmissibleError, ParseError


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _add(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(Fraction(x) + y for x, y in zip(a, b))


def binomial_poly(shift: int, k: int) -> tuple:
    """Coefficients of ``C(t + shift, k)`` as a polynomial in ``t``."""
    out: tuple = (Fraction(1),)
    for i in range(k):
        out = _mul(out, (Fraction(shift - i, i + 1), Fraction(1, i + 1)))
    return out


class HilbertPolynomial:
    """An integer-valued polynomial in ``t`` with exact rational coefficients.

    ``coefficients[k]`` is the coefficient of ``t^k``.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        c = _trim(Fraction(x) for x in coefficients)
        for t in range(len(c) + 2):
            v = sum(x * t**k for k, x in enumerate(c))
            if v.denominator != 1:
                raise ValueError(f"polynomial {c} is not integer-valued (p({t}) = {v})")
        self.coefficients = c

    @classmethod
    def constant(cls, d: int) -> "HilbertPolynomial":
        return cls((d,))

    @classmethod
    def linear(cls, a: int, b: int) -> "HilbertPolynomial":
        """``a*t + b``."""
        return cls((b, a))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> int:
        v = sum(x * t**k for k, x in enumerate(self.coefficients))
        return int(v)

    def __eq__(self, other):
        if isinstance(other, HilbertPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        return HilbertPolynomial(_add(self.coefficients, other.coefficients))

    def __sub__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        return HilbertPolynomial(_add(self.coefficients, [-x for x in other.coefficients]))

    def shifted(self, s: int) -> "HilbertPolynomial":
        """``t -> p(t + s)``."""
        out: tuple = ()
        power: tuple = (Fraction(1),)
        for x in self.coefficients:
            out = _add(out, [x * y for y in power])
            power = _mul(power, (Fraction(s), Fraction(1)))
        return HilbertPolynomial(out)

    def __repr__(self):
        return f"HilbertPolynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def delta(p: HilbertPolynomial, m: int = 1) -> HilbertPolynomial:
    """Backward difference ``p(t) - p(t-1)`` applied ``m`` times."""
    if m < 0:
        raise ValueError("iteration count must be >= 0")
    for _ in range(m):
        p = p - p.shifted(-1)
    return p


def gotzmann_decomposition(p: HilbertPolynomial) -> list[int]:
    """Exponents ``a_1 >= ... >= a_r >= 0`` with ``p(t) = sum C(t + a_i - i + 1, a_i)``."""
    rest = p.coefficients
    exps: list[int] = []
    while rest:
        a = len(rest) - 1
        lead = rest[-1]
        if lead <= 0 or (exps and a > exps[-1]):
            raise NotAdmissibleError(f"{p} has no Gotzmann decomposition")
        # every term of degree a contributes 1/a! to the leading coefficient
        count = lead * factorial(a)
        if count.denominator != 1:
            raise NotAdmissibleError(f"{p} has no Gotzmann decomposition")
        for _ in range(int(count)):
            i = len(exps) + 1
            rest = _add(rest, [-x for x in binomial_poly(a - i + 1, a)])
            exps.append(a)
        if len(rest) - 1 >= a and rest:
            raise NotAdmissibleError(f"{p} has no Gotzmann decomposition")
    return exps


def gotzmann_number(p: HilbertPolynomial) -> int:
    return len(gotzmann_decomposition(p))


def is_admissible(p: HilbertPolynomial) -> bool:
    try:
        gotzmann_decomposition(p)
    except NotAdmissibleError:
        return False
    return True


def complement(p: HilbertPolynomial, n: int, t: int) -> int:
    """``q(t) = C(n + t, n) - p(t)``, the dimension of the ideal in degree ``t``."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return comb(n + t, n) - p(t)


def from_differences(values: Sequence[int], r: int) -> HilbertPolynomial:
    """The unique ``p`` of degree ``< len(values)`` with ``delta(p, k)(r) == values[k]``.

    Backward Newton form: ``p(t) = sum_k values[k] * C(t - r + k - 1, k)``.
    """
    out: tuple = ()
    for k, v in enumerate(values):
        if v:
            out = _add(out, [v * x for x in binomial_poly(k - 1 - r, k)])
    return HilbertPolynomial(out)


# ---------------------------------------------------------------------------
# text format: "6t-5", "3t^2+t+1", "8"

_TERM = re.compile(r"([+-]?)(\d*)(t(?:\^(\d+))?)?")


def parse_polynomial(text: str) -> HilbertPolynomial:
    s = re.sub(r"[\s*]", "", text)
    if not s:
        raise ParseError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or not (mt.group(2) or mt.group(3)):
            raise ParseError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        if pos > 0 and not mt.group(1):
            raise ParseError(f"missing sign in {text!r} at {s[pos:]!r}")
        sign = -1 if mt.group(1) == "-" else 1
        c = int(mt.group(2)) if mt.group(2) else 1
        if mt.group(3):
            k = int(mt.group(4)) if mt.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = mt.end()
    deg = max(coeffs)
    return HilbertPolynomial([coeffs.get(k, 0) for k in range(deg + 1)])


def format_polynomial(p: HilbertPolynomial) -> str:
    c = p.coefficients
    if not c:
        return "0"
    if any(x.denominator != 1 for x in c):
        # integer-valued but not integral, e.g. (t^2+t)/2
        terms = [f"({x})t^{k}" if k > 1 else (f"({x})t" if k == 1 else f"({x})") for k, x in reversed(list(enumerate(c))) if x]
        return "+".join(terms)
    out = ""
    for k in range(len(c) - 1, -1, -1):
        x = int(c[k])
        if x == 0:
            continue
        sign = "-" if x < 0 else "+"
        a = abs(x)
        if k == 0:
            body = str(a)
        else:
            body = ("" if a == 1 else str(a)) + ("t" if k == 1 else f"t^{k}")
        if not out:
            out = ("-" if x < 0 else "") + body
        else:
            out += sign + body
    return out
