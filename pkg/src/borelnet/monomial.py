"""Monomials as exponent vectors, elementary Borel moves and term orderings.

Exponent vectors are indexed from the smallest variable: entry ``i`` is the
exponent of ``x_i`` and the variables are ordered ``x_n > ... > x_0``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .errors import DegreeMismatchError, InadmissibleMoveError, ParseError


class Monomial(tuple):
    """An immutable exponent vector ``(a_0, ..., a_n)``."""

    __slots__ = ()

    def __new__(cls, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def _raw(cls, exps: tuple) -> "Monomial":
        # trusted constructor for hot loops
        return tuple.__new__(cls, exps)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def n(self) -> int:
        """Index of the largest variable (the ambient P^n)."""
        return len(self) - 1

    @property
    def min_index(self) -> int:
        """Smallest ``j`` with ``x_j`` dividing the monomial (``n`` for 1)."""
        for i, e in enumerate(self):
            if e:
                return i
        return len(self) - 1

    @property
    def max_index(self) -> int:
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i
        return 0

    def times(self, i: int) -> "Monomial":
        exps = list(self)
        exps[i] += 1
        return Monomial._raw(tuple(exps))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial._raw(tuple(a + b for a, b in zip(self, other)))
        return NotImplemented

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)})"

    def __str__(self) -> str:
        return format_monomial(self)


def move_down(m: Monomial, i: int) -> Monomial:
    """Elementary decreasing move: one unit of ``x_i`` goes to ``x_{i-1}``."""
    if not 0 < i < len(m) or m[i] == 0:
        raise InadmissibleMoveError(f"e-_{i} is not admissible on {m}")
    exps = list(m)
    exps[i] -= 1
    exps[i - 1] += 1
    return Monomial._raw(tuple(exps))


def move_up(m: Monomial, j: int) -> Monomial:
    """Elementary increasing move: one unit of ``x_j`` goes to ``x_{j+1}``."""
    if not 0 <= j < len(m) - 1 or m[j] == 0:
        raise InadmissibleMoveError(f"e+_{j} is not admissible on {m}")
    exps = list(m)
    exps[j] -= 1
    exps[j + 1] += 1
    return Monomial._raw(tuple(exps))


def down_moves(m: Monomial, above: int = 0) -> Iterator[Monomial]:
    """All admissible ``e-_i(m)`` with ``i > above``."""
    for i in range(max(1, above + 1), len(m)):
        if m[i]:
            yield move_down(m, i)


def up_moves(m: Monomial, start: int = 0) -> Iterator[Monomial]:
    """All admissible ``e+_j(m)`` with ``j >= start``."""
    for j in range(start, len(m) - 1):
        if m[j]:
            yield move_up(m, j)


def borel_leq(a: Monomial, b: Monomial) -> bool:
    """True iff ``b >=_B a``: every tail sum of ``b - a`` from ``x_n`` down is >= 0."""
    if len(a) != len(b) or sum(a) != sum(b):
        raise DegreeMismatchError(f"{a} and {b} are not in the same poset")
    s = 0
    for i in range(len(a) - 1, -1, -1):
        s += b[i] - a[i]
        if s < 0:
            return False
    return True


def monomials(n: int, r: int) -> list[Monomial]:
    """All monomials of degree ``r`` in ``x_0..x_n`` (the poset P(n, r))."""
    out = []
    for combo in combinations_with_replacement(range(n + 1), r):
        exps = [0] * (n + 1)
        for i in combo:
            exps[i] += 1
        out.append(Monomial._raw(tuple(exps)))
    return out


# ---------------------------------------------------------------------------
# term orderings


class OrderKind(enum.Enum):
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"
    WEIGHTS = "weights"


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class TermOrder:
    """A graded term ordering with ``x_n > ... > x_0``.

    For ``WEIGHTS`` the ordering matrix has rows: all ones, ``weights`` and
    then the unit rows of ``x_{n-1}, ..., x_1``. That matrix is nonsingular
    whenever ``weights[0] != weights[n]``, so the order is total.
    """

    kind: OrderKind
    weights: tuple = ()

    def __post_init__(self):
        if self.kind is OrderKind.WEIGHTS:
            w = tuple(int(x) for x in self.weights)
            if len(w) < 2:
                raise ValueError("weight order needs at least two variables")
            if w[0] <= 0 or any(b <= a for a, b in zip(w, w[1:])):
                raise ValueError(f"weights must be positive and strictly increasing: {w}")
            object.__setattr__(self, "weights", w)
        elif self.weights:
            raise ValueError(f"{self.kind.value} takes no weights")

    @classmethod
    def deglex(cls) -> "TermOrder":
        return cls(OrderKind.DEGLEX)

    @classmethod
    def degrevlex(cls) -> "TermOrder":
        return cls(OrderKind.DEGREVLEX)

    @classmethod
    def weight_matrix(cls, weights: Sequence[int]) -> "TermOrder":
        return cls(OrderKind.WEIGHTS, tuple(weights))

    @cached_property
    def key(self):
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        if self.kind is OrderKind.DEGLEX:
            return lambda m: (sum(m),) + tuple(reversed(m))
        if self.kind is OrderKind.DEGREVLEX:
            return lambda m: (sum(m),) + tuple(-e for e in m)
        w = self.weights

        def weighted(m):
            if len(m) != len(w):
                raise ValueError(f"order has {len(w)} weights but {m} has {len(m)} variables")
            return (sum(m), sum(a * b for a, b in zip(w, m))) + tuple(m[i] for i in range(len(m) - 2, 0, -1))

        return weighted

    def matrix(self, n: int) -> list[list[int]]:
        """The ordering matrix, columns ``x_n .. x_0`` (weights orders only)."""
        if self.kind is not OrderKind.WEIGHTS:
            raise ValueError("only weight orders have a two-row-plus-units matrix")
        if len(self.weights) != n + 1:
            raise ValueError("weight length does not match n")
        rows = [[1] * (n + 1), list(reversed(self.weights))]
        for var in range(n - 1, 0, -1):
            rows.append([1 if col == var else 0 for col in range(n, -1, -1)])
        return rows

    def __str__(self) -> str:
        if self.kind is OrderKind.WEIGHTS:
            return "weights=" + ",".join(map(str, self.weights))
        return self.kind.value


def compare(order: TermOrder, a: Monomial, b: Monomial) -> Cmp:
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        if a != b:
            raise ValueError(f"order {order} does not separate {a} and {b}")
        return Cmp.EQUAL
    return Cmp.GREATER if ka > kb else Cmp.LESS


def parse_order(text: str) -> TermOrder:
    """``deglex`` | ``degrevlex`` | ``weights=w0,w1,...,wn`` (ascending index)."""
    t = text.strip().lower()
    if t in ("deglex", "lex"):
        return TermOrder.deglex()
    if t in ("degrevlex", "revlex"):
        return TermOrder.degrevlex()
    if t.startswith("weights="):
        try:
            w = [int(x) for x in t[len("weights="):].split(",")]
            return TermOrder.weight_matrix(w)
        except ValueError as exc:
            raise ParseError(f"bad weight order {text!r}: {exc}") from None
    raise ParseError(f"unknown term order {text!r}")


# ---------------------------------------------------------------------------
# text format

_INDEXED = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for i in range(len(m) - 1, -1, -1):
        e = m[i]
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int, names: Sequence[str] | None = None) -> Monomial:
    """Parse ``x3^2*x0^6`` (``*`` and ``^1`` optional) into a monomial of P^n.

    ``names`` lists single-letter variable names from the largest variable
    down, e.g. ``"xyz"`` for ``x = x_2, y = x_1, z = x_0``; with names,
    juxtaposition such as ``xy^2z`` is accepted.
    """
    s = re.sub(r"[\s*]", "", text)
    exps = [0] * (n + 1)
    if s == "1":
        return Monomial(exps)
    if not s:
        raise ParseError("empty monomial")
    if names is not None:
        if len(names) != n + 1:
            raise ParseError(f"need {n + 1} variable names, got {len(names)}")
        lookup = {name: n - k for k, name in enumerate(names)}
        token = re.compile(r"([A-Za-z])(?:\^(\d+))?")
    else:
        token = _INDEXED
    pos = 0
    while pos < len(s):
        mt = token.match(s, pos)
        if not mt:
            raise ParseError(f"cannot parse monomial {text!r} at {s[pos:]!r}")
        if names is not None:
            if mt.group(1) not in lookup:
                raise ParseError(f"unknown variable {mt.group(1)!r} in {text!r}")
            idx = lookup[mt.group(1)]
        else:
            idx = int(mt.group(1))
            if idx > n:
                raise ParseError(f"variable x{idx} outside x0..x{n}")
        exps[idx] += int(mt.group(2)) if mt.group(2) else 1
        pos = mt.end()
    return Monomial(exps)
