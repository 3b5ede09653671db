"""Segment detection: a weight order that puts the whole stratum above its complement.

The search solves the margin-one system

    w_0 >= 1,   w_{i+1} - w_i >= 1,   w.(alpha - beta) >= 1

over minimal members ``alpha`` and maximal non-members ``beta`` with an exact
two-phase simplex (Bland's rule), minimising ``sum(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .borel import BorelSet, global_maximal, global_minimal
from .monomial import TermOrder, monomials


@dataclass(frozen=True)
class SegmentCertificate:
    weights: tuple
    verified: bool = False

    @property
    def order(self) -> TermOrder:
        return TermOrder.weight_matrix(self.weights)

    def matrix(self) -> list[list[int]]:
        return self.order.matrix(len(self.weights) - 1)

    def to_dict(self) -> dict:
        return {"omega": list(self.weights), "verified": self.verified, "matrix": self.matrix()}


def _monotone(weights: Sequence[int]) -> bool:
    return len(weights) >= 2 and weights[0] > 0 and all(b > a for a, b in zip(weights, weights[1:]))


def verify_certificate(B: BorelSet, cert: SegmentCertificate | Sequence[int]) -> bool:
    """Every member of the stratum is greater than every non-member."""
    weights = tuple(cert.weights if isinstance(cert, SegmentCertificate) else cert)
    if len(weights) != B.n + 1 or not _monotone(weights):
        return False
    if not B.members or not B.complement:
        return True
    key = TermOrder.weight_matrix(weights).key
    return min(map(key, B.members)) > max(map(key, B.complement))


# ---------------------------------------------------------------------------
# exact simplex


def _pivot(tab: list, basis: list, row: int, col: int) -> None:
    pr = tab[row]
    pv = pr[col]
    if pv != 1:
        tab[row] = pr = [x / pv for x in pr]
    for k, other in enumerate(tab):
        if k != row and other[col] != 0:
            f = other[col]
            tab[k] = [a - f * b for a, b in zip(other, pr)]
    basis[row] = col


def _run(tab: list, basis: list, allowed: int) -> bool:
    """Minimise the objective in the last row; False if unbounded."""
    obj = tab[-1]
    while True:
        obj = tab[-1]
        col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return True
        best = None
        for i in range(len(tab) - 1):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], col)


def solve_min(A: list, b: list, c: list) -> list | None:
    """``min c.x`` subject to ``A x >= b``, ``x >= 0`` with ``b > 0``; None if infeasible."""
    m, nv = len(A), len(c)
    # columns: x (nv), surplus (m), artificial (m), rhs
    width = nv + 2 * m + 1
    tab = []
    for i, row in enumerate(A):
        line = [Fraction(x) for x in row] + [Fraction(0)] * (2 * m) + [Fraction(b[i])]
        line[nv + i] = Fraction(-1)
        line[nv + m + i] = Fraction(1)
        tab.append(line)
    basis = [nv + m + i for i in range(m)]
    # phase one: minimise the sum of artificials
    phase1 = [Fraction(0)] * width
    for line in tab:
        for j in range(width):
            if not nv + m <= j < nv + 2 * m:
                phase1[j] -= line[j]
    tab.append(phase1)
    _run(tab, basis, nv + m)
    if tab[-1][-1] != 0:
        return None
    # drive any zero-level artificial out of the basis
    for i in range(m):
        if basis[i] >= nv + m:
            col = next((j for j in range(nv + m) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    tab.pop()
    obj = [Fraction(x) for x in c] + [Fraction(0)] * (2 * m + 1)
    for i, bj in enumerate(basis):
        if bj < nv + m and obj[bj] != 0:
            f = obj[bj]
            obj = [a - f * t for a, t in zip(obj, tab[i])]
    tab.append(obj)
    if not _run(tab, basis, nv + m):
        return None
    x = [Fraction(0)] * nv
    for i, bj in enumerate(basis):
        if bj < nv:
            x[bj] = tab[i][-1]
    return x


def segment_system(B: BorelSet) -> tuple[list, list]:
    n = B.n
    A, b = [], []
    A.append([1] + [0] * n)
    b.append(1)
    for i in range(n):
        row = [0] * (n + 1)
        row[i], row[i + 1] = -1, 1
        A.append(row)
        b.append(1)
    for alpha in sorted(global_minimal(B)):
        for beta in sorted(global_maximal(B)):
            A.append([a - c for a, c in zip(alpha, beta)])
            b.append(1)
    return A, b


def find_segment_order(B: BorelSet) -> SegmentCertificate | None:
    """A verified integral weight certificate, or None when no weight order works."""
    A, b = segment_system(B)
    x = solve_min(A, b, [1] * (B.n + 1))
    if x is None:
        return None
    scale = lcm(*(v.denominator for v in x))
    weights = tuple(int(v * scale) for v in x)
    return SegmentCertificate(weights, verify_certificate(B, weights))


def top_monomials(n: int, r: int, count: int, order: TermOrder) -> frozenset:
    """The ``count`` greatest monomials of degree ``r`` for ``order``."""
    ranked = sorted(monomials(n, r), key=order.key, reverse=True)
    return frozenset(ranked[:count])


def format_matrix(rows: list[list[int]]) -> str:
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in rows)
