"""Borel sets in P(n, r), their strata, saturation and enumeration."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DegreeBoundError, InvariantError, NotBorelError, ParseError
from .hilbert import HilbertPolynomial, delta, format_polynomial, from_differences, gotzmann_number
from .monomial import Monomial, TermOrder, down_moves, format_monomial, monomials, parse_monomial, up_moves

_DEGLEX = TermOrder.deglex()


def deglex_desc(ms: Iterable[Monomial]) -> list[Monomial]:
    return sorted(ms, key=_DEGLEX.key, reverse=True)


def generator_order(ms: Iterable[Monomial]) -> list[Monomial]:
    """Degree ascending, then DegRevLex descending: the usual printed layout."""
    return sorted(ms, key=lambda m: (sum(m), tuple(m)))


@dataclass(frozen=True, eq=False)
class BorelSet:
    """A subset of P(n, r) closed under elementary increasing moves."""

    n: int
    r: int
    members: frozenset

    def __post_init__(self):
        members = frozenset(Monomial(m) for m in self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if len(m) != self.n + 1 or sum(m) != self.r:
                raise ValueError(f"{m} is not in P({self.n}, {self.r})")
        for m in members:
            for u in up_moves(m):
                if u not in members:
                    raise NotBorelError(f"{format_monomial(m)} in set but e+ image {format_monomial(u)} is not")

    @cached_property
    def key(self) -> tuple:
        """Canonical form: members sorted DegLex-descending."""
        return tuple(deglex_desc(self.members))

    def __eq__(self, other):
        if not isinstance(other, BorelSet):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.r, self.members))

    def __contains__(self, m) -> bool:
        return m in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.key)

    @cached_property
    def complement(self) -> frozenset:
        return frozenset(m for m in monomials(self.n, self.r) if m not in self.members)

    @cached_property
    def stratum_counts(self) -> tuple:
        """``(|N_0|, ..., |N_{n-1}|)``."""
        counts = [0] * self.n
        for m in self.complement:
            for j in range(min(m.min_index + 1, self.n)):
                counts[j] += 1
        return tuple(counts)

    @cached_property
    def hilbert_polynomial(self) -> HilbertPolynomial:
        return hilbert_polynomial_of(self)

    @cached_property
    def ideal(self) -> "BorelIdeal":
        return saturate(self)

    def __repr__(self):
        return f"BorelSet({self.ideal})"

    def __str__(self):
        return str(self.ideal)


@dataclass(frozen=True)
class BorelIdeal:
    stratum: BorelSet
    saturated_generators: tuple
    regularity: int

    def __str__(self):
        gens = ", ".join(format_monomial(g) for g in self.saturated_generators)
        return f"({gens})_{{>={self.stratum.r}}}"

    def to_dict(self) -> dict:
        return {
            "n": self.stratum.n,
            "r": self.stratum.r,
            "generators": [format_monomial(g) for g in self.saturated_generators],
            "hilbert_polynomial": format_polynomial(self.stratum.hilbert_polynomial),
        }


def strata(B: BorelSet) -> list[tuple[frozenset, frozenset]]:
    """``[(B_j, N_j) for j in 0..n-1]`` where the index is a lower bound on ``min``."""
    out = []
    for j in range(B.n):
        bj = frozenset(m for m in B.members if m.min_index >= j)
        nj = frozenset(m for m in B.complement if m.min_index >= j)
        out.append((bj, nj))
    return out


def hilbert_polynomial_of(B: BorelSet) -> HilbertPolynomial:
    # the top count |N_n| is 1 only for the empty set, whose quotient is everything
    counts = B.stratum_counts + (0 if B.members else 1,)
    p = from_differences(counts, B.r)
    if any(delta(p, j)(B.r) != c for j, c in enumerate(counts)):
        raise InvariantError(f"stratum counts {counts} are not reproduced by {p}")
    return p


def minimal_elements(B: BorelSet, j: int) -> set:
    """Members with ``min == j`` whose decreasing moves at indices ``> j`` all leave B."""
    return {
        m for m in B.members
        if m.min_index == j and all(d not in B.members for d in down_moves(m, above=j))
    }


def maximal_elements(B: BorelSet, j: int) -> set:
    """Non-members with ``min == j`` whose increasing moves all enter B."""
    return {
        m for m in B.complement
        if m.min_index == j and all(u in B.members for u in up_moves(m))
    }


def global_minimal(B: BorelSet) -> set:
    return {m for m in B.members if all(d not in B.members for d in down_moves(m))}


def global_maximal(B: BorelSet) -> set:
    return {m for m in B.complement if all(u in B.members for u in up_moves(m))}


def _minimal_under_division(ms: Iterable[Monomial]) -> list[Monomial]:
    ms = sorted(set(ms), key=sum)
    gens: list[Monomial] = []
    for m in ms:
        if not any(g.divides(m) for g in gens):
            gens.append(m)
    return gens


def saturate(B: BorelSet) -> BorelIdeal:
    dehom = (Monomial._raw((0,) + tuple(m[1:])) for m in B.members)
    gens = generator_order(_minimal_under_division(dehom))
    reg = max((sum(g) for g in gens), default=0)
    ideal = BorelIdeal(B, tuple(gens), reg)
    if truncate(gens, B.n, B.r) != B:
        raise InvariantError(f"saturation of {B.key} does not regenerate the stratum")
    return ideal


def truncate(generators: Iterable[Monomial], n: int, r: int) -> BorelSet:
    """The degree-``r`` piece of the ideal generated by ``generators``."""
    gens = [Monomial(g) for g in generators]
    for g in gens:
        if len(g) != n + 1:
            raise ValueError(f"{g} has the wrong number of variables for P^{n}")
    members = {m for m in monomials(n, r) if any(g.divides(m) for g in gens)}
    return BorelSet(n, r, frozenset(members))


def downset_closure(ms: Iterable[Monomial], above: int = 0) -> set:
    """Closure under decreasing moves at indices ``> above``."""
    out = set(ms)
    stack = list(out)
    while stack:
        m = stack.pop()
        for d in down_moves(m, above=above):
            if d not in out:
                out.add(d)
                stack.append(d)
    return out


# ---------------------------------------------------------------------------
# enumeration


def _layer_downsets(layer: list, lower: dict, forced: set, needed: int) -> Iterator[frozenset]:
    """Down-sets of ``layer`` (sorted along a linear extension) containing ``forced``
    with exactly ``needed`` elements."""
    free = [e for e in layer if e not in forced]
    current = set(forced)

    def walk(idx: int, count: int):
        if count == needed:
            yield frozenset(current)
            return
        if count + len(free) - idx < needed:
            return
        e = free[idx]
        if all(c in current for c in lower[e]):
            current.add(e)
            yield from walk(idx + 1, count + 1)
            current.discard(e)
        yield from walk(idx + 1, count)

    if len(forced) <= needed:
        yield from walk(0, len(forced))


def enumerate_ideals(n: int, p: HilbertPolynomial) -> list[BorelSet]:
    """All Borel sets in P(n, r), r the Gotzmann number of p, with Hilbert polynomial p.

    The complement is built stratum by stratum from ``N_{n-1}`` down to
    ``N_0``; at stage ``j`` the new monomials (``min == j``) must keep the
    running set closed under decreasing moves and reach ``delta^j p(r)``
    elements.
    """
    if p.degree >= n:
        raise DegreeBoundError(f"deg {p} >= n = {n}")
    r = gotzmann_number(p)
    targets = [delta(p, j)(r) for j in range(n)]
    if any(t < 0 for t in targets):
        return []
    layers: dict[int, list] = {j: [] for j in range(n)}
    for m in monomials(n, r):
        if m.min_index < n:
            layers[m.min_index].append(m)
    for j in layers:
        layers[j].sort(key=_DEGLEX.key)
    lower = {m: tuple(down_moves(m, above=m.min_index)) for j in layers for m in layers[j]}

    results: list[frozenset] = []

    def stage(j: int, prev: frozenset):
        if j < 0:
            results.append(prev)
            return
        needed = targets[j] - len(prev)
        if needed < 0:
            return
        seeds = [Monomial._raw(m[:j] + (m[j] + 1, m[j + 1] - 1) + m[j + 2:]) for m in prev if m[j + 1]]
        forced = downset_closure(seeds, above=j)
        for new in _layer_downsets(layers[j], lower, forced, needed):
            stage(j - 1, prev | new)

    stage(n - 1, frozenset())
    all_monomials = monomials(n, r)
    sets = [BorelSet(n, r, frozenset(m for m in all_monomials if m not in N)) for N in results]
    return sorted(sets, key=lambda b: [_DEGLEX.key(m) for m in b.key], reverse=True)


# ---------------------------------------------------------------------------
# ideal text format: "x3^2, x3*x2^2, x2^4 @ 8"


def parse_ideal(text: str, n: int | None = None, names: str | None = None) -> BorelSet:
    """Parse comma-separated generators with an optional ``@ r`` truncation degree.

    Without ``@ r`` the truncation degree is the Gotzmann number of the
    Hilbert polynomial of the generated ideal.
    """
    body, _, deg = text.partition("@")
    body = body.strip()
    if body.startswith("(") and ")" in body:
        body = body[1:body.rindex(")")]
    tokens = [t for t in re.split(r"[,;]", body) if t.strip()]
    if not tokens:
        raise ParseError(f"no generators in {text!r}")
    if n is None:
        if names is not None:
            n = len(names) - 1
        else:
            idx = [int(i) for i in re.findall(r"x(\d+)", body)]
            if not idx:
                raise ParseError(f"cannot infer the number of variables from {text!r}")
            n = max(idx)
    gens = [parse_monomial(t, n, names) for t in tokens]
    if deg.strip():
        try:
            r = int(deg.strip())
        except ValueError:
            raise ParseError(f"bad truncation degree {deg!r}") from None
    else:
        top = max(sum(g) for g in gens)
        p = truncate(gens, n, top).hilbert_polynomial
        r = gotzmann_number(p)
    if r < max(sum(g) for g in gens):
        raise ParseError(f"truncation degree {r} is below a generator degree")
    return truncate(gens, n, r)


def format_ideal(B: BorelSet) -> str:
    gens = ", ".join(format_monomial(g) for g in B.ideal.saturated_generators)
    return f"{gens} @ {B.r}"
