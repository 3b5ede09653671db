"""Independent brute-force oracles used by the property and acceptance suites."""

from itertools import combinations_with_replacement

from borelnet import Monomial


def all_monomials(n, r):
    out = []
    for combo in combinations_with_replacement(range(n + 1), r):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        out.append(Monomial(e))
    return out


def neighbours_up(m):
    for j in range(len(m) - 1):
        if m[j]:
            e = list(m)
            e[j] -= 1
            e[j + 1] += 1
            yield Monomial(e)


def neighbours_down(m):
    for i in range(1, len(m)):
        if m[i]:
            e = list(m)
            e[i] -= 1
            e[i - 1] += 1
            yield Monomial(e)


def reachable_up(m):
    seen, stack = {m}, [m]
    while stack:
        for v in neighbours_up(stack.pop()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def down_closed_sets(n, r, size):
    """Every down-closed subset of P(n, r) with ``size`` elements, grown one element at a time."""
    universe = all_monomials(n, r)
    layer = {frozenset()}
    for _ in range(size):
        nxt = set()
        for s in layer:
            for m in universe:
                if m not in s and all(d in s for d in neighbours_down(m)):
                    nxt.add(s | {m})
        layer = nxt
    return layer


def quotient_dimension(members, n, t):
    """Monomials of degree t not divisible by any member."""
    return sum(1 for m in all_monomials(n, t) if not any(all(a <= b for a, b in zip(g, m)) for g in members))


def has_hilbert_polynomial(members, n, r, p):
    return all(quotient_dimension(members, n, t) == p(t) for t in range(r, r + n + 2))


def brute_force_ideals(n, p, r):
    """Borel sets of P(n, r) with Hilbert polynomial p, via the complement."""
    universe = all_monomials(n, r)
    out = set()
    for N in down_closed_sets(n, r, p(r)):
        members = frozenset(m for m in universe if m not in N)
        if has_hilbert_polynomial(members, n, r, p):
            out.add(members)
    return out
