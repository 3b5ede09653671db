"""Rational deformations between Borel sets.

A deformation swaps the images of a minimal monomial ``alpha`` under its
family of admissible decreasing-move compositions with the images of a
maximal non-member ``beta`` under the same compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .borel import BorelSet, deglex_desc, maximal_elements, minimal_elements
from .errors import (
    IncompatibleError,
    InvariantError,
    MismatchedSourceError,
    NotBorelError,
    PivotNotMinimalError,
)
from .hilbert import complement
from .linalg import exact_rank
from .monomial import Monomial, TermOrder, borel_leq, down_moves, format_monomial, monomials, up_moves


@dataclass(frozen=True)
class Composition:
    """A composition of decreasing moves stored as ``{index: multiplicity}``.

    ``moves`` holds ``(index, multiplicity)`` pairs with strictly decreasing
    indices; the empty tuple is the identity.
    """

    moves: tuple = ()

    def apply(self, m: Monomial) -> Monomial | None:
        """Image of ``m``, or None when the composition is not admissible on it."""
        exps = list(m)
        for idx, lam in self.moves:
            exps[idx] -= lam
            exps[idx - 1] += lam
        if any(e < 0 for e in exps):
            return None
        return Monomial._raw(tuple(exps))

    def as_dict(self) -> dict:
        return dict(self.moves)

    def __str__(self):
        if not self.moves:
            return "id"
        return "*".join(f"(e-_{i})^{lam}" if lam > 1 else f"e-_{i}" for i, lam in reversed(self.moves))


IDENTITY = Composition()


@dataclass(frozen=True)
class DecMoveFamily:
    pivot_stratum: int
    compositions: tuple

    def images(self, m: Monomial) -> list:
        return [F.apply(m) for F in self.compositions]

    def __len__(self):
        return len(self.compositions)


def decreasing_family(B: BorelSet, alpha: Monomial, j: int) -> DecMoveFamily:
    """Every composition over indices ``1..j`` sending ``alpha`` into ``B``, plus id."""
    alpha = Monomial(alpha)
    if alpha not in minimal_elements(B, j):
        raise PivotNotMinimalError(f"{format_monomial(alpha)} is not minimal in stratum {j}")
    found = []

    # choose lambda_j, lambda_{j-1}, ..., lambda_1; x_k receives lambda_{k+1}
    def choose(k: int, carry: int, acc: list):
        if k == 0:
            F = Composition(tuple((i, lam) for i, lam in acc if lam))
            img = F.apply(alpha)
            if img is not None and img in B.members:
                found.append(F)
            return
        for lam in range(alpha[k] + carry + 1):
            choose(k - 1, lam, acc + [(k, lam)])

    choose(j, 0, [])
    found.sort(key=lambda F: (sum(lam for _, lam in F.moves), [(-i, lam) for i, lam in F.moves]))
    return DecMoveFamily(j, tuple(found))


def is_borel_consistent(B: BorelSet, fam: DecMoveFamily, beta: Monomial) -> bool:
    j = fam.pivot_stratum
    for F in fam.compositions:
        img = F.apply(beta)
        if img is None:
            return False
        if any(u not in B.members for u in up_moves(img, start=j)):
            return False
    return True


@dataclass(frozen=True)
class Deformation:
    source: BorelSet
    target: BorelSet
    stratum: int
    alpha: Monomial
    beta: Monomial
    family: DecMoveFamily

    @property
    def alpha_images(self) -> frozenset:
        return frozenset(self.family.images(self.alpha))

    @property
    def beta_images(self) -> frozenset:
        return frozenset(self.family.images(self.beta))

    def to_dict(self, flat: bool | None = None) -> dict:
        out = {
            "source": [format_monomial(g) for g in self.source.ideal.saturated_generators],
            "target": [format_monomial(g) for g in self.target.ideal.saturated_generators],
            "r": self.source.r,
            "stratum": self.stratum,
            "alpha": format_monomial(self.alpha),
            "beta": format_monomial(self.beta),
            "family": [{str(i): lam for i, lam in F.moves} for F in self.family.compositions],
        }
        if flat is not None:
            out["flat"] = flat
        return out


def swap(B: BorelSet, remove: Iterable[Monomial], add: Iterable[Monomial]) -> BorelSet:
    remove, add = set(remove), set(add)
    try:
        return BorelSet(B.n, B.r, frozenset((B.members - remove) | add))
    except NotBorelError as exc:
        raise InvariantError(f"swap broke the Borel condition: {exc}") from None


def make_deformation(B: BorelSet, alpha: Monomial, beta: Monomial, j: int,
                     fam: DecMoveFamily | None = None) -> Deformation:
    if fam is None:
        fam = decreasing_family(B, alpha, j)
    a_imgs = fam.images(alpha)
    b_imgs = fam.images(beta)
    target = swap(B, a_imgs, b_imgs)
    if target.stratum_counts != B.stratum_counts:
        raise InvariantError("deformation changed the stratum cardinalities")
    return Deformation(B, target, j, Monomial(alpha), Monomial(beta), fam)


def _one_move_apart(alpha: Monomial, beta: Monomial, above: int) -> bool:
    return any(d == beta for d in down_moves(alpha, above=above))


def all_deformations(B: BorelSet) -> list[Deformation]:
    """Every single rational deformation of ``B``, one per distinct target."""
    out: list[Deformation] = []
    seen = set()
    for i in range(B.n):
        alphas = deglex_desc(minimal_elements(B, i))
        betas = deglex_desc(maximal_elements(B, i))
        for alpha in alphas:
            fam = None
            for beta in betas:
                if _one_move_apart(alpha, beta, above=i):
                    continue
                if fam is None:
                    fam = decreasing_family(B, alpha, i)
                if not is_borel_consistent(B, fam, beta):
                    continue
                d = make_deformation(B, alpha, beta, i, fam)
                if d.target not in seen:
                    seen.add(d.target)
                    out.append(d)
    return out


def to_deformation(B: BorelSet, order: TermOrder) -> Deformation | None:
    """The deformation of ``B`` with respect to ``order``; None if ``B`` is an endpoint."""
    key = order.key
    for i in range(B.n):
        alphas = minimal_elements(B, i)
        betas = maximal_elements(B, i)
        if not alphas or not betas:
            continue
        alpha = min(alphas, key=key)
        beta = max(betas, key=key)
        if key(alpha) < key(beta):
            fam = decreasing_family(B, alpha, i)
            if is_borel_consistent(B, fam, beta):
                return make_deformation(B, alpha, beta, i, fam)
    return None


# ---------------------------------------------------------------------------
# several deformations at once


def _pair_compatible(d1: Deformation, d2: Deformation) -> bool:
    # (i) alpha_i must not be reachable from beta_j by moves, else adding
    # beta_j while removing alpha_i breaks the closure
    for a, b in ((d1.alpha, d2.beta), (d2.alpha, d1.beta)):
        if borel_leq(b, a):
            return False
    # (ii)
    for di, dj in ((d1, d2), (d2, d1)):
        lo = di.alpha.min_index
        if lo > dj.alpha.min_index:
            for l in range(max(lo, 1), len(dj.alpha)):
                if dj.alpha[l] and borel_leq(_down(dj.alpha, l), di.beta):
                    return False
    # (iii)
    if d1.alpha_images & d2.alpha_images or d1.beta_images & d2.beta_images:
        return False
    return True


def _down(m: Monomial, l: int) -> Monomial:
    exps = list(m)
    exps[l] -= 1
    exps[l - 1] += 1
    return Monomial._raw(tuple(exps))


def compatible(defs: Sequence[Deformation]) -> bool:
    """Whether the deformations can be performed simultaneously."""
    defs = list(defs)
    if not defs:
        return True
    src = defs[0].source
    if any(d.source != src for d in defs):
        raise MismatchedSourceError("deformations do not share a source")
    return all(_pair_compatible(a, b) for a, b in combinations(defs, 2))


def compose(defs: Sequence[Deformation], choices: Sequence[bool]) -> BorelSet:
    """Perform the swaps whose choice is True (beta side) simultaneously."""
    defs = list(defs)
    if len(choices) != len(defs):
        raise ValueError("one choice per deformation is required")
    if not compatible(defs):
        raise IncompatibleError("deformations are not compatible")
    if not defs:
        raise ValueError("nothing to compose")
    src = defs[0].source
    remove, add = set(), set()
    for d, pick in zip(defs, choices):
        if pick:
            remove |= d.alpha_images
            add |= d.beta_images
    out = swap(src, remove, add)
    if out.stratum_counts != src.stratum_counts:
        raise InvariantError("composed deformation changed the stratum cardinalities")
    return out


# ---------------------------------------------------------------------------
# flatness by direct dimension count


def _degree_up_dimension(n: int, r: int, monos: Iterable[Monomial], binomials: Iterable[tuple]) -> int:
    """dim of the degree r+1 span of ``x_i * g`` over all generators ``g``."""
    col = {m: k for k, m in enumerate(monomials(n, r + 1))}
    rows = []
    for g in monos:
        for i in range(n + 1):
            rows.append({col[g.times(i)]: 1})
    for a, b, coeff in binomials:
        for i in range(n + 1):
            rows.append({col[a.times(i)]: 1, col[b.times(i)]: coeff})
    return exact_rank(rows)


def fiber_dimension(defs: Sequence[Deformation], params: Sequence[tuple]) -> int:
    """Dimension in degree r+1 of the family member at ``params``.

    ``params[k] = (y0, y1)`` is the point of the k-th P^1; the generators are
    the untouched monomials plus ``y0*F(alpha) + y1*F(beta)``.
    """
    defs = list(defs)
    B = defs[0].source
    touched = set()
    monos: list = []
    binomials: list = []
    for d, (y0, y1) in zip(defs, params):
        touched |= d.alpha_images
        for a, b in zip(d.family.images(d.alpha), d.family.images(d.beta)):
            if y0 == 0:
                monos.append(b)
            elif y1 == 0:
                monos.append(a)
            else:
                # scale so the alpha coefficient is 1
                binomials.append((a, b, Fraction(y1) / y0))
    monos.extend(m for m in B.members if m not in touched)
    return _degree_up_dimension(B.n, B.r, monos, binomials)


def flat_dimensions(d: Deformation | Sequence[Deformation], y1_values=(1, 2)) -> dict:
    defs = [d] if isinstance(d, Deformation) else list(d)
    B = defs[0].source
    expected = complement(B.hilbert_polynomial, B.n, B.r + 1)
    out = {"expected": expected}
    s = len(defs)
    out["[1:0]"] = fiber_dimension(defs, [(1, 0)] * s)
    out["[0:1]"] = fiber_dimension(defs, [(0, 1)] * s)
    for y in y1_values:
        out[f"[1:{y}]"] = fiber_dimension(defs, [(1, y)] * s)
    return out


def verify_flat(d: Deformation | Sequence[Deformation], y1_values=(1,)) -> bool:
    """Gotzmann check: every sampled fiber has dimension q(r+1) in degree r+1."""
    dims = flat_dimensions(d, y1_values)
    expected = dims.pop("expected")
    return all(v == expected for v in dims.values())
