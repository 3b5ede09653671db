"""Exact rank of sparse rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def exact_rank(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Rank over Q of a matrix given as sparse rows ``{column: value}``.

    Incremental Gaussian elimination: each row is reduced against the pivot
    rows found so far, keyed by their largest column.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        vec = {c: Fraction(v) for c, v in row.items() if v}
        while vec:
            lead = max(vec)
            piv = pivots.get(lead)
            if piv is None:
                scale = vec[lead]
                pivots[lead] = {c: v / scale for c, v in vec.items()}
                break
            factor = vec[lead]
            for c, v in piv.items():
                nv = vec.get(c, 0) - factor * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
    return len(pivots)
