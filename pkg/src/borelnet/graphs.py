"""Deformation graphs for a term order, Borel incidence graphs, analysis and export."""

from __future__ import annotations

import json
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Sequence

from .borel import BorelSet, enumerate_ideals, format_ideal
from .deform import Deformation, all_deformations, compatible, compose, to_deformation
from .hilbert import HilbertPolynomial, format_polynomial
from .monomial import TermOrder, format_monomial

WORKERS_ENV = "BORELNET_WORKERS"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence, workers: int | None = None) -> list:
    # results come back in input order, so assembly stays deterministic
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass
class Edge:
    source: int
    target: int
    kind: str  # "simple" or "composed"
    witnesses: tuple = ()

    def key(self, directed: bool) -> tuple:
        if directed:
            return (self.source, self.target)
        return tuple(sorted((self.source, self.target)))


@dataclass
class DeformGraph:
    vertices: list
    edges: list = field(default_factory=list)
    directed: bool = False
    endpoints: set = field(default_factory=set)
    label: str = ""

    def index(self, B: BorelSet) -> int:
        return self.vertices.index(B)

    def has_edge(self, a: int, b: int, kind: str | None = None) -> bool:
        for e in self.edges:
            if kind is not None and e.kind != kind:
                continue
            if (e.source, e.target) == (a, b) or (not self.directed and (e.source, e.target) == (b, a)):
                return True
        return False

    def adjacency(self) -> dict:
        adj = {i: set() for i in range(len(self.vertices))}
        for e in self.edges:
            adj[e.source].add(e.target)
            adj[e.target].add(e.source)
        return adj

    def out_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if e.source == v)


def _directed_step(args):
    B, order = args
    return to_deformation(B, order)


def deformation_graph(n: int, p: HilbertPolynomial, order: TermOrder, workers: int | None = None) -> DeformGraph:
    """One out-edge per vertex from the order's deformation; endpoints have none."""
    vertices = enumerate_ideals(n, p)
    index = {B: k for k, B in enumerate(vertices)}
    g = DeformGraph(vertices, directed=True, label=f"{order} on Hilb^{n}_{format_polynomial(p)}")
    results = _map(_directed_step, [(B, order) for B in vertices], workers)
    for k, d in enumerate(results):
        if d is None:
            g.endpoints.add(k)
        else:
            g.edges.append(Edge(k, index[d.target], "simple", (d,)))
    return g


def _compatible_subsets(defs: list, cap: int) -> list:
    """Subsets of size 2..cap whose members are pairwise compatible."""
    ok = {(a, b) for a, b in combinations(range(len(defs)), 2) if compatible([defs[a], defs[b]])}
    out = []

    def grow(current: list, start: int):
        if len(current) >= 2:
            out.append(tuple(current))
        if len(current) == cap:
            return
        for k in range(start, len(defs)):
            if all((c, k) in ok for c in current):
                grow(current + [k], k + 1)

    grow([], 0)
    return out


def incidence_graph(n: int, p: HilbertPolynomial, cap: int = 3, workers: int | None = None) -> DeformGraph:
    """Undirected graph of simple and composed rational deformations.

    Composed edges join every pair of members of a compatible family that is
    not already joined by a simple edge.
    """
    vertices = enumerate_ideals(n, p)
    index = {B: k for k, B in enumerate(vertices)}
    g = DeformGraph(vertices, directed=False, label=f"incidence of Hilb^{n}_{format_polynomial(p)}")
    per_vertex = _map(all_deformations, vertices, workers)
    seen: dict = {}
    for k, defs in enumerate(per_vertex):
        for d in defs:
            e = Edge(k, index[d.target], "simple", (d,))
            key = e.key(False)
            if key not in seen:
                seen[key] = e
                g.edges.append(e)
    composed: list = []
    for k, defs in enumerate(per_vertex):
        for subset in _compatible_subsets(defs, cap):
            family = [defs[i] for i in subset]
            members = [index[compose(family, choice)] for choice in product((False, True), repeat=len(family))]
            for a, b in combinations(members, 2):
                e = Edge(a, b, "composed", tuple(family))
                key = e.key(False)
                if a != b and key not in seen:
                    seen[key] = e
                    composed.append(e)
    g.edges.extend(composed)
    return g


# ---------------------------------------------------------------------------
# analysis


@dataclass
class GraphReport:
    is_tree: bool
    root: int | None
    height: int | None
    components: int
    endpoints: list

    def to_dict(self) -> dict:
        return {
            "is_tree": self.is_tree,
            "root": self.root,
            "height": self.height,
            "components": self.components,
            "endpoints": self.endpoints,
        }


def _components(g: DeformGraph) -> list:
    adj = g.adjacency()
    seen: set = set()
    comps = []
    for v in range(len(g.vertices)):
        if v in seen:
            continue
        comp = []
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def distances(g: DeformGraph, root: int) -> dict:
    adj = g.adjacency()
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def analyze(g: DeformGraph) -> GraphReport:
    """Tree test, root, height (neighbours of the root at distance 1), components."""
    nv = len(g.vertices)
    comps = _components(g)
    endpoints = sorted(g.endpoints)
    connected = len(comps) <= 1
    is_tree = connected and len(g.edges) == max(nv - 1, 0)
    root = None
    if g.directed:
        if is_tree and len(endpoints) == 1:
            root = endpoints[0]
        else:
            is_tree = False
    elif is_tree and nv == 1:
        root = 0
    height = None
    if root is not None:
        height = max(distances(g, root).values())
    return GraphReport(is_tree, root, height, len(comps), endpoints)


# ---------------------------------------------------------------------------
# export


def vertex_label(B: BorelSet) -> str:
    return format_ideal(B)


def to_dot(g: DeformGraph) -> str:
    kind = "digraph" if g.directed else "graph"
    arrow = "->" if g.directed else "--"
    boxed = set(g.endpoints)
    report = analyze(g)
    if report.root is not None:
        boxed.add(report.root)
    lines = [f"{kind} G {{"]
    if g.label:
        lines.append(f"  label={json.dumps(g.label)};")
    for k, B in enumerate(g.vertices):
        shape = "box" if k in boxed else "ellipse"
        lines.append(f"  v{k + 1} [label={json.dumps(vertex_label(B))}, shape={shape}];")
    for e in g.edges:
        style = " [style=dashed]" if e.kind == "composed" else ""
        lines.append(f"  v{e.source + 1} {arrow} v{e.target + 1}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _deformation_record(d: Deformation) -> dict:
    return {
        "stratum": d.stratum,
        "alpha": format_monomial(d.alpha),
        "beta": format_monomial(d.beta),
        "family": [{str(i): lam for i, lam in F.moves} for F in d.family.compositions],
    }


def _one_based(report: dict) -> dict:
    out = dict(report)
    if out["root"] is not None:
        out["root"] += 1
    out["endpoints"] = [k + 1 for k in out["endpoints"]]
    return out


def to_json(g: DeformGraph) -> str:
    doc = {
        "directed": g.directed,
        "label": g.label,
        "vertices": [
            {"id": k + 1, "ideal": vertex_label(B), **B.ideal.to_dict()} for k, B in enumerate(g.vertices)
        ],
        "edges": [
            {
                "source": e.source + 1,
                "target": e.target + 1,
                "kind": e.kind,
                "witnesses": [_deformation_record(d) for d in e.witnesses],
            }
            for e in g.edges
        ],
        "endpoints": [k + 1 for k in sorted(g.endpoints)],
        "analysis": _one_based(analyze(g).to_dict()),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def export(g: DeformGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return to_json(g)
    raise ValueError(f"unknown export format {fmt!r}")
