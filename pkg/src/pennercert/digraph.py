"""The oriented graph G(A) of a nonnegative matrix and its cycle structure.

Vertices are labelled ``1..n``.  An edge ``i -> j`` of weight ``A_ij`` is
present exactly when ``A_ij != 0``, so ``(A**m)_ij`` counts weighted walks.
Everything about "is the leading eigenvalue above one" is decided here
combinatorially, without floating point.
"""

from __future__ import annotations

import enum
import heapq
import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import EmptySet, IndexOutOfRange, NotAComponent
from .intmatrix import NonNegIntMatrix

__all__ = [
    "OrientedGraph",
    "SccDecomposition",
    "ComponentKind",
    "graph_of",
    "scc_decompose",
    "restrict",
    "is_circle",
    "component_kind",
    "component_period",
    "exceeds_one",
    "is_irreducible",
    "is_perron_frobenius",
    "scc_report",
]


class ComponentKind(enum.Enum):
    TRIVIAL = "trivial"  # single vertex, no self-loop: radius 0
    CIRCLE = "circle"  # one simple cycle of unit weights: radius 1
    EXPANDING = "expanding"  # anything else strongly connected: radius > 1


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    edges: frozenset[tuple[int, int, int]]

    def successors(self, v: int) -> list[tuple[int, int]]:
        """Sorted ``(target, weight)`` pairs leaving ``v``."""
        return sorted((t, w) for s, t, w in self.edges if s == v)

    def adjacency(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for s, t, _ in sorted(self.edges):
            adj[s].append(t)
        return adj


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of G(A).

    ``components`` is listed sinks first (reverse topological order).
    ``condensation_order`` is a topological order of the condensation, as
    indices into ``components``: reordering the matrix by it puts every
    inter-component edge above the block diagonal.
    """

    components: tuple[tuple[int, ...], ...]
    condensation_order: tuple[int, ...]
    component_of: dict

    def ordered_vertices(self) -> list[int]:
        return [v for c in self.condensation_order for v in self.components[c]]


def graph_of(A: NonNegIntMatrix) -> OrientedGraph:
    edges = frozenset(
        (i + 1, j + 1, w)
        for i, row in enumerate(A.rows)
        for j, w in enumerate(row)
        if w
    )
    return OrientedGraph(A.n, edges)


def _adjacency(A: NonNegIntMatrix, vertices=None):
    """0-based adjacency lists, optionally restricted to a vertex subset."""
    if vertices is None:
        return [[j for j, w in enumerate(row) if w] for row in A.rows]
    keep = set(vertices)
    return {v: [j for j, w in enumerate(A.rows[v]) if w and j in keep] for v in keep}


def _tarjan(adj):
    """Iterative Tarjan; yields components (0-based lists) sinks first."""
    n = len(adj)
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    counter = 0
    out = []
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = adj[v]
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if index[w] is None:
                    work.append((v, pos))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


def scc_decompose(G) -> SccDecomposition:
    """Strongly connected components with a deterministic condensation order.

    Accepts an OrientedGraph or a NonNegIntMatrix.  The topological order is
    Kahn's algorithm with ties going to the component holding the smallest
    vertex; ``components`` lists that order reversed.
    """
    if isinstance(G, NonNegIntMatrix):
        G = graph_of(G)
    n = G.n
    adj = [[] for _ in range(n)]
    for s, t, _ in G.edges:
        adj[s - 1].append(t - 1)
    for a in adj:
        a.sort()
    raw = _tarjan(adj)

    comp_of = {}
    for c, comp in enumerate(raw):
        for v in comp:
            comp_of[v] = c
    succ = [set() for _ in raw]
    indeg = [0] * len(raw)
    for s, t, _ in G.edges:
        a, b = comp_of[s - 1], comp_of[t - 1]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(raw[c][0], c) for c in range(len(raw)) if indeg[c] == 0]
    heapq.heapify(heap)
    topo = []
    while heap:
        _, c = heapq.heappop(heap)
        topo.append(c)
        for b in succ[c]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (raw[b][0], b))

    listing = topo[::-1]
    components = tuple(tuple(v + 1 for v in raw[c]) for c in listing)
    position = {c: k for k, c in enumerate(listing)}
    order = tuple(position[c] for c in topo)
    component_of = {v: k for k, comp in enumerate(components) for v in comp}
    return SccDecomposition(components, order, component_of)


def restrict(A: NonNegIntMatrix, vertices: Iterable[int]) -> NonNegIntMatrix:
    """Principal submatrix on ``vertices`` (1-based), in increasing vertex order."""
    vs = sorted(set(vertices))
    if not vs:
        raise EmptySet("cannot restrict to an empty vertex set")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= A.n:
            raise IndexOutOfRange(f"vertex {v!r} outside 1..{A.n}")
    idx = [v - 1 for v in vs]
    return NonNegIntMatrix(tuple(tuple(A.rows[a][b] for b in idx) for a in idx))


def _require_component(A, component):
    comp = tuple(sorted(set(component)))
    if not comp:
        raise NotAComponent("empty vertex set")
    if any(not isinstance(v, int) or not 1 <= v <= A.n for v in comp):
        raise NotAComponent(f"vertex set {list(comp)} is not inside 1..{A.n}")
    if comp not in scc_decompose(A).components:
        raise NotAComponent(f"{list(comp)} is not a strongly connected component")
    return comp


def _kind_unchecked(A, comp) -> ComponentKind:
    inside = set(v - 1 for v in comp)
    if len(comp) == 1:
        w = A.rows[comp[0] - 1][comp[0] - 1]
        if w == 0:
            return ComponentKind.TRIVIAL
        return ComponentKind.CIRCLE if w == 1 else ComponentKind.EXPANDING
    # strongly connected with >= 2 vertices: a circle iff every vertex has
    # exactly one internal out-edge, of weight 1
    for v in inside:
        out = [w for j, w in enumerate(A.rows[v]) if w and j in inside]
        if out != [1]:
            return ComponentKind.EXPANDING
    return ComponentKind.CIRCLE


def component_kind(A: NonNegIntMatrix, component: Iterable[int]) -> ComponentKind:
    """Classify an SCC as trivial, a circle, or expanding (radius > 1)."""
    return _kind_unchecked(A, _require_component(A, component))


def is_circle(A: NonNegIntMatrix, component: Iterable[int]) -> bool:
    """True iff the component is one simple directed cycle with unit weights.

    A lone vertex without a self-loop is not a circle; ``component_kind``
    reports it as ``ComponentKind.TRIVIAL``.
    """
    return component_kind(A, component) is ComponentKind.CIRCLE


def component_period(A: NonNegIntMatrix, component: Iterable[int]) -> int:
    """Gcd of cycle lengths inside a nontrivial SCC (its index of imprimitivity).

    Returns 0 for a trivial component.
    """
    comp = sorted(set(component))
    adj = _adjacency(A, [v - 1 for v in comp])
    root = comp[0] - 1
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in level:
                    level[w] = level[v] + 1
                    nxt.append(w)
        frontier = nxt
    g = 0
    for v in adj:
        for w in adj[v]:
            g = gcd(g, level[v] + 1 - level[w])
    return g


def exceeds_one(A: NonNegIntMatrix) -> bool:
    """Exact test for "spectral radius > 1": some SCC is neither trivial nor a circle."""
    return any(
        _kind_unchecked(A, comp) is ComponentKind.EXPANDING
        for comp in scc_decompose(A).components
    )


def is_irreducible(A: NonNegIntMatrix) -> bool:
    return len(scc_decompose(A).components) == 1


def is_perron_frobenius(A: NonNegIntMatrix) -> bool:
    """Irreducible and aperiodic, i.e. some power of A is strictly positive."""
    dec = scc_decompose(A)
    if len(dec.components) != 1:
        return False
    comp = dec.components[0]
    if _kind_unchecked(A, comp) is ComponentKind.TRIVIAL:
        return False
    return component_period(A, comp) == 1


def scc_report(A: NonNegIntMatrix) -> dict:
    """JSON-ready summary: components, topological order, circle/trivial flags."""
    dec = scc_decompose(A)
    kinds = [_kind_unchecked(A, c) for c in dec.components]
    return {
        "components": [list(c) for c in dec.components],
        "order": list(dec.condensation_order),
        "circle_flags": [k is ComponentKind.CIRCLE for k in kinds],
        "trivial_flags": [k is ComponentKind.TRIVIAL for k in kinds],
    }


def scc_report_json(A: NonNegIntMatrix) -> str:
    return json.dumps(scc_report(A))
