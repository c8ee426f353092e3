"""Finite simple graphs and the invariants the dual-graph statements constrain."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .projgeom import Arrangement


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..vcount-1``; ``edges`` sorted pairs with i < j."""

    vcount: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != self.vcount:
            raise ValueError("one label per vertex required")
        prev = None
        for i, j in self.edges:
            if not 0 <= i < j < self.vcount:
                raise ValueError(f"bad edge {(i, j)}")
            if prev is not None and (i, j) <= prev:
                raise ValueError("edges must be sorted and distinct")
            prev = (i, j)

    @classmethod
    def from_edges(cls, vcount: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(vcount, tuple(sorted(norm)), tuple(labels) if labels is not None else None)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "Graph":
        return cls.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb: list[set] = [set() for _ in range(self.vcount)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, label: str) -> int:
        if not self.labels:
            return int(label)
        return self.labels.index(label)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def valency(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: k for k, v in enumerate(vertices)}
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        labels = [self.label(v) for v in vertices] if self.labels else None
        return Graph.from_edges(len(vertices), edges, labels)

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.vcount, self.edges, tuple(labels))

    def to_json(self) -> dict:
        return {"vcount": self.vcount,
                "labels": list(self.labels) if self.labels else [str(i) for i in range(self.vcount)],
                "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        labels = obj.get("labels")
        return cls.from_edges(int(obj["vcount"]), obj.get("edges", []), labels)


def dual_graph(a: Arrangement) -> Graph:
    """One vertex per line (same order); an edge for every pair of meeting lines."""
    return Graph.from_edges(len(a.lines), a.meets.keys())


class ValencyStats(NamedTuple):
    delta: int
    Delta: int
    regular: bool


def valency_stats(g: Graph) -> ValencyStats:
    if g.vcount < 1:
        raise ValueError("graph has no vertices")
    vals = [len(s) for s in g.adj]
    lo, hi = min(vals), max(vals)
    return ValencyStats(lo, hi, lo == hi)


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

class _SplitNetwork:
    """Unit-capacity node-split flow network of a graph, reusable across s-t pairs.

    Vertex v becomes v_in = 2v -> v_out = 2v + 1 with capacity 1; every edge
    {u, v} gives arcs u_out -> v_in and v_out -> u_in.  Arcs are stored in
    pairs (a, a ^ 1) so the residual arc is found by flipping the low bit.
    """

    def __init__(self, g: Graph):
        self.head: list[int] = []
        self.base_cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(2 * g.vcount)]
        for v in range(g.vcount):
            self._arc(2 * v, 2 * v + 1)
        for u, v in g.edges:
            self._arc(2 * u + 1, 2 * v)
            self._arc(2 * v + 1, 2 * u)

    def _arc(self, a: int, b: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.base_cap.append(1)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.base_cap.append(0)

    def max_flow(self, s: int, t: int, cutoff: int | None) -> int:
        cap = list(self.base_cap)
        head, out = self.head, self.out
        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while cutoff is None or flow < cutoff:
            via = {source: -1}
            queue = deque([source])
            while queue and sink not in via:
                x = queue.popleft()
                for arc in out[x]:
                    y = head[arc]
                    if cap[arc] and y not in via:
                        via[y] = arc
                        queue.append(y)
            if sink not in via:
                break
            y = sink
            while y != source:
                arc = via[y]
                cap[arc] -= 1
                cap[arc ^ 1] += 1
                y = head[arc ^ 1]
            flow += 1
        return flow


def local_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None,
                       _net: _SplitNetwork | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t nonadjacent).

    Unit-capacity max-flow on the node-split graph; augmentation stops early
    once ``cutoff`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs two distinct nonadjacent vertices")
    return (_net or _SplitNetwork(g)).max_flow(s, t, cutoff)


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that ``g`` is k-connected (complete graph K_n gives n - 1).

    Equals the minimum local connectivity over nonadjacent pairs.  Pairs are
    visited in Even's order: a minimum separator misses one of the first k+1
    vertices, so sources beyond the current bound cannot lower it.
    """
    n = g.vcount
    if n < 2:
        raise ValueError("connectivity needs at least two vertices")
    net = _SplitNetwork(g)
    best = n - 1
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, net.max_flow(i, j, best))
                if best == 0:
                    return 0
        i += 1
    return best


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.vcount
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``math.inf`` when disconnected."""
    if g.vcount < 1:
        raise ValueError("graph has no vertices")
    best = 0
    for s in range(g.vcount):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def diameter_bound(n: int, k: int) -> int:
    """floor((n + k - 2) / k): the diameter bound for k-connected graphs on n vertices."""
    return (n + k - 2) // k


class GraphProperties(NamedTuple):
    bipartite: bool
    triangle_free: bool
    edge_count: int


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.vcount
    for s in range(g.vcount):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def triangles(g: Graph) -> Iterable[tuple[int, int, int]]:
    for i, j in g.edges:
        for k in sorted(g.adj[i] & g.adj[j]):
            if k > j:
                yield i, j, k


def graph_properties(g: Graph) -> GraphProperties:
    tri_free = next(iter(triangles(g)), None) is None
    return GraphProperties(is_bipartite(g), tri_free, len(g.edges))


def triangle_partition(g: Graph) -> list[tuple[int, int, int]] | None:
    """Lexicographically least partition of the vertices into triangles, if any."""
    n = g.vcount
    if n % 3:
        return None
    adj = g.adj
    used = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def solve() -> bool:
        v = next((x for x in range(n) if not used[x]), None)
        if v is None:
            return True
        nb = sorted(x for x in adj[v] if not used[x])
        used[v] = True
        for a_pos, a in enumerate(nb):
            used[a] = True
            for b in nb[a_pos + 1:]:
                if b in adj[a] and not used[b]:
                    used[b] = True
                    chosen.append((v, a, b))
                    if solve():
                        return True
                    chosen.pop()
                    used[b] = False
            used[a] = False
        used[v] = False
        return False

    return list(chosen) if solve() else None


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _refine(graphs: Sequence[Graph], colors: Sequence[list[int]]) -> list[list[int]]:
    """Joint colour refinement; colour ids are shared across the graphs."""
    colors = [list(c) for c in colors]
    while True:
        sigs = []
        for g, col in zip(graphs, colors):
            sigs.append([(col[v], tuple(sorted(col[u] for u in g.adj[v]))) for v in range(g.vcount)])
        palette = {s: k for k, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        new = [[palette[s] for s in sg] for sg in sigs]
        if all(len(set(nc)) == len(set(oc)) for nc, oc in zip(new, colors)):
            return new
        colors = new


def _histogram(col: Sequence[int]) -> dict[int, int]:
    h: dict[int, int] = {}
    for c in col:
        h[c] = h.get(c, 0) + 1
    return h


def are_isomorphic(g1: Graph, g2: Graph) -> list[int] | None:
    """An isomorphism as a list ``phi`` (vertex v of g1 -> phi[v] of g2), or ``None``.

    Colour refinement followed by individualisation-refinement backtracking.
    """
    if g1.vcount != g2.vcount or len(g1.edges) != len(g2.edges):
        return None
    n = g1.vcount
    if n == 0:
        return []
    start = _refine([g1, g2], [[len(s) for s in g1.adj], [len(s) for s in g2.adj]])

    def search(c1: list[int], c2: list[int]) -> list[int] | None:
        if _histogram(c1) != _histogram(c2):
            return None
        if len(set(c1)) == n:
            where = {c: v for v, c in enumerate(c2)}
            phi = [where[c] for c in c1]
            if all(g2.has_edge(phi[i], phi[j]) for i, j in g1.edges):
                return phi
            return None
        hist = _histogram(c1)
        target = min((c for c in hist if hist[c] > 1), key=lambda c: (hist[c], c))
        v = c1.index(target)
        fresh = max(max(c1), max(c2)) + 1
        for w in (u for u in range(n) if c2[u] == target):
            d1 = list(c1)
            d2 = list(c2)
            d1[v] = fresh
            d2[w] = fresh
            r1, r2 = _refine([g1, g2], [d1, d2])
            found = search(r1, r2)
            if found is not None:
                return found
        return None

    return search(*start)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph) -> str:
    lines = ["graph {"]
    for v in range(g.vcount):
        lines.append(f"  {_dot_quote(g.label(v))};")
    for i, j in g.edges:
        lines.append(f"  {_dot_quote(g.label(i))} -- {_dot_quote(g.label(j))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
