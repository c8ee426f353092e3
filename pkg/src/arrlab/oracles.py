"""Independent brute-force checks used to validate the fast algorithms.

* connectivity by enumerating vertex cut sets, on every graph up to
  isomorphism with a given number of vertices (generated by vertex
  augmentation and deduplicated with nauty certificates);
* zero sets of ideals compared point by point over P^n(F_q).
"""

from __future__ import annotations

import gzip
import itertools
import os
import pickle
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator, Sequence

from .graphs import Graph, vertex_connectivity

# ---------------------------------------------------------------------------
# graphs as adjacency bitmasks
# ---------------------------------------------------------------------------

Masks = tuple[int, ...]


def graph_to_masks(g: Graph) -> Masks:
    masks = [0] * g.vcount
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return tuple(masks)


def masks_to_graph(masks: Masks) -> Graph:
    n = len(masks)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if masks[i] >> j & 1])


def _connected_within(masks: Masks, alive: int) -> bool:
    """Whether the subgraph induced on the bitmask ``alive`` is connected (empty counts)."""
    if not alive:
        return True
    seen = alive & -alive
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = masks[low.bit_length() - 1] & alive & ~seen
        seen |= nb
        frontier |= nb
    return seen == alive


def connectivity_by_cuts(masks: Masks) -> int:
    """Smallest vertex set whose removal disconnects the graph; n - 1 for complete graphs."""
    n = len(masks)
    full = (1 << n) - 1
    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            rest = full & ~removed
            if not _connected_within(masks, rest):
                return size
    return n - 1


# ---------------------------------------------------------------------------
# all graphs up to isomorphism
# ---------------------------------------------------------------------------

def _certificate(masks: Masks) -> bytes:
    import pynauty

    n = len(masks)
    adj = {i: [j for j in range(n) if masks[i] >> j & 1] for i in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def _augment(graphs: list[Masks], n: int) -> list[Masks]:
    """Graphs on n vertices from those on n - 1 by adding a vertex of minimum degree.

    Every graph arises this way (delete a vertex of minimum degree), so the
    new vertex only needs neighbourhoods no larger than the resulting
    minimum degree.
    """
    old = n - 1
    seen: dict[bytes, Masks] = {}
    for base in graphs:
        degs = [bin(m).count("1") for m in base]
        for k in range(0, old + 1):
            for nb in itertools.combinations(range(old), k):
                masks = list(base)
                nbmask = 0
                for v in nb:
                    masks[v] |= 1 << old
                    nbmask |= 1 << v
                masks.append(nbmask)
                if any(degs[v] + (nbmask >> v & 1) < k for v in range(old)):
                    continue
                cert = _certificate(tuple(masks))
                if cert not in seen:
                    seen[cert] = tuple(masks)
    return [seen[c] for c in sorted(seen)]


def cache_dir() -> Path:
    root = os.environ.get("ARRLAB_CACHE")
    return Path(root) if root else Path.home() / ".cache" / "arrlab"


def all_graphs(n: int, use_cache: bool = True) -> list[Masks]:
    """Every simple graph on n vertices up to isomorphism, as adjacency bitmasks."""
    if n < 1:
        raise ValueError("n must be positive")
    path = cache_dir() / f"graphs{n}.pkl.gz"
    if use_cache and path.exists():
        with gzip.open(path, "rb") as fh:
            return pickle.load(fh)
    graphs = [(0,)] if n == 1 else _augment(all_graphs(n - 1, use_cache), n)
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with gzip.open(tmp, "wb") as fh:
                pickle.dump(graphs, fh)
            tmp.replace(path)
        except OSError:
            pass
    return graphs


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("ARRLAB_THREADS", "1")))
    except ValueError:
        return 1


def _check_chunk(chunk: Sequence[Masks]) -> list[tuple[Masks, int, int]]:
    bad = []
    for masks in chunk:
        fast = vertex_connectivity(masks_to_graph(masks))
        slow = connectivity_by_cuts(masks)
        if fast != slow:
            bad.append((masks, fast, slow))
    return bad


def connectivity_mismatches(graphs: Sequence[Masks], workers: int | None = None) -> list[tuple[Masks, int, int]]:
    """Graphs on which max-flow connectivity disagrees with cut enumeration."""
    workers = workers or thread_count()
    if workers == 1 or len(graphs) < 1000:
        return _check_chunk(graphs)
    size = (len(graphs) + workers * 4 - 1) // (workers * 4)
    chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
    out = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for bad in pool.map(_check_chunk, chunks):
            out.extend(bad)
    return out


# ---------------------------------------------------------------------------
# zero sets over finite fields
# ---------------------------------------------------------------------------

def zero_set_mismatches(ideal, lines, f) -> Iterator[tuple]:
    """Points of P^n(F_q) where V(ideal) and the union of ``lines`` disagree."""
    from .projgeom import ProjPoint, projective_points

    for coords in projective_points(f, ideal.nvars - 1):
        on_variety = all(g.evaluate(coords) == 0 for g in ideal.gens)
        pt = ProjPoint(f, coords)
        on_lines = any(ln.contains(pt) for ln in lines)
        if on_variety != on_lines:
            yield coords
