"""Simplicial complexes, nerves of set families and their reduced homology over Q.

Vertices are the integers 1..n.  A complex is stored by its facets, each a
sorted tuple, and the facet list itself is sorted.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exactfield import Field, rank_rows
from .graphs import Graph


class ComplexError(ValueError):
    """Malformed facet lists or set families."""


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        covered = set()
        for fc in self.facets:
            if not fc or list(fc) != sorted(set(fc)):
                raise ComplexError(f"facet {fc} must be a nonempty sorted tuple")
            covered.update(fc)
        if covered != set(range(1, self.n + 1)):
            raise ComplexError("every vertex 1..n must lie in some facet")
        sets = [set(fc) for fc in self.facets]
        for a, b in itertools.permutations(range(len(sets)), 2):
            if sets[a] <= sets[b]:
                raise ComplexError("facets must be pairwise incomparable")

    @property
    def dim(self) -> int:
        return max(len(fc) for fc in self.facets) - 1

    def faces(self, k: int) -> list[tuple[int, ...]]:
        """All k-dimensional faces, sorted."""
        out = set()
        for fc in self.facets:
            out.update(itertools.combinations(fc, k + 1))
        return sorted(out)

    def face_counts(self) -> list[int]:
        return [len(self.faces(k)) for k in range(self.dim + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(fc) for fc in self.facets]}

    @classmethod
    def from_json(cls, obj: dict) -> "SimplicialComplex":
        return complex_from_facets(obj["facets"], obj.get("n"))


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset] = []
    for s in uniq:
        if not any(s <= t for t in out):
            out.append(s)
    return out


def complex_from_facets(facets: Iterable[Iterable[int]], n: int | None = None) -> SimplicialComplex:
    """The complex generated by ``facets``; non-maximal faces are dropped."""
    sets = [frozenset(int(v) for v in fc) for fc in facets]
    if not sets or any(not s for s in sets):
        raise ComplexError("need a nonempty list of nonempty facets")
    if any(v < 1 for s in sets for v in s):
        raise ComplexError("vertices are numbered from 1")
    top = max(max(s) for s in sets)
    if n is None:
        n = top
    elif top > n:
        raise ComplexError(f"vertex {top} exceeds n={n}")
    kept = sorted(tuple(sorted(s)) for s in _maximal(sets))
    return SimplicialComplex(n, tuple(kept))


def nerve_of_family(sets: Sequence[Iterable]) -> SimplicialComplex:
    """Complex on 1..len(sets): a face is a subfamily with nonempty common intersection."""
    fam = [frozenset(s) for s in sets]
    if not fam:
        raise ComplexError("the family is empty")
    for i, s in enumerate(fam, 1):
        if not s:
            raise ComplexError(f"member {i} of the family is empty")
    ground = sorted(set().union(*fam))
    # every face lies in the star {i : x in A_i} of some ground element x
    stars = [frozenset(i for i, s in enumerate(fam, 1) if x in s) for x in ground]
    return complex_from_facets(stars, len(fam))


def lyubeznik_of_stanley_reisner(delta: SimplicialComplex) -> SimplicialComplex:
    """Nerve of the facet family: minimal primes of the Stanley-Reisner ring are the facets."""
    return nerve_of_family(delta.facets)


class AleResult(NamedTuple):
    gamma: SimplicialComplex
    s: int
    dim: int
    generators: tuple[tuple[int, ...], ...]
    """The sets A_1..A_n in vertex order (relabelled like ``gamma``)."""


def ale_construction(delta: SimplicialComplex) -> AleResult:
    """A complex whose nerve is ``delta``, built from the vertex-facet incidences.

    A_i = {j : vertex i lies in facet F_j} over [N]; each A_i contained in
    another A_i' receives the extra element N + i.  The unused extra
    elements are squeezed out so that gamma's vertices are 1..s.
    """
    N = len(delta.facets)
    base = [frozenset(j for j, fc in enumerate(delta.facets, 1) if i in fc)
            for i in range(1, delta.n + 1)]
    sets = []
    for i, a in enumerate(base, 1):
        contained = any(a <= b for k, b in enumerate(base, 1) if k != i)
        sets.append(a | {N + i} if contained else a)
    used = sorted(set().union(*sets))
    relabel = {v: k for k, v in enumerate(used, 1)}
    gens = tuple(tuple(sorted(relabel[v] for v in s)) for s in sets)
    gamma = complex_from_facets(gens, len(used))
    return AleResult(gamma, len(used), gamma.dim, gens)


def max_facet_degree(delta: SimplicialComplex) -> int:
    """M: the largest number of facets through a single vertex."""
    return max(sum(1 for fc in delta.facets if v in fc) for v in range(1, delta.n + 1))


def _boundary_rank(lower: list[tuple], upper: list[tuple], f: Field) -> int:
    """Rank of the boundary map C_k -> C_{k-1}, with C_{-1} = Q spanned by the empty face."""
    if not lower or not upper:
        return 0
    pos = {face: r for r, face in enumerate(lower)}
    one, minus = f.one, f.neg(f.one)
    rows = []
    for face in upper:
        row = [f.zero] * len(lower)
        for drop in range(len(face)):
            sub = face[:drop] + face[drop + 1:]
            row[pos[sub]] = one if drop % 2 == 0 else minus
        rows.append(row)
    return rank_rows(f, rows, len(lower))


def reduced_homology_ranks(delta: SimplicialComplex, maxdim: int) -> list[int]:
    """Reduced Betti numbers over Q in degrees 0..maxdim (augmented chain complex)."""
    if maxdim < 0 or maxdim > delta.dim + 1:
        raise ComplexError(f"maxdim must lie in 0..{delta.dim + 1}")
    f = Field.rational()
    chains = [[()]] + [delta.faces(k) for k in range(maxdim + 2)]
    # chains[k + 1] holds the k-faces; ranks[k] is the rank of d_k: C_k -> C_{k-1}
    ranks = [_boundary_rank(chains[k], chains[k + 1], f) for k in range(maxdim + 2)]
    return [len(chains[k + 1]) - ranks[k] - ranks[k + 1] for k in range(maxdim + 1)]


def euler_characteristic(delta: SimplicialComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(delta.face_counts()))


def one_skeleton(delta: SimplicialComplex) -> Graph:
    """Graph on the vertices (vertex v at index v - 1) whose edges are the 1-faces."""
    edges = [(u - 1, v - 1) for u, v in delta.faces(1)]
    return Graph.from_edges(delta.n, edges, [str(v) for v in range(1, delta.n + 1)])


# ---------------------------------------------------------------------------
# corpora for property checks
# ---------------------------------------------------------------------------

def all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex whose vertex set is exactly 1..n."""
    subsets = [frozenset(c) for k in range(n, 0, -1)
               for c in itertools.combinations(range(1, n + 1), k)]
    full = frozenset(range(1, n + 1))

    def grow(start: int, chosen: list[frozenset]) -> Iterator[list[frozenset]]:
        if chosen and frozenset().union(*chosen) == full:
            yield chosen
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if all(not (s <= t or t <= s) for t in chosen):
                yield from grow(idx + 1, chosen + [s])

    for family in grow(0, []):
        yield SimplicialComplex(n, tuple(sorted(tuple(sorted(s)) for s in family)))


def random_complex(rng: random.Random, max_n: int = 10) -> SimplicialComplex:
    n = rng.randint(1, max_n)
    facets = []
    for _ in range(rng.randint(1, 6)):
        size = rng.randint(1, min(n, 5))
        facets.append(rng.sample(range(1, n + 1), size))
    covered = set().union(*map(set, facets))
    facets += [[v] for v in range(1, n + 1) if v not in covered]
    return complex_from_facets(facets, n)


def complex_corpus(max_small: int = 5, random_count: int = 200, seed: int = 20240601,
                   max_n: int = 10) -> list[SimplicialComplex]:
    """All complexes on at most ``max_small`` vertices plus seeded random ones."""
    out = [c for n in range(1, max_small + 1) for c in all_complexes(n)]
    rng = random.Random(seed)
    out += [random_complex(rng, max_n) for _ in range(random_count)]
    return out
