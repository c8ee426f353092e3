"""Verification suites: each recomputes one group of claims and reports row by row.

Every suite returns a :class:`SuiteResult`.  A row's ``status`` is PASS or
FAIL; rows whose failure is a known, analysed impossibility carry a
``known`` note instead of being dropped.  The quartic suite may end as
NOT-REPRODUCED when no field in the scan realises the configuration.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import families as fam
from .casalg import arrangement_ideal, ci_regularity, ideal_equal, ideal_intersection, link_degree
from .casalg.ideals import Ideal, dimension_degree
from .exactfield import Field
from .graphs import (Graph, are_isomorphic, diameter, diameter_bound, dual_graph,
                     graph_properties, triangle_partition, valency_stats, vertex_connectivity)
from .nerve import (ale_construction, complex_corpus, lyubeznik_of_stanley_reisner,
                    max_facet_degree, nerve_of_family, reduced_homology_ranks)
from .oracles import all_graphs, connectivity_mismatches, zero_set_mismatches
from .projgeom import (Arrangement, ProjLine, has_only_planar_singularities, line_on_surface,
                       projective_points)

PASS, FAIL, NOT_REPRODUCED = "PASS", "FAIL", "NOT-REPRODUCED"


@dataclass
class Row:
    check: str
    expected: object
    computed: object
    known: str | None = None

    @property
    def status(self) -> str:
        return PASS if self.expected == self.computed else FAIL

    def to_json(self) -> dict:
        out = {"check": self.check, "expected": _plain(self.expected),
               "computed": _plain(self.computed), "status": self.status}
        if self.known and self.status == FAIL:
            out["known_failure"] = self.known
        return out


@dataclass
class SuiteResult:
    name: str
    criterion: int
    claim: str
    rows: list[Row] = field(default_factory=list)
    log: list[str] = field(default_factory=list)
    reproduced: bool = True
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if not self.reproduced:
            return NOT_REPRODUCED
        return PASS if all(r.status == PASS for r in self.rows) else FAIL

    def failures(self, include_known: bool = True) -> list[Row]:
        return [r for r in self.rows if r.status == FAIL and (include_known or not r.known)]

    def add(self, check: str, expected, computed, known: str | None = None) -> Row:
        row = Row(check, expected, computed, known)
        self.rows.append(row)
        return row

    def to_json(self) -> dict:
        return {"suite": self.name, "criterion": self.criterion, "claim": self.claim,
                "status": self.status, "rows": [r.to_json() for r in self.rows], "log": self.log}


def _plain(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, (list, set, frozenset)):
        return [_plain(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
    return v


def _is_partition(g: Graph, parts) -> bool:
    if parts is None:
        return False
    covered = sorted(v for t in parts for v in t)
    return covered == list(range(g.vcount)) and all(
        g.has_edge(a, b) for t in parts for a, b in itertools.combinations(t, 2))


def _is_isomorphism(g1: Graph, g2: Graph, phi) -> bool:
    if phi is None or sorted(phi) != list(range(g2.vcount)):
        return False
    return sorted(tuple(sorted((phi[i], phi[j]))) for i, j in g1.edges) == list(g2.edges)


# ---------------------------------------------------------------------------
# individual suites
# ---------------------------------------------------------------------------

def suite_eight_lines() -> SuiteResult:
    res = SuiteResult("eight-lines", 1, "eight lines in P^4 cut out by three quadrics")
    a = fam.example_eight_lines()
    g = dual_graph(a)
    edges = {(i + 1, j + 1) for i, j in g.edges}
    res.add("dual graph edges (1-indexed)", set(fam.EIGHT_LINE_EDGES), edges)
    vs = valency_stats(g)
    res.add("(min valency, max valency)", (3, 4), (vs.delta, vs.Delta))
    primes = fam.example_eight_primes()
    acc = primes[0]
    for p in primes[1:]:
        acc = ideal_intersection(acc, p)
    quadrics = fam.example_eight_ideal()
    res.add("intersection of the 8 primes equals the 3 quadrics", True, ideal_equal(acc, quadrics))
    res.add("CI regularity", 4, ci_regularity(quadrics))
    res.add("only planar singularities", False, has_only_planar_singularities(a)[0])
    res.log.append("link degrees: " + str([link_degree(a, i) for i in range(8)])
                   + "; valencies: " + str([g.valency(i) for i in range(8)]))
    return res


def suite_twenty_seven() -> SuiteResult:
    res = SuiteResult("twenty-seven", 2, "dual graph of the 27 lines on a smooth cubic")
    g = fam.twenty_seven_graph()
    vs = valency_stats(g)
    res.add("valency stats", (10, 10, True), tuple(vs))
    res.add("vertex connectivity", 10, vertex_connectivity(g))
    res.add("edge count", 135, len(g.edges))
    parts = triangle_partition(g)
    res.add("partition into 9 triangles", (True, 9), (_is_partition(g, parts), len(parts or ())))
    c = fam.fermat_combinatorial(3)
    phi = are_isomorphic(g, c)
    res.add("isomorphic to the degree-3 Fermat graph", True, _is_isomorphism(g, c, phi))
    return res


EVEN_FERMAT_NOTE = ("the combinatorial adjacency rule disagrees with the geometry for even d; no "
                    "relabelling of roots repairs it and the two graphs are not even isomorphic")


def _edge_triangle_profile(g: Graph) -> list[tuple[int, int]]:
    counts: dict[int, int] = {}
    for i, j in g.edges:
        c = len(g.adj[i] & g.adj[j])
        counts[c] = counts.get(c, 0) + 1
    return sorted(counts.items())


def suite_fermat_small(degrees=(3, 4, 5)) -> SuiteResult:
    res = SuiteResult("fermat-small", 3, "lines on Fermat surfaces and their dual graphs")
    for d in degrees:
        q = fam.least_fermat_prime(d)
        f = Field.finite(q)
        a = fam.fermat_geometric(d, f)
        surf = fam.fermat_surface(d, f)
        g = dual_graph(a)
        comb = fam.fermat_combinatorial(d)
        res.add(f"d={d} q={q}: all {3 * d * d} lines on the surface", True,
                all(line_on_surface(ln, surf) for ln in a.lines))
        res.add(f"d={d}: geometric dual graph equals rule graph label for label", True,
                g.edges == comb.edges, known=EVEN_FERMAT_NOTE if d % 2 == 0 else None)
        if g.edges != comb.edges:
            iso = are_isomorphic(g, comb) is not None
            res.log.append(f"d={d}: isomorphic={iso}; edge common-neighbour profile geometric="
                           f"{_edge_triangle_profile(g)} rules={_edge_triangle_profile(comb)}")
        vs = valency_stats(g)
        res.add(f"d={d}: dual graph regular of valency 4d-2", (4 * d - 2, True), (vs.Delta, vs.regular))
        res.add(f"d={d}: rule graph regular of valency 4d-2", (4 * d - 2, 4 * d - 2),
                tuple(valency_stats(comb))[:2])
        res.add(f"d={d}: only planar singularities", True, has_only_planar_singularities(a)[0])
        reg = ci_regularity(fam.fermat_ci(d, f))
        res.add(f"d={d}: CI regularity of (surface, 3d planes)", 4 * d - 1, reg)
        res.add(f"d={d}: reg - 1 equals valency", vs.Delta, None if reg is None else reg - 1)
    return res


def certify_ci(a: Arrangement, ci: Ideal, max_lines: int | None = None) -> tuple[int | None, str]:
    """Regularity of ``ci`` when it provably is the ideal of ``a``, else None.

    Certificate: ``ci`` is a complete intersection, every generator vanishes
    on every line, and its degree equals the number of lines (so the
    unmixed CI scheme is the reduced union).  Within the algebra budget the
    equality with the intersection of the line ideals is also checked.
    """
    reg = ci_regularity(ci)
    if reg is None:
        return None, "not a complete intersection"
    if not all(line_on_surface(ln, g) for ln in a.lines for g in ci.gens):
        return None, "some line is not contained in V(ci)"
    krull, degree = dimension_degree(ci)
    if (krull, degree) != (2, len(a.lines)):
        return None, f"dimension/degree {(krull, degree)} differ from {(2, len(a.lines))}"
    how = "degree certificate"
    budget = 8 if a.field.is_rational else 16
    if len(a.lines) <= (max_lines or budget):
        if not ideal_equal(arrangement_ideal(a, max_lines), ci):
            return None, "intersection of line ideals differs from the CI"
        how += " + ideal equality"
    return reg, how


def ci_families() -> list[tuple[str, Arrangement, Ideal]]:
    """Complete-intersection families used by the property suite."""
    out = []
    for f in (Field.rational(), Field.finite(7)):
        for n in (1, 2, 3):
            out.append((f"two_rulings({n},{n}) over {f!r}", fam.two_rulings(n, n, f), fam.two_rulings_ci(n, f)))
    f7 = Field.finite(7)
    for planes in ([1], [1, 2], [1, 4], [1, 2, 3], [1, 4, 7], [1, 2, 4, 7], [1, 2, 4, 5, 7]):
        out.append((f"fermat_sub(3, {planes})", fam.fermat_sub(3, planes, f7), fam.fermat_ci(3, f7, planes)))
    f17 = Field.finite(17)
    for planes in ([1, 5], [1, 5, 9], [1, 2, 5, 9]):
        out.append((f"fermat_sub(4, {planes})", fam.fermat_sub(4, planes, f17), fam.fermat_ci(4, f17, planes)))
    out.append(("fermat(3)", fam.fermat_geometric(3, f7), fam.fermat_ci(3, f7)))
    out.append(("fermat(4)", fam.fermat_geometric(4, f17), fam.fermat_ci(4, f17)))
    out.append(("cube_ci", fam.cube_ci(), fam.cube_ci_ideal()))
    out.append(("eight_lines", fam.example_eight_lines(), fam.example_eight_ideal()))
    return out


def suite_ci_planar() -> SuiteResult:
    res = SuiteResult("ci-planar", 4, "planar complete intersections: every line meets reg - 1 others")
    for name, a, ci in ci_families():
        reg, how = certify_ci(a, ci)
        planar = has_only_planar_singularities(a)[0]
        res.log.append(f"{name}: reg={reg} ({how}), planar={planar}")
        if reg is None:
            res.add(f"{name}: certified complete intersection", True, False)
            continue
        g = dual_graph(a)
        vs = valency_stats(g)
        # the lower bound holds for every CI; equality needs planarity
        res.add(f"{name}: reg - 1 <= min valency", True, reg - 1 <= vs.delta)
        if not planar:
            continue
        res.add(f"{name}: (reg-1)-regular", (reg - 1, reg - 1), (vs.delta, vs.Delta))
        kappa = vertex_connectivity(g) if g.vcount > 1 else 0
        res.add(f"{name}: connectivity >= reg - 1", True, kappa >= reg - 1)
    return res


def suite_double_six() -> SuiteResult:
    res = SuiteResult("double-six", 5, "double-six versus four plane sections of the Fermat cubic")
    g = fam.double_six_graph()
    vs = valency_stats(g)
    props = graph_properties(g)
    res.add("double six: valency stats", (5, 5, True), tuple(vs))
    res.add("double six: bipartite, triangle-free, 30 edges", (True, True, 30), tuple(props))
    res.add("double six: diameter", 3, diameter(g))
    f7 = Field.finite(7)
    planes = [1, 2, 4, 7]
    h = dual_graph(fam.fermat_sub(3, planes, f7))
    res.add("F_4: valency stats", (5, 5, True), tuple(valency_stats(h)))
    res.add("F_4: diameter", 2, diameter(h))
    res.add("F_4: contains a triangle", False, graph_properties(h).triangle_free)
    res.add("isomorphism found", None, are_isomorphic(g, h))
    res.log.append(f"F_4 planes {planes} over {f7!r}")
    return res


def suite_steiner() -> SuiteResult:
    res = SuiteResult("steiner", 6, "Steiner set of nine lines")
    g = fam.steiner_graph()
    res.add("vertices, edges", (9, 18), (g.vcount, len(g.edges)))
    res.add("valency stats", (4, 4, True), tuple(valency_stats(g)))
    parts = triangle_partition(g)
    res.add("partition into triangles", True, _is_partition(g, parts))
    if parts:
        res.log.append("partition: " + "; ".join("{" + ",".join(g.label(v) for v in t) + "}" for t in parts))
    return res


def generated_graphs() -> list[tuple[str, Graph]]:
    f7, f17 = Field.finite(7), Field.finite(17)
    out = [
        ("eight_lines", dual_graph(fam.example_eight_lines())),
        ("twenty_seven", fam.twenty_seven_graph()),
        ("steiner", fam.steiner_graph()),
        ("double_six", fam.double_six_graph()),
        ("cube_ci", dual_graph(fam.cube_ci())),
        ("fermat_sub(3,[1,2,4,7])", dual_graph(fam.fermat_sub(3, [1, 2, 4, 7], f7))),
        ("fermat(3)", dual_graph(fam.fermat_geometric(3, f7))),
        ("fermat(4)", dual_graph(fam.fermat_geometric(4, f17))),
    ]
    for d in (3, 4, 5):
        out.append((f"fermat_rules({d})", fam.fermat_combinatorial(d)))
    for m, n in ((1, 1), (2, 3), (3, 3), (3, 4)):
        out.append((f"two_rulings({m},{n})", dual_graph(fam.two_rulings(m, n, f7))))
    for s in (2, 4, 6):
        out.append((f"cone({s})", dual_graph(fam.cone_over_points(s, Field.rational()))))
    return out


def suite_cube() -> SuiteResult:
    res = SuiteResult("cube", 7, "cube arrangement and the connectivity diameter bound")
    g = dual_graph(fam.cube_ci())
    res.add("isomorphic to the 3-cube", True, are_isomorphic(g, fam.cube_graph()) is not None)
    res.add("diameter", 3, diameter(g))
    res.add("CI regularity of (a1 b1, a2 b2, a3 b3)", 4, ci_regularity(fam.cube_ci_ideal()))
    for name, h in generated_graphs():
        if h.vcount < 2:
            continue
        k = vertex_connectivity(h)
        if k < 1:
            res.log.append(f"{name}: disconnected, bound not applicable")
            continue
        diam = diameter(h)
        bound = diameter_bound(h.vcount, k)
        res.add(f"{name}: diameter {diam} <= floor((n+k-2)/k) = {bound}", True, diam <= bound)
    return res


def suite_link_degree() -> SuiteResult:
    res = SuiteResult("link-degree", 8, "link degree equals valency for planar arrangements")
    f7 = Field.finite(7)
    cases = [("fermat_sub(3,[1,2])", fam.fermat_sub(3, [1, 2], f7)),
             ("fermat_sub(3,[1,4])", fam.fermat_sub(3, [1, 4], f7)),
             ("two_rulings(2,2) over F_7", fam.two_rulings(2, 2, f7)),
             ("two_rulings(2,2) over Q", fam.two_rulings(2, 2, Field.rational()))]
    for name, a in cases:
        res.add(f"{name}: only planar singularities", True, has_only_planar_singularities(a)[0])
        g = dual_graph(a)
        res.add(f"{name}: link degrees = valencies", [g.valency(i) for i in range(len(a))],
                [link_degree(a, i) for i in range(len(a))])
    return res


def suite_quartic(max_p: int = 200, stop_at_first: bool = True) -> SuiteResult:
    res = SuiteResult("quartic-64", 9, "64 lines on the quartic, split 32 + 32")
    found = None
    for f in fam.schur_candidate_fields(max_p):
        t0 = time.perf_counter()
        try:
            sl = fam.schur_lines(f, max_q=max(f.order, 200))
        except (ValueError, RuntimeError) as exc:
            res.log.append(f"{f!r}: error {exc}")
            continue
        n1 = len(sl.e1) if sl.e1 else 0
        n2 = len(sl.e2) if sl.e2 else 0
        ok = sl.per_quadric == [8, 8, 8, 8] and n1 == 32 and n2 == 32
        res.log.append(f"{f!r}: per quadric {sl.per_quadric}, |E1|={n1}, |E2|={n2} "
                       f"({time.perf_counter() - t0:.1f}s){' <- admissible' if ok else ''}")
        if ok and found is None:
            found = sl
            if stop_at_first:
                break
    if found is None:
        res.reproduced = False
        return res
    a = found.all
    g = dual_graph(a)
    res.add(f"{found.field!r}: lines per quadric", [8, 8, 8, 8], found.per_quadric)
    res.add("|E1|, |E2|, |E|", (32, 32, 64), (len(found.e1), len(found.e2), len(a)))
    res.add("dual graph regular of valency 18", (18, 18), (valency_stats(g).delta, valency_stats(g).Delta))
    first = set(range(32))
    split = {(len(g.adj[v] & first), len(g.adj[v] - first)) for v in range(32)}
    res.add("each E1 line meets 10 of E1 and 8 of E2", {(10, 8)}, split)
    split2 = {(len(g.adj[v] - first), len(g.adj[v] & first)) for v in range(32, 64)}
    res.add("each E2 line meets 10 of E2 and 8 of E1", {(10, 8)}, split2)
    res.add("only planar singularities", True, has_only_planar_singularities(a)[0])
    return res


SMALL_COMPLEX_COUNTS = (1, 2, 9, 114, 6894)


def suite_nerve(random_count: int = 200, seed: int = 20240601) -> SuiteResult:
    res = SuiteResult("nerve", 10, "nerve round trip, size and dimension bounds, low homology")
    corpus = complex_corpus(5, random_count, seed)
    small = [sum(1 for c in corpus[:len(corpus) - random_count] if c.n == n) for n in range(1, 6)]
    res.add("complexes on exactly n <= 5 vertices", list(SMALL_COMPLEX_COUNTS), small)
    bad_round = bad_bounds = bad_dim = bad_h = 0
    for delta in corpus:
        r = ale_construction(delta)
        N = len(delta.facets)
        M = max_facet_degree(delta)
        bad_round += nerve_of_family(r.generators) != delta
        bad_bounds += not (N <= r.s <= delta.n + N)
        bad_dim += r.dim not in (M - 1, M)
        lyu = lyubeznik_of_stanley_reisner(delta)
        top_d, top_l = min(1, delta.dim + 1), min(1, lyu.dim + 1)
        hd = (reduced_homology_ranks(delta, top_d) + [0])[:2]
        hl = (reduced_homology_ranks(lyu, top_l) + [0])[:2]
        bad_h += hd != hl
    res.add(f"round trip failures ({len(corpus)} complexes)", 0, bad_round)
    res.add("N <= s <= n + N failures", 0, bad_bounds)
    res.add("dim in {M-1, M} failures", 0, bad_dim)
    res.add("reduced H0/H1 disagreements", 0, bad_h)
    return res


def _random_lines(f: Field, n: int, count: int, rng: random.Random) -> Arrangement:
    elems = list(f.elements())
    lines: list[ProjLine] = []
    while len(lines) < count:
        r1 = [rng.choice(elems) for _ in range(n + 1)]
        r2 = [rng.choice(elems) for _ in range(n + 1)]
        try:
            ln = ProjLine.from_rows(f, r1, r2, convert=False)
        except ValueError:
            continue
        if ln not in lines:
            lines.append(ln)
    return Arrangement(f, n, tuple(lines))


def suite_oracles(max_vertices: int = 9, seed: int = 7) -> SuiteResult:
    res = SuiteResult("oracles", 11, "brute-force oracles for connectivity, intersections and cones")
    for n in range(2, max_vertices + 1):
        graphs = all_graphs(n)
        bad = connectivity_mismatches(graphs)
        res.add(f"connectivity = cut enumeration on all {len(graphs)} graphs with {n} vertices", 0, len(bad))
    rng = random.Random(seed)
    cases = []
    for q in (2, 3, 5, 7):
        f = Field.finite(q)
        cases.append((f"two_rulings(2,2) over F_{q}", fam.two_rulings(2, 2, f)))
        for count in (2, 3):
            cases.append((f"{count} random lines in P^3 over F_{q}", _random_lines(f, 3, count, rng)))
        if q > 2:
            cases.append((f"3 random lines in P^4 over F_{q}", _random_lines(f, 4, 3, rng)))
    for q in (5, 7):
        f = Field.finite(q)
        cases.append((f"cube_ci over F_{q}", fam.cube_ci(f)))
        cases.append((f"eight lines over F_{q}", fam.example_eight_lines(f)))
    for name, a in cases:
        ideal = arrangement_ideal(a, max_lines=16)
        bad = sum(1 for _ in zero_set_mismatches(ideal, a.lines, a.field))
        res.add(f"{name}: V(intersection) = union of lines, pointwise", 0, bad)
    for s in range(2, 7):
        a = fam.cone_over_points(s, Field.rational(), 4)
        g = dual_graph(a)
        res.add(f"cone({s}) in P^4: dual graph complete", True, g.edges == Graph.complete(s).edges)
        res.add(f"cone({s}) in P^4: only planar singularities", s < 3, has_only_planar_singularities(a)[0])
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "eight-lines": suite_eight_lines,
    "twenty-seven": suite_twenty_seven,
    "fermat-small": suite_fermat_small,
    "ci-planar": suite_ci_planar,
    "double-six": suite_double_six,
    "steiner": suite_steiner,
    "cube": suite_cube,
    "link-degree": suite_link_degree,
    "quartic-64": suite_quartic,
    "nerve": suite_nerve,
    "oracles": suite_oracles,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    t0 = time.perf_counter()
    res = SUITES[name](**kwargs)
    res.seconds = time.perf_counter() - t0
    return res


def format_table(results: list[SuiteResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"[{r.status}] criterion {r.criterion} {r.name}: {r.claim} ({r.seconds:.1f}s)")
        for row in r.rows:
            tag = row.status + (" (known)" if row.known and row.status == FAIL else "")
            lines.append(f"    {tag:<12} {row.check}: expected {_plain(row.expected)}, "
                         f"computed {_plain(row.computed)}")
        for entry in r.log:
            lines.append(f"    log: {entry}")
    return "\n".join(lines) + "\n"
