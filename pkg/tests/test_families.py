import pytest

from arrlab import families as fam
from arrlab.casalg import arrangement_ideal, ci_regularity, ideal_equal
from arrlab.exactfield import Field
from arrlab.graphs import Graph, are_isomorphic, dual_graph, graph_properties, valency_stats
from arrlab.projgeom import has_only_planar_singularities, line_on_surface

F7, F17 = Field.finite(7), Field.finite(17)
QQ = Field.rational()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (4, 2)])
def test_two_rulings_dual_graph_is_complete_bipartite(m, n):
    g = dual_graph(fam.two_rulings(m, n, F7))
    assert are_isomorphic(g, Graph.complete_bipartite(m, n)) is not None


def test_two_rulings_preconditions():
    with pytest.raises(fam.FamilyError):
        fam.two_rulings(0, 2, F7)
    with pytest.raises(fam.FamilyError):
        fam.two_rulings(4, 4, Field.finite(3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_rulings_ci_cuts_out_the_lines(n):
    a = fam.two_rulings(n, n, QQ)
    ci = fam.two_rulings_ci(n, QQ)
    assert ideal_equal(arrangement_ideal(a), ci)
    assert ci_regularity(ci) == n + 1


def test_least_primes():
    assert [fam.least_fermat_prime(d) for d in (3, 4, 5, 6)] == [7, 17, 11, 13]
    assert fam.least_prime_congruent_one(12) == 13


@pytest.mark.parametrize("d", [3, 4, 5])
def test_fermat_rule_graph_shape(d):
    g = fam.fermat_combinatorial(d)
    assert g.vcount == 3 * d * d
    assert tuple(valency_stats(g)) == (4 * d - 2, 4 * d - 2, True)
    assert g.label(0) == "l1(1,1)"


@pytest.mark.parametrize("d,q", [(3, 7), (4, 17), (5, 11)])
def test_fermat_lines_lie_on_the_surface(d, q):
    f = Field.finite(q)
    a = fam.fermat_geometric(d, f)
    s = fam.fermat_surface(d, f)
    assert len(a) == 3 * d * d
    assert all(line_on_surface(ln, s) for ln in a.lines)


def test_odd_fermat_labels_match_rules_and_even_do_not():
    assert dual_graph(fam.fermat_geometric(3, F7)).edges == fam.fermat_combinatorial(3).edges
    geo = dual_graph(fam.fermat_geometric(4, F17))
    rules = fam.fermat_combinatorial(4)
    assert geo.edges != rules.edges
    # the mismatch is structural: common-neighbour counts along edges differ
    def profile(g):
        return sorted(len(g.adj[i] & g.adj[j]) for i, j in g.edges)
    assert profile(geo) != profile(rules)


def test_fermat_needs_roots_of_unity():
    with pytest.raises(fam.FamilyError):
        fam.fermat_geometric(3, Field.finite(5))


def test_fermat_sub_regular_of_valency_h_plus_one():
    for planes in ([1], [1, 4], [1, 2, 4, 7]):
        g = dual_graph(fam.fermat_sub(3, planes, F7))
        assert tuple(valency_stats(g))[:2] == (len(planes) + 1, len(planes) + 1)
        assert g.vcount == 3 * len(planes)
    assert fam.fermat_sub_graph(3, [1, 4]).vcount == 6
    with pytest.raises(fam.FamilyError):
        fam.fermat_sub(3, [1, 10], F7)


def test_plane_indexing_roundtrip():
    for p in range(1, 10):
        a, i = fam._plane_from_index(3, p)
        assert fam.fermat_plane_index(3, a, i) == p


def test_cubic_surface_graphs():
    g = fam.twenty_seven_graph()
    assert g.vcount == 27 and len(g.edges) == 135
    ds = fam.double_six_graph()
    assert tuple(graph_properties(ds)) == (True, True, 30)
    st = fam.steiner_graph()
    assert (st.vcount, len(st.edges)) == (9, 18)


def test_cone_is_complete_and_nonplanar():
    a = fam.cone_over_points(4, QQ)
    assert dual_graph(a).edges == Graph.complete(4).edges
    assert not has_only_planar_singularities(a)[0]
    with pytest.raises(fam.FamilyError):
        fam.cone_over_points(1, QQ)


def test_eight_line_example():
    a = fam.example_eight_lines()
    assert len(a) == 8 and a.n == 4
    g = dual_graph(a)
    assert sorted((i + 1, j + 1) for i, j in g.edges) == sorted(fam.EIGHT_LINE_EDGES)
    quadrics = fam.example_eight_ideal()
    assert all(line_on_surface(ln, q) for ln in a.lines for q in quadrics.gens)


def test_cube():
    a = fam.cube_ci()
    assert are_isomorphic(dual_graph(a), fam.cube_graph()) is not None
    assert fam.cube_subsets()[:4] == [(), (1,), (2,), (1, 2)]


def test_schur_over_f13():
    res = fam.schur_lines(Field.finite(13))
    assert res.per_quadric == [8, 8, 8, 8]
    assert (len(res.e1), len(res.e2), len(res.all)) == (32, 32, 64)
    assert tuple(valency_stats(dual_graph(res.all))) == (18, 18, True)


def test_schur_candidates_are_admissible():
    fields = fam.schur_candidate_fields(100)
    assert [f.order for f in fields] == [13, 37, 61, 73, 97, 25, 49, 121]


def test_build_family_dispatch():
    g = fam.build_family({"name": "fermat", "params": {"d": 3}})
    assert isinstance(g, Graph) and g.vcount == 27
    a = fam.build_family({"name": "two_rulings", "params": {"m": 2, "n": 2},
                          "field": {"kind": "finite", "p": 7}})
    assert len(a) == 4
    for bad in ({"name": "nosuch"}, {"name": "two_rulings", "params": {"m": 2}},
                {"name": "two_rulings", "params": {"m": "x", "n": 1}, "field": {"kind": "rational"}},
                {"name": "cone", "params": {"s": 3}}):
        with pytest.raises(fam.FamilyError):
            fam.build_family(bad)


def test_steiner_graph_is_three_parallel_fermat_planes():
    st = fam.steiner_graph()
    for planes in ([1, 2, 3], [4, 5, 6], [7, 8, 9]):
        assert are_isomorphic(st, dual_graph(fam.fermat_sub(3, planes, F7))) is not None
    assert are_isomorphic(st, dual_graph(fam.fermat_sub(3, [1, 4, 7], F7))) is None


def test_generation_is_deterministic():
    assert fam.fermat_geometric(4, F17) == fam.fermat_geometric(4, F17)
    assert fam.twenty_seven_graph() == fam.twenty_seven_graph()
