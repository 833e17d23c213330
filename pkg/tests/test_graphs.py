"""Graphs, constructions, reachability and source transversals"""
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from graphs.families import (
    complete_graph, directed_cycle, directed_path, edgeless_graph, g0, k3, single_vertex, undirected_cycle,
)
from graphs.graph import (
    BOTTOM, EMPTY_GRAPH, Graph, ProductVertex, complement, direct_product, disjoint_union, induced_subgraph,
    is_undirected, pointed, pointed_product, product_coordinates, product_vertex_id,
)
from graphs.homomorphisms import is_isomorphic
from graphs.reachability import (
    connected_components, covered_by, is_valid_transversal, reach, root_of, sccs, sources, transversal,
)
from tests.graph_catalog import graph_classes, graph_classes_up_to, graphs, labeled_graphs
from utils.errors import InputError


def _assert_reach_monotone(classes: list[Graph]) -> None:
    for g in classes:
        vertices = g.ordered_vertices
        for size in range(1, len(vertices) + 1):
            for subset in itertools.combinations(vertices, size):
                sub = induced_subgraph(g, subset)
                for v in subset:
                    assert reach(sub, v) <= reach(g, v) & set(subset)


def _assert_transversal_minimal(classes: list[Graph]) -> None:
    for g in classes:
        chosen = transversal(g)
        assert covered_by(g, chosen) == g.vertices
        assert is_valid_transversal(g, chosen)
        for dropped in chosen:
            rest = [a for a in chosen if a != dropped]
            assert covered_by(g, rest) != g.vertices


def _assert_support_grows(factors: list[Graph]) -> None:
    product = pointed_product(factors)
    indices = tuple(range(len(factors)))
    for a in product.vertices:
        ya = ProductVertex(indices, product_coordinates(a)).support()
        for b in reach(product, a):
            assert ya <= ProductVertex(indices, product_coordinates(b)).support(), (a, b)


class TestGraph:
    def test_edge_endpoints_must_be_vertices(self):
        with pytest.raises(InputError):
            Graph(frozenset({"a"}), frozenset({("a", "b")}))

    def test_build_adds_endpoints_and_stringifies(self):
        g = Graph.build([0], [(0, 1)])
        assert g.vertices == {"0", "1"}
        assert g.edges == {("0", "1")}

    def test_isolated_vertices_are_kept(self):
        g = Graph.build(["a", "b"], [])
        assert len(g) == 2 and not g.edges

    def test_successors_sorted(self):
        g = Graph.build("abc", [("a", "c"), ("a", "b")])
        assert g.successors("a") == ("b", "c")
        assert g.predecessors("b") == ("a",)

    def test_unknown_vertex(self):
        with pytest.raises(InputError):
            g0().successors("7")

    def test_relabel_must_be_injective(self):
        with pytest.raises(InputError):
            g0().relabel({"0": "x", "1": "x"})


class TestReach:
    def test_path(self):
        assert reach(directed_path(2), "0") == {"0", "1", "2"}

    def test_g0(self):
        assert reach(g0(), "0") == {"0", "1"}

    def test_isolated_vertex(self):
        g = Graph.build(["v", "w"], [("w", "v")])
        assert reach(g, "v") == {"v"}

    def test_unknown_vertex(self):
        with pytest.raises(InputError):
            reach(g0(), "2")

    def test_monotone_under_induced_subgraphs(self):
        _assert_reach_monotone(graph_classes_up_to(3))

    @pytest.mark.slow
    def test_monotone_under_induced_subgraphs_four_vertices(self):
        _assert_reach_monotone(graph_classes(4))

    def test_agrees_with_walks(self):
        for g in graph_classes_up_to(3):
            for v in g.vertices:
                walked = {v}
                for _ in range(len(g.vertices)):
                    walked |= {w for u in walked for w in g.successors(u)}
                assert reach(g, v) == walked

    def test_networkx_view_is_frozen_and_shared(self):
        g = g0()
        assert g.to_networkx() is g.to_networkx()
        assert nx.is_frozen(g.to_networkx())
        assert sorted(g.to_networkx().edges) == sorted(g.edges)


class TestInducedSubgraph:
    def test_k3_pair(self):
        sub = induced_subgraph(k3(), ["0", "1"])
        assert sub.edges == {("0", "1"), ("1", "0")}

    def test_g0_loop_vertex(self):
        assert induced_subgraph(g0(), ["1"]) == Graph.build(["1"], [("1", "1")])

    def test_empty_subset(self):
        assert induced_subgraph(g0(), []) == EMPTY_GRAPH

    def test_foreign_vertex(self):
        with pytest.raises(InputError):
            induced_subgraph(g0(), ["0", "5"])


class TestDisjointUnion:
    def test_two_copies_of_g0(self):
        union = disjoint_union([g0(), g0()])
        assert len(union.vertices) == 4
        assert len(union.edges) == 6

    def test_singleton_is_isomorphic(self):
        assert is_isomorphic(disjoint_union([g0()]), g0())

    def test_empty_family(self):
        assert disjoint_union([]) == EMPTY_GRAPH

    def test_components_are_induced(self):
        union = disjoint_union([g0(), k3()])
        part = induced_subgraph(union, [v for v in union.vertices if v.startswith("1:")])
        assert is_isomorphic(part, k3())


class TestDirectProduct:
    def test_looped_point_squared(self):
        product = direct_product([single_vertex(loop=True), single_vertex(loop=True)])
        assert len(product.vertices) == 1 and len(product.edges) == 1

    def test_empty_family_is_a_looped_point(self):
        product = direct_product([])
        assert len(product.vertices) == 1
        (v,) = product.vertices
        assert product.has_loop(v)

    def test_g0_squared_coordinatewise(self):
        g = g0()
        product = direct_product([g, g])
        assert len(product.vertices) == 4
        for a in itertools.product(g.ordered_vertices, repeat=2):
            for b in itertools.product(g.ordered_vertices, repeat=2):
                expected = g.has_edge(a[0], b[0]) and g.has_edge(a[1], b[1])
                assert product.has_edge(product_vertex_id(a), product_vertex_id(b)) == expected
        assert product.has_loop(product_vertex_id(("1", "1")))

    def test_edgeless_factor(self):
        assert not direct_product([g0(), edgeless_graph(2)]).edges

    def test_vertex_ids_round_trip(self):
        assert product_coordinates(product_vertex_id(("a", BOTTOM, "0"))) == ("a", BOTTOM, "0")


class TestPointed:
    def test_empty_graph(self):
        p = pointed(EMPTY_GRAPH)
        assert p.vertices == {BOTTOM} and p.edges == {(BOTTOM, BOTTOM)}

    def test_g0(self):
        p = pointed(g0())
        assert p.edges == g0().edges | {(BOTTOM, BOTTOM), (BOTTOM, "0"), (BOTTOM, "1")}

    def test_edgeless(self):
        p = pointed(edgeless_graph(3))
        assert len(p.vertices) == 4 and len(p.edges) == 4

    def test_reserved_vertex(self):
        with pytest.raises(InputError):
            pointed(Graph.build([BOTTOM]))

    def test_bottom_reaches_everything_in_one_step(self):
        for g in graph_classes_up_to(2):
            p = pointed(g)
            assert set(p.successors(BOTTOM)) == p.vertices

    def test_support_grows_along_reach(self):
        _assert_support_grows([g0(), k3()])
        small = graph_classes_up_to(2)
        for g in small:
            _assert_support_grows([g])
        for left, right in itertools.combinations_with_replacement(small, 2):
            _assert_support_grows([left, right])

    @pytest.mark.slow
    def test_support_grows_along_reach_three_vertex_factors(self):
        classes = graph_classes_up_to(3)
        for g in classes:
            _assert_support_grows([g])
        for left, right in itertools.combinations_with_replacement(classes, 2):
            _assert_support_grows([left, right])


def test_product_vertex_support():
    v = ProductVertex(("i", "j", "k"), ("0", BOTTOM, "1"))
    assert v.support() == {"i", "k"}
    assert v["k"] == "1"


class TestSources:
    def test_path(self):
        g = directed_path(2)
        assert sources(g) == [frozenset({"0"})]
        assert transversal(g) == ["0"]

    def test_cycle(self):
        g = directed_cycle(3)
        assert sccs(g) == [frozenset({"0", "1", "2"})]
        assert transversal(g) == ["0"]

    def test_two_loops(self):
        g = Graph.build(["u", "v"], [("u", "u"), ("v", "v")])
        assert transversal(g) == ["u", "v"]

    def test_transversal_covers_minimally(self):
        _assert_transversal_minimal(graph_classes_up_to(3))

    @pytest.mark.slow
    def test_transversal_covers_minimally_four_vertices(self):
        _assert_transversal_minimal(graph_classes(4))

    def test_invalid_transversal(self):
        g = directed_path(2)
        assert not is_valid_transversal(g, ["1"])
        assert not is_valid_transversal(g, ["0", "1"])


class TestRootAndComponents:
    def test_root_of_path(self):
        assert root_of(directed_path(3)) == "0"

    def test_no_root(self):
        assert root_of(edgeless_graph(2)) is None

    def test_empty_graph_has_no_root(self):
        with pytest.raises(InputError):
            root_of(EMPTY_GRAPH)

    def test_components(self):
        g = disjoint_union([g0(), k3()])
        assert [len(c) for c in connected_components(g)] == [2, 3]


class TestComplement:
    def test_c5_is_self_complementary(self):
        assert is_isomorphic(complement(undirected_cycle(5)), undirected_cycle(5))

    def test_complete_to_edgeless(self):
        assert not complement(complete_graph(4)).edges

    def test_edgeless_to_complete(self):
        assert complement(edgeless_graph(4)) == complete_graph(4)

    def test_loops_dropped(self):
        assert complement(single_vertex(loop=True)) == single_vertex()


def test_is_undirected():
    assert is_undirected(g0())
    assert not is_undirected(directed_path(1))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(graphs(max_vertices=4))
def test_complement_is_an_involution_on_loopless_graphs(g):
    loopless = Graph(g.vertices, frozenset((u, v) for u, v in g.edges if u != v))
    assert complement(complement(loopless)) == loopless


def test_labeled_graph_count():
    assert len(labeled_graphs(3)) == 512
