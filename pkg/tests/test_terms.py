"""Term syntax, structural queries and term graphs"""
import random

import pytest
from hypothesis import given, settings

from graphs.families import directed_path, k3, undirected_path
from graphs.graph import Graph
from graphs.homomorphisms import strong_homomorphic_images
from graphs.reachability import reach, root_of
from terms.parser import format_term, parse_term, tokenize
from terms.term import INFINITY, Application, Variable, apply, depth, is_trivial, leftmost, rename, size, variables
from terms.term_graph import graph_to_term, is_term_graph, term_graph
from tests.graph_catalog import graphs_up_to, nontrivial_terms_up_to_depth, random_graphs, terms
from utils.errors import InputError, TermSyntaxError

x, y, z = Variable("x"), Variable("y"), Variable("z")


class TestParse:
    def test_right_grouping(self):
        assert parse_term("x (y z)") == Application(x, Application(y, z))

    def test_left_associative(self):
        assert parse_term("x y z") == Application(Application(x, y), z)

    def test_infinity(self):
        assert parse_term("inf") is INFINITY

    def test_redundant_parentheses(self):
        assert parse_term("((x) (y))") == Application(x, y)

    def test_quoted_names(self):
        t = parse_term("`0:a` `inf`")
        assert t == Application(Variable("0:a"), Variable("inf"))
        assert format_term(t) == "`0:a` `inf`"

    def test_numeric_names(self):
        assert parse_term("0 (1 2)") == apply(Variable("0"), apply(Variable("1"), Variable("2")))

    @pytest.mark.parametrize("text, position", [
        ("x (y", 4),
        ("x )", 2),
        ("", 0),
        ("x $ y", 2),
        ("x =~ y", 2),
    ])
    def test_syntax_errors_carry_the_position(self, text, position):
        with pytest.raises(TermSyntaxError) as info:
            parse_term(text)
        assert info.value.position == position

    def test_syntax_error_is_an_input_error(self):
        with pytest.raises(InputError):
            parse_term("(")

    def test_formula_symbols_tokenize(self):
        kinds = [t.kind for t in tokenize("x ≈ y & y =~ x → x ∧ y -> inf")]
        assert kinds.count("≈") == 2 and kinds.count("&") == 2 and kinds.count("->") == 2

    def test_format_is_minimal(self):
        assert format_term(parse_term("((x y) z)")) == "x y z"
        assert format_term(parse_term("x ((y z) x)")) == "x (y z x)"


@settings(max_examples=200, derandomize=True, deadline=None)
@given(terms())
def test_format_parse_round_trip(t):
    assert parse_term(format_term(t)) == t


class TestQueries:
    def test_leftmost(self):
        assert leftmost(parse_term("x (y z)")) == "x"
        assert leftmost(parse_term("(z x) y")) == "z"
        assert leftmost(x) == "x"

    def test_leftmost_of_trivial_term(self):
        with pytest.raises(InputError):
            leftmost(parse_term("x inf"))

    def test_triviality(self):
        assert is_trivial(parse_term("x (y inf)"))
        assert not is_trivial(parse_term("x (y z)"))

    def test_variables_depth_size(self):
        t = parse_term("x (y x)")
        assert variables(t) == {"x", "y"}
        assert depth(t) == 3
        assert size(t) == 3
        assert depth(INFINITY) == 1

    def test_rename(self):
        assert rename(parse_term("x (y x)"), {"x": "a"}) == parse_term("a (y a)")


class TestTermGraph:
    def test_undirected_edge(self):
        graph, root = term_graph(parse_term("x (y x)"))
        assert graph == Graph.build(["x", "y"], [("x", "y"), ("y", "x")])
        assert root == "x"

    def test_single_variable(self):
        graph, root = term_graph(x)
        assert graph == Graph.build(["x"]) and root == "x"

    def test_loop(self):
        graph, _ = term_graph(parse_term("x x"))
        assert graph.edges == {("x", "x")}

    def test_trivial_term(self):
        with pytest.raises(InputError):
            term_graph(parse_term("x inf"))

    def test_root_reaches_all_variables(self):
        for t in nontrivial_terms_up_to_depth(3):
            graph, root = term_graph(t)
            assert reach(graph, root) == variables(t)

    @settings(max_examples=150, derandomize=True, deadline=None)
    @given(terms(with_inf=False, max_leaves=20))
    def test_root_reaches_all_variables_deeper(self, t):
        graph, root = term_graph(t)
        assert reach(graph, root) == graph.vertices


class TestIsTermGraph:
    def test_complete_graph(self):
        assert is_term_graph(k3()) == "0"

    def test_two_isolated_vertices(self):
        assert is_term_graph(Graph.build(["a", "b"])) is None

    def test_path(self):
        assert is_term_graph(directed_path(2)) == "0"

    def test_empty_graph(self):
        with pytest.raises(InputError):
            is_term_graph(Graph())


class TestGraphToTerm:
    def test_undirected_edge(self):
        g = Graph.build(["x", "y"], [("x", "y"), ("y", "x")])
        t = graph_to_term(g, "x")
        assert format_term(t) == "x (y x)"
        assert term_graph(t) == (g, "x")

    def test_looped_vertex(self):
        assert format_term(graph_to_term(Graph.build(["v"], [("v", "v")]), "v")) == "v v"

    def test_path(self):
        t = graph_to_term(directed_path(2), "0")
        assert format_term(t) == "0 (1 2)"

    def test_root_must_reach_everything(self):
        with pytest.raises(InputError):
            graph_to_term(directed_path(2), "1")

    def test_round_trip_exhaustive(self):
        for g in graphs_up_to(3):
            if not g.vertices:
                continue
            for r in g.ordered_vertices:
                if reach(g, r) != g.vertices:
                    continue
                t = graph_to_term(g, r)
                assert term_graph(t) == (g, r)
                assert variables(t) == g.vertices

    def test_round_trip_sampled_four_vertices(self):
        for g in random_graphs(4, 200, seed=7):
            r = root_of(g)
            if r is None:
                continue
            assert term_graph(graph_to_term(g, r)) == (g, r)

    def test_undirected_path_round_trip(self):
        g = undirected_path(4)
        assert term_graph(graph_to_term(g, "2")) == (g, "2")


def test_strong_images_of_term_graphs_are_term_graphs():
    rng = random.Random(11)
    candidates = nontrivial_terms_up_to_depth(3)
    for t in rng.sample(candidates, 60):
        graph, _ = term_graph(t)
        for image, _ in strong_homomorphic_images(graph):
            assert is_term_graph(image) is not None
