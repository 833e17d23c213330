"""Membership, separating implications and subproduct embeddings"""
from dataclasses import replace
import itertools
import random

import pytest

from graphs.families import (
    directed_path, edgeless_graph, g0, k2_looped, k3, single_vertex, undirected_cycle, undirected_path,
)
from graphs.graph import (
    BOTTOM, EMPTY_GRAPH, Graph, check_vertex_map, direct_product, disjoint_union, induced_subgraph, is_undirected,
    product_vertex_id,
)
from graphs.homomorphisms import is_isomorphic, strong_homomorphic_images
from graphs.reachability import connected_components, reach
from logic.encodings import sigma
from logic.satisfaction import satisfies_implication
from quasivariety import (
    CONDITION_PAIR, CONDITION_VERTEX, SpsEmbedding, SpsIndex, build_sps_embedding, membership,
    membership_hereditary_check, undirected_membership, verify_sps, witness_implication,
)
from quasivariety.embedding import COND_INDUCED, COND_STRONG, COND_SUPPORT
from tests.graph_catalog import graph_classes, graph_classes_up_to, graphs_up_to, random_graphs
from utils.errors import CapacityError, ContractError, InputError

G0_PARTS = [single_vertex(), single_vertex(loop=True), g0()]

POOL = [g0(), k3(), single_vertex(), single_vertex(loop=True), directed_path(1)]


def generator_classes() -> list[list[Graph]]:
    """Every single graph of the pool, every pair, and the whole pool"""
    singles = [[g] for g in POOL]
    pairs = [list(pair) for pair in itertools.combinations(POOL, 2)]
    return singles + pairs + [list(POOL)]


def in_g0_quasivariety(w: Graph) -> bool:
    """Undirected, and every component is an induced subgraph of G0 up to isomorphism"""
    if not is_undirected(w):
        return False
    for component in connected_components(w):
        part = induced_subgraph(w, component)
        if not any(is_isomorphic(part, h) for h in G0_PARTS):
            return False
    return True


class TestMembership:
    def test_k3_fails_at_a_vertex(self):
        evidence = membership(k3(), [g0()])
        assert not evidence
        assert evidence.failure.condition == CONDITION_VERTEX
        assert evidence.failure.vertices == ("0",)
        assert evidence.failure.describe() == "condition (a) fails at vertex 0"

    def test_looped_k2_fails_at_a_pair(self):
        evidence = membership(k2_looped(), [g0()])
        assert not evidence
        assert evidence.failure.condition == CONDITION_PAIR
        assert evidence.failure.vertices == ("0", "1")
        assert evidence.failure.describe() == "condition (b) fails at pair {0, 1}"
        (candidate,) = evidence.failure.candidates
        assert candidate.factor == 0
        assert candidate.map.as_dict() == {"0": "1", "1": "1"}

    def test_empty_graph_with_empty_class(self):
        assert membership(EMPTY_GRAPH, [])

    def test_nonempty_graph_with_empty_class(self):
        evidence = membership(single_vertex(), [])
        assert not evidence
        assert evidence.failure.condition == CONDITION_VERTEX

    def test_g0_is_a_member_of_its_own_class(self):
        evidence = membership(g0(), [g0()])
        assert evidence
        assert set(evidence.vertex_maps) == {"0", "1"}
        assert set(evidence.pair_maps) == {("0", "1")}
        assert evidence.failure is None

    def test_first_member_of_k_is_preferred(self):
        evidence = membership(single_vertex(), [k3(), edgeless_graph(2)])
        assert evidence.vertex_maps["0"].factor == 0
        assert evidence.vertex_maps["0"].map.as_dict() == {"0": "0"}

    def test_pairs_with_different_reach_are_skipped(self):
        evidence = membership(directed_path(1), [directed_path(1)])
        assert evidence
        assert evidence.pair_maps == {}

    def test_evidence_maps_are_strong_and_separating(self):
        for k in generator_classes():
            for w in graph_classes_up_to(3):
                evidence = membership(w, k)
                if not evidence:
                    continue
                for a, site in evidence.vertex_maps.items():
                    domain = induced_subgraph(w, reach(w, a))
                    assert check_vertex_map(domain, k[site.factor], site.map.as_dict()) == "strong"
                for (a, b), site in evidence.pair_maps.items():
                    assert site.map[a] != site.map[b]
                    assert site.map.is_strong

    def test_deterministic(self):
        for w in random_graphs(4, 20, seed=5):
            assert membership(w, POOL) == membership(w, POOL)


def test_g0_quasivariety_characterization():
    for w in graphs_up_to(3):
        assert membership(w, [g0()]).verdict == in_g0_quasivariety(w), str(w)


class TestWitness:
    def test_k3(self):
        imp = witness_implication(k3(), [g0()])
        assert imp.premise == sigma(k3())
        assert str(imp.consequence) == "0 ≈ inf"
        assert satisfies_implication(g0(), imp)
        result = satisfies_implication(k3(), imp)
        assert not result
        assert result.countermodel == {"0": "0", "1": "1", "2": "2"}

    def test_looped_k2(self):
        imp = witness_implication(k2_looped(), [g0()])
        assert imp.premise == sigma(k2_looped())
        assert str(imp.consequence) == "0 ≈ 1"
        assert satisfies_implication(g0(), imp)
        assert not satisfies_implication(k2_looped(), imp)

    def test_loopless_point_against_looped_point(self):
        imp = witness_implication(single_vertex(), [single_vertex(loop=True)])
        assert [str(i) for i in imp.premise] == ["0 0 ≈ inf"]
        assert str(imp.consequence) == "0 ≈ inf"

    def test_premise_covers_only_the_failing_reach(self):
        w = disjoint_union([g0(), k3()])
        imp = witness_implication(w, [g0()])
        assert imp.variables() == {"1:0", "1:1", "1:2"}

    def test_member_has_no_witness(self):
        with pytest.raises(ContractError):
            witness_implication(g0(), [g0()])

    def test_reuses_supplied_evidence(self):
        evidence = membership(k3(), [g0()])
        assert witness_implication(k3(), [g0()], evidence) == witness_implication(k3(), [g0()])


class TestEmbedding:
    def test_g0(self):
        e = build_sps_embedding(g0(), [g0()])
        assert e.indices == (SpsIndex("0"), SpsIndex("1"), SpsIndex("0", "1"))
        assert [index.kind for index in e.indices] == ["vertex", "vertex", "pair"]
        assert str(e.indices[2]) == "{0,1}"
        assert e.factor_refs == (0, 0, 0)
        assert verify_sps(e)
        assert is_isomorphic(e.source, e.image)

    def test_looped_point(self):
        e = build_sps_embedding(single_vertex(loop=True), [g0()])
        assert e.indices == (SpsIndex("0"),)
        assert e.coordinates == {"0": ("1",)}
        assert e.isomorphism == {"0": product_vertex_id(["1"])}
        assert verify_sps(e)

    def test_disjoint_union_uses_bottom_off_component(self):
        w = disjoint_union([g0(), g0()])
        e = build_sps_embedding(w, [g0()])
        assert verify_sps(e)
        position = {index: i for i, index in enumerate(e.indices)}
        assert e.coordinates["0:0"][position[SpsIndex("1:0")]] == BOTTOM
        assert e.coordinates["1:1"][position[SpsIndex("0:0", "0:1")]] == BOTTOM
        assert e.coordinates["0:1"][position[SpsIndex("0:0")]] != BOTTOM

    def test_empty_graph(self):
        e = build_sps_embedding(EMPTY_GRAPH, [])
        assert e.indices == ()
        assert verify_sps(e)

    def test_non_member(self):
        with pytest.raises(ContractError):
            build_sps_embedding(k3(), [g0()])

    def test_reserved_vertex_in_factor(self):
        with pytest.raises(InputError):
            build_sps_embedding(single_vertex(), [Graph.build([BOTTOM])])

    def test_support_grows_along_reach(self):
        for w in graph_classes_up_to(3):
            if not membership(w, POOL):
                continue
            e = build_sps_embedding(w, POOL)
            for a in e.image.vertices:
                for b in reach(e.image, a):
                    assert e.support(a) <= e.support(b)


class TestVerify:
    def test_empty_support(self):
        vertex = product_vertex_id([BOTTOM])
        e = SpsEmbedding(
            source=single_vertex(),
            indices=(SpsIndex("0"),),
            factors=(single_vertex(),),
            factor_refs=(0,),
            coordinates={"0": (BOTTOM,)},
            image=Graph.build([vertex], [(vertex, vertex)]),
            isomorphism={"0": vertex},
        )
        result = verify_sps(e)
        assert not result
        assert result.condition == COND_SUPPORT

    def test_projection_that_is_not_strong(self):
        # Both image vertices share the loopless second coordinate, so the
        # image has no edges while the first factor is complete with loops
        a, b = product_vertex_id(["0", "0"]), product_vertex_id(["1", "0"])
        e = SpsEmbedding(
            source=edgeless_graph(2),
            indices=(SpsIndex("0"), SpsIndex("1")),
            factors=(k2_looped(), single_vertex()),
            factor_refs=(0, 1),
            coordinates={"0": ("0", "0"), "1": ("1", "0")},
            image=Graph.build([a, b]),
            isomorphism={"0": a, "1": b},
        )
        result = verify_sps(e)
        assert not result
        assert result.condition == COND_STRONG

    def test_image_edges_must_match_the_product(self):
        e = build_sps_embedding(g0(), [g0()])
        tampered = replace(e, image=Graph(e.image.vertices, frozenset()))
        result = verify_sps(tampered)
        assert not result
        assert result.condition == COND_INDUCED

    def test_factor_count_must_match(self):
        e = build_sps_embedding(g0(), [g0()])
        assert verify_sps(replace(e, factors=e.factors[:1])).condition == COND_INDUCED


class TestHereditary:
    def test_k3(self):
        assert not membership_hereditary_check(k3(), [g0()])

    def test_g0(self):
        assert membership_hereditary_check(g0(), [g0()])

    def test_empty(self):
        assert membership_hereditary_check(EMPTY_GRAPH, [])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            membership_hereditary_check(edgeless_graph(6), [single_vertex()])
        assert membership_hereditary_check(edgeless_graph(6), [single_vertex()], force=True)

    def test_agrees_with_membership(self):
        for k in ([g0()], [k3(), single_vertex(loop=True)], [directed_path(1)]):
            for w in graph_classes_up_to(3):
                assert membership_hereditary_check(w, k) == membership(w, k).verdict

    def test_agrees_with_membership_on_four_vertices(self):
        for w in random_graphs(4, 30, seed=17):
            assert membership_hereditary_check(w, POOL) == membership(w, POOL).verdict

    @pytest.mark.slow
    def test_agrees_with_membership_on_every_four_vertex_graph(self):
        for k in ([g0()], [k3(), single_vertex(loop=True)], list(POOL)):
            for w in graph_classes(4):
                assert membership_hereditary_check(w, k) == membership(w, k).verdict, str(w)


class TestUndirected:
    UNDIRECTED_POOL = [g0(), k3(), single_vertex(), single_vertex(loop=True), undirected_path(3)]

    def test_rejects_directed_input(self):
        with pytest.raises(InputError):
            undirected_membership(directed_path(1), [g0()])
        with pytest.raises(InputError):
            undirected_membership(g0(), [directed_path(1)])

    def test_agrees_with_membership(self):
        undirected = [w for w in graphs_up_to(3) if is_undirected(w)]
        for size in (1, 2):
            for k in itertools.combinations(self.UNDIRECTED_POOL, size):
                for w in undirected:
                    assert undirected_membership(w, k) == membership(w, k).verdict

    def test_cycle_in_its_own_class(self):
        assert undirected_membership(undirected_cycle(5), [undirected_cycle(5)])


# ---------------------------------------------------------------------------
# Soundness and closure properties
# ---------------------------------------------------------------------------

def assert_sound(w: Graph, k: list[Graph]):
    evidence = membership(w, k)
    if evidence:
        e = build_sps_embedding(w, k, evidence)
        assert verify_sps(e), (str(w), verify_sps(e).detail)
        assert is_isomorphic(w, e.image)
    else:
        imp = witness_implication(w, k, evidence)
        assert all(satisfies_implication(g, imp) for g in k)
        assert not satisfies_implication(w, imp)


def test_witness_and_embedding_are_sound():
    for k in generator_classes():
        for w in graph_classes_up_to(3):
            assert_sound(w, k)


def test_soundness_on_four_vertex_graphs():
    graphs = random_graphs(4, 25, seed=99, density=0.5)
    for k in ([g0()], POOL[:3], list(POOL)):
        for w in graphs:
            assert_sound(w, k)


@pytest.mark.slow
def test_soundness_on_every_four_vertex_graph():
    for k in ([g0()], list(POOL)):
        for w in graph_classes(4):
            assert_sound(w, k)


def _members(k: list[Graph]) -> list[Graph]:
    return [w for w in graph_classes_up_to(3) if w.vertices and membership(w, k)]


@pytest.mark.parametrize("k", [[g0()], [k3()], [directed_path(1), single_vertex(loop=True)]])
def test_closure(k):
    rng = random.Random(13)
    members = _members(k)
    assert members
    sample = rng.sample(members, min(6, len(members)))
    for w in sample:
        for size in range(len(w.vertices) + 1):
            for subset in itertools.combinations(w.ordered_vertices, size):
                assert membership(induced_subgraph(w, subset), k)
        for image, _ in strong_homomorphic_images(w):
            assert membership(image, k)
    for a, b in itertools.combinations(sample[:4], 2):
        assert membership(disjoint_union([a, b]), k)


def test_products_of_points_stay_inside():
    k = [single_vertex(), single_vertex(loop=True)]
    for a, b in itertools.product(k, repeat=2):
        assert membership(direct_product([a, b]), k)


def test_graph_products_can_leave_the_class():
    # (0,1) and (1,0) of G0 x G0 are adjacent and loopless
    square = direct_product([g0(), g0()])
    evidence = membership(square, [g0()])
    assert not evidence
    assert evidence.failure.condition == CONDITION_VERTEX
    imp = witness_implication(square, [g0()], evidence)
    assert satisfies_implication(g0(), imp)
    assert not satisfies_implication(square, imp)
    # K3 x K3 has non-adjacent pairs no strong map into K3 can collapse
    assert not membership(direct_product([k3(), k3()]), [k3()])
