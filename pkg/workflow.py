"""LangGraph orchestration of the membership pipeline"""
from typing import Sequence

from langgraph.graph import StateGraph, START, END

from graphs.graph import Graph
from stages.membership_stages import (
    build_embedding_stage,
    check_membership_stage,
    format_report_stage,
    synthesize_witness_stage,
)
from stages.state import MembershipState
from utils.serialization import graph_to_json


def create_membership_graph():
    """Decide membership, then explain the verdict with a witness or an embedding"""

    graph = StateGraph(MembershipState)

    graph.add_node("check_membership", check_membership_stage)
    graph.add_node("synthesize_witness", synthesize_witness_stage)
    graph.add_node("build_embedding", build_embedding_stage)
    graph.add_node("format_report", format_report_stage)

    def route_after_check(state: MembershipState) -> str:
        """A witness only for non-members, an embedding only for members"""
        next_step = state.get("next_step", "format_report")

        if next_step == "synthesize_witness":
            return "synthesize_witness"
        elif next_step == "build_embedding":
            return "build_embedding"
        else:
            return "format_report"

    graph.add_edge(START, "check_membership")
    graph.add_conditional_edges(
        "check_membership",
        route_after_check,
        {
            "synthesize_witness": "synthesize_witness",
            "build_embedding": "build_embedding",
            "format_report": "format_report",
        }
    )
    graph.add_edge("synthesize_witness", "format_report")
    graph.add_edge("build_embedding", "format_report")
    graph.add_edge("format_report", END)

    return graph.compile()


def initial_state(w: Graph, k: Sequence[Graph], witness: bool = False, embed: bool = False,
                  standard_vars: bool = False, force: bool = False) -> MembershipState:
    return {
        "candidate": graph_to_json(w),
        "generators": [graph_to_json(g) for g in k],
        "want_witness": witness,
        "want_embedding": embed,
        "standard_vars": standard_vars,
        "force": force,
        "error": None,
        "next_step": "check_membership",
    }


def run_membership(w: Graph, k: Sequence[Graph], witness: bool = False, embed: bool = False,
                   standard_vars: bool = False, force: bool = False) -> MembershipState:
    """Run the pipeline once and return its final state"""
    app = create_membership_graph()
    return app.invoke(initial_state(w, k, witness, embed, standard_vars, force))
