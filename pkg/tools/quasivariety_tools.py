"""Membership, witness and embedding tools for the membership pipeline.

Each tool takes graphs as JSON objects and returns a JSON string, so the
pipeline state stays plain data.
"""
from langchain_core.tools import tool
from typing import Dict, List
import json

from logic.formulas import format_implication, rename_to_standard
from quasivariety.embedding import build_sps_embedding, verify_sps
from quasivariety.membership import membership
from quasivariety.witness import witness_implication
from utils.errors import CapacityError, ContractError, GraphAlgebraError, InputError
from utils.serialization import embedding_to_json, evidence_to_json, graph_from_json, implication_to_json


def _error(e: GraphAlgebraError) -> str:
    if isinstance(e, CapacityError):
        kind = "capacity"
    elif isinstance(e, (InputError, ContractError)):
        kind = "input"
    else:
        kind = "internal"
    return json.dumps({"error": {"kind": kind, "message": str(e)}})


@tool
def check_membership(candidate: Dict, generators: List[Dict]) -> str:
    """Decide whether a finite graph belongs to the quasivariety generated by a finite class.

    Args:
        candidate: The graph W as {"vertices": [...], "edges": [[u, v], ...]}
        generators: The generating class K, in search order

    Returns:
        JSON string with the verdict and the membership evidence
    """
    try:
        w = graph_from_json(candidate)
        k = [graph_from_json(g) for g in generators]
        evidence = membership(w, k)
    except GraphAlgebraError as e:
        return _error(e)
    return json.dumps({"verdict": evidence.verdict, "evidence": evidence_to_json(evidence)})


@tool
def synthesize_witness(candidate: Dict, generators: List[Dict], force: bool = False) -> str:
    """Build an implication that every generator satisfies and the candidate violates.

    Args:
        candidate: The non-member graph W
        generators: The generating class K
        force: Skip the capacity guardrail of the re-check

    Returns:
        JSON string with the vertex-named implication and its renaming to
        x1, x2, ..., each in JSON and text form
    """
    try:
        w = graph_from_json(candidate)
        k = [graph_from_json(g) for g in generators]
        imp = witness_implication(w, k, force=force)
    except GraphAlgebraError as e:
        return _error(e)
    standard = rename_to_standard(imp)
    return json.dumps({
        "implication": implication_to_json(imp),
        "text": format_implication(imp),
        "standard_implication": implication_to_json(standard),
        "standard_text": format_implication(standard),
        "premise_size": len(imp.premise),
    }, ensure_ascii=False)


@tool
def build_embedding(candidate: Dict, generators: List[Dict]) -> str:
    """Embed a member as a strong pointed subproduct of the generators and verify it.

    Args:
        candidate: The member graph W
        generators: The generating class K

    Returns:
        JSON string with the embedding and the outcome of its verification
    """
    try:
        w = graph_from_json(candidate)
        k = [graph_from_json(g) for g in generators]
        embedding = build_sps_embedding(w, k)
    except GraphAlgebraError as e:
        return _error(e)
    verification = verify_sps(embedding)
    return json.dumps({
        "embedding": embedding_to_json(embedding),
        "verified": verification.ok,
        "failed_condition": verification.condition,
        "detail": verification.detail,
    }, ensure_ascii=False)
