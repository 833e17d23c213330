"""Stages of the membership pipeline: decide, then explain the verdict"""
import json

from stages.state import MembershipState
from tools.quasivariety_tools import build_embedding, check_membership, synthesize_witness
from utils.console import section, status, warn


def check_membership_stage(state: MembershipState) -> MembershipState:
    """Decide membership and pick the follow-up stage"""
    section("🔎 MEMBERSHIP - Checking conditions (a) and (b)...")
    k = state.get("generators", [])
    status(f"   W: {len(state['candidate']['vertices'])} vertices, K: {len(k)} graph(s)")

    result = json.loads(check_membership.invoke({
        "candidate": state["candidate"],
        "generators": k,
    }))
    if "error" in result:
        status(f"❌ {result['error']['message']}")
        state["error"] = result["error"]
        state["next_step"] = "format_report"
        return state

    state["verdict"] = result["verdict"]
    state["evidence"] = result["evidence"]
    if state["verdict"]:
        status("✅ W belongs to the quasivariety generated by K")
    else:
        status(f"❌ W is not a member: {result['evidence']['failure']['description']}")

    want_witness = state.get("want_witness", False)
    want_embedding = state.get("want_embedding", False)
    if state["verdict"]:
        if want_witness:
            warn("witness requested but W is a member; there is no separating implication")
        state["next_step"] = "build_embedding" if want_embedding else "format_report"
    else:
        if want_embedding:
            warn("embedding requested but W is not a member; nothing to embed")
        state["next_step"] = "synthesize_witness" if want_witness else "format_report"
    return state


def synthesize_witness_stage(state: MembershipState) -> MembershipState:
    section("🧾 WITNESS - Building the separating implication...")
    result = json.loads(synthesize_witness.invoke({
        "candidate": state["candidate"],
        "generators": state.get("generators", []),
        "force": state.get("force", False),
    }))
    if "error" in result:
        status(f"❌ {result['error']['message']}")
        state["error"] = result["error"]
    else:
        state["witness"] = result
        status(f"✅ Implication with {result['premise_size']} premise identities, "
               f"checked on every member of K and violated by W")
    state["next_step"] = "format_report"
    return state


def build_embedding_stage(state: MembershipState) -> MembershipState:
    section("🧩 EMBEDDING - Building the strong pointed subproduct...")
    result = json.loads(build_embedding.invoke({
        "candidate": state["candidate"],
        "generators": state.get("generators", []),
    }))
    if "error" in result:
        status(f"❌ {result['error']['message']}")
        state["error"] = result["error"]
    else:
        state["embedding"] = result
        indices = len(result["embedding"]["indices"])
        if result["verified"]:
            status(f"✅ Embedding over {indices} indices verified")
        else:
            status(f"❌ Embedding failed verification ({result['failed_condition']}): {result['detail']}")
    state["next_step"] = "format_report"
    return state


def format_report_stage(state: MembershipState) -> MembershipState:
    """Human-readable summary of the run"""
    lines = []
    error = state.get("error")
    if "verdict" in state:
        lines.append("member" if state["verdict"] else "non-member")
        failure = state["evidence"].get("failure")
        if failure:
            lines.append(f"  {failure['description']}")
            if failure["candidates"]:
                lines.append(f"  {len(failure['candidates'])} strong homomorphism(s) exist, none separating the pair:")
                for site in failure["candidates"]:
                    mapping = ", ".join(f"{a}->{b}" for a, b in sorted(site["map"].items()))
                    lines.append(f"    K[{site['factor']}]: {{{mapping}}}")
    witness = state.get("witness")
    if witness:
        lines.append("witness:")
        key = "standard_text" if state.get("standard_vars") else "text"
        lines.append(f"  {witness[key]}")
    embedding = state.get("embedding")
    if embedding:
        outcome = "verified" if embedding["verified"] else f"NOT verified ({embedding['failed_condition']})"
        lines.append(f"embedding over {len(embedding['embedding']['indices'])} indices: {outcome}")
    if error:
        lines.append(f"error: {error['message']}")
    state["report"] = "\n".join(lines)
    state["next_step"] = "end"
    return state
