"""member W K1 K2 ... [--witness] [--embed]"""
from commands.result import CommandResult
from utils.errors import CapacityError, InputError, InternalError
from utils.serialization import dumps, load_graph
from workflow import run_membership

_ERRORS = {"input": InputError, "capacity": CapacityError, "internal": InternalError}


def member_command(candidate: str, generators: list[str], witness: bool = False, embed: bool = False,
                   as_json: bool = False, standard_vars: bool = False, force: bool = False) -> CommandResult:
    w = load_graph(candidate)
    k = [load_graph(source) for source in generators]
    state = run_membership(w, k, witness, embed, standard_vars, force)

    error = state.get("error")
    if error:
        raise _ERRORS.get(error["kind"], InternalError)(error["message"])

    verdict = "member" if state["verdict"] else "non-member"
    payload = {"verdict": verdict, "evidence": state["evidence"]}
    if "witness" in state:
        payload["witness"] = state["witness"]
    if "embedding" in state:
        payload["embedding"] = state["embedding"]
        if not state["embedding"]["verified"]:
            raise InternalError(f"embedding failed verification: {state['embedding']['detail']}")
    if as_json:
        return CommandResult(verdict, dumps(payload), payload)

    text = state["report"]
    if "embedding" in state:
        text += "\n" + dumps(state["embedding"]["embedding"])
    return CommandResult(verdict, text, payload)


def run_member(args) -> CommandResult:
    return member_command(args.candidate, args.generators, args.witness, args.embed,
                          args.json, args.standard_vars, args.force)
