"""encode sigma | xi | perfect | forbid-term"""
from commands.result import CommandResult
from forbidden.implications import perfect_graph_axioms, term_graph_implication, xi_family
from logic.encodings import sigma
from logic.formulas import Implication, format_identity
from terms.parser import parse_term
from utils.serialization import dumps, identity_to_json, implication_to_json, implications_to_text, load_graph


def _implications(imps: list[Implication], as_json: bool, ascii_only: bool) -> CommandResult:
    payload = {"implications": [implication_to_json(imp) for imp in imps]}
    if as_json:
        return CommandResult("ok", dumps(payload["implications"]), payload)
    return CommandResult("ok", implications_to_text(imps, ascii_only).rstrip("\n"), payload)


def sigma_command(source: str, as_json: bool = False, ascii_only: bool = False) -> CommandResult:
    identities = sigma(load_graph(source))
    payload = {"identities": [identity_to_json(i) for i in identities]}
    if as_json:
        return CommandResult("ok", dumps(payload["identities"]), payload)
    return CommandResult("ok", "\n".join(format_identity(i, ascii_only) for i in identities), payload)


def xi_command(source: str, bound: int, as_json: bool = False, ascii_only: bool = False,
               force: bool = False) -> CommandResult:
    return _implications(xi_family(load_graph(source), bound, force), as_json, ascii_only)


def perfect_command(k_max: int, as_json: bool = False, ascii_only: bool = False) -> CommandResult:
    return _implications(perfect_graph_axioms(k_max), as_json, ascii_only)


def forbid_term_command(text: str, as_json: bool = False, ascii_only: bool = False) -> CommandResult:
    return _implications([term_graph_implication(parse_term(text))], as_json, ascii_only)


def run_encode(args) -> CommandResult:
    if args.action == "sigma":
        return sigma_command(args.source, args.json, args.ascii)
    if args.action == "xi":
        return xi_command(args.source, args.bound, args.json, args.ascii, args.force)
    if args.action == "perfect":
        return perfect_command(args.kmax, args.json, args.ascii)
    return forbid_term_command(args.term, args.json, args.ascii)
