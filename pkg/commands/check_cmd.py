"""check id | imp against one graph"""
from commands.result import CommandResult
from logic.algebra import format_assignment
from logic.formulas import parse_identity, parse_implication
from logic.satisfaction import SatisfactionResult, check_identity, satisfies_implication
from utils.serialization import assignment_to_json, dumps, load_graph


def _result(outcome: SatisfactionResult, formula: str, as_json: bool) -> CommandResult:
    verdict = "holds" if outcome.holds else "violated"
    countermodel = outcome.countermodel
    payload = {
        "verdict": verdict,
        "formula": formula,
        "countermodel": assignment_to_json(countermodel) if countermodel is not None else None,
    }
    if as_json:
        return CommandResult(verdict, dumps(payload), payload)
    text = verdict
    if countermodel is not None:
        text += f"\ncountermodel: {format_assignment(countermodel) or '(empty assignment)'}"
    return CommandResult(verdict, text, payload)


def check_identity_command(text: str, source: str, mode: str = "fast", as_json: bool = False,
                           force: bool = False) -> CommandResult:
    identity = parse_identity(text)
    g = load_graph(source)
    return _result(check_identity(g, identity, mode, force), str(identity), as_json)


def check_implication_command(text: str, source: str, as_json: bool = False, force: bool = False) -> CommandResult:
    imp = parse_implication(text)
    g = load_graph(source)
    return _result(satisfies_implication(g, imp, force), str(imp), as_json)


def run_check(args) -> CommandResult:
    if args.action == "id":
        return check_identity_command(args.formula, args.graph, args.mode, args.json, args.force)
    return check_implication_command(args.formula, args.graph, args.json, args.force)
