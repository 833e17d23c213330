"""term parse | graph | from-graph"""
import json

from commands.result import CommandResult
from terms.parser import format_term, parse_term
from terms.term_graph import graph_to_term, is_term_graph, term_graph
from utils.errors import InputError
from utils.serialization import dumps, graph_to_json, load_graph, term_to_json


def parse_command(text: str, as_json: bool = False) -> CommandResult:
    t = parse_term(text)
    payload = {"term": format_term(t), "ast": term_to_json(t)}
    if as_json:
        return CommandResult("ok", dumps(payload), payload)
    return CommandResult("ok", f"{payload['term']}\n{json.dumps(payload['ast'])}", payload)


def graph_command(text: str) -> CommandResult:
    """G(t) and its root, always as JSON"""
    graph, root = term_graph(parse_term(text))
    payload = {"root": root, "graph": graph_to_json(graph)}
    return CommandResult("ok", dumps(payload), payload)


def from_graph_command(source: str, root: str | None = None, as_json: bool = False) -> CommandResult:
    g = load_graph(source)
    if root is None:
        if not g.vertices:
            raise InputError("the empty graph is not a term graph")
        root = is_term_graph(g)
        if root is None:
            raise InputError("no vertex reaches every other vertex; the graph is not a term graph")
    t = graph_to_term(g, root)
    payload = {"root": root, "term": format_term(t), "ast": term_to_json(t)}
    return CommandResult("ok", dumps(payload) if as_json else payload["term"], payload)


def run_term(args) -> CommandResult:
    if args.action == "parse":
        return parse_command(args.text, args.json)
    if args.action == "graph":
        return graph_command(args.text)
    return from_graph_command(args.source, args.root, args.json)
