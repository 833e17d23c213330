"""Command-line entry point for graph algebra quasivarieties"""
import argparse
import sys

from dotenv import load_dotenv

from commands import exit_code_for, run_check, run_encode, run_member, run_term
from data.catalog import catalog_names
from utils.console import set_quiet
from utils.errors import GraphAlgebraError

# Load environment variables
load_dotenv()


def print_banner():
    """Print welcome banner"""
    banner = """
╔══════════════════════════════════════════════════════════════╗
║                                                              ║
║          🕸️  GRAPH QUASIVARIETIES - Decision Toolkit           ║
║                                                              ║
║     Identities, implications and membership for graphs       ║
║                                                              ║
╚══════════════════════════════════════════════════════════════╝
    """
    print(banner)


def print_help():
    """Print help information"""
    help_text = f"""
📖 HOW TO USE:

Graphs are read from JSON files, edge-list files, or the catalog (@name).

1️⃣  Terms and term graphs
      python main.py term parse "x (y z)"
      python main.py term graph "x (y x)"
      python main.py term from-graph g.json --root 0

2️⃣  Check identities and implications
      python main.py check id --graph @g0 "x (y x) =~ x y"
      python main.py check imp --graph @k3 "x (y z) =~ x & z x =~ inf -> x (y y) =~ x y"

3️⃣  Decide membership in the quasivariety generated by K
      python main.py member @k3 @g0 --witness
      python main.py member @g0 @g0 --embed

4️⃣  Encode graphs and forbidden-subgraph classes
      python main.py encode sigma @g0
      python main.py encode xi @k3 --bound 2
      python main.py encode perfect --kmax 2
      python main.py encode forbid-term "x x"

EXIT CODES:
  0  holds / member      1  violated / non-member
  2  invalid input       3  capacity limit exceeded (use --force)

CATALOG: {", ".join(catalog_names())}, path-N, cycle-N, ucycle-N, complete-N
    """
    print(help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Decide identities, implications and quasivariety membership for graph algebras"
    )
    parser.add_argument("--help-guide", action="store_true", help="Show detailed usage guide")
    parser.add_argument("--quiet", "-q", action="store_true", help="Suppress status lines on stderr")
    commands = parser.add_subparsers(dest="command")

    term = commands.add_parser("term", help="Parse terms and convert between terms and term graphs")
    term_actions = term.add_subparsers(dest="action", required=True)
    term_parse = term_actions.add_parser("parse", help="Print the canonical form and syntax tree")
    term_parse.add_argument("text")
    term_parse.add_argument("--json", action="store_true")
    term_graph = term_actions.add_parser("graph", help="Print the term graph G(t) as JSON")
    term_graph.add_argument("text")
    term_from = term_actions.add_parser("from-graph", help="Print a term whose term graph is the given graph")
    term_from.add_argument("source", help="Graph file or @name")
    term_from.add_argument("--root", help="Root vertex (default: least vertex reaching all)")
    term_from.add_argument("--json", action="store_true")

    check = commands.add_parser("check", help="Check an identity or implication against a graph")
    check_actions = check.add_subparsers(dest="action", required=True)
    for name, helptext in (("id", "Check an identity t =~ t'"), ("imp", "Check an implication a & b -> c")):
        action = check_actions.add_parser(name, help=helptext)
        action.add_argument("formula")
        action.add_argument("--graph", required=True, help="Graph file or @name")
        action.add_argument("--json", action="store_true")
        action.add_argument("--force", action="store_true", help="Ignore capacity limits")
        if name == "id":
            action.add_argument("--mode", choices=["fast", "brute"], default="fast")

    member = commands.add_parser("member", help="Decide membership of W in the quasivariety generated by K")
    member.add_argument("candidate", help="W: graph file or @name")
    member.add_argument("generators", nargs="*", help="K: graph files or @names")
    member.add_argument("--witness", action="store_true", help="Print a separating implication for non-members")
    member.add_argument("--embed", action="store_true", help="Print the subproduct embedding for members")
    member.add_argument("--standard-vars", action="store_true", help="Print the witness over x1, x2, ...")
    member.add_argument("--json", action="store_true")
    member.add_argument("--force", action="store_true", help="Ignore capacity limits")

    encode = commands.add_parser("encode", help="Emit identity and implication sets")
    encode_actions = encode.add_subparsers(dest="action", required=True)
    enc_sigma = encode_actions.add_parser("sigma", help="Σ(G): one identity per ordered vertex pair")
    enc_sigma.add_argument("source", help="Graph file or @name")
    enc_xi = encode_actions.add_parser("xi", help="Ξ_G truncated to φ values up to --bound")
    enc_xi.add_argument("source", help="Forbidden graph file or @name")
    enc_xi.add_argument("--bound", type=int, required=True)
    enc_xi.add_argument("--force", action="store_true", help="Ignore capacity limits")
    enc_perfect = encode_actions.add_parser("perfect", help="Implications defining perfect graphs up to C_{2k+1}")
    enc_perfect.add_argument("--kmax", type=int, default=2)
    enc_term = encode_actions.add_parser("forbid-term", help="The implication forbidding the term graph of TERM")
    enc_term.add_argument("term")
    for action in (enc_sigma, enc_xi, enc_perfect, enc_term):
        action.add_argument("--json", action="store_true")
        action.add_argument("--ascii", action="store_true", help="Write =~ instead of ≈")

    return parser


HANDLERS = {
    "term": run_term,
    "check": run_check,
    "member": run_member,
    "encode": run_encode,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point; returns the exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.help_guide:
        print_banner()
        print_help()
        return 0
    if args.command is None:
        parser.print_help()
        return 2

    set_quiet(args.quiet)
    try:
        result = HANDLERS[args.command](args)
    except GraphAlgebraError as e:
        print(f"❌ {e}", file=sys.stderr)
        return exit_code_for(e)

    if result.text:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
