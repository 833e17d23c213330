"""JSON and text codecs for graphs, terms, formulas and membership results"""
from pathlib import Path
from typing import Any, Iterable
import json
import re

from data.catalog import catalog_graph
from graphs.graph import Graph
from logic.algebra import INF, Assignment, Value
from logic.formulas import Identity, Implication, format_implication, parse_implication
from quasivariety.embedding import SpsEmbedding, SpsIndex
from quasivariety.membership import MembershipEvidence, SiteMap
from terms.term import INFINITY, Application, Term, Variable
from utils.errors import InputError

CATALOG_PREFIX = "@"
EDGE_LIST_HEADER = "vertices:"
_EDGE_LIST_UNSAFE = re.compile(r"[\s#]")


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": list(g.ordered_vertices),
        "edges": [[u, v] for u, v in sorted(g.edges)],
    }


def graph_from_json(data: Any) -> Graph:
    """Parse ``{"vertices": [...], "edges": [[u, v], ...]}``"""
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError('graph JSON must be an object with a "vertices" list')
    vertices = data["vertices"]
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise InputError('"vertices" and "edges" must be lists')
    for edge in edges:
        if not isinstance(edge, list) or len(edge) != 2:
            raise InputError(f"malformed edge {edge!r}; expected [u, v]")
    vertex_set = frozenset(str(v) for v in vertices)
    edge_set = frozenset((str(u), str(v)) for u, v in edges)
    return Graph(vertex_set, edge_set)


def graph_to_edge_list(g: Graph) -> str:
    """Write the edge-list format; names that the reader would split or cut are rejected"""
    for v in g.ordered_vertices:
        if not v or _EDGE_LIST_UNSAFE.search(v) or v.startswith(EDGE_LIST_HEADER):
            raise InputError(f"vertex name {v!r} has no edge-list spelling; write the graph as JSON")
    lines = [f"{EDGE_LIST_HEADER} " + " ".join(g.ordered_vertices)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    An optional ``vertices:`` line lists every vertex (isolated ones
    included); every other non-blank line is one edge ``u v``. Text after
    ``#`` is ignored.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(EDGE_LIST_HEADER):
            vertices.extend(line[len(EDGE_LIST_HEADER):].split())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {number}: expected 'u v', got {raw.strip()!r}")
        edges.append((parts[0], parts[1]))
    return Graph.build(vertices, edges)


def parse_graph_text(text: str) -> Graph:
    """Graph from either JSON or edge-list text"""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid graph JSON: {e}") from e
        return graph_from_json(data)
    return graph_from_edge_list(text)


def load_graph(source: str) -> Graph:
    """Load a graph from a file path, or from the catalog for ``@name``"""
    if source.startswith(CATALOG_PREFIX):
        return catalog_graph(source[len(CATALOG_PREFIX):])
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read graph file {source}: {e.strerror or e}") from e
    return parse_graph_text(text)


# ---------------------------------------------------------------------------
# Terms and formulas
# ---------------------------------------------------------------------------

def term_to_json(t: Term) -> list:
    if isinstance(t, Variable):
        return ["var", t.name]
    if isinstance(t, Application):
        return ["app", term_to_json(t.left), term_to_json(t.right)]
    return ["inf"]


def term_from_json(data: Any) -> Term:
    if not isinstance(data, list) or not data:
        raise InputError(f"malformed term JSON {data!r}")
    tag = data[0]
    if tag == "inf" and len(data) == 1:
        return INFINITY
    if tag == "var" and len(data) == 2 and isinstance(data[1], str) and data[1]:
        return Variable(data[1])
    if tag == "app" and len(data) == 3:
        return Application(term_from_json(data[1]), term_from_json(data[2]))
    raise InputError(f"malformed term JSON {data!r}")


def identity_to_json(identity: Identity) -> dict:
    return {"left": term_to_json(identity.left), "right": term_to_json(identity.right)}


def identity_from_json(data: Any) -> Identity:
    if not isinstance(data, dict) or set(data) != {"left", "right"}:
        raise InputError('identity JSON must be {"left": ..., "right": ...}')
    return Identity(term_from_json(data["left"]), term_from_json(data["right"]))


def implication_to_json(imp: Implication) -> dict:
    return {
        "premise": [identity_to_json(i) for i in imp.premise],
        "consequence": identity_to_json(imp.consequence),
    }


def implication_from_json(data: Any) -> Implication:
    if not isinstance(data, dict) or "consequence" not in data:
        raise InputError('implication JSON must be {"premise": [...], "consequence": ...}')
    premise = data.get("premise", [])
    if not isinstance(premise, list):
        raise InputError('"premise" must be a list of identities')
    return Implication(tuple(identity_from_json(i) for i in premise), identity_from_json(data["consequence"]))


def implications_to_text(imps: Iterable[Implication], ascii_only: bool = False) -> str:
    """One implication per line"""
    return "".join(format_implication(imp, ascii_only) + "\n" for imp in imps)


def implications_from_text(text: str) -> list[Implication]:
    return [parse_implication(line) for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def value_to_json(value: Value) -> str | None:
    return None if value is INF else value


def assignment_to_json(h: Assignment) -> dict[str, str | None]:
    """∞ becomes null"""
    return {name: value_to_json(h[name]) for name in sorted(h)}


# ---------------------------------------------------------------------------
# Membership evidence and embeddings
# ---------------------------------------------------------------------------

def _site_to_json(site: SiteMap) -> dict:
    return {"factor": site.factor, "map": site.map.as_dict()}


def evidence_to_json(evidence: MembershipEvidence) -> dict:
    data: dict[str, Any] = {
        "verdict": evidence.verdict,
        "vertex_maps": {a: _site_to_json(site) for a, site in sorted(evidence.vertex_maps.items())},
        "pair_maps": [
            {"pair": list(pair), **_site_to_json(site)}
            for pair, site in sorted(evidence.pair_maps.items())
        ],
        "failure": None,
    }
    if evidence.failure is not None:
        data["failure"] = {
            "condition": evidence.failure.condition,
            "vertices": list(evidence.failure.vertices),
            "description": evidence.failure.describe(),
            "candidates": [_site_to_json(site) for site in evidence.failure.candidates],
        }
    return data


def _index_to_json(index: SpsIndex) -> list[str]:
    return [index.base] if index.partner is None else [index.base, index.partner]


def _index_from_json(data: Any) -> SpsIndex:
    if not isinstance(data, list) or len(data) not in (1, 2):
        raise InputError(f"malformed index {data!r}")
    return SpsIndex(str(data[0]), str(data[1]) if len(data) == 2 else None)


def embedding_to_json(e: SpsEmbedding) -> dict:
    """Indices, factor references, factors, the coordinate table ("_|_" for ⊥),
    the image graph and the isomorphism onto it"""
    return {
        "source": graph_to_json(e.source),
        "indices": [_index_to_json(i) for i in e.indices],
        "factor_refs": list(e.factor_refs),
        "factors": [graph_to_json(f) for f in e.factors],
        "coordinates": {a: list(e.coordinates[a]) for a in sorted(e.coordinates)},
        "image": graph_to_json(e.image),
        "isomorphism": {a: e.isomorphism[a] for a in sorted(e.isomorphism)},
    }


def embedding_from_json(data: Any) -> SpsEmbedding:
    required = {"source", "indices", "factor_refs", "factors", "coordinates", "image", "isomorphism"}
    if not isinstance(data, dict) or not required <= set(data):
        raise InputError(f"embedding JSON needs the keys {sorted(required)}")
    return SpsEmbedding(
        source=graph_from_json(data["source"]),
        indices=tuple(_index_from_json(i) for i in data["indices"]),
        factors=tuple(graph_from_json(f) for f in data["factors"]),
        factor_refs=tuple(int(r) for r in data["factor_refs"]),
        coordinates={str(a): tuple(str(c) for c in cs) for a, cs in data["coordinates"].items()},
        image=graph_from_json(data["image"]),
        isomorphism={str(a): str(v) for a, v in data["isomorphism"].items()},
    )


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
