"""Graph families and the small named graphs used throughout the examples"""
from graphs.graph import Graph, complement


def directed_path(n: int) -> Graph:
    """P_n: vertices 0..n, edges (i, i+1)"""
    return Graph.build(range(n + 1), ((i, i + 1) for i in range(n)))


def directed_cycle(n: int) -> Graph:
    return Graph.build(range(n), ((i, (i + 1) % n) for i in range(n)))


def undirected_cycle(n: int) -> Graph:
    """C_n as a symmetric loopless graph (n >= 3)"""
    edges = set()
    for i in range(n):
        j = (i + 1) % n
        edges |= {(i, j), (j, i)}
    return Graph.build(range(n), edges)


def undirected_path(n: int) -> Graph:
    """Symmetric loopless path on n vertices 0..n-1"""
    edges = set()
    for i in range(n - 1):
        edges |= {(i, i + 1), (i + 1, i)}
    return Graph.build(range(n), edges)


def complete_graph(n: int, loops: bool = False) -> Graph:
    return Graph.build(range(n), ((i, j) for i in range(n) for j in range(n) if loops or i != j))


def edgeless_graph(n: int) -> Graph:
    return Graph.build(range(n))


def odd_hole(k: int) -> Graph:
    """C_{2k+1}"""
    return undirected_cycle(2 * k + 1)


def odd_antihole(k: int) -> Graph:
    """The complement of C_{2k+1}"""
    return complement(undirected_cycle(2 * k + 1))


def g0() -> Graph:
    """V = {0, 1}, E = {(0,1), (1,0), (1,1)}"""
    return Graph.build({0, 1}, {(0, 1), (1, 0), (1, 1)})


def k3() -> Graph:
    return complete_graph(3)


def k2_looped() -> Graph:
    """K'_2: complete graph with loops on two vertices"""
    return complete_graph(2, loops=True)


def single_vertex(loop: bool = False) -> Graph:
    return Graph.build({0}, {(0, 0)} if loop else ())
