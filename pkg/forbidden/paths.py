"""Finite directed paths as a generating class.

Every finite directed path is a term graph rooted at 0, and P_m admits a
strong homomorphism into P_n exactly when m <= n, so membership of P_m in
the quasivariety generated by P_0, ..., P_n is decided by length alone.
The countably infinite path lies in the quasivariety generated by all finite
paths without being a strong pointed subproduct of them.
"""
from graphs.families import directed_path
from graphs.graph import Graph
from quasivariety.membership import membership


def finite_paths(n: int) -> list[Graph]:
    """P_0, ..., P_n"""
    return [directed_path(i) for i in range(n + 1)]


def path_membership(m: int, n: int) -> bool:
    """Whether P_m belongs to the quasivariety generated by P_0, ..., P_n"""
    return membership(directed_path(m), finite_paths(n)).verdict
