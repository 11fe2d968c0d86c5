"""Semiring sparse matrices and graph algorithms."""

from ._core import (
    IntMatrix,
    Matrix,
    SgkError,
    bfs,
    clustering,
    connected_components,
    degrees,
    mxm,
    mxv,
    pagerank,
    read_matrix_market,
    semiring_names,
    set_threads,
    sssp,
    triangle_count,
    write_matrix_market,
)

__all__ = [
    "IntMatrix",
    "Matrix",
    "SgkError",
    "bfs",
    "clustering",
    "connected_components",
    "degrees",
    "from_edges",
    "mxm",
    "mxv",
    "pagerank",
    "read_matrix_market",
    "semiring_names",
    "set_threads",
    "sssp",
    "triangle_count",
    "write_matrix_market",
]


def from_edges(n, edges, undirected=False):
    """Unweighted int64 adjacency matrix from (u, v) pairs."""
    rows, cols = [], []
    for u, v in edges:
        rows.append(u)
        cols.append(v)
        if undirected and u != v:
            rows.append(v)
            cols.append(u)
    return IntMatrix(n, n, rows, cols, [1] * len(rows))
