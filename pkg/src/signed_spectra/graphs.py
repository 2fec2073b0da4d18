"""Signed graphs and their switching algebra.

A signed graph is a simple graph whose edges carry signs in {+1, -1},
stored as a symmetric adjacency matrix over {-1, 0, +1} with zero
diagonal.  Switching at a vertex set X negates every edge with exactly
one endpoint in X; together with vertex relabelling this generates
switching isomorphism, the equivalence under which all classification
work here happens.

Graphs are immutable values: every operation returns a new instance and
instances hash and compare by content, so they are safe to share across
threads or processes.

Two interchange formats are supported and round-trip losslessly:

* JSON: ``{"n": <order>, "edges": [[u, v, s], ...]}`` with
  ``0 <= u < v < n`` and ``s`` in ``{1, -1}``; absent pairs are
  non-adjacent.
* plain text: first line the order, then one ``u v s`` line per edge.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence

import numpy as np

__all__ = [
    "SignedGraph",
    "negate",
    "switch",
    "disjoint_union",
    "add_isolated_edges",
    "underlying_components",
    "is_connected",
    "relabel",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "graph_dumps",
    "graph_loads",
    "graph_to_text",
    "graph_from_text",
    "load_graph_file",
]


class SignedGraph:
    """An immutable signed graph on vertices 0..n-1."""

    __slots__ = ("_adj", "_hash")

    def __init__(self, adjacency) -> None:
        raw = np.asarray(adjacency)
        adj = raw.astype(np.int8, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if raw.size and np.any(adj != raw):
            raise ValueError("entries must be integers in {-1, 0, +1}")
        if np.any(np.abs(adj) > 1):
            raise ValueError("entries must lie in {-1, 0, +1}")
        if np.any(adj != adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diagonal(adj) != 0):
            raise ValueError("diagonal must be zero (no loops)")
        adj.setflags(write=False)
        self._adj = adj
        self._hash = hash((adj.shape[0], adj.tobytes()))

    @classmethod
    def empty(cls, n: int) -> "SignedGraph":
        if n < 0:
            raise ValueError("order must be non-negative")
        return cls(np.zeros((n, n), dtype=np.int8))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SignedGraph":
        adj = np.zeros((n, n), dtype=np.int8)
        seen = set()
        for item in edges:
            u, v, s = (int(x) for x in item)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for order {n}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u, v] = adj[v, u] = s
        return cls(adj)

    @classmethod
    def single_edge(cls, sign: int = 1) -> "SignedGraph":
        """K2 with the given sign; the unit of isolated-edge padding."""
        return cls.from_edges(2, [(0, 1, sign)])

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only int8 view of the adjacency matrix."""
        return self._adj

    def edges(self) -> list[tuple[int, int, int]]:
        iu, ju = np.nonzero(np.triu(self._adj))
        return [(int(u), int(v), int(self._adj[u, v])) for u, v in zip(iu, ju)]

    @property
    def num_edges(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def degrees(self) -> np.ndarray:
        """Underlying (sign-blind) vertex degrees."""
        return np.count_nonzero(self._adj, axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={self.edges()!r})"


def _vertex_indices(vertices: Iterable[int], n: int) -> np.ndarray:
    idx = np.unique(np.fromiter((int(v) for v in vertices), dtype=np.int64))
    if idx.size and (idx[0] < 0 or idx[-1] >= n):
        raise ValueError(f"vertex out of range for order {n}")
    return idx


def negate(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign (the graph with adjacency matrix -A)."""
    return SignedGraph(-g.adjacency)


def switch(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Negate all edges with exactly one endpoint in `vertices`.

    Equivalent to conjugating the adjacency matrix by the diagonal
    ±1 matrix that is -1 exactly on `vertices`; the spectrum and the
    underlying graph are unchanged.
    """
    idx = _vertex_indices(vertices, g.n)
    s = np.ones(g.n, dtype=np.int8)
    s[idx] = -1
    return SignedGraph(g.adjacency * np.outer(s, s))


def disjoint_union(g: SignedGraph, h: SignedGraph) -> SignedGraph:
    out = np.zeros((g.n + h.n, g.n + h.n), dtype=np.int8)
    out[: g.n, : g.n] = g.adjacency
    out[g.n :, g.n :] = h.adjacency
    return SignedGraph(out)


def add_isolated_edges(g: SignedGraph, count: int) -> SignedGraph:
    """Append `count` disjoint positive edges (each contributes ±1 to the spectrum)."""
    if count < 0:
        raise ValueError("count must be non-negative")
    out = np.zeros((g.n + 2 * count, g.n + 2 * count), dtype=np.int8)
    out[: g.n, : g.n] = g.adjacency
    for i in range(count):
        u = g.n + 2 * i
        out[u, u + 1] = out[u + 1, u] = 1
    return SignedGraph(out)


def underlying_components(g: SignedGraph) -> list[frozenset[int]]:
    """Connected components of the underlying graph, ordered by smallest vertex."""
    n = g.n
    seen = [False] * n
    comps = []
    for root in range(n):
        if seen[root]:
            continue
        stack = [root]
        seen[root] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in np.nonzero(g.adjacency[u])[0]:
                v = int(v)
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(underlying_components(g)) == 1


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Image of g under the vertex bijection i -> perm[i]."""
    p = np.asarray(perm, dtype=np.int64)
    if p.shape != (g.n,) or not np.array_equal(np.sort(p), np.arange(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    out = np.zeros_like(g.adjacency)
    out[np.ix_(p, p)] = g.adjacency
    return SignedGraph(out)


# -- interchange formats ----------------------------------------------------


def graph_to_json_dict(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges()]}


def graph_from_json_dict(data: dict) -> SignedGraph:
    if not isinstance(data, dict) or set(data) - {"n", "edges"}:
        raise ValueError("graph object must have exactly the keys 'n' and 'edges'")
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from None
    for e in edges:
        if len(e) != 3:
            raise ValueError(f"edge entries must be [u, v, s], got {e!r}")
        if not e[0] < e[1]:
            raise ValueError(f"edges must be listed with u < v, got {e!r}")
    return SignedGraph.from_edges(n, edges)


def graph_dumps(g: SignedGraph) -> str:
    return json.dumps(graph_to_json_dict(g), sort_keys=True)


def graph_loads(text: str) -> SignedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid graph JSON: {exc}") from None
    return graph_from_json_dict(data)


def graph_to_text(g: SignedGraph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v} {s}" for u, v, s in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> SignedGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the order, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"edge lines must be 'u v s', got {ln!r}")
        u, v, s = (int(x) for x in parts)
        if not u < v:
            raise ValueError(f"edges must be listed with u < v, got {ln!r}")
        edges.append((u, v, s))
    return SignedGraph.from_edges(n, edges)


def load_graph_file(path: str) -> SignedGraph:
    """Read a graph from `path`, accepting either interchange format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return graph_loads(text)
    return graph_from_text(text)
