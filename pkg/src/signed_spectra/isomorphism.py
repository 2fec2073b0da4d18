"""Deciding switching isomorphism.

Two signed graphs are switching isomorphic when some switching of one is
isomorphic, signs included, to the other.  The decision searches for a
vertex bijection together with a per-vertex switching value in {+1, -1}:
mapping an edge whose other endpoint is already placed forces the value,
so the only branching is over images.  Candidates are pruned by
switching-invariant vertex colors (underlying degree, signed triangle
counts, and an iterated neighborhood refinement using signed two-step
invariants).  A returned witness is always re-verified against the
defining matrix identity before the answer is reported.

`is_switching_isomorphic_exhaustive` answers the same question by brute
force, enumerating all switchings of one argument and running a plain
permutation search that shares no code with the fast path; it exists as
an independent oracle for the tests and is only practical for small
orders.
"""

from __future__ import annotations

from collections import Counter, defaultdict

import numpy as np

from .graphs import SignedGraph, switch
from .spectral import char_poly

__all__ = [
    "is_switching_isomorphic",
    "is_switching_isomorphic_exhaustive",
    "switching_isomorphism_witness",
]


def _vertex_profiles(adj: np.ndarray):
    """Per-vertex (degree, positive triangles, negative triangles).

    A triangle counts as positive when its edge-sign product is +1; the
    product is switching invariant, so these survive switching.
    """
    a = adj.astype(np.int64)
    u = np.abs(a)
    diff = np.diagonal(a @ a @ a) // 2  # (pos - neg) per vertex
    total = np.diagonal(u @ u @ u) // 2
    deg = u.sum(axis=1)
    pos = (total + diff) // 2
    return deg, pos, total - pos


def _edge_invariants(adj: np.ndarray):
    """Switching-invariant pair data: common-neighbor count and a signed variant.

    For an edge uv the product A2[u,v]*A[u,v] is invariant (both factors
    pick up the same switching signs); for a non-edge only |A2[u,v]| is.
    """
    a = adj.astype(np.int64)
    u = np.abs(a)
    a2 = a @ a
    u2 = u @ u
    signed = np.where(adj != 0, a2 * a, np.abs(a2))
    return u2, signed


def _joint_colors(adj_a: np.ndarray, adj_b: np.ndarray):
    """Refined vertex colors over a shared palette, or None when the color
    multisets ever disagree (proving non-isomorphism)."""
    n = adj_a.shape[0]
    ea1, ea2 = _edge_invariants(adj_a)
    eb1, eb2 = _edge_invariants(adj_b)

    def assign(keys_a, keys_b):
        palette: dict = {}
        cols_a = [palette.setdefault(k, len(palette)) for k in keys_a]
        cols_b = [palette.setdefault(k, len(palette)) for k in keys_b]
        return cols_a, cols_b

    cols_a, cols_b = assign(
        list(zip(*(x.tolist() for x in _vertex_profiles(adj_a)))),
        list(zip(*(x.tolist() for x in _vertex_profiles(adj_b)))),
    )
    if sorted(cols_a) != sorted(cols_b):
        return None

    def signature(adj, e1, e2, cols, v):
        ring = sorted(
            (cols[u], int(adj[v, u]!= 0), int(e1[v, u]), int(e2[v, u]))
            for u in range(n)
            if u != v
        )
        return (cols[v], tuple(ring))

    for _ in range(n):
        before = len(set(cols_a))
        cols_a, cols_b = assign(
            [signature(adj_a, ea1, ea2, cols_a, v) for v in range(n)],
            [signature(adj_b, eb1, eb2, cols_b, v) for v in range(n)],
        )
        if sorted(cols_a) != sorted(cols_b):
            return None
        if len(set(cols_a)) == before:
            break
    return cols_a, cols_b


def _search_order(adj: np.ndarray, cols) -> list[int]:
    """Process rare colors first and keep each new vertex attached to the
    already-placed part of its component."""
    n = adj.shape[0]
    rarity = Counter(cols)
    placed = [False] * n
    attached = [0] * n
    order = []
    for _ in range(n):
        best_key = None
        pick = -1
        for v in range(n):
            if placed[v]:
                continue
            key = (0 if attached[v] else 1, -attached[v], rarity[cols[v]], v)
            if best_key is None or key < best_key:
                best_key = key
                pick = v
        order.append(pick)
        placed[pick] = True
        for u in np.nonzero(adj[pick])[0]:
            attached[int(u)] += 1
    return order


def _find_witness(adj_a, adj_b, cols_a, cols_b, allow_switching: bool):
    n = adj_a.shape[0]
    order = _search_order(adj_a, cols_a)
    rank = {v: i for i, v in enumerate(order)}
    anchors = [
        min(
            (int(u) for u in np.nonzero(adj_a[v])[0] if rank[int(u)] < rank[v]),
            key=lambda u: rank[u],
            default=-1,
        )
        for v in range(n)
    ]
    buckets = defaultdict(list)
    for v in range(n):
        buckets[cols_b[v]].append(v)

    mapped = [-1] * n
    used = [False] * n
    sval = [0] * n
    a = adj_a
    b = adj_b

    def dfs(t: int) -> bool:
        if t == n:
            return True
        u = order[t]
        w0 = anchors[u]
        for v in buckets[cols_a[u]]:
            if used[v]:
                continue
            if allow_switching and w0 >= 0:
                bv = int(b[v, mapped[w0]])
                if bv == 0:
                    continue
                su = int(a[u, w0]) * sval[w0] * bv
            else:
                su = 1
            ok = True
            for i in range(t):
                w = order[i]
                if b[v, mapped[w]] != su * sval[w] * a[u, w]:
                    ok = False
                    break
            if not ok:
                continue
            mapped[u] = v
            used[v] = True
            sval[u] = su
            if dfs(t + 1):
                return True
            used[v] = False
            mapped[u] = -1
        return False

    if dfs(0):
        return tuple(mapped), tuple(sval)
    return None


def _check_witness(g: SignedGraph, h: SignedGraph, perm, signs) -> None:
    s = np.asarray(signs, dtype=np.int8)
    p = np.asarray(perm, dtype=np.int64)
    switched = g.adjacency * np.outer(s, s)
    out = np.zeros_like(switched)
    out[np.ix_(p, p)] = switched
    assert np.array_equal(out, h.adjacency), "witness failed verification"


def switching_isomorphism_witness(g: SignedGraph, h: SignedGraph):
    """A (permutation, signs) pair mapping g onto h, or None.

    The pair satisfies h[p[i], p[j]] == s[i] * s[j] * g[i, j] for all i, j.
    """
    if g.n != h.n:
        return None
    if g.n == 0:
        return (), ()
    if sorted(g.degrees().tolist()) != sorted(h.degrees().tolist()):
        return None
    if char_poly(g) != char_poly(h):
        return None
    cols = _joint_colors(g.adjacency, h.adjacency)
    if cols is None:
        return None
    found = _find_witness(g.adjacency, h.adjacency, cols[0], cols[1], True)
    if found is None:
        return None
    _check_witness(g, h, *found)
    return found


def is_switching_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    """True iff some switching of g is isomorphic to h (signs included)."""
    return switching_isomorphism_witness(g, h) is not None


def _brute_signed_iso(a: np.ndarray, b: np.ndarray) -> bool:
    """Permutation search for exact signed equality; no switching involved."""
    n = a.shape[0]

    def prof(m):
        return [(int(np.sum(m[v] == 1)), int(np.sum(m[v] == -1))) for v in range(n)]

    pa, pb = prof(a), prof(b)
    if sorted(pa) != sorted(pb):
        return False
    used = [False] * n
    mp = [0] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or pb[j] != pa[i]:
                continue
            if all(b[j, mp[k]] == a[i, k] for k in range(i)):
                used[j] = True
                mp[i] = j
                if rec(i + 1):
                    return True
                used[j] = False
        return False

    return rec(0)


def is_switching_isomorphic_exhaustive(g: SignedGraph, h: SignedGraph) -> bool:
    """Independent oracle: try all 2^(n-1) switchings of g (vertex 0 fixed,
    since a set and its complement switch identically) against h.

    Exponential; intended for cross-checks at small order.
    """
    if g.n != h.n:
        return False
    n = g.n
    if n == 0:
        return True
    for mask in range(1 << (n - 1)):
        subset = [i + 1 for i in range(n - 1) if (mask >> i) & 1]
        if _brute_signed_iso(switch(g, subset).adjacency, h.adjacency):
            return True
    return False
