"""Brute-force enumeration of switching classes at small order.

This is the ground truth the rest of the package is checked against: it
enumerates every switching-isomorphism class of signed graphs on n
vertices by brute force and cross-matches the classes that have two
eigenvalues off ±1 against the family catalog.

Strategy: underlying graphs are generated up to isomorphism by vertex
extension with canonical-form deduplication (the canonical form of a
graph is the lexicographically largest pair-bitmask over all vertex
permutations).  For one underlying graph, switching classes of signings
correspond to sign patterns on the edges outside a fixed spanning
forest, taken up to the automorphism group of the graph; orbits are
computed exactly, and each class is represented by the orbit-minimal
pattern.  `switching_class_key` reproduces the same canonical pair
(underlying canonical form, minimal pattern) for an arbitrary graph, so
two graphs get equal keys exactly when they are switching isomorphic.

Orders up to 6 are quick; 7 is noticeably heavier (tens of seconds of
enumeration plus key work); 8 is experimental and slow.  All counts
beyond the published numbers of underlying graphs are self-generated
regression constants.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import backend
from .catalog import build_catalog
from .families import construct, display
from .graphs import SignedGraph
from .spectral import Membership, classify
from .verify import VerificationReport

__all__ = [
    "enumerate_switching_classes",
    "switching_class_key",
    "underlying_graph_bitmasks",
    "verify_classification",
    "MAX_FAST_ORDER",
    "MAX_ORDER",
]

MAX_FAST_ORDER = 7
MAX_ORDER = 8


def _pair_index(i: int, j: int) -> int:
    # colex position of the pair {i, j} with i < j; independent of n
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(n) for i in range(j))


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    """(perms, pow2pos): all n! permutations and, per permutation, the power
    of two each pair-bit moves to under relabelling."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    pairs = _pairs(n)
    npairs = len(pairs)
    pow2 = np.empty((perms.shape[0], npairs), dtype=np.int64)
    for t, (i, j) in enumerate(pairs):
        pi = perms[:, i]
        pj = perms[:, j]
        lo = np.minimum(pi, pj)
        hi = np.maximum(pi, pj)
        pow2[:, t] = np.int64(1) << (hi * (hi - 1) // 2 + lo)
    return perms, pow2


def _bits_to_rows(masks: list[int], npairs: int) -> np.ndarray:
    rows = np.zeros((len(masks), npairs), dtype=np.uint8)
    for r, m in enumerate(masks):
        for t in range(npairs):
            if m >> t & 1:
                rows[r, t] = 1
    return rows


@lru_cache(maxsize=None)
def underlying_graph_bitmasks(n: int) -> tuple[int, ...]:
    """Canonical pair-bitmasks of all graphs on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return (0,)
    prev = underlying_graph_bitmasks(n - 1)
    base = _pair_index(0, n - 1)  # pairs {i, n-1} sit above all smaller pairs
    candidates = [g | (mask << base) for g in prev for mask in range(1 << (n - 1))]
    _, pow2 = _perm_tables(n)
    canon = backend.canon_max_batch(_bits_to_rows(candidates, base + n - 1), pow2)
    return tuple(sorted(set(int(c) for c in canon)))


def _automorphisms(bits: int, n: int) -> list[tuple[int, ...]]:
    perms, pow2 = _perm_tables(n)
    row = _bits_to_rows([bits], pow2.shape[1])[0]
    images = backend.perm_images_one(row, pow2)
    return [tuple(int(x) for x in perms[i]) for i in np.nonzero(images == bits)[0]]


def _max_relabelling(bits: int, n: int) -> tuple[int, tuple[int, ...]]:
    """Canonical form of a bitmask and one permutation achieving it."""
    perms, pow2 = _perm_tables(n)
    row = _bits_to_rows([bits], pow2.shape[1])[0]
    images = backend.perm_images_one(row, pow2)
    best = int(images.max())
    at = int(np.argmax(images))
    return best, tuple(int(x) for x in perms[at])


@dataclass(frozen=True)
class _EdgeFrame:
    """Edge bookkeeping of one (canonically labelled) underlying graph."""

    n: int
    edges: tuple[tuple[int, int], ...]
    edge_index: dict
    tree: tuple[int, ...]  # edge positions forming a spanning forest
    free: tuple[int, ...]  # remaining edge positions
    bfs_order: tuple[int, ...]
    parent: tuple[int, ...]  # parent vertex in the forest, -1 for roots
    parent_edge: tuple[int, ...]  # edge position to the parent, -1 for roots


def _edge_frame(bits: int, n: int) -> _EdgeFrame:
    edges = tuple((i, j) for (i, j) in _pairs(n) if bits >> _pair_index(i, j) & 1)
    edge_index = {e: t for t, e in enumerate(edges)}
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for lst in adj:
        lst.sort()
    seen = [False] * n
    parent = [-1] * n
    parent_edge = [-1] * n
    order: list[int] = []
    tree: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    e = edge_index[(min(u, v), max(u, v))]
                    parent_edge[v] = e
                    tree.append(e)
                    queue.append(v)
    tree_set = set(tree)
    free = tuple(t for t in range(len(edges)) if t not in tree_set)
    return _EdgeFrame(
        n, edges, edge_index, tuple(tree), free, tuple(order), tuple(parent), tuple(parent_edge)
    )


def _normalize_pattern(frame: _EdgeFrame, neg: list[bool]) -> int:
    """Switch so every forest edge is positive; return the free-edge bitmask."""
    flip = [False] * frame.n
    for v in frame.bfs_order:
        p = frame.parent[v]
        if p >= 0:
            flip[v] = flip[p] ^ neg[frame.parent_edge[v]]
    out = 0
    for pos, t in enumerate(frame.free):
        i, j = frame.edges[t]
        if neg[t] ^ flip[i] ^ flip[j]:
            out |= 1 << pos
    return out


def _apply_perm_pattern(frame: _EdgeFrame, perm: tuple[int, ...], pattern: int) -> int:
    """Image of a normalized free-edge pattern under a graph automorphism."""
    neg = [False] * len(frame.edges)
    for pos, t in enumerate(frame.free):
        if pattern >> pos & 1:
            i, j = frame.edges[t]
            u, v = perm[i], perm[j]
            neg[frame.edge_index[(min(u, v), max(u, v))]] = True
    return _normalize_pattern(frame, neg)


def _generating_subset(auts: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """A small subset generating the same permutation group.

    Greedy: add any element outside the subgroup generated so far, then
    re-close (BFS from the new element by right multiplication covers its
    coset of the previous closure, which is the enlarged subgroup)."""
    if len(auts) <= 1:
        return []
    identity = tuple(range(len(auts[0])))
    gens: list[tuple[int, ...]] = []
    closure = {identity}
    for p in auts:
        if p in closure:
            continue
        gens.append(p)
        closure.add(p)
        frontier = [p]
        while frontier:
            new = []
            for q in frontier:
                for g in gens:
                    comp = tuple(q[g[i]] for i in range(len(g)))
                    if comp not in closure:
                        closure.add(comp)
                        new.append(comp)
            frontier = new
        if len(closure) >= len(auts):
            break
    return gens


def _orbit_min_labels(n_patterns: int, images: list[np.ndarray]) -> np.ndarray:
    labels = np.arange(n_patterns, dtype=np.int64)
    changed = True
    while changed:
        changed = False
        for img in images:
            pulled = labels[img]
            if np.any(pulled < labels):
                np.minimum(labels, pulled, out=labels)
                changed = True
    return labels


def _class_patterns(bits: int, n: int) -> tuple[_EdgeFrame, list[int]]:
    """Orbit-minimal free-edge patterns: one per switching class of signings."""
    frame = _edge_frame(bits, n)
    nfree = len(frame.free)
    npat = 1 << nfree
    auts = _automorphisms(bits, n)
    gens = _generating_subset(auts)
    if not gens or nfree == 0:
        return frame, list(range(npat))
    # each generator acts linearly on patterns; build its image table from
    # the images of the unit patterns
    images = []
    for g in gens:
        cols = np.array([_apply_perm_pattern(frame, g, 1 << i) for i in range(nfree)], dtype=np.int64)
        pats = np.arange(npat, dtype=np.int64)
        img = np.zeros(npat, dtype=np.int64)
        for i in range(nfree):
            img ^= np.where(pats >> i & 1 == 1, cols[i], 0)
        images.append(img)
    labels = _orbit_min_labels(npat, images)
    return frame, [int(x) for x in np.nonzero(labels == np.arange(npat))[0]]


def _pattern_graph(frame: _EdgeFrame, pattern: int) -> SignedGraph:
    free_pos = {t: pos for pos, t in enumerate(frame.free)}
    edges = []
    for t, (i, j) in enumerate(frame.edges):
        sign = 1
        pos = free_pos.get(t)
        if pos is not None and pattern >> pos & 1:
            sign = -1
        edges.append((i, j, sign))
    return SignedGraph.from_edges(frame.n, edges)


def _classes_for_bits(args: tuple[int, int]) -> list[tuple[int, int]]:
    bits, n = args
    _, patterns = _class_patterns(bits, n)
    return [(bits, p) for p in patterns]


def _check_order(n: int, allow_slow: bool) -> None:
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ORDER:
        raise ValueError(f"enumeration supports orders up to {MAX_ORDER}")
    if n > MAX_FAST_ORDER and not allow_slow:
        raise ValueError(
            f"order {n} enumeration is experimental; pass allow_slow=True (CLI: --allow-slow)"
        )


def default_jobs() -> int:
    env = os.environ.get("SIGNED_SPECTRA_JOBS", "").strip()
    if env:
        return max(1, int(env))
    return 1


def enumerate_switching_classes(
    n: int, allow_slow: bool = False, jobs: int | None = None
) -> list[SignedGraph]:
    """One representative per switching-isomorphism class on n vertices."""
    _check_order(n, allow_slow)
    jobs = jobs or default_jobs()
    graphs = underlying_graph_bitmasks(n)
    out: list[SignedGraph] = []
    work = [(bits, n) for bits in graphs]
    if jobs > 1 and len(work) > 8:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_classes_for_bits, work, chunksize=max(1, len(work) // (4 * jobs)))
            results = [item for chunk in chunks for item in chunk]
        frames = {bits: _edge_frame(bits, n) for bits in graphs}
        out = [_pattern_graph(frames[bits], pat) for bits, pat in results]
    else:
        for bits in graphs:
            frame, patterns = _class_patterns(bits, n)
            out.extend(_pattern_graph(frame, p) for p in patterns)
    return out


def switching_class_key(g: SignedGraph) -> bytes:
    """Canonical byte string; equal keys iff switching isomorphic."""
    n = g.n
    if n > MAX_ORDER:
        raise ValueError(f"keys are computed by brute force, order capped at {MAX_ORDER}")
    if n == 0:
        return b"0|0|0"
    bits = 0
    adj = g.adjacency
    for (i, j) in _pairs(n):
        if adj[i, j]:
            bits |= 1 << _pair_index(i, j)
    canon, perm = _max_relabelling(bits, n)
    frame = _edge_frame(canon, n)
    neg = [False] * len(frame.edges)
    for (i, j) in _pairs(n):
        if adj[i, j]:
            u, v = perm[i], perm[j]
            neg[frame.edge_index[(min(u, v), max(u, v))]] = adj[i, j] < 0
    pattern = _normalize_pattern(frame, neg)
    best = min(_apply_perm_pattern(frame, q, pattern) for q in _automorphisms(canon, n))
    return f"{n}|{canon}|{best}".encode()


def verify_classification(
    n: int, allow_slow: bool = False, jobs: int | None = None
) -> VerificationReport:
    """Exhaustive check that, at order n, the classes with two eigenvalues
    off ±1 are exactly the catalog members (padded as needed), one class
    each."""
    _check_order(n, allow_slow)
    report = VerificationReport(f"classification completeness at order {n}")
    enumerated: dict[bytes, SignedGraph] = {}
    for g in enumerate_switching_classes(n, allow_slow=allow_slow, jobs=jobs):
        if classify(g).status is Membership.IN_G_PRIME:
            enumerated[switching_class_key(g)] = g
    # every catalog member of this order, padded, together with its negation
    # (the catalog normal form only lists one of each negation pair)
    candidates: dict[bytes, object] = {}
    if n >= 4:
        from dataclasses import replace

        specs = []
        for e in build_catalog(n).entries:
            if (n - e.triple.n) % 2 == 0:
                padded = replace(e.spec, pad=(n - e.triple.n) // 2)
                specs += [padded, replace(padded, negated=not padded.negated)]
        for spec in specs:
            key = switching_class_key(construct(spec))
            prev = candidates.get(key)
            if prev is not None:
                same_base = (prev.family, prev.params, prev.pad) == (
                    spec.family,
                    spec.params,
                    spec.pad,
                )
                if not same_base:
                    report.failures.append(
                        ("duplicate switching class", display(spec), display(prev))
                    )
                continue
            candidates[key] = spec
    report.checked = len(enumerated) + len(candidates)
    for key, g in sorted(enumerated.items()):
        if key not in candidates:
            report.failures.append(("unmatched enumerated class", g.edges()))
    for key, spec in sorted(candidates.items()):
        if key not in enumerated:
            report.failures.append(("catalog class not enumerated", display(spec)))
    report.notes.append(f"{len(enumerated)} classes with two eigenvalues off +-1")
    report.notes.append(f"{len(candidates)} catalog classes at this order")
    return report
