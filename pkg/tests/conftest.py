"""Shared fixtures and independent oracles for the test suite.

`charpoly_bruteforce` expands det(xI - A) over all permutations and is
deliberately independent of the production path (no shared code); it is
the reference every fast charpoly result is checked against at small
order.
"""

from __future__ import annotations

import random
from itertools import permutations

import pytest

from signed_spectra import SignedGraph, build_catalog
from signed_spectra.spectral import CharPoly


def perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def charpoly_bruteforce(g: SignedGraph) -> CharPoly:
    """det(xI - A) by the permutation expansion; exponential, order <= 8."""
    n = g.n
    a = g.adjacency
    coeffs = [0] * (n + 1)  # ascending powers
    for perm in permutations(range(n)):
        term = 1
        fixed = 0
        for i in range(n):
            j = perm[i]
            if i == j:
                fixed += 1
            else:
                entry = int(a[i, j])
                if entry == 0:
                    term = 0
                    break
                term *= -entry
        if term:
            coeffs[fixed] += perm_sign(perm) * term
    return CharPoly(tuple(coeffs))


def random_signed_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    edges = []
    for j in range(n):
        for i in range(j):
            if rng.random() < p:
                edges.append((i, j, rng.choice((1, -1))))
    return SignedGraph.from_edges(n, edges)


def random_cycle_edges(g: SignedGraph, rng: random.Random):
    """A random cycle of the underlying graph as a vertex sequence, or None."""
    n = g.n
    if n < 3:
        return None
    for _ in range(40):
        start = rng.randrange(n)
        path = [start]
        seen = {start}
        while True:
            nbrs = [int(v) for v in range(n) if g.adjacency[path[-1], v] != 0]
            rng.shuffle(nbrs)
            advanced = False
            for v in nbrs:
                if len(path) >= 3 and v == start:
                    return path
                if v not in seen:
                    path.append(v)
                    seen.add(v)
                    advanced = True
                    break
            if not advanced:
                break
    return None


@pytest.fixture(scope="session")
def catalog20():
    return build_catalog(20)


@pytest.fixture(scope="session")
def catalog24():
    return build_catalog(24)


@pytest.fixture()
def rng():
    return random.Random(20260809)
