from signed_spectra import (
    FamilySpec,
    SignedGraph,
    char_poly,
    construct,
    is_switching_isomorphic,
    is_switching_isomorphic_exhaustive,
    negate,
    relabel,
    switch,
    switching_isomorphism_witness,
)

from conftest import random_signed_graph


def triangle(*signs):
    signs = signs or (1, 1, 1)
    return SignedGraph.from_edges(3, [(0, 1, signs[0]), (0, 2, signs[1]), (1, 2, signs[2])])


def scrambled(g, rng):
    subset = [v for v in range(g.n) if rng.random() < 0.5]
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(switch(g, subset), perm)


class TestExamples:
    def test_triangle_two_negative_edges(self):
        assert is_switching_isomorphic(triangle(), triangle(-1, -1, 1))

    def test_triangle_one_negative_edge(self):
        # the cycle sign product differs, so no switching can match them
        assert not is_switching_isomorphic(triangle(), triangle(-1, 1, 1))

    def test_unbalanced_matching_join(self):
        g = construct(FamilySpec("A2", (3, 2)))
        assert not is_switching_isomorphic(g, negate(g))

    def test_different_orders(self):
        assert not is_switching_isomorphic(SignedGraph.empty(2), SignedGraph.empty(3))

    def test_empty_graphs(self):
        assert is_switching_isomorphic(SignedGraph.empty(0), SignedGraph.empty(0))
        assert is_switching_isomorphic(SignedGraph.empty(4), SignedGraph.empty(4))


class TestWitness:
    def test_witness_defines_the_map(self, rng):
        for _ in range(30):
            g = random_signed_graph(rng, rng.randint(1, 7))
            h = scrambled(g, rng)
            found = switching_isomorphism_witness(g, h)
            assert found is not None
            perm, signs = found
            for i in range(g.n):
                for j in range(g.n):
                    assert (
                        h.adjacency[perm[i], perm[j]]
                        == signs[i] * signs[j] * g.adjacency[i, j]
                    )

    def test_none_for_nonmembers(self):
        assert switching_isomorphism_witness(triangle(), triangle(-1, 1, 1)) is None


class TestAgainstExhaustive:
    def test_scrambled_pairs_agree(self, rng):
        for _ in range(40):
            g = random_signed_graph(rng, rng.randint(1, 6))
            h = scrambled(g, rng)
            assert is_switching_isomorphic(g, h)
            assert is_switching_isomorphic_exhaustive(g, h)

    def test_random_pairs_agree(self, rng):
        disagreements = 0
        fast = 0
        for _ in range(120):
            n = rng.randint(1, 6)
            g = random_signed_graph(rng, n)
            h = random_signed_graph(rng, n)
            a = is_switching_isomorphic(g, h)
            b = is_switching_isomorphic_exhaustive(g, h)
            fast += a
            if a != b:
                disagreements += 1
        assert disagreements == 0

    def test_single_sign_tweaks_agree(self, rng):
        for _ in range(40):
            g = random_signed_graph(rng, rng.randint(3, 6), p=0.7)
            edges = g.edges()
            if not edges:
                continue
            u, v, s = edges[rng.randrange(len(edges))]
            tweaked = [(a, b, -c if (a, b) == (u, v) else c) for a, b, c in edges]
            h = scrambled(SignedGraph.from_edges(g.n, tweaked), rng)
            assert is_switching_isomorphic(g, h) == is_switching_isomorphic_exhaustive(g, h)


class TestRelationProperties:
    def test_reflexive_and_symmetric(self, rng):
        for _ in range(25):
            g = random_signed_graph(rng, rng.randint(0, 7))
            assert is_switching_isomorphic(g, g)
            h = scrambled(g, rng) if g.n else g
            assert is_switching_isomorphic(g, h) == is_switching_isomorphic(h, g)

    def test_transitive_on_equivalent_triples(self, rng):
        for _ in range(15):
            g = random_signed_graph(rng, rng.randint(1, 6))
            h = scrambled(g, rng)
            k = scrambled(h, rng)
            assert is_switching_isomorphic(g, h)
            assert is_switching_isomorphic(h, k)
            assert is_switching_isomorphic(g, k)

    def test_implies_cospectral(self, rng):
        for _ in range(40):
            g = random_signed_graph(rng, rng.randint(1, 7))
            h = random_signed_graph(rng, g.n)
            if is_switching_isomorphic(g, h):
                assert char_poly(g) == char_poly(h)


class TestStructuredHardCases:
    def test_signed_complete_graph_to_its_negative(self):
        g = construct(FamilySpec("A0", (5, 5)))
        assert is_switching_isomorphic(g, negate(g))

    def test_bipartite_member_to_its_negative(self):
        g = construct(FamilySpec("A22", (6,)))
        assert is_switching_isomorphic(g, negate(g))

    def test_cospectral_but_distinct_pair(self):
        g = construct(FamilySpec("A3", (2, 2)))
        h = construct(FamilySpec("A1", (2, 2)))
        assert char_poly(g) == char_poly(h)
        assert not is_switching_isomorphic(g, h)
        assert not is_switching_isomorphic_exhaustive(g, h)
