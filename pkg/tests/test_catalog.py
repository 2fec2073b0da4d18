import itertools
from dataclasses import replace
from pathlib import Path

import pytest

from signed_spectra import (
    CharTriple,
    FamilySpec,
    build_catalog,
    char_poly,
    construct,
    cospectral_mates,
    display,
    is_dss,
    is_switching_isomorphic,
)
from signed_spectra.catalog import (
    catalog_from_json,
    catalog_to_csv,
    catalog_to_json,
    catalog_to_markdown,
    normalize_spec,
    spec_is_connected,
)
from signed_spectra.families import family_index, predicted_triple


class TestStructure:
    def test_entry_count_band(self, catalog20):
        assert 550 <= len(catalog20.entries) < 600

    def test_exact_count_regression(self, catalog20):
        # self-generated constant; "almost 600"
        assert len(catalog20.entries) == 598

    def test_lexicographic_order(self, catalog20):
        def key(e):
            return (
                e.triple.a,
                e.triple.b,
                e.triple.n,
                family_index(e.spec.family),
                e.spec.params,
                e.spec.negated,
            )

        keys = [key(e) for e in catalog20.entries]
        assert keys == sorted(keys)

    def test_cluster_bookkeeping(self, catalog20):
        for prev, e in zip(catalog20.entries, catalog20.entries[1:]):
            same = (prev.triple.a, prev.triple.b) == (e.triple.a, e.triple.b)
            assert same == (prev.cluster_id == e.cluster_id)
            if same:
                assert e.position == prev.position + 1
                assert e.triple.n >= prev.triple.n
            else:
                assert e.cluster_id == prev.cluster_id + 1 and e.position == 0

    def test_normal_form(self, catalog20):
        for e in catalog20.entries:
            assert e.triple.a >= 0
            assert e.spec.pad == 0
            assert predicted_triple(e.spec) == e.triple
            assert normalize_spec(e.spec) == e.spec

    def test_dss_rule(self, catalog20):
        for cid, group in itertools.groupby(catalog20.entries, key=lambda e: e.cluster_id):
            cluster = list(group)
            for i, e in enumerate(cluster):
                expected = i == 0 and not (len(cluster) > 1 and cluster[1].triple.n == e.triple.n)
                assert e.dss == expected


class TestKnownClusters:
    def test_b25_cluster(self, catalog20):
        cluster = catalog20.cluster_of(0, 25)
        assert len(cluster) == 11
        assert sorted(e.triple.n for e in cluster) == [8, 10, 10, 10, 10, 12, 12, 12, 12, 14, 14]

    def test_same_triple_entries_cospectral(self, catalog20):
        for _, group in itertools.groupby(
            catalog20.entries, key=lambda e: (e.triple.a, e.triple.b, e.triple.n)
        ):
            cluster = list(group)
            if len(cluster) < 2:
                continue
            polys = {char_poly(construct(e.spec)) for e in cluster}
            assert len(polys) == 1

    def test_same_triple_entries_distinct_classes_small(self, catalog20):
        pairs = 0
        for _, group in itertools.groupby(
            catalog20.entries, key=lambda e: (e.triple.a, e.triple.b, e.triple.n)
        ):
            cluster = [e for e in group if e.triple.n <= 14]
            for x, y in itertools.combinations(cluster, 2):
                pairs += 1
                assert not is_switching_isomorphic(construct(x.spec), construct(y.spec)), (
                    display(x.spec),
                    display(y.spec),
                )
        assert pairs >= 20  # the order-14 window contains many coincidences


class TestMates:
    def test_five_mates_example(self, catalog20):
        mates = cospectral_mates(CharTriple(0, 25, 10), catalog20)
        assert [display(s) for s in mates] == [
            "A0(4,4)+K2",
            "A2(3,2)",
            "-A2(3,2)",
            "A3(4,4)",
            "A4(3,3)",
        ]
        assert sum(spec_is_connected(s) for s in mates) == 4

    def test_friendship_two_triangles(self, catalog20):
        mates = cospectral_mates(CharTriple(1, 4, 5), catalog20)
        assert [display(s) for s in mates] == ["-A1(1,2)"]

    def test_mates_are_cospectral(self, catalog20):
        triple = CharTriple(0, 25, 12)
        polys = {char_poly(construct(s)) for s in cospectral_mates(triple, catalog20)}
        assert len(polys) == 1
        assert polys.pop() == triple.expected_charpoly()

    def test_reflection(self, catalog20):
        plus = cospectral_mates(CharTriple(1, 8, 5), catalog20)
        minus = cospectral_mates(CharTriple(-1, 8, 5), catalog20)
        assert [replace(s, negated=not s.negated) for s in minus] == plus

    def test_empty_answer(self, catalog20):
        assert cospectral_mates(CharTriple(0, 7, 10), catalog20) == []

    def test_bound_checked(self, catalog20):
        with pytest.raises(ValueError):
            cospectral_mates(CharTriple(0, 25, 30), catalog20)

    def test_arbitrarily_large_cospectral_sets(self):
        # matching joins on square parameter grids give ever-larger families
        catalog = build_catalog(2 ** 9 + 2)
        for k in range(1, 5):
            m = 2 ** k
            triple = CharTriple(0, 4 * m * m + 1, 2 ** (2 * k + 1) + 2)
            mates = cospectral_mates(triple, catalog)
            assert len(mates) >= k + 1


class TestDss:
    def test_a0_always(self, catalog20):
        assert all(e.dss for e in catalog20.entries if e.spec.family == "A0")

    def test_never_for_reducible_families(self, catalog20):
        for fam in ("A4", "A22", "AInf"):
            assert not any(e.dss for e in catalog20.entries if e.spec.family == fam)

    def test_padded_window(self, catalog20):
        for alpha in range(4):
            assert is_dss(FamilySpec("A2", (3, 3), pad=alpha), catalog20)
        assert not is_dss(FamilySpec("A2", (3, 3), pad=4), catalog20)

    def test_examples(self, catalog20):
        assert not is_dss(FamilySpec("A4", (1, 1)), catalog20)
        assert is_dss(FamilySpec("A0", (5, 3)), catalog20)

    def test_negated_spec_same_answer(self, catalog20):
        spec = FamilySpec("A0", (5, 3))
        assert is_dss(spec, catalog20) == is_dss(replace(spec, negated=True), catalog20)

    def test_bound_checked(self, catalog20):
        with pytest.raises(ValueError):
            is_dss(FamilySpec("A2", (3, 3), pad=10), catalog20)


class TestExports:
    def test_csv_shape(self, catalog20):
        lines = catalog_to_csv(catalog20).splitlines()
        assert lines[0] == "a,b,n,family,params,negated,cluster_id,position,dss"
        assert len(lines) == len(catalog20.entries) + 1

    def test_json_roundtrip(self, catalog20):
        assert catalog_from_json(catalog_to_json(catalog20)) == catalog20

    def test_markdown_clusters(self, catalog20):
        text = catalog_to_markdown(catalog20)
        assert text.count("## Cluster") == catalog20.entries[-1].cluster_id + 1
        assert "A0(4,4)" in text

    def test_byte_stable(self):
        a = build_catalog(12)
        b = build_catalog(12)
        assert catalog_to_csv(a) == catalog_to_csv(b)
        assert catalog_to_json(a) == catalog_to_json(b)
        assert catalog_to_markdown(a) == catalog_to_markdown(b)

    def test_checked_in_table_artifact(self, catalog20):
        path = Path(__file__).resolve().parent.parent / "docs" / "catalog-n20.md"
        assert path.exists(), "generated catalog artifact missing"
        assert path.read_text(encoding="utf-8") == catalog_to_markdown(catalog20)
