import numpy as np
import pytest

from signed_spectra import (
    FamilyParameterError,
    FamilySpec,
    SignedGraph,
    char_poly,
    construct,
    display,
    instances_up_to,
    is_sign_symmetric,
    is_switching_isomorphic,
    negate,
    parse_spec,
    predicted_triple,
    triple_of,
)
from signed_spectra.families import (
    FAMILY_IDS,
    order_of,
    spec_from_json_dict,
    spec_to_json_dict,
)
from signed_spectra.spectral import extract_pm1


class TestConstructionFidelity:
    def test_every_instance_matches_closed_form(self):
        # the central transcription check; the acceptance suite re-runs it at
        # order 24, so a moderate bound keeps this fast
        for spec in instances_up_to(14):
            assert triple_of(construct(spec)) == predicted_triple(spec), display(spec)

    def test_factorization_shape(self):
        for spec in instances_up_to(10):
            t = predicted_triple(spec)
            plus, minus, q = extract_pm1(char_poly(construct(spec)))
            assert q == t.quadratic()
            assert plus == t.mult_plus_one
            assert minus == t.mult_minus_one

    def test_literal_small_matrices(self):
        a022 = construct(FamilySpec("A0", (2, 2)))
        expected = np.array(
            [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, -1], [1, 1, -1, 0]], dtype=np.int8
        )
        assert np.array_equal(a022.adjacency, expected)

        ainf = construct(FamilySpec("AInf", (3, 3)))
        k3 = np.ones((3, 3), dtype=np.int8) - np.eye(3, dtype=np.int8)
        assert np.array_equal(ainf.adjacency[:3, :3], k3)
        assert np.array_equal(ainf.adjacency[3:, 3:], -k3)
        assert not ainf.adjacency[:3, 3:].any()

    def test_hexagon_is_bipartite_complement_of_matching(self):
        g = construct(FamilySpec("A22", (3,)))
        degrees = sorted(g.degrees().tolist())
        assert degrees == [2] * 6 and g.num_edges == 6


class TestTripleExamples:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            (FamilySpec("A3", (4, 4)), [0, 25, 10]),
            (FamilySpec("A6", (2, 4, 3)), [0, 25, 12]),
            (FamilySpec("A25", (3, 5), negated=True), [-1, 32, 13]),
            (FamilySpec("A0", (3, 2)), [1, 8, 5]),
            (FamilySpec("A12", (6, 6, 3, 3)), [0, 100, 18]),
            (FamilySpec("A12", (6, 3, 3, 6)), [0, 109, 18]),
            (FamilySpec("A12", (6, 4, 3, 4)), [-1, 92, 17]),
            (FamilySpec("A5", (3, 8, 2)), [7, 32, 13]),
            (FamilySpec("A1", (1, 2)), [-1, 4, 5]),
            (FamilySpec("A20", (2, 2)), [2, 7, 6]),
        ],
    )
    def test_predicted(self, spec, expected):
        assert predicted_triple(spec).as_list() == expected

    def test_negation_flips_a(self):
        for spec in instances_up_to(12):
            t = predicted_triple(spec)
            flipped = FamilySpec(spec.family, spec.params, negated=not spec.negated)
            assert predicted_triple(flipped).as_list() == [-t.a, t.b, t.n]

    def test_pad_extends_order(self):
        spec = FamilySpec("A2", (3, 3), pad=3)
        assert predicted_triple(spec).as_list() == [0, 37, 18]
        assert order_of(spec) == 18


class TestRestrictions:
    @pytest.mark.parametrize(
        "family,params",
        [
            ("A0", (2, 3)),
            ("A0", (1, 1)),
            ("A1", (0, 2)),
            ("A1", (1, 1)),
            ("A2", (1, 2)),
            ("A5", (3, 7, 1)),
            ("A5", (3, 8, 0)),
            ("A6", (0, 3, 4)),
            ("A6", (1, 3, 3)),
            ("A10", (3, 3)),
            ("A12", (4, 4, 4, 3)),
            ("A20", (1, 2)),
            ("A22", (2,)),
            ("AInf", (3, 2)),
        ],
    )
    def test_violations_raise(self, family, params):
        with pytest.raises(FamilyParameterError):
            FamilySpec(family, params)

    def test_arity_mismatch(self):
        with pytest.raises(FamilyParameterError):
            FamilySpec("A0", (2,))
        with pytest.raises(FamilyParameterError):
            FamilySpec("A16", (1,))

    def test_unknown_family(self):
        with pytest.raises(FamilyParameterError):
            FamilySpec("A26", ())

    def test_error_reports_family_and_params(self):
        with pytest.raises(FamilyParameterError, match=r"A0.*2, 3"):
            FamilySpec("A0", (2, 3))


class TestEnumeration:
    def test_small_bound_contents(self):
        specs = instances_up_to(5)
        names = {display(s) for s in specs}
        assert {"A0(3,2)", "A0(2,2)"} <= names

    def test_eleven_specs_share_b25(self):
        specs = [s for s in instances_up_to(14) if predicted_triple(s).b == 25 and predicted_triple(s).a == 0]
        assert len(specs) == 11

    def test_order_four_excludes_big_rows(self):
        families_seen = {s.family for s in instances_up_to(4)}
        assert families_seen.isdisjoint({f"A{i}" for i in range(5, 20)})

    def test_bounds_validated(self):
        with pytest.raises(ValueError):
            instances_up_to(3)
        with pytest.raises(ValueError):
            instances_up_to(2000)

    def test_all_orders_within_bound(self):
        for spec in instances_up_to(12):
            assert order_of(spec) <= 12

    def test_no_duplicates(self):
        specs = instances_up_to(16)
        assert len(specs) == len(set(specs))

    def test_family_ids_complete(self):
        assert len(FAMILY_IDS) == 27
        assert FAMILY_IDS[0] == "A0" and FAMILY_IDS[-1] == "AInf"


class TestSignSymmetry:
    def test_examples(self):
        assert is_sign_symmetric(FamilySpec("A2", (2, 2)))
        assert not is_sign_symmetric(FamilySpec("A2", (3, 2)))
        assert is_sign_symmetric(FamilySpec("A0", (4, 4)))
        assert not is_sign_symmetric(FamilySpec("A0", (4, 2)))  # a != 0
        assert not is_sign_symmetric(FamilySpec("A1", (2, 3)))
        assert not is_sign_symmetric(FamilySpec("A13", (5, 3)))

    def test_padded_rejected(self):
        with pytest.raises(ValueError):
            is_sign_symmetric(FamilySpec("A2", (2, 2), pad=1))


class TestDuplicateTriplePair:
    def test_a10_pair_distinct_classes(self):
        g = construct(FamilySpec("A10", (3, 4)))
        h = construct(FamilySpec("A10", (4, 3)))
        assert triple_of(g) == triple_of(h)
        assert char_poly(g) == char_poly(h)
        assert not is_switching_isomorphic(g, h)


class TestDisplayParse:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("A0(3,2)", FamilySpec("A0", (3, 2))),
            ("-A3(4,4)+2K2", FamilySpec("A3", (4, 4), negated=True, pad=2)),
            ("−A3(4,4)+2K2", FamilySpec("A3", (4, 4), negated=True, pad=2)),
            ("A0(4,4) + K2", FamilySpec("A0", (4, 4), pad=1)),
            ("Ainf(4,3)", FamilySpec("AInf", (4, 3))),
            ("A∞(4,3)", FamilySpec("AInf", (4, 3))),
            ("A16", FamilySpec("A16", ())),
            (" A6( 2 , 4 , 3 )", FamilySpec("A6", (2, 4, 3))),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_spec(text) == expected

    def test_roundtrip(self):
        for spec in instances_up_to(12):
            assert parse_spec(display(spec)) == spec

    def test_parse_rejects_garbage(self):
        for text in ("B0(1)", "A0[3,2]", "A0(3,2)+K3", ""):
            with pytest.raises(ValueError):
                parse_spec(text)

    def test_json_roundtrip(self):
        spec = FamilySpec("A3", (4, 4), negated=True, pad=1)
        data = spec_to_json_dict(spec)
        assert data == {"id": "A3", "params": [4, 4], "negated": True, "pad": 1}
        assert spec_from_json_dict(data) == spec


class TestNegationClassIdentities:
    def test_matching_join_with_trivial_block_is_negated_a1(self):
        # [[R_2k, J], [J, -R_2]] and the negative of A1(2, k) are the same
        # switching class; the catalog relies on this normal form
        for k in (2, 3):
            top = np.eye(2 * k, dtype=np.int8)[::-1]
            bottom = -np.eye(2, dtype=np.int8)[::-1]
            adj = np.zeros((2 * k + 2, 2 * k + 2), dtype=np.int8)
            adj[: 2 * k, : 2 * k] = top
            adj[2 * k :, 2 * k :] = bottom
            adj[: 2 * k, 2 * k :] = 1
            adj[2 * k :, : 2 * k] = 1
            g = SignedGraph(adj)
            assert is_switching_isomorphic(g, negate(construct(FamilySpec("A1", (2, k)))))
