"""Filters, spectra, radical, and quotient constructions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reslat.enumerator import corpus_up_to
from reslat.filters import (
    Filter,
    MixedAlgebras,
    NotAFilter,
    NotNested,
    all_filters,
    filter_image,
    filter_join,
    filter_meet,
    generated_filter,
    is_filter_set,
    principal_filter,
    quotient,
    radical,
    second_isomorphism_check,
    spectra,
)
from reslat.isomorphism import is_isomorphic

CORPUS4 = corpus_up_to(4)


class TestFilterEnumeration:
    def test_matches_subset_scan_on_fixtures(self, godel3, lukasiewicz3, bool4, ex5):
        for a in (godel3, lukasiewicz3, bool4, ex5):
            got = [f.members for f in all_filters(a)]
            assert got == oracles.filter_subsets(a.join, a.mult)

    def test_matches_subset_scan_on_small_corpus(self):
        for a in CORPUS4:
            got = [f.members for f in all_filters(a)]
            assert got == oracles.filter_subsets(a.join, a.mult)

    def test_frozen_counts(self, godel3, lukasiewicz3, bool4, ex5):
        assert len(all_filters(godel3)) == 3
        assert len(all_filters(lukasiewicz3)) == 2
        assert len(all_filters(bool4)) == 4
        assert len(all_filters(ex5)) == 5

    def test_ordering_and_generators(self, ex5):
        fl = all_filters(ex5)
        assert [sorted(f.members) for f in fl] == [
            [4], [3, 4], [1, 3, 4], [2, 3, 4], [0, 1, 2, 3, 4],
        ]
        for f in fl:
            assert f.members == ex5.upset(f.generator)

    def test_proper_flag(self, godel3):
        fl = all_filters(godel3)
        assert [f.proper for f in fl] == [True, True, False]


class TestPrincipalAndGenerated:
    def test_principal_uses_stable_power(self, lukasiewicz3):
        # 1*1 = 0, so the filter of 1 is everything
        assert principal_filter(lukasiewicz3, 1).members == frozenset({0, 1, 2})
        assert principal_filter(lukasiewicz3, 2).members == frozenset({2})

    def test_principal_on_idempotents_is_upset(self, ex5):
        for x in ex5.elements:
            assert principal_filter(ex5, x).members == ex5.upset(x)

    def test_generated_empty_gives_top_only(self, bool4):
        assert generated_filter(bool4, ()).members == frozenset({3})

    def test_generated_pair(self, bool4):
        assert generated_filter(bool4, (1, 2)).members == frozenset({0, 1, 2, 3})

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_generated_is_smallest_containing_filter(self, data):
        a = data.draw(st.sampled_from(CORPUS4))
        gens = data.draw(
            st.lists(st.integers(0, a.size - 1), min_size=0, max_size=3)
        )
        f = generated_filter(a, tuple(gens))
        candidates = [
            s
            for s in oracles.filter_subsets(a.join, a.mult)
            if set(gens) <= s
        ]
        assert f.members == min(candidates, key=len)

    def test_is_filter_set(self, ex5):
        assert is_filter_set(ex5, frozenset({3, 4}))
        assert not is_filter_set(ex5, frozenset({1, 4}))
        assert not is_filter_set(ex5, frozenset({0, 1}))


class TestLatticeOperations:
    def test_meet_is_intersection(self, ex5):
        f = principal_filter(ex5, 1)
        g = principal_filter(ex5, 2)
        assert filter_meet(f, g).members == frozenset({3, 4})

    def test_join_uses_product_generator(self, ex5):
        f = principal_filter(ex5, 1)
        g = principal_filter(ex5, 2)
        assert filter_join(f, g).members == frozenset(range(5))

    def test_mixed_algebras_rejected(self, godel3, ex5):
        with pytest.raises(MixedAlgebras):
            filter_meet(principal_filter(godel3, 1), principal_filter(ex5, 1))


class TestSpectra:
    def test_ex5(self, ex5):
        sp = spectra(ex5)
        assert [sorted(f.members) for f in sp.prime] == [
            [4], [1, 3, 4], [2, 3, 4],
        ]
        assert [sorted(f.members) for f in sp.maximal] == [
            [1, 3, 4], [2, 3, 4],
        ]

    def test_chains_have_all_proper_filters_prime(self, godel3, lukasiewicz3):
        for a in (godel3, lukasiewicz3):
            sp = spectra(a)
            proper = [f for f in all_filters(a) if f.proper]
            assert list(sp.prime) == proper

    def test_bool4(self, bool4):
        sp = spectra(bool4)
        assert [sorted(f.members) for f in sp.prime] == [[1, 3], [2, 3]]
        assert sp.prime == sp.maximal

    def test_radical_frozen(self, godel3, lukasiewicz3, bool4, ex5):
        assert radical(godel3).members == frozenset({1, 2})
        assert radical(lukasiewicz3).members == frozenset({2})
        assert radical(bool4).members == frozenset({3})
        assert radical(ex5).members == frozenset({3, 4})

    def test_radical_of_trivial(self):
        from reslat.algebra import validate_algebra

        a = validate_algebra(1, ((0,),), ((0,),))
        assert radical(a).members == frozenset({0})


class TestQuotients:
    def test_quotient_by_radical_is_boolean_four(self, ex5, bool4):
        qp = quotient(ex5, radical(ex5))
        assert qp.algebra.size == 4
        assert qp.class_of == (0, 1, 2, 3, 3)
        assert qp.representatives == (0, 1, 2, 3)
        assert qp.classes == (
            frozenset({0}),
            frozenset({1}),
            frozenset({2}),
            frozenset({3, 4}),
        )
        assert is_isomorphic(qp.algebra, bool4)

    def test_quotient_by_top_filter_is_identity(self, ex5):
        qp = quotient(ex5, principal_filter(ex5, ex5.top))
        assert qp.algebra.size == ex5.size
        assert is_isomorphic(qp.algebra, ex5)

    def test_quotient_by_whole_algebra_is_trivial(self, ex5):
        qp = quotient(ex5, principal_filter(ex5, 0))
        assert qp.algebra.size == 1

    def test_quotient_labels_follow_representatives(self, ex5):
        qp = quotient(ex5, radical(ex5))
        assert qp.algebra.labels == ("0", "a", "b", "c")

    def test_quotient_rejects_foreign_filter(self, godel3, ex5):
        with pytest.raises(MixedAlgebras):
            quotient(ex5, principal_filter(godel3, 1))

    def test_quotient_rejects_non_filter(self, ex5):
        fake = Filter(algebra=ex5, members=frozenset({1, 4}), generator=1)
        with pytest.raises(NotAFilter):
            quotient(ex5, fake)

    def test_filter_image(self, ex5):
        qp = quotient(ex5, principal_filter(ex5, 3))
        img = filter_image(qp, principal_filter(ex5, 1))
        assert img.members == frozenset({1, 3})

    def test_second_isomorphism(self, ex5):
        fl = all_filters(ex5)
        for f in fl:
            for g in fl:
                if f.members <= g.members:
                    assert second_isomorphism_check(ex5, f, g)

    def test_second_isomorphism_rejects_unnested(self, ex5):
        f = principal_filter(ex5, 1)
        g = principal_filter(ex5, 2)
        with pytest.raises(NotNested):
            second_isomorphism_check(ex5, f, g)
