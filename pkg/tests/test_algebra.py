"""Core algebra validation and element classification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reslat.algebra import (
    ImpMismatch,
    InternalCheckFailed,
    MalformedInput,
    NotALattice,
    NotAMonoid,
    NotResiduated,
    ValidationFailed,
    booleans,
    check_tables,
    element_classes,
    mult_all,
    nilpotents,
    validate_algebra,
)
from reslat.enumerator import corpus_up_to

CHAIN3_JOIN = ((0, 1, 2), (1, 1, 2), (2, 2, 2))
GODEL3_MULT = ((0, 0, 0), (0, 1, 1), (0, 1, 2))
LUK3_MULT = ((0, 0, 0), (0, 0, 1), (0, 1, 2))

# M3: three incomparable atoms under a shared top.  The meet operation is
# not residuated here because the solution set for atom->atom has no max.
M3_JOIN = (
    (0, 1, 2, 3, 4),
    (1, 1, 4, 4, 4),
    (2, 4, 2, 4, 4),
    (3, 4, 4, 3, 4),
    (4, 4, 4, 4, 4),
)
M3_MEET = (
    (0, 0, 0, 0, 0),
    (0, 1, 0, 0, 1),
    (0, 0, 2, 0, 2),
    (0, 0, 0, 3, 3),
    (0, 1, 2, 3, 4),
)

CORPUS4 = corpus_up_to(4)


class TestValidation:
    def test_bad_size(self):
        with pytest.raises(MalformedInput):
            validate_algebra(0, (), ())
        with pytest.raises(MalformedInput):
            validate_algebra("3", CHAIN3_JOIN, GODEL3_MULT)

    def test_ragged_table(self):
        with pytest.raises(MalformedInput):
            validate_algebra(3, ((0, 1, 2), (1, 1), (2, 2, 2)), GODEL3_MULT)

    def test_entry_out_of_range(self):
        with pytest.raises(MalformedInput):
            validate_algebra(3, ((0, 1, 9), (1, 1, 2), (2, 2, 2)), GODEL3_MULT)

    def test_join_not_idempotent(self):
        with pytest.raises(NotALattice):
            validate_algebra(3, ((1, 1, 2), (1, 1, 2), (2, 2, 2)), GODEL3_MULT)

    def test_top_must_be_identity(self):
        bad_mult = ((0, 0, 0), (0, 1, 1), (0, 1, 0))
        with pytest.raises(NotAMonoid):
            validate_algebra(3, CHAIN3_JOIN, bad_mult)

    def test_mult_not_associative(self):
        # commutative with identity, but (0*0)*1 = 0 while 0*(0*1) = 1
        bad = ((1, 0, 0), (0, 0, 1), (0, 1, 2))
        with pytest.raises(NotAMonoid):
            validate_algebra(3, CHAIN3_JOIN, bad)

    def test_meet_as_mult_fails_on_m3(self):
        with pytest.raises(NotResiduated):
            validate_algebra(5, M3_JOIN, M3_MEET)

    def test_imp_mismatch(self):
        luk_imp = ((2, 2, 2), (1, 2, 2), (0, 1, 2))
        with pytest.raises(ImpMismatch):
            validate_algebra(3, CHAIN3_JOIN, GODEL3_MULT, imp=luk_imp)

    def test_imp_accepted_when_correct(self):
        godel_imp = ((2, 2, 2), (0, 2, 2), (0, 1, 2))
        a = validate_algebra(3, CHAIN3_JOIN, GODEL3_MULT, imp=godel_imp)
        assert a.imp == godel_imp

    def test_labels_must_be_distinct(self):
        with pytest.raises(MalformedInput):
            validate_algebra(3, CHAIN3_JOIN, GODEL3_MULT, labels=("a", "a", "b"))
        with pytest.raises(MalformedInput):
            validate_algebra(3, CHAIN3_JOIN, GODEL3_MULT, labels=("a", "b"))

    def test_check_tables_collects_without_raising(self):
        bad_mult = ((0, 0, 0), (0, 1, 1), (0, 1, 0))
        kinds = {v.axiom for v in check_tables(3, CHAIN3_JOIN, bad_mult)}
        assert "top-not-identity" in kinds
        assert check_tables(3, CHAIN3_JOIN, GODEL3_MULT) == []

    def test_trivial_algebra(self):
        a = validate_algebra(1, ((0,),), ((0,),))
        assert a.trivial
        assert a.top == a.bottom == 0


class TestDerivedStructure:
    def test_meet_and_order_on_chain(self, godel3):
        assert godel3.meet == ((0, 0, 0), (0, 1, 1), (0, 1, 2))
        assert godel3.is_le(0, 2) and not godel3.is_le(2, 1)
        assert godel3.is_chain()

    def test_imp_tables(self, godel3, lukasiewicz3):
        assert godel3.imp == ((2, 2, 2), (0, 2, 2), (0, 1, 2))
        assert lukasiewicz3.imp == ((2, 2, 2), (1, 2, 2), (0, 1, 2))

    def test_negation(self, ex5):
        assert [ex5.neg(x) for x in ex5.elements] == [4, 2, 1, 0, 0]

    def test_biresiduum_symmetric(self, ex5):
        for x in ex5.elements:
            assert ex5.biresiduum(x, x) == ex5.top
            for y in ex5.elements:
                assert ex5.biresiduum(x, y) == ex5.biresiduum(y, x)

    def test_powers(self, lukasiewicz3):
        assert lukasiewicz3.power(1, 0) == 2
        assert lukasiewicz3.power(1, 1) == 1
        assert lukasiewicz3.power(1, 2) == 0
        assert lukasiewicz3.stable_power(1) == 0

    def test_upset_downset(self, bool4):
        assert bool4.upset(1) == frozenset({1, 3})
        assert bool4.downset(2) == frozenset({0, 2})
        assert not bool4.is_chain()

    def test_labels(self, ex5):
        assert ex5.labels == ("0", "a", "b", "c", "1")
        assert ex5.label(3) == "c"
        assert ex5.label_set({0, 4}) == "{0, 1}"

    def test_unlabeled_label_falls_back_to_index(self):
        a = validate_algebra(3, CHAIN3_JOIN, GODEL3_MULT)
        assert a.label(1) == "1"

    def test_mult_all(self, lukasiewicz3):
        assert mult_all(lukasiewicz3, []) == 2
        assert mult_all(lukasiewicz3, [1, 1]) == 0
        assert mult_all(lukasiewicz3, [2, 1]) == 1


class TestElementClasses:
    def test_godel3(self, godel3):
        c = element_classes(godel3)
        assert c.booleans == frozenset({0, 2})
        assert c.nilpotents == frozenset({0})
        assert c.dense == frozenset({1, 2})
        assert c.regular == frozenset({0, 2})
        assert c.idempotents == frozenset({0, 1, 2})
        assert c.archimedeans == frozenset({0, 2})
        assert c.mult_is_meet and not c.involutive

    def test_lukasiewicz3(self, lukasiewicz3):
        c = element_classes(lukasiewicz3)
        assert c.booleans == frozenset({0, 2})
        assert c.nilpotents == frozenset({0, 1})
        assert c.dense == frozenset({2})
        assert c.regular == frozenset({0, 1, 2})
        assert c.idempotents == frozenset({0, 2})
        assert c.archimedeans == frozenset({0, 1, 2})
        assert c.involutive and not c.mult_is_meet

    def test_bool4(self, bool4):
        c = element_classes(bool4)
        assert c.booleans == frozenset({0, 1, 2, 3})
        assert c.nilpotents == frozenset({0})
        assert c.dense == frozenset({3})
        assert c.regular == frozenset({0, 1, 2, 3})
        assert c.mult_is_meet and c.involutive

    def test_ex5(self, ex5):
        c = element_classes(ex5)
        assert c.booleans == frozenset({0, 4})
        assert c.nilpotents == frozenset({0})
        assert c.dense == frozenset({3, 4})
        assert c.regular == frozenset({0, 1, 2, 4})
        assert c.idempotents == frozenset(range(5))
        assert c.archimedeans == frozenset({0, 4})
        assert c.mult_is_meet and not c.involutive

    def test_shortcuts(self, ex5):
        assert booleans(ex5) == frozenset({0, 4})
        assert nilpotents(ex5) == frozenset({0})


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_stable_power_matches_cycle_oracle(data):
    a = data.draw(st.sampled_from(CORPUS4))
    x = data.draw(st.integers(0, a.size - 1))
    seq = oracles.powers_until_cycle(a.mult, a.top, x)
    assert a.stable_power(x) == seq[-1]
    # every power from the stabilization point on is the same value
    assert a.power(x, a.size + 3) == seq[-1]


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_le_agrees_with_join_oracle(data):
    a = data.draw(st.sampled_from(CORPUS4))
    le = oracles.le_from_join(a.join)
    assert [list(row) for row in a.le] == le


def test_internal_check_failed_is_algebra_error():
    assert issubclass(InternalCheckFailed, Exception)
    assert issubclass(ValidationFailed, Exception)
