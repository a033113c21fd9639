import itertools
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from symlattice.rules import (
    ALL_RULES,
    NonAssociativeError,
    RuleId,
    SequenceTooLongError,
    achievable_results,
    apply_rule,
    assoc_fold,
    bounded_sequences,
    evaluate,
    fulfills_associativity,
    is_cancelling,
    more_discriminating,
    parse_sequence,
    refinement_witness,
    rule_deletions,
    rule_refines,
    strong_deletions,
    weak_deletions,
)
from symlattice.scale import sym_max

WORKED = (3, 3, 3, 2, 1, 0, -2, -3, -3)


def tree_values(seq):
    """Every value of every bracketing of every ordering (independent of the library)."""

    @lru_cache(maxsize=None)
    def brackets(items):
        if len(items) == 1:
            return frozenset(items)
        out = set()
        for cut in range(1, len(items)):
            for a in brackets(items[:cut]):
                for b in brackets(items[cut:]):
                    out.add(sym_max(a, b))
        return frozenset(out)

    return set().union(*(brackets(p) for p in set(itertools.permutations(seq))))


def multiset(seq, idx):
    return sorted(seq[i] for i in idx)


def test_parse_sequence():
    assert parse_sequence("3,-2, 1") == (3, -2, 1)
    assert parse_sequence("") == ()
    with pytest.raises(ValueError):
        parse_sequence("3,x")


@pytest.mark.parametrize("seq,want", [((3, 2, 1), True), ((3, 1, -3), False), ((3, -3), True), ((0, 0, 0), True)])
def test_fulfills_associativity(seq, want):
    assert fulfills_associativity(seq) is want


def test_assoc_fold():
    assert assoc_fold([]) == 0
    assert assoc_fold([3, 2, 1]) == 3
    assert assoc_fold([-3, -1, 2]) == -3
    assert tree_values((-3, -1, 2)) == {-3}
    with pytest.raises(NonAssociativeError):
        assoc_fold([3, 1, -3])


def test_worked_sequence():
    got = {r: apply_rule(r, WORKED).result for r in ALL_RULES}
    assert got == {
        RuleId.WEAK: 1,
        RuleId.STRONG: 3,
        RuleId.PESSIMISTIC: -3,
        RuleId.OPTIMISTIC: 3,
        RuleId.SPLITTING: 0,
    }
    assert all(v in achievable_results(WORKED, bound=9) for v in got.values())


def test_worked_deletion_sets():
    assert multiset(WORKED, weak_deletions(WORKED)) == sorted([3, 3, 3, 2, -2, -3, -3])
    assert multiset(WORKED, strong_deletions(WORKED)) == sorted([3, -3, 3, -3])


def test_small_deletion_sets():
    assert weak_deletions((3, 2, 1)) == frozenset()
    assert strong_deletions((3, 2, 1)) == frozenset()
    assert multiset((3, -3, 1), strong_deletions((3, -3, 1))) == [-3, 3]
    # the loop stops only once associativity holds, and nothing is left here
    assert weak_deletions((3, -3, 3)) == frozenset({0, 1, 2})


def test_empty_sequence():
    for r in ALL_RULES:
        out = apply_rule(r, ())
        assert out.deleted == frozenset() and out.result == 0


def test_rule_names():
    assert RuleId.from_name(" Weak ") is RuleId.WEAK
    with pytest.raises(ValueError, match="choose from"):
        RuleId.from_name("median")


def test_achievable_examples():
    assert achievable_results((3, 1, -3)) == {0, 1}
    assert achievable_results((2, -1)) == {2}
    assert {2, 3, -3} <= achievable_results((3, -3, 3, -3, 2))
    with pytest.raises(SequenceTooLongError):
        achievable_results((1,) * 9)


def test_achievable_matches_tree_oracle():
    for seq in bounded_sequences(4, 2):
        if seq:
            assert achievable_results(seq) == tree_values(seq), seq


def test_lone_extreme_only_cancels():
    seq = (3, -3, -3, -3)
    assert achievable_results(seq) == {0, -3}
    assert evaluate(RuleId.OPTIMISTIC, seq) == 0
    assert evaluate(RuleId.PESSIMISTIC, seq) == -3


def test_every_rule_is_realizable():
    for seq in bounded_sequences(4, 3):
        reach = achievable_results(seq)
        for r in ALL_RULES:
            out = apply_rule(r, seq)
            assert fulfills_associativity(out.kept(seq))
            assert out.result in reach, (r, seq)


def test_refinement_examples():
    assert rule_refines(RuleId.SPLITTING, RuleId.WEAK)
    assert rule_refines(RuleId.WEAK, RuleId.STRONG)
    assert not rule_refines(RuleId.STRONG, RuleId.WEAK)
    w = refinement_witness(RuleId.STRONG, RuleId.WEAK, 3, 3)
    assert w is not None and not strong_deletions(w) >= weak_deletions(w)
    assert not strong_deletions((3, 3, -3)) >= weak_deletions((3, 3, -3))


def test_cancelling():
    assert is_cancelling(RuleId.SPLITTING, (3, 1, -3))
    assert not is_cancelling(RuleId.STRONG, (3, 1, -3))
    assert more_discriminating(RuleId.STRONG, RuleId.SPLITTING, 4, 3)
    assert not more_discriminating(RuleId.SPLITTING, RuleId.STRONG, 4, 3)


def test_weak_is_not_isotone():
    assert evaluate(RuleId.WEAK, (-3, 3, 1)) == 1
    assert evaluate(RuleId.WEAK, (-3, 3, 3)) == 0


def test_non_lattice_witness():
    seq = (3, 3, 3, 2, 1, -2, -3, -3, -3)
    assert multiset(seq, rule_deletions(RuleId.OPTIMISTIC, seq)) == sorted([3, 3, -3, -3, -3])
    assert multiset(seq, rule_deletions(RuleId.PESSIMISTIC, seq)) == sorted([3, 3, 3, -3, -3])


seqs = st.lists(st.integers(-3, 3), max_size=7).map(tuple)


@given(seqs, st.sampled_from(ALL_RULES))
def test_result_between_extremes(seq, rule):
    res = evaluate(rule, seq)
    assert res == apply_rule(rule, seq).result
    if seq:
        assert min(seq) <= res <= max(seq)


@given(seqs, st.data())
def test_splitting_and_strong_isotone(seq, data):
    if not seq:
        return
    i = data.draw(st.integers(0, len(seq) - 1))
    up = seq[:i] + (data.draw(st.integers(seq[i], 3)),) + seq[i + 1:]
    for r in (RuleId.SPLITTING, RuleId.STRONG):
        assert evaluate(r, seq) <= evaluate(r, up)


@given(seqs)
def test_magnitude_ordering(seq):
    s, w, z = (abs(evaluate(r, seq)) for r in (RuleId.STRONG, RuleId.WEAK, RuleId.SPLITTING))
    assert s >= w >= z
    assert all(z <= abs(evaluate(r, seq)) for r in ALL_RULES)


@given(seqs, st.integers(-3, 3))
def test_splitting_append(seq, b):
    old, new = evaluate(RuleId.SPLITTING, seq), evaluate(RuleId.SPLITTING, seq + (b,))
    assert new == 0 or abs(new) >= abs(old)


@given(seqs, st.sampled_from(ALL_RULES))
def test_result_invariant_under_permutation(seq, rule):
    # every rule looks at values, not at positions
    assert evaluate(rule, seq) == evaluate(rule, tuple(sorted(seq)))
