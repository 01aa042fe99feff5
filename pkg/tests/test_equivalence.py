import random

import pytest

from relpat.core import Alphabet, Constraint, Mode
from relpat.equivalence import (
    EquivalencePreconditionError,
    MixedRelationKindsError,
    closure,
    ne_equivalent,
    normalize,
)
from relpat.relations import RelationKind as K
from relpat.semantics import bounded_equal

from helpers import DECIDABLE_EQUIV_KINDS, make_rp, random_relational_pattern


def blocks(*groups):
    return frozenset(frozenset(g) for g in groups)


def test_closure_transitivity():
    rp = make_rp((1, 2, 3), {Constraint(K.EQ, 1, 2), Constraint(K.EQ, 2, 3)})
    assert closure(rp) == blocks({1, 2, 3})


def test_closure_reflexive_singletons():
    rp = make_rp((1, 2))
    assert closure(rp) == blocks({1}, {2})


def test_closure_symmetry():
    rp = make_rp((1, 2), {Constraint(K.ABELIAN_EQ, 2, 1)})
    assert closure(rp) == blocks({1, 2})


def test_closure_rejects_mixed_kinds():
    rp = make_rp((1, 2, 3), {Constraint(K.EQ, 1, 2), Constraint(K.ABELIAN_EQ, 2, 3)})
    with pytest.raises(MixedRelationKindsError):
        closure(rp)


def test_normalize_renumbers_by_first_occurrence():
    rp = make_rp((7, "a", 2), {Constraint(K.EQ, 7, 2)})
    normalized = normalize(rp)
    assert normalized.symbols == (1, "a", 2)
    assert normalized.constraints == {Constraint(K.EQ, 1, 2)}


def test_normalize_identity_on_normal_patterns():
    rp = make_rp((1, "a", 2))
    assert normalize(rp) is rp


def test_normalize_preserves_bounded_language():
    rng = random.Random(21)
    for _ in range(20):
        rp = random_relational_pattern(rng, kinds=DECIDABLE_EQUIV_KINDS, max_vars=4)
        scrambled = make_rp(
            tuple(s + 10 if isinstance(s, int) else s for s in rp.symbols),
            {Constraint(k, l + 10, r + 10) for k, l, r in rp.constraints},
            rp.alphabet,
        )
        assert bounded_equal(rp, normalize(scrambled), Mode.NE, len(rp.symbols) + 3)


def test_ne_equivalent_reflexive():
    rp = make_rp((1, "a", 2), {Constraint(K.ABELIAN_EQ, 1, 2)})
    assert ne_equivalent(rp, rp)


def test_ne_equivalent_detects_constraint_difference():
    constrained = make_rp((1, "a", 2), {Constraint(K.ABELIAN_EQ, 1, 2)})
    free = make_rp((1, "a", 2))
    assert not ne_equivalent(constrained, free)
    # the bounded oracle exhibits the separating word
    assert not bounded_equal(constrained, free, Mode.NE, 8)


def test_ne_equivalent_symmetric_closure_equal():
    a = make_rp((1, "a", 2), {Constraint(K.EQ, 1, 2)})
    b = make_rp((1, "a", 2), {Constraint(K.EQ, 2, 1)})
    assert ne_equivalent(a, b)


def test_ne_equivalent_rejects_unsupported_kinds():
    for kind in (K.REVERSAL, K.LEN_EQ, K.SUBSEQ, K.ALPHA_PERM, K.COM_STAR, K.STAR):
        rp = make_rp((1, 2), {Constraint(kind, 1, 2)})
        with pytest.raises(EquivalencePreconditionError):
            ne_equivalent(rp, rp)


def test_ne_equivalent_rejects_unary_alphabet():
    unary = Alphabet.of("a")
    rp = make_rp((1, 2), alphabet=unary)
    with pytest.raises(EquivalencePreconditionError):
        ne_equivalent(rp, rp)


def test_ne_equivalent_rejects_kind_mismatch():
    a = make_rp((1, 2), {Constraint(K.EQ, 1, 2)})
    b = make_rp((1, 2), {Constraint(K.ABELIAN_EQ, 1, 2)})
    with pytest.raises(EquivalencePreconditionError):
        ne_equivalent(a, b)


def test_ne_equivalent_is_equivalence_relation():
    rng = random.Random(22)
    patterns = [
        random_relational_pattern(rng, kinds=[K.ABELIAN_EQ], max_vars=3)
        for _ in range(12)
    ]
    for a in patterns:
        assert ne_equivalent(a, a)
        for b in patterns:
            assert ne_equivalent(a, b) == ne_equivalent(b, a)
            for c in patterns:
                if ne_equivalent(a, b) and ne_equivalent(b, c):
                    assert ne_equivalent(a, c)


def test_agreement_with_bounded_oracle_both_directions():
    rng = random.Random(23)
    equivalent_seen = different_seen = 0
    for _ in range(120):
        kind = rng.choice(list(DECIDABLE_EQUIV_KINDS))
        a = random_relational_pattern(rng, kinds=[kind], max_vars=4)
        if rng.random() < 0.5:
            b = random_relational_pattern(rng, kinds=[kind], max_vars=4)
        else:
            b = make_rp(
                a.symbols,
                {Constraint(k, r, l) for k, l, r in a.constraints},
                a.alphabet,
            )
        bound = max(len(a.symbols), len(b.symbols)) + 3
        fast = ne_equivalent(a, b)
        assert fast == bounded_equal(a, b, Mode.NE, bound)
        equivalent_seen += fast
        different_seen += not fast
    assert equivalent_seen and different_seen
