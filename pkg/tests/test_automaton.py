import random
from fractions import Fraction

import pytest

from regwa import (AtomKind, BOT, FinalRule, Guard, TransitionRule,
                   WeightedRegisterAutomaton, atom_candidates, difference,
                   fwa_weight)
from regwa import zoo

from oracle_utils import renaming_for, rename_word, words_over
from randgen import random_wra

EQ = AtomKind.EQUALITY
ORD = AtomKind.ORDERED
X = "x"


def w(*atoms, tag=X):
    return tuple((tag, a) for a in atoms)


def test_count_letters_validates():
    assert zoo.count_distinct_atoms().validate() == []
    assert zoo.count_distinct_atoms_split().validate() == []
    assert zoo.aba_abb_signed().validate() == []


def test_validate_flags_zero_weight():
    a = WeightedRegisterAutomaton(
        kind=EQ, k=1, controls=("c",), tags=(X,), initial=(("c", 1),),
        transitions=(TransitionRule("c", X, "c", Guard(), ("a",), 0),))
    diags = a.validate()
    assert len(diags) == 1 and "nonzero" in diags[0]


def test_validate_flags_lt_over_equality():
    a = WeightedRegisterAutomaton(
        kind=EQ, k=1, controls=("c",), tags=(X,), initial=(("c", 1),),
        transitions=(TransitionRule("c", X, "c", Guard((("lt", "r1", "a"),)), ("a",)),))
    diags = a.validate()
    assert len(diags) == 1 and "lt" in diags[0]


def test_validate_flags_bad_update_and_vars():
    a = WeightedRegisterAutomaton(
        kind=EQ, k=1, controls=("c",), tags=(X,), initial=(("c", 1),),
        transitions=(TransitionRule("c", X, "c", Guard((("eq", "r2", "a"),)), ("fresh",)),),
        finals=(FinalRule("c", Guard((("eq", "r1", "a"),))),))
    diags = a.validate()
    assert any("update" in d for d in diags)
    assert any("r2" in d for d in diags)
    assert any("input atom" in d for d in diags)


def test_step_count_letters():
    cl = zoo.count_distinct_atoms()
    start = ("wait", (BOT,))
    succ = dict(cl.step(start, (X, 5)))
    assert succ == {("wait", (BOT,)): 1, ("got", (5,)): 1}
    # equal atoms kill the keeper rule
    assert cl.step(("got", (5,)), (X, 5)) == []
    assert dict(cl.step(("got", (5,)), (X, 7))) == {("got", (5,)): 1}
    # unknown tag fires nothing
    assert cl.step(start, ("y", 5)) == []


def test_step_merges_parallel_rules():
    def build(rules):
        return WeightedRegisterAutomaton(
            kind=EQ, k=1, controls=("c", "d"), tags=(X,), initial=(("c", 1),),
            transitions=rules, finals=(FinalRule("d"),))

    split = build((TransitionRule("c", X, "d", Guard(), ("a",), 2),
                   TransitionRule("c", X, "d", Guard(), ("a",), 3)))
    merged = build((TransitionRule("c", X, "d", Guard(), ("a",), 5),))
    state = ("c", (BOT,))
    assert split.step(state, (X, 1)) == merged.step(state, (X, 1))
    for word in words_over((X,), (1, 2), 3):
        assert split.oracle_weight(word) == merged.oracle_weight(word)


def test_guard_bot_conventions():
    g_eq = Guard((("eq", "r1", "r2"),))
    g_neq = Guard((("neq", "r1", "r2"),))
    assert not g_eq.holds((BOT, BOT))          # comparisons with bot are false
    assert not g_neq.holds((BOT, 1))
    assert Guard((("is_bot", "r1"),)).holds((BOT,))
    assert not Guard((("not_bot", "r1"),)).holds((BOT,))


def test_oracle_weight_count_letters():
    cl = zoo.count_distinct_atoms()
    assert cl.oracle_weight(w(1, 2, 1)) == 2
    assert cl.oracle_weight(()) == 0
    assert cl.oracle_weight(w(1, 1, 1)) == 1
    assert cl.oracle_weight(w(1, 2, 3, 2)) == 3


def test_oracle_weight_signed_example():
    dnm = zoo.aba_abb_signed()
    assert dnm.oracle_weight(w(1, 2, 1)) == 1
    assert dnm.oracle_weight(w(1, 2, 2)) == -1
    assert dnm.oracle_weight(w(1, 2, 3)) == 0
    assert dnm.oracle_weight(w(1, 1, 1)) == 0
    assert dnm.oracle_weight(w(1, 2)) == 0
    assert dnm.oracle_weight(w(1, 2, 1, 2)) == 0


def test_configuration_examples():
    cl = zoo.count_distinct_atoms()
    empty = cl.configuration((), pool=(1, 2))
    assert dict(empty.items()) == {("wait", (BOT,)): 1}
    one = cl.configuration(w(1), pool=(1, 2))
    assert dict(one.items()) == {("wait", (BOT,)): 1, ("got", (1,)): 1}
    silent = WeightedRegisterAutomaton(kind=EQ, k=0, controls=("c",), tags=(X,),
                                       initial=())
    assert not silent.configuration(w(tag=X))
    with pytest.raises(ValueError):
        cl.configuration(w(9), pool=(1, 2))


def test_configuration_final_consistency_random():
    rng = random.Random(23)
    for _ in range(25):
        a = random_wra(rng)
        pool = (1, 2) if a.kind is EQ else (Fraction(1), Fraction(2))
        for word in words_over(a.tags, pool, 3):
            vec = a.configuration(word, pool=pool)
            total = sum((c * a.final_weight(s) for s, c in vec.items()), Fraction(0))
            assert total == a.oracle_weight(word)


def test_restrict_count_letters_single_atom():
    cl = zoo.count_distinct_atoms()
    m = cl.restrict((1,))
    assert len(m.states) == 4      # 2 controls x {bot, 1}
    assert fwa_weight(m, w(1)) == 1
    for word in words_over((X,), (1,), 3):
        assert fwa_weight(m, word) == cl.oracle_weight(word)


def test_restrict_empty_support():
    cl = zoo.count_distinct_atoms()
    m = cl.restrict(())
    assert len(m.states) == 2      # all-bot states only
    assert m.letters == ()
    assert fwa_weight(m, ()) == cl.oracle_weight(())


def test_restrict_state_count_k2():
    dnm = zoo.aba_abb_signed()
    m = dnm.restrict((1, 2, 3))
    assert len(m.states) == len(dnm.controls) * 16   # (3+1)^2 valuations


def test_restrict_soundness_random():
    rng = random.Random(71)
    for _ in range(12):
        a = random_wra(rng)
        pool = (1, 2) if a.kind is EQ else (Fraction(1), Fraction(2))
        m = a.restrict(pool)
        for word in words_over(a.tags, pool, 4):
            assert fwa_weight(m, word) == a.oracle_weight(word)


def test_oracle_weight_equivariance():
    rng = random.Random(13)
    for _ in range(20):
        a = random_wra(rng)
        pool = [1, 2, 3] if a.kind is EQ else [Fraction(1), Fraction(2), Fraction(3)]
        for _ in range(6):
            word = tuple((rng.choice(a.tags), rng.choice(pool))
                         for _ in range(rng.randint(0, 4)))
            atoms = {atom for _, atom in word}
            mapping = renaming_for(rng, a.kind, atoms)
            assert a.oracle_weight(word) == a.oracle_weight(rename_word(word, mapping))


def test_atom_candidates_matches_pointwise_guard():
    rng = random.Random(37)
    for _ in range(200):
        kind = rng.choice([EQ, ORD])
        a = random_wra(rng, kind=kind, n_controls=1, n_tags=1)
        atoms = [1, 2, 3, 4] if kind is EQ else [Fraction(i) for i in (1, 2, 3, 4)]
        regs = tuple(rng.choice(atoms + [BOT]) for _ in range(a.k))
        for rule in a.transitions:
            fast = atom_candidates(rule, regs, atoms)
            slow = [x for x in atoms if rule.guard.holds(regs, x)]
            assert fast == slow, (rule.guard, regs)


def test_difference_self_cancels():
    cl = zoo.count_distinct_atoms()
    d = difference(cl, cl)
    assert d.validate() == []
    for word in words_over((X,), (1, 2), 3):
        assert d.oracle_weight(word) == 0


def test_difference_scaled_finals():
    cl = zoo.count_distinct_atoms()
    d = difference(cl, zoo.with_scaled_finals(cl, 2))
    assert d.oracle_weight(w(1)) == -1


def test_difference_disjoint_tags():
    a = zoo.count_distinct_atoms(tag="x")
    b = zoo.count_distinct_atoms(tag="y")
    d = difference(a, b)
    assert set(d.tags) == {"x", "y"}
    assert d.oracle_weight(w(1, 2)) == a.oracle_weight(w(1, 2))
    assert d.oracle_weight((("y", 1), ("y", 2))) == -2


def test_difference_pads_registers():
    a = zoo.count_distinct_atoms()          # k=1
    b = zoo.aba_abb_signed()                # k=2
    d = difference(a, b)
    assert d.k == 2 and d.validate() == []
    assert d.oracle_weight(w(1, 2, 1)) == a.oracle_weight(w(1, 2, 1)) - 1


def test_difference_kind_mismatch():
    with pytest.raises(ValueError):
        difference(zoo.count_distinct_atoms(EQ), zoo.count_distinct_atoms(ORD))
