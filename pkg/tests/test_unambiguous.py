import random
from fractions import Fraction

import pytest

from regwa import (AcceptRule, AtomKind, Guard, NondetRegisterAutomaton,
                   NondetTransition, accepts, check_ambiguity_sampled,
                   count_accepting_runs, to_counting_weighted, unamb_equiv)
from regwa import zoo

from oracle_utils import words_over
from randgen import random_det_nondet

EQ = AtomKind.EQUALITY
X = "x"


def w(*atoms, tag=X):
    return tuple((tag, a) for a in atoms)


def duplicated_branch():
    """Two parallel unguarded paths to acceptance: ambiguous on every word."""
    return NondetRegisterAutomaton(
        kind=EQ, k=1, controls=("s", "p", "q"), tags=(X,), initial=("s",),
        transitions=(
            NondetTransition("s", X, "p", Guard(), ("a",)),
            NondetTransition("s", X, "q", Guard(), ("a",)),
            NondetTransition("p", X, "p", Guard(), ("a",)),
            NondetTransition("q", X, "q", Guard(), ("a",)),
        ),
        accepting=(AcceptRule("p"), AcceptRule("q")))


def test_deterministic_counts_are_acceptance():
    rng = random.Random(5)
    for _ in range(20):
        n = random_det_nondet(rng)
        weighted = to_counting_weighted(n)
        pool = (1, 2, 3) if n.kind is EQ else (Fraction(1), Fraction(2), Fraction(3))
        for word in words_over(n.tags, pool[:2], 3):
            runs = count_accepting_runs(n, word)
            assert runs in (0, 1)
            assert weighted.oracle_weight(word) == runs
            assert accepts(n, word) == (runs == 1)


def test_counting_nondet_matches_run_enumerator():
    n = zoo.counting_distinct_nondet()
    weighted = to_counting_weighted(n)
    assert count_accepting_runs(n, w(1, 2, 1)) == 2
    for word in words_over((X,), (1, 2, 3), 4):
        assert weighted.oracle_weight(word) == count_accepting_runs(n, word)


def test_unreachable_accepting_control():
    n = NondetRegisterAutomaton(
        kind=EQ, k=1, controls=("s", "dead"), tags=(X,), initial=("s",),
        transitions=(NondetTransition("s", X, "s", Guard(), ("a",)),),
        accepting=(AcceptRule("dead"),))
    weighted = to_counting_weighted(n)
    for word in words_over((X,), (1, 2), 3):
        assert weighted.oracle_weight(word) == 0


def test_check_ambiguity_sampled():
    assert check_ambiguity_sampled(zoo.first_equals_last(), (1, 2), 3) == []
    offenders = check_ambiguity_sampled(duplicated_branch(), (1, 2), 3)
    assert offenders and len(offenders[0]) == 1   # shortest duplicated word


def test_check_ambiguity_empty_word():
    base = dict(kind=EQ, k=0, controls=("a", "b"), tags=(X,), transitions=())
    two_initial = NondetRegisterAutomaton(initial=("a", "b"),
                                          accepting=(AcceptRule("a"), AcceptRule("b")),
                                          **base)
    assert check_ambiguity_sampled(two_initial, (1,), 0) == [()]
    one_initial = NondetRegisterAutomaton(initial=("a",),
                                          accepting=(AcceptRule("a"),), **base)
    assert check_ambiguity_sampled(one_initial, (1,), 0) == []


def test_unamb_equiv_reflexive():
    n = zoo.first_equals_last()
    d = unamb_equiv(n, n)
    assert d.equivalent and not d.warnings


def test_unamb_equiv_disjoint_languages():
    d = unamb_equiv(zoo.first_equals_last(), zoo.first_differs_last())
    assert not d.equivalent
    assert len(d.witness) == 2
    assert accepts(zoo.first_equals_last(), d.witness) != \
        accepts(zoo.first_differs_last(), d.witness)


def test_unamb_equiv_two_presentations():
    a = zoo.adjacent_repeat()
    b = zoo.adjacent_repeat_parity()
    d = unamb_equiv(a, b)
    assert d.equivalent and not d.warnings
    for word in words_over((X,), (1, 2, 3), 4):
        assert accepts(a, word) == accepts(b, word)


def test_unamb_equiv_surfaces_ambiguity_warning():
    d = unamb_equiv(duplicated_branch(), duplicated_branch())
    assert d.warnings and "ambiguous" in d.warnings[0]
    assert d.equivalent    # run counts still agree; the warning voids the
    # language-level reading, which is exactly what it says


def test_unamb_equiv_agrees_with_language_comparison():
    rng = random.Random(9)
    for _ in range(25):
        n1 = random_det_nondet(rng, kind=EQ, n_tags=1)
        n2 = random_det_nondet(rng, kind=EQ, n_tags=1)
        d = unamb_equiv(n1, n2)
        same = all(accepts(n1, word) == accepts(n2, word)
                   for word in words_over((n1.tags[0],), (1, 2, 3, 4), 3))
        if d.equivalent:
            assert same
        else:
            assert accepts(n1, d.witness) != accepts(n2, d.witness)


def test_kind_mismatch_rejected():
    with pytest.raises(ValueError):
        unamb_equiv(zoo.first_equals_last(AtomKind.EQUALITY),
                    zoo.first_equals_last(AtomKind.ORDERED))
