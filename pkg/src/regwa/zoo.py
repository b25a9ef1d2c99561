"""Ready-made automata used across tests and demos."""

from __future__ import annotations

from fractions import Fraction

from .atoms import AtomKind
from .automaton import (FinalRule, Guard, TransitionRule,
                        WeightedRegisterAutomaton)
from .unambiguous import AcceptRule, NondetRegisterAutomaton, NondetTransition


def count_distinct_atoms(kind: AtomKind = AtomKind.EQUALITY,
                         tag: str = "x") -> WeightedRegisterAutomaton:
    """Maps a word to the number of distinct atoms appearing in it.

    One run of weight 1 per distinct atom: wait until its last occurrence,
    grab it, and survive only while no equal atom arrives.
    """
    return WeightedRegisterAutomaton(
        kind=kind, k=1, controls=("wait", "got"), tags=(tag,),
        initial=(("wait", Fraction(1)),),
        transitions=(
            TransitionRule("wait", tag, "wait", Guard(), ("bot",)),
            TransitionRule("wait", tag, "got", Guard(), ("a",)),
            TransitionRule("got", tag, "got", Guard((("neq", "r1", "a"),)), (1,)),
        ),
        finals=(FinalRule("got", Guard((("not_bot", "r1"),)), Fraction(1)),),
    )


def count_distinct_atoms_split(kind: AtomKind = AtomKind.EQUALITY,
                               tag: str = "x") -> WeightedRegisterAutomaton:
    """Same weighted language as count_distinct_atoms, with a redundant
    control: the grabbing state is duplicated and each copy carries final
    weight one half."""
    half = Fraction(1, 2)
    keep = Guard((("neq", "r1", "a"),))
    rules = [TransitionRule("wait", tag, "wait", Guard(), ("bot",))]
    for copy in ("gotA", "gotB"):
        rules.append(TransitionRule("wait", tag, copy, Guard(), ("a",)))
        rules.append(TransitionRule(copy, tag, copy, keep, (1,)))
    return WeightedRegisterAutomaton(
        kind=kind, k=1, controls=("wait", "gotA", "gotB"), tags=(tag,),
        initial=(("wait", Fraction(1)),),
        transitions=tuple(rules),
        finals=(FinalRule("gotA", Guard((("not_bot", "r1"),)), half),
                FinalRule("gotB", Guard((("not_bot", "r1"),)), half)),
    )


def aba_abb_signed(tag: str = "x") -> WeightedRegisterAutomaton:
    """Weight 1 on words aba, -1 on abb (a != b), 0 elsewhere."""
    return WeightedRegisterAutomaton(
        kind=AtomKind.EQUALITY, k=2,
        controls=("start", "one", "two", "done"), tags=(tag,),
        initial=(("start", Fraction(1)),),
        transitions=(
            TransitionRule("start", tag, "one", Guard(), ("a", "bot")),
            TransitionRule("one", tag, "two", Guard((("neq", "r1", "a"),)), (1, "a")),
            TransitionRule("two", tag, "done", Guard((("eq", "a", "r1"),)),
                           ("bot", "bot"), Fraction(1)),
            TransitionRule("two", tag, "done", Guard((("eq", "a", "r2"),)),
                           ("bot", "bot"), Fraction(-1)),
        ),
        finals=(FinalRule("done", Guard(), Fraction(1)),),
    )


def with_scaled_finals(a: WeightedRegisterAutomaton, c) -> WeightedRegisterAutomaton:
    return WeightedRegisterAutomaton(
        kind=a.kind, k=a.k, controls=a.controls, tags=a.tags, initial=a.initial,
        transitions=a.transitions,
        finals=tuple(FinalRule(r.control, r.guard, Fraction(c) * r.weight)
                     for r in a.finals))


def with_zero_finals(a: WeightedRegisterAutomaton) -> WeightedRegisterAutomaton:
    return WeightedRegisterAutomaton(
        kind=a.kind, k=a.k, controls=a.controls, tags=a.tags, initial=a.initial,
        transitions=a.transitions, finals=())


# -- nondeterministic specimens ----------------------------------------------

def _first_last(kind: AtomKind, accept_equal: bool, tag: str) -> NondetRegisterAutomaton:
    eq = Guard((("eq", "a", "r1"),))
    neq = Guard((("neq", "a", "r1"),))
    rules = [NondetTransition("start", tag, "first", Guard(), ("a",))]
    for src in ("first", "same", "diff"):
        rules.append(NondetTransition(src, tag, "same", eq, (1,)))
        rules.append(NondetTransition(src, tag, "diff", neq, (1,)))
    return NondetRegisterAutomaton(
        kind=kind, k=1, controls=("start", "first", "same", "diff"), tags=(tag,),
        initial=("start",),
        transitions=tuple(rules),
        accepting=(AcceptRule("same" if accept_equal else "diff"),),
    )


def first_equals_last(kind: AtomKind = AtomKind.EQUALITY,
                      tag: str = "x") -> NondetRegisterAutomaton:
    """Words of length >= 2 whose first and last atoms agree (deterministic)."""
    return _first_last(kind, True, tag)


def first_differs_last(kind: AtomKind = AtomKind.EQUALITY,
                       tag: str = "x") -> NondetRegisterAutomaton:
    """Words of length >= 2 whose first and last atoms differ (deterministic)."""
    return _first_last(kind, False, tag)


def adjacent_repeat(kind: AtomKind = AtomKind.EQUALITY,
                    tag: str = "x") -> NondetRegisterAutomaton:
    """Words containing two equal adjacent atoms; accepts at the first pair."""
    eq = Guard((("eq", "a", "r1"),))
    neq = Guard((("neq", "a", "r1"),))
    return NondetRegisterAutomaton(
        kind=kind, k=1, controls=("start", "prev", "seen"), tags=(tag,),
        initial=("start",),
        transitions=(
            NondetTransition("start", tag, "prev", Guard(), ("a",)),
            NondetTransition("prev", tag, "prev", neq, ("a",)),
            NondetTransition("prev", tag, "seen", eq, (1,)),
            NondetTransition("seen", tag, "seen", Guard(), (1,)),
        ),
        accepting=(AcceptRule("seen"),),
    )


def adjacent_repeat_parity(kind: AtomKind = AtomKind.EQUALITY,
                           tag: str = "x") -> NondetRegisterAutomaton:
    """Same language as adjacent_repeat, tracking position parity before the
    repeat -- a second unambiguous presentation with more controls."""
    eq = Guard((("eq", "a", "r1"),))
    neq = Guard((("neq", "a", "r1"),))
    return NondetRegisterAutomaton(
        kind=kind, k=1,
        controls=("start", "odd", "even", "seen"), tags=(tag,),
        initial=("start",),
        transitions=(
            NondetTransition("start", tag, "odd", Guard(), ("a",)),
            NondetTransition("odd", tag, "even", neq, ("a",)),
            NondetTransition("even", tag, "odd", neq, ("a",)),
            NondetTransition("odd", tag, "seen", eq, (1,)),
            NondetTransition("even", tag, "seen", eq, (1,)),
            NondetTransition("seen", tag, "seen", Guard(), (1,)),
        ),
        accepting=(AcceptRule("seen"),),
    )


def counting_distinct_nondet(kind: AtomKind = AtomKind.EQUALITY,
                             tag: str = "x") -> NondetRegisterAutomaton:
    """Nondeterministic shape of count_distinct_atoms: one accepting run per
    distinct atom, so it is ambiguous by design on rich words."""
    return NondetRegisterAutomaton(
        kind=kind, k=1, controls=("wait", "got"), tags=(tag,),
        initial=("wait",),
        transitions=(
            NondetTransition("wait", tag, "wait", Guard(), ("bot",)),
            NondetTransition("wait", tag, "got", Guard(), ("a",)),
            NondetTransition("got", tag, "got", Guard((("neq", "r1", "a"),)), (1,)),
        ),
        accepting=(AcceptRule("got", Guard((("not_bot", "r1"),))),),
    )
