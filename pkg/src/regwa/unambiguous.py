"""Nondeterministic (non-guessing) register automata and run counting.

Language equivalence of unambiguous automata reduces to equivalence of the
run-counting weighted automata: replace yes/no by weights 1/0, and note
that for unambiguous inputs the number of accepting runs is 0 or 1.
Unambiguity itself is an input promise; a sampled checker can refute it on
a finite window but never prove it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .atoms import AtomKind, Atom, canonical_pool, empty_registers
from .automaton import (AutomatonError, FinalRule, Guard, Letter,
                        TransitionRule, WeightedRegisterAutomaton,
                        _apply_update)
from .equivalence import EquivalenceDecision, decide_equiv


@dataclass(frozen=True)
class NondetTransition:
    from_control: str
    tag: str
    to_control: str
    guard: Guard = Guard()
    update: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "update", tuple(self.update))


@dataclass(frozen=True)
class AcceptRule:
    control: str
    guard: Guard = Guard()


@dataclass(frozen=True)
class NondetRegisterAutomaton:
    """Non-guessing nondeterministic register automaton.

    The rule list presents the transition relation; rules of one
    (control, tag) pair should not fire twice on the same concrete
    successor, otherwise run counting sees the duplicate.  Likewise at
    most one accept rule should match any concrete state.
    """

    kind: AtomKind
    k: int
    controls: Tuple[str, ...]
    tags: Tuple[str, ...]
    initial: Tuple[str, ...]
    transitions: Tuple[NondetTransition, ...] = ()
    accepting: Tuple[AcceptRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        object.__setattr__(self, "tags", tuple(self.tags))
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "accepting", tuple(self.accepting))

    def validate(self) -> List[str]:
        weighted = to_counting_weighted(self, check=False)
        diags = weighted.validate()
        if len(set(self.initial)) != len(self.initial):
            diags.append("duplicate initial controls")
        return diags

    def successors(self, state, letter):
        """Distinct successor states (set semantics, duplicates collapsed)."""
        control, regs = state
        tag, atom = letter
        out = set()
        for rule in self.transitions:
            if rule.from_control == control and rule.tag == tag \
                    and rule.guard.holds(regs, atom):
                out.add((rule.to_control, _apply_update(rule.update, regs, atom)))
        return sorted(out)

    def is_accepting(self, state) -> bool:
        control, regs = state
        return any(rule.control == control and rule.guard.holds(regs, None)
                   for rule in self.accepting)


def count_accepting_runs(automaton: NondetRegisterAutomaton,
                         word: Sequence[Letter]) -> int:
    """Independent run enumerator over the deduplicated transition relation."""
    word = tuple(word)

    def runs(state, i):
        if i == len(word):
            return 1 if automaton.is_accepting(state) else 0
        return sum(runs(succ, i + 1)
                   for succ in automaton.successors(state, word[i]))

    bots = empty_registers(automaton.k)
    return sum(runs((c, bots), 0) for c in automaton.initial)


def accepts(automaton: NondetRegisterAutomaton, word: Sequence[Letter]) -> bool:
    return count_accepting_runs(automaton, word) > 0


def to_counting_weighted(automaton: NondetRegisterAutomaton,
                         check: bool = True) -> WeightedRegisterAutomaton:
    """Weighted automaton whose word weights are accepting-run counts."""
    weighted = WeightedRegisterAutomaton(
        kind=automaton.kind,
        k=automaton.k,
        controls=automaton.controls,
        tags=automaton.tags,
        initial=tuple((c, Fraction(1)) for c in automaton.initial),
        transitions=tuple(
            TransitionRule(r.from_control, r.tag, r.to_control, r.guard,
                           r.update, Fraction(1))
            for r in automaton.transitions),
        finals=tuple(FinalRule(r.control, r.guard, Fraction(1))
                     for r in automaton.accepting),
    )
    if check:
        diags = weighted.validate()
        if diags:
            raise AutomatonError("; ".join(diags))
    return weighted


def check_ambiguity_sampled(automaton: NondetRegisterAutomaton,
                            pool: Sequence[Atom], max_len: int) -> List[tuple]:
    """Words over tags x pool (length <= max_len) with >= 2 accepting runs.

    Exhaustive over the stated sample only; an empty answer is evidence,
    not a proof of unambiguity.
    """
    letters = [(t, a) for t in automaton.tags for a in pool]
    offenders = []
    for length in range(max_len + 1):
        for word in itertools.product(letters, repeat=length):
            if count_accepting_runs(automaton, word) >= 2:
                offenders.append(word)
    return offenders


@dataclass
class UnambiguousDecision:
    equivalent: bool
    witness: Optional[tuple]
    report: object
    support: tuple
    restricted_states: int
    elapsed_s: float
    warnings: Tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        return "equivalent" if self.equivalent else "not_equivalent"


def unamb_equiv(n1: NondetRegisterAutomaton, n2: NondetRegisterAutomaton,
                override_l: Optional[int] = None,
                *, max_states: int = 200_000,
                ambiguity_pool: Optional[Sequence[Atom]] = None,
                ambiguity_len: int = 3) -> UnambiguousDecision:
    """Language equivalence, assuming both inputs are unambiguous.

    Decides equivalence of the run-counting weighted automata, which
    coincides with language equivalence whenever run counts stay in {0,1}.
    A sampled ambiguity check runs alongside; offenders void the semantic
    guarantee and are surfaced as warnings on the decision.
    """
    if n1.kind is not n2.kind:
        raise AutomatonError("cannot compare automata over different atom kinds")
    w1 = to_counting_weighted(n1)
    w2 = to_counting_weighted(n2)
    decision: EquivalenceDecision = decide_equiv(w1, w2, override_l,
                                                 max_states=max_states)
    pool = tuple(ambiguity_pool) if ambiguity_pool is not None \
        else canonical_pool(n1.kind, 3)
    warnings = []
    for name, automaton in (("first", n1), ("second", n2)):
        offenders = check_ambiguity_sampled(automaton, pool, ambiguity_len)
        if offenders:
            warnings.append(
                f"{name} automaton is ambiguous on the sampled window "
                f"(e.g. {offenders[0]!r}); the equivalence verdict compares "
                "run counts, not languages")
    return UnambiguousDecision(equivalent=decision.equivalent,
                               witness=decision.witness,
                               report=decision.report,
                               support=decision.support,
                               restricted_states=decision.restricted_states,
                               elapsed_s=decision.elapsed_s,
                               warnings=tuple(warnings))
