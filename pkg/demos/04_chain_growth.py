#!/usr/bin/env python3
"""Watching the configuration span grow, word length by word length.

The span of configurations of words of length <= i can only grow so many
times; the decision procedure rests on that.  Here the growth is traced
over a small atom pool until the first no-growth level.
"""

from regwa import (AtomKind, FinalRule, Guard, TransitionRule,
                   WeightedRegisterAutomaton, canonical_pool,
                   chain_stabilization, length_bound, state_orbit_count, zoo)


def show(name, automaton, pool_size=3, max_len=16):
    pool = canonical_pool(automaton.kind, pool_size)
    report = chain_stabilization(automaton, pool, max_len)
    bound = length_bound(automaton.kind, state_orbit_count(automaton),
                         automaton.k).bound_L
    print(f"  {name:24s} dims={report.dimensions}"
          f" stall={report.stabilization_index} bound={bound}")


print(f"pool of three atoms; 'bound' is the worst-case stall level\n")

show("count distinct atoms", zoo.count_distinct_atoms())
show("aba/abb signed", zoo.aba_abb_signed())

# a register shift: remembers the last two atoms, so the span keeps
# growing until every (previous, last) pair over the pool has been seen
shift = WeightedRegisterAutomaton(
    kind=AtomKind.ORDERED, k=2, controls=("q",), tags=("x",),
    initial=(("q", 1),),
    transitions=(TransitionRule("q", "x", "q", Guard(), (2, "a")),),
    finals=(FinalRule("q"),))
show("two-register shift", shift)

# a one-way counterish automaton: strictly increasing runs only
rising = WeightedRegisterAutomaton(
    kind=AtomKind.ORDERED, k=1, controls=("q",), tags=("x",),
    initial=(("q", 1),),
    transitions=(TransitionRule("q", "x", "q", Guard((("lt", "r1", "a"),)), ("a",)),
                 TransitionRule("q", "x", "q", Guard((("is_bot", "r1"),)), ("a",))),
    finals=(FinalRule("q"),))
show("strictly rising runs", rising)
