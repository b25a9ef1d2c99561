#!/usr/bin/env python3
"""A first walk through the automaton model.

The running example maps every word to the number of distinct atoms in
it: one weight-1 run per distinct atom (wait until its last occurrence,
grab it, survive only while nothing equal arrives).
"""

from regwa import BOT, zoo

cl = zoo.count_distinct_atoms()
print("controls:", cl.controls)
print("registers:", cl.k, "| tags:", cl.tags)
print("diagnostics:", cl.validate() or "none")

word = [("x", 1), ("x", 2), ("x", 1)]
print("\nweight of x:1,x:2,x:1 =", cl.oracle_weight(word), "(two distinct atoms)")
print("weight of the empty word =", cl.oracle_weight([]))

print("\nstepping the all-empty start state on atom 5:")
for state, weight in cl.step(("wait", (BOT,)), ("x", 5)):
    print("   ->", state, "weight", weight)

print("\nconfigurations (summed run pre-weights per state):")
for n in range(4):
    vec = cl.configuration(word[:n])
    print(f"  after {n} letters:", dict(vec.items()))

print("\nrestricting to the atoms {1, 2} gives a finite automaton:")
m = cl.restrict((1, 2))
print("  states:", len(m.states), "| letters:", m.letters)
print("  weight of x:1,x:2,x:1 through the matrices =", m.weight(word))
