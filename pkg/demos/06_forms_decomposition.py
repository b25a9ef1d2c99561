#!/usr/bin/env python3
"""Finitely supported functions on atoms as combinations of generators.

Equality atoms: constant-1 plus point indicators.  Ordered atoms: those
plus the open up-set indicators.  The decomposition is exact everywhere,
not just on the probes printed here.
"""

from fractions import Fraction

from regwa import (AtomKind, EqualityForm, OrderedForm, decompose_form,
                   evaluate_combination, probe_atoms)

f = EqualityForm(default=2, exceptions={4: 5, 9: -1})
combo = decompose_form(AtomKind.EQUALITY, f)
print("equality form (default 2, f(4)=5, f(9)=-1):")
for key, coeff in sorted(combo.items()):
    print("  ", key, "->", coeff)
for x in probe_atoms(AtomKind.EQUALITY, f):
    assert evaluate_combination(AtomKind.EQUALITY, combo, x) == f.value_at(x)
print("  re-evaluates to the form on every probe atom")

g = OrderedForm(breakpoints=[Fraction(1), Fraction(3)],
                point_values=[Fraction(7), Fraction(0)],
                interval_values=[Fraction(0), Fraction(2), Fraction(1)])
combo = decompose_form(AtomKind.ORDERED, g)
print("\nordered step function (0 below 1, 2 on (1,3), 1 above 3; points 7, 0):")
for key, coeff in sorted(combo.items()):
    print("  ", key, "->", coeff)
probes = probe_atoms(AtomKind.ORDERED, g)
print("  probes:", [str(x) for x in probes])
for x in probes:
    assert evaluate_combination(AtomKind.ORDERED, combo, x) == g.value_at(x)
print("  re-evaluates to the form on every probe atom")
