"""Decomposing finitely supported functions on atoms into spanning generators.

Over equality atoms every finitely supported function of one atom is a
combination of the all-ones function and point indicators; over ordered
atoms the up-set indicators join in.  The decomposition is exact as a
function, and tests probe it on breakpoints, midpoints and fresh atoms.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .atoms import AtomKind, Atom
from .vectors import FinVec

# Generator keys: ("all",) is constant 1; ("at", a) is the indicator of a;
# ("gt", a) is the indicator of the open up-set above a (ordered only).
GEN_ALL = ("all",)


def gen_at(a: Atom) -> tuple:
    return ("at", a)


def gen_gt(a: Atom) -> tuple:
    return ("gt", a)


@dataclass(frozen=True)
class EqualityForm:
    """Finite exception map over a default value."""

    default: Fraction
    exceptions: tuple   # ((atom, value), ...) sorted by atom

    def __init__(self, default, exceptions=()):
        object.__setattr__(self, "default", Fraction(default))
        items = exceptions.items() if isinstance(exceptions, dict) else exceptions
        object.__setattr__(self, "exceptions",
                           tuple(sorted((a, Fraction(v)) for a, v in items)))
        if len({a for a, _ in self.exceptions}) != len(self.exceptions):
            raise ValueError("duplicate exception atoms")

    def value_at(self, x: Atom) -> Fraction:
        for a, v in self.exceptions:
            if a == x:
                return v
        return self.default


@dataclass(frozen=True)
class OrderedForm:
    """Piecewise constant: point values at breakpoints, constants between.

    interval_values[i] is the value on the open interval between
    breakpoints i-1 and i (so index 0 is below the first breakpoint and
    index m is above the last).
    """

    breakpoints: tuple
    point_values: tuple
    interval_values: tuple

    def __init__(self, breakpoints, point_values, interval_values):
        breakpoints = tuple(breakpoints)
        if list(breakpoints) != sorted(set(breakpoints)):
            raise ValueError("breakpoints must be strictly increasing")
        if len(point_values) != len(breakpoints):
            raise ValueError("one point value per breakpoint")
        if len(interval_values) != len(breakpoints) + 1:
            raise ValueError("need one more interval value than breakpoints")
        object.__setattr__(self, "breakpoints", breakpoints)
        object.__setattr__(self, "point_values",
                           tuple(Fraction(v) for v in point_values))
        object.__setattr__(self, "interval_values",
                           tuple(Fraction(v) for v in interval_values))

    def value_at(self, x: Atom) -> Fraction:
        i = bisect.bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            return self.point_values[i]
        return self.interval_values[i]


def decompose_form(kind: AtomKind, form) -> FinVec:
    """Exact combination of spanning generators that re-evaluates to the form."""
    if kind is AtomKind.EQUALITY:
        if not isinstance(form, EqualityForm):
            raise TypeError("equality atoms take an EqualityForm")
        entries = {GEN_ALL: form.default}
        for a, v in form.exceptions:
            entries[gen_at(a)] = v - form.default
        return FinVec(entries)
    if not isinstance(form, OrderedForm):
        raise TypeError("ordered atoms take an OrderedForm")
    entries = {GEN_ALL: form.interval_values[0]}
    for i, b in enumerate(form.breakpoints):
        below = form.interval_values[i]
        above = form.interval_values[i + 1]
        entries[gen_gt(b)] = above - below
        entries[gen_at(b)] = form.point_values[i] - below
    return FinVec(entries)


def evaluate_combination(kind: AtomKind, combo: FinVec, x: Atom) -> Fraction:
    total = Fraction(0)
    for key, coeff in combo.items():
        if key == GEN_ALL:
            total += coeff
        elif key[0] == "at":
            if x == key[1]:
                total += coeff
        elif key[0] == "gt":
            if kind is not AtomKind.ORDERED:
                raise ValueError("up-set generators only exist over ordered atoms")
            if x > key[1]:
                total += coeff
        else:
            raise ValueError(f"unknown generator {key!r}")
    return total


def probe_atoms(kind: AtomKind, form) -> Tuple[Atom, ...]:
    """Atoms that pin the form down: its special points, gaps, and fresh ones."""
    if kind is AtomKind.EQUALITY:
        special = [a for a, _ in form.exceptions]
        top = max(special, default=0)
        return tuple(special + [top + 1, top + 2])
    bps = [Fraction(b) for b in form.breakpoints]
    probes = list(bps)
    for lo, hi in zip(bps, bps[1:]):
        probes.append(Fraction(lo + hi, 2))
    if bps:
        probes.append(bps[0] - 1)
        probes.append(bps[-1] + 1)
        probes.append(bps[-1] + 2)
    else:
        probes.extend([Fraction(0), Fraction(1)])
    return tuple(probes)
