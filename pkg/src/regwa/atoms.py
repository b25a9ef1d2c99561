"""Atom values, supports and orbit classification.

Two atom structures are supported: natural numbers compared only by
equality, and rationals compared by equality and order.  Tuples over the
atoms (possibly with empty-register markers) are classified up to
automorphisms that fix a given finite support; the classification is the
only quotient mechanism used anywhere in the package -- automorphisms are
never materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple, Union


class AtomKind(Enum):
    EQUALITY = "equality"
    ORDERED = "ordered"


class _Bot:
    """Marker for an empty register.

    Compares equal only to itself and sorts below every atom, so tuples
    mixing atoms and empty registers have a total order.  It never takes
    part in arithmetic.
    """

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOT"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


BOT = _Bot()

Atom = Union[int, Fraction]
RegisterValue = Union[Atom, _Bot]


def is_atom(value) -> bool:
    return value is not BOT


@dataclass(frozen=True)
class OrbitType:
    """Canonical classification of a tuple relative to a support.

    Two tuples over the same support get equal OrbitTypes exactly when
    some support-fixing automorphism maps one to the other.  The pattern
    never mentions concrete non-support atoms.
    """

    kind: AtomKind
    arity: int
    support: Tuple[Atom, ...]
    pattern: tuple

    def __str__(self):
        return f"OrbitType({self.kind.value}, arity={self.arity}, pattern={self.pattern})"


def _check_support(support: Sequence[Atom]) -> Tuple[Atom, ...]:
    support = tuple(support)
    if len(set(support)) != len(support):
        raise ValueError(f"support atoms must be distinct: {support!r}")
    for s in support:
        if s is BOT:
            raise ValueError("support atoms cannot be the empty-register marker")
    return support


def orbit_type(kind: AtomKind, values: Sequence[RegisterValue],
               support: Sequence[Atom] = ()) -> OrbitType:
    """Classify ``values`` up to automorphisms fixing ``support`` pointwise."""
    support = _check_support(support)
    values = tuple(values)

    if kind is AtomKind.EQUALITY:
        pattern = _equality_pattern(values, support)
    else:
        pattern = _ordered_pattern(values, support)
    return OrbitType(kind=kind, arity=len(values), support=support, pattern=pattern)


def _equality_pattern(values, support):
    # Per position: bot marker, pin to a support atom, or a block id numbered
    # by first occurrence among the non-support values.
    sup_index = {a: j for j, a in enumerate(support)}
    blocks = {}
    out = []
    for v in values:
        if v is BOT:
            out.append(("bot",))
        elif v in sup_index:
            out.append(("sup", sup_index[v]))
        else:
            if v not in blocks:
                blocks[v] = len(blocks)
            out.append(("var", blocks[v]))
    return tuple(out)


def _ordered_pattern(values, support):
    # Merge tuple values with the support atoms and record every position's
    # rank in the merged order, plus where the support atoms themselves sit.
    real = [v for v in values if v is not BOT]
    merged = sorted(set(real) | set(support))
    rank = {v: i for i, v in enumerate(merged)}
    out = tuple(("bot",) if v is BOT else ("rank", rank[v]) for v in values)
    sup_ranks = tuple(rank[a] for a in support)
    return (out, sup_ranks)


def same_orbit(kind: AtomKind, t1: Sequence[RegisterValue], t2: Sequence[RegisterValue],
               support: Sequence[Atom] = ()) -> bool:
    """True iff some support-fixing automorphism maps ``t1`` onto ``t2``."""
    return orbit_type(kind, t1, support) == orbit_type(kind, t2, support)


def enumerate_valuations(kind: AtomKind, k: int, pool: Sequence[Atom],
                         allow_bot: bool) -> list:
    """All register valuations of arity ``k`` over ``pool``, in a fixed order.

    With ``allow_bot`` the empty-register marker is enumerated before the
    pool atoms, so e.g. k=1 over {a} yields [(BOT,), (a,)].
    """
    pool = tuple(pool)
    if len(set(pool)) != len(pool):
        raise ValueError(f"pool atoms must be distinct: {pool!r}")
    domain = ((BOT,) + pool) if allow_bot else pool
    return list(itertools.product(domain, repeat=k))


def count_register_types(kind: AtomKind, k: int) -> int:
    """Number of equivariant orbits of register valuations of arity ``k``.

    Computed by enumerating valuations over k canonical atoms and
    deduplicating by orbit type; a pool of k atoms is enough because a
    k-tuple touches at most k distinct atoms.
    """
    if k < 0:
        raise ValueError("register count must be nonnegative")
    pool = canonical_pool(kind, k)
    seen = {orbit_type(kind, t, ()) for t in enumerate_valuations(kind, k, pool, True)}
    return len(seen)


def canonical_pool(kind: AtomKind, m: int) -> Tuple[Atom, ...]:
    """The atoms 1..m, as naturals (equality) or rationals (ordered)."""
    if kind is AtomKind.EQUALITY:
        return tuple(range(1, m + 1))
    return tuple(Fraction(i) for i in range(1, m + 1))


def empty_registers(k: int) -> tuple:
    return (BOT,) * k
