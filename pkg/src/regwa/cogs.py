"""Cogs, balanced vectors and the balance matrix over ordered atoms.

A cog is the alternating-sign combination of the 2^k ways to pick one
element from each pair of an interleaved 2k-atom set a1<b1<...<ak<bk.
A vector over k-subsets is balanced when, for every (k-1)-subset S and
every open interval cut out by S, the coefficients of S extended into that
interval sum to zero.  The balance matrix makes those conditions explicit
as a 0-1 matrix; its null space is spanned by the narrow cogs, and its
rank has the closed form C(n,k) - C(n-k,k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .atoms import AtomKind, Atom, canonical_pool
from .vectors import FinVec, matrix_rank, null_space_dimension


def subset_key(atoms) -> tuple:
    key = tuple(sorted(atoms))
    if len(set(key)) != len(key):
        raise ValueError(f"subset key has repeated atoms: {atoms!r}")
    return key


@dataclass(frozen=True)
class CogSpec:
    """Interleaved pair set a1 < b1 < a2 < b2 < ... < ak < bk."""

    alpha: tuple

    def __post_init__(self):
        alpha = tuple(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) == 0 or len(alpha) % 2 != 0:
            raise ValueError("a cog needs a nonempty, even-length atom list")
        if any(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)):
            raise ValueError(f"cog atoms must be strictly increasing: {alpha!r}")

    @property
    def k(self) -> int:
        return len(self.alpha) // 2

    @property
    def pairs(self) -> Tuple[Tuple[Atom, Atom], ...]:
        return tuple((self.alpha[2 * i], self.alpha[2 * i + 1]) for i in range(self.k))

    @property
    def a_part(self) -> tuple:
        return self.alpha[0::2]


def make_cog(spec: CogSpec) -> FinVec:
    """Sum over selections I of (-1)^|I| times the chosen k-subset.

    Selection I picks b_i for i in I and a_i otherwise; 2^k terms, all
    coefficients +-1, coefficient sum 0.
    """
    pairs = spec.pairs
    entries = {}
    for choice in itertools.product((0, 1), repeat=spec.k):
        key = subset_key(pair[bit] for pair, bit in zip(pairs, choice))
        entries[key] = Fraction(-1) ** sum(choice)
    return FinVec(entries)


def _check_supported(v: FinVec, universe: set, k: int):
    for key in v:
        if len(key) != k:
            raise ValueError(f"key {key!r} is not a {k}-subset")
        if not set(key) <= universe:
            raise ValueError(f"key {key!r} escapes the ambient atom set")


def is_balanced(v: FinVec, T: Sequence[Atom], k: int) -> bool:
    """Direct evaluation of all (S, interval) conditions over T.

    Equivalent to v lying in the null space of build_balance_matrix, but
    computed independently of the matrix.
    """
    T = tuple(sorted(T))
    _check_supported(v, set(T), k)
    for S in itertools.combinations(T, k - 1):
        sums = [Fraction(0)] * k
        s_set = set(S)
        for a in T:
            if a in s_set:
                continue
            interval = sum(1 for s in S if s < a)
            sums[interval] += v[subset_key(S + (a,))]
        if any(sums):
            return False
    return True


@dataclass
class BalanceMatrix:
    """0-1 matrix of the balance conditions over an n-atom ordered set.

    Rows are indexed by ((k-1)-subset S, interval index i); the entry at
    column R (a k-subset) is 1 exactly when R = S + {a} with a greater
    than exactly i atoms of S.
    """

    n: int
    k: int
    T: tuple
    row_labels: tuple       # ((S, i), ...)
    rows: Tuple[FinVec, ...]
    columns: tuple          # k-subset keys

    def rank(self) -> int:
        return matrix_rank(self.rows)

    def nullity(self) -> int:
        return null_space_dimension(self.rows, self.columns)


def build_balance_matrix(n: int, k: int, T: Optional[Sequence[Atom]] = None) -> BalanceMatrix:
    if not (n >= k >= 1):
        raise ValueError("need n >= k >= 1")
    T = canonical_pool(AtomKind.ORDERED, n) if T is None else tuple(sorted(T))
    if len(T) != n:
        raise ValueError("T must have exactly n atoms")
    columns = tuple(subset_key(c) for c in itertools.combinations(T, k))
    row_labels = []
    rows = []
    for S in itertools.combinations(T, k - 1):
        s_set = set(S)
        buckets = [dict() for _ in range(k)]
        for a in T:
            if a in s_set:
                continue
            interval = sum(1 for s in S if s < a)
            buckets[interval][subset_key(S + (a,))] = Fraction(1)
        for i in range(k):
            row_labels.append((S, i))
            rows.append(FinVec(buckets[i]))
    return BalanceMatrix(n=n, k=k, T=T, row_labels=tuple(row_labels),
                         rows=tuple(rows), columns=columns)


def balance_rank(n: int, k: int) -> int:
    return build_balance_matrix(n, k).rank()


def balance_nullity(n: int, k: int) -> int:
    return build_balance_matrix(n, k).nullity()


def narrow_specs(T: Sequence[Atom], k: int) -> List[CogSpec]:
    """All cog specs over T whose pairs are neighbours in T.

    Choosing k pairwise-disjoint neighbour pairs from n sorted atoms is
    choosing k starts with gaps, so there are C(n-k, k) of them.
    """
    T = tuple(sorted(T))
    n = len(T)
    out = []
    for combo in itertools.combinations(range(n - k), k):
        starts = [c + i for i, c in enumerate(combo)]
        alpha = []
        for s in starts:
            alpha.extend((T[s], T[s + 1]))
        out.append(CogSpec(tuple(alpha)))
    return out


def narrow_cogs(T: Sequence[Atom], k: int) -> List[FinVec]:
    return [make_cog(spec) for spec in narrow_specs(T, k)]


@dataclass
class CogExtraction:
    vector: FinVec      # exactly the cog on `alpha`
    alpha: CogSpec      # the constructed interleaving


def _relabel(v: FinVec, old: Atom, new: Atom) -> FinVec:
    out = {}
    for key, coeff in v.items():
        if old in key:
            key = subset_key(a if a != old else new for a in key)
        out[key] = coeff
    return FinVec(out)


def extract_cog(v: FinVec, T: Sequence[Atom], k: int) -> CogExtraction:
    """Peel a cog out of a nonzero vector by k difference steps.

    Take the least k-subset alpha with nonzero coefficient, put a fresh
    partner b_i just after each a_i (midpoint to the next element of T, or
    half a step past the maximum), and subtract from the running vector
    its image under the relabeling a_i -> b_i.  Each relabeling extends to
    an order automorphism fixing every other atom in play, so after the
    k steps the vector is exactly v(alpha) times the cog on the
    interleaving; dividing by v(alpha) normalizes it.
    """
    if not v:
        raise ValueError("cannot extract a cog from the zero vector")
    T = tuple(sorted(T))
    _check_supported(v, set(T), k)
    alpha_base = min(v.keys())
    partners = []
    for a in alpha_base:
        greater = [t for t in T if t > a]
        partners.append(Fraction(a + greater[0], 2) if greater
                        else a + Fraction(1, 2))
    interleaved = []
    for a, b in zip(alpha_base, partners):
        interleaved.extend((a, b))
    spec = CogSpec(tuple(interleaved))

    cur = v
    for a, b in zip(alpha_base, partners):
        cur = cur - _relabel(cur, a, b)
    scale = v[alpha_base]
    assert cur[alpha_base] == scale, "difference steps must preserve v(alpha)"
    return CogExtraction(vector=cur.scaled(1 / scale), alpha=spec)
